#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simcore/multicore.hpp"

namespace simcore {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// binom(n, k), zero when n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);

/// |U_g^{s,a}| by inclusion-exclusion. Requires g >= 1 and g | s.
BigInt count_u(int g, int s, int a);
/// |C(s|0,a) n C(t|0,b) n C_g^2| for g = gcd(s, t).
BigInt count_ss(int s, int t, int a, int b);
/// |C(s|0,a) n C(0|0,b)|.
BigInt count_t0(int s, int a, int b);
/// |C(s|0,a) n C(t|0,a)| for coprime s <= t.
BigInt count_aa(int s, int t, int a);
/// Number of (s,t)-cores, s and t coprime.
BigInt count_anderson(int s, int t);

/// A tuple indexed by Z/gZ.
struct UTuple {
  int g = 1;
  std::vector<int> entries;

  int operator[](int i) const { return entries[static_cast<std::size_t>(mod_floor(i, g))]; }
  /// u(+c)_i = u_{i+c}
  UTuple shifted(int c) const;
  int sum() const;

  friend bool operator==(const UTuple&, const UTuple&) = default;
  friend auto operator<=>(const UTuple&, const UTuple&) = default;
};

/// Every member of U_g^{s,a}: entries in [0, s/g] summing to a, lexicographic order.
std::vector<UTuple> u_tuples(int g, int s, int a);

/// sigma (or tau) of a bipartition in C(s|0,a) whose components are g-cores.
UTuple sigma_tau(const Partition& p, const Partition& q, int s, int a, int g);

struct TuplePreimage {
  Partition lambda;
  Partition mu;
  int shift = 0;  // c in Z/gZ with sigma = u(+c), tau = v(+c)
};

/// The unique (lambda, mu, c) with sigma(lambda, mu) = u(+c) and tau(lambda, mu) = v(+c).
TuplePreimage from_tuples(const UTuple& u, const UTuple& v, int s, int t, int a, int b);

/// C(s|0,a) n C(t|0,b) n C_g^2 produced by sweeping all (u, v); canonical order.
std::vector<Multipartition> ss_members(int s, int t, int a, int b);

/// A cyclic word over {B, D, R}, stored as its least rotation (B < D < R).
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::string_view letters);

  const std::string& letters() const noexcept { return letters_; }
  int count(char letter) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::string letters_;
};

std::string least_rotation(std::string_view word);
/// Rotation-class representatives of words with the given letter counts.
std::vector<CyclicWord> necklaces(int count_b, int count_d, int count_r);

/// Boundary-path decoding on the (s,t)-lattice; the word has s D's and t R's.
Partition st_decode(std::string_view word, int s, int t);
CyclicWord st_encode(const Partition& core, int s, int t);
/// All (s,t)-cores, one per rotation class, in canonical order.
std::vector<Partition> st_cores(int s, int t);

/// Decodes a word with a B's, s-a D's and t-a R's into (lambda, mu) in C(s|0,a) n C(t|0,a).
std::pair<Partition, Partition> aa_decode(std::string_view word, int s, int t, int a);
CyclicWord aa_encode(const Partition& lambda, const Partition& mu, int s, int t, int a);
/// C(s|0,a) n C(t|0,a), one bipartition per rotation class, canonical order.
std::vector<Multipartition> aa_members(int s, int t, int a);

/// Exact mean size. Throws on an empty list.
Rational average_size(const std::vector<Multipartition>& members);

enum class Family { ss, t0, aa, anderson };

Family parse_family(std::string_view name);
std::string_view to_string(Family f);

/// Conjectured average size. Parameters: ss (s,a,b), t0 (s,a,b), aa (s,t,a);
/// anderson (s,t) gives the known (s-1)(t-1)(s+t+1)/24.
Rational conjecture_value(Family f, const std::vector<int>& params);

std::string to_string(const Rational& q);

}  // namespace simcore
