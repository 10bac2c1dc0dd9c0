#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simcore/multicore.hpp"

namespace simcore {

/// Raised when complete enumeration is requested for an infinite set.
class InfiniteSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FiniteReason { g_not_1, x_fails, all_zero_finite, positive_modulus_finite, s_equals_1, empty_t_infinite };

std::string_view to_string(FiniteReason r);

struct FinitenessVerdict {
  bool finite = false;
  int g_value = 0;
  std::optional<bool> condition_x;  // only evaluated when every modulus is zero
  FiniteReason reason = FiniteReason::empty_t_infinite;
};

/// gcd of the moduli and of all cross-differences c_i - c_j - c'_i + c'_j. Zero if that set is empty or {0}.
int g_of(const DatumSet& t);
/// Some component is sometimes but not always maximal, and some component is
/// sometimes but not always minimal.
bool condition_x(const DatumSet& t);
FinitenessVerdict decide_finite(const DatumSet& t);

/// (lambda^j, lambda^k) lies in C(modulus | offset, 0), with offset = c_j - c_k reduced mod modulus.
struct PairConstraint {
  std::size_t j = 0;
  std::size_t k = 0;
  int modulus = 0;
  int offset = 0;
  bool derived = false;  // obtained from two charge differences of opposite sign

  friend auto operator<=>(const PairConstraint&, const PairConstraint&) = default;
};

struct ConstraintTable {
  std::size_t level = 0;
  /// differences[j][k]: values d such that (lambda^j, lambda^k) lies in C(0 | d, 0).
  /// A datum of positive modulus s contributes the two values nearest zero in c_j - c_k + sZ.
  std::vector<std::vector<std::set<int>>> differences;
  std::set<PairConstraint> pairs;        // positive moduli only
  std::vector<std::set<int>> core_moduli;  // per component
  std::vector<std::map<int, int>> hook_bounds;  // per component: a -> max number of a-hooks (cores give 0)
};

ConstraintTable pair_constraints(const DatumSet& t);

/// Largest positive integer that is not a sum of elements of `a`; -1 when every
/// positive integer is. The elements must be positive with gcd 1.
int frobenius_number(const std::set<int>& a);

/// Bound on removable nodes of component k implied by its hook bounds, if their moduli are coprime.
std::optional<int> removable_bound(const ConstraintTable& table, std::size_t k);

enum class Mode { bounded, complete };
enum class Certificate { certified, saturation_heuristic };

std::string_view to_string(Certificate c);

struct ComponentBound {
  int rows = 0;      // largest first row among candidates
  int columns = 0;   // largest first column among candidates
  std::size_t candidates = 0;
};

struct EnumerationResult {
  std::vector<Multipartition> members;
  Certificate certificate = Certificate::saturation_heuristic;
  std::vector<ComponentBound> bounds;  // filled when certified
  std::optional<int> ceiling;          // size ceiling for heuristic results
  bool saturated = false;              // no member within two of the ceiling (always true when certified)
};

/// Bounded mode returns the members of C_T of size <= max_size. Complete mode
/// requires a finite set and returns all members, certified when the candidate
/// bounds close, otherwise the bounded result at max_size labelled as heuristic.
EnumerationResult enumerate_members(const DatumSet& t, int max_size, Mode mode);

namespace serial {

/// Single-threaded reference for enumerate_members.
EnumerationResult enumerate_members(const DatumSet& t, int max_size, Mode mode);

}  // namespace serial

}  // namespace simcore
