#include "simcore/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace simcore {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

int gcd_abs(int x, int y) { return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y); }

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

BigInt exact_div(const BigInt& n, const BigInt& d) {
  BigInt q, r;
  boost::multiprecision::divide_qr(n, d, q, r);
  if (r != 0) throw std::logic_error("inexact division in a counting formula");
  return q;
}

void check_ss(int s, int t, int a, int b) {
  require(s >= 1 && t >= 1, "moduli must be positive");
  require(0 <= a && a < s, "need 0 <= a < s");
  require(0 <= b && b < t, "need 0 <= b < t");
  require(gcd_abs(std::gcd(s, t), a - b) == 1, "gcd(s,t) and a-b must be coprime");
}

void check_aa(int s, int t, int a) {
  require(s >= 1, "s must be positive");
  require(0 <= a && a < s && s <= t, "need 0 <= a < s <= t");
  require(std::gcd(s, t) == 1, "s and t must be coprime");
}

}  // namespace

BigInt count_u(int g, int s, int a) {
  require(g >= 1, "g must be positive");
  require(s >= 0 && s % g == 0, "g must divide s");
  require(a >= 0, "a must be non-negative");
  const long cap = s / g;
  BigInt total = 0;
  for (long d = 0; d <= g; ++d) {
    BigInt term = binomial(g, d) * binomial(a + g - 1 - d * (1 + cap), g - 1);
    if (d % 2) total -= term;
    else total += term;
  }
  return total;
}

BigInt count_ss(int s, int t, int a, int b) {
  check_ss(s, t, a, b);
  const int g = std::gcd(s, t);
  return exact_div(count_u(g, s, a) * count_u(g, t, b), g);
}

BigInt count_t0(int s, int a, int b) {
  require(s >= 1, "s must be positive");
  require(0 <= a && a < s && b >= 0, "need 0 <= a < s and b >= 0");
  require(gcd_abs(s, a - b) == 1, "s and a-b must be coprime");
  return exact_div(binomial(s, a) * binomial(b + s - 1, s - 1), s);
}

BigInt count_aa(int s, int t, int a) {
  check_aa(s, t, a);
  return exact_div(factorial(s + t - a - 1), factorial(a) * factorial(s - a) * factorial(t - a));
}

BigInt count_anderson(int s, int t) {
  require(s >= 1 && t >= 1 && std::gcd(s, t) == 1, "s and t must be coprime positive integers");
  return exact_div(binomial(s + t, s), s + t);
}

UTuple UTuple::shifted(int c) const {
  UTuple out{g, entries};
  for (int i = 0; i < g; ++i) out.entries[static_cast<std::size_t>(i)] = (*this)[i + c];
  return out;
}

int UTuple::sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

namespace {

void u_rec(int g, int cap, int left, std::vector<int>& prefix, std::vector<UTuple>& out) {
  if (static_cast<int>(prefix.size()) == g) {
    if (left == 0) out.push_back(UTuple{g, prefix});
    return;
  }
  const int slots = g - static_cast<int>(prefix.size()) - 1;
  for (int x = 0; x <= std::min(cap, left); ++x) {
    if (left - x > slots * cap) continue;
    prefix.push_back(x);
    u_rec(g, cap, left - x, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<UTuple> u_tuples(int g, int s, int a) {
  require(g >= 1 && s >= 0 && s % g == 0, "g must divide s");
  std::vector<UTuple> out;
  if (a < 0) return out;
  std::vector<int> prefix;
  u_rec(g, s / g, a, prefix, out);
  return out;
}

UTuple sigma_tau(const Partition& p, const Partition& q, int s, int a, int g) {
  require(g >= 1 && s >= 1 && s % g == 0, "g must divide s");
  require(0 <= a && a < s, "need 0 <= a < s");
  require(is_s_core(p, g) && is_s_core(q, g), "components must be g-cores");
  require(is_core_bipartition(p, q, s, 0, a), "bipartition is not an (s|0,a)-core");
  const SSet sp = s_set(p, g), sq = s_set(q, g);
  UTuple u{g, std::vector<int>(static_cast<std::size_t>(g))};
  for (int i = 0; i < g; ++i) {
    int diff = sq.representatives[static_cast<std::size_t>(i)] + a -
               sp.representatives[static_cast<std::size_t>(mod_floor(i + a, g))];
    if (mod_floor(diff, g) != 0) throw std::logic_error("sigma entry is not a multiple of g");
    u.entries[static_cast<std::size_t>(i)] = diff / g;
  }
  return u;
}

TuplePreimage from_tuples(const UTuple& u, const UTuple& v, int s, int t, int a, int b) {
  check_ss(s, t, a, b);
  const int g = std::gcd(s, t);
  require(u.g == g && v.g == g && static_cast<int>(u.entries.size()) == g && static_cast<int>(v.entries.size()) == g,
          "tuples must be indexed by Z/gZ with g = gcd(s,t)");
  auto in_range = [](const UTuple& w, int cap) {
    return std::all_of(w.entries.begin(), w.entries.end(), [cap](int x) { return 0 <= x && x <= cap; });
  };
  require(in_range(u, s / g) && u.sum() == a, "u is not in U_g^{s,a}");
  require(in_range(v, t / g) && v.sum() == b, "v is not in U_g^{t,b}");

  // x_{i+b} = x_{i+a} + (b-a) + g(u_i - v_i); walk the cycle 0, d, 2d, ... with d = b - a, from x_0 = 0.
  const int step = b - a;
  std::vector<long> x(static_cast<std::size_t>(g));
  long value = 0, total = 0;
  for (int d = 0; d < g; ++d) {
    x[static_cast<std::size_t>(mod_floor(d * step, g))] = value;
    total += value;
    const int i = d * step - a;
    value += step + static_cast<long>(g) * (u[i] - v[i]);
  }
  // Each x_i lies in class i, so the sum is congruent to g(g-1)/2; shift to hit it exactly.
  const long target = static_cast<long>(g) * (g - 1) / 2;
  const long k = (target - total) / g;
  for (auto& xi : x) xi += k;

  SSet sx{g, std::vector<int>(static_cast<std::size_t>(g))}, sy{g, std::vector<int>(static_cast<std::size_t>(g))};
  for (int i = 0; i < g; ++i) {
    long xi = x[static_cast<std::size_t>(i)];
    long yi = x[static_cast<std::size_t>(mod_floor(i + a, g))] - a + static_cast<long>(g) * u[i];
    sx.representatives[static_cast<std::size_t>(mod_floor(static_cast<int>(xi), g))] = static_cast<int>(xi);
    sy.representatives[static_cast<std::size_t>(mod_floor(static_cast<int>(yi), g))] = static_cast<int>(yi);
  }
  return TuplePreimage{s_core_from_s_set(sx), s_core_from_s_set(sy), mod_floor(-static_cast<int>(k), g)};
}

std::vector<Multipartition> ss_members(int s, int t, int a, int b) {
  check_ss(s, t, a, b);
  const int g = std::gcd(s, t);
  std::set<Multipartition> found;
  const auto us = u_tuples(g, s, a);
  const auto vs = u_tuples(g, t, b);
  for (const auto& u : us)
    for (const auto& v : vs) {
      auto pre = from_tuples(u, v, s, t, a, b);
      found.insert(Multipartition{pre.lambda, pre.mu});
    }
  return {found.begin(), found.end()};
}

std::string least_rotation(std::string_view word) {
  std::string best(word);
  std::string doubled = std::string(word) + std::string(word);
  for (std::size_t r = 1; r < word.size(); ++r) {
    std::string_view cand(doubled.data() + r, word.size());
    if (cand < best) best.assign(cand);
  }
  return best;
}

CyclicWord::CyclicWord(std::string_view letters) {
  for (char ch : letters)
    if (ch != 'B' && ch != 'D' && ch != 'R') throw ParseError("cyclic words use only the letters B, D, R");
  letters_ = least_rotation(letters);
}

int CyclicWord::count(char letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

std::vector<CyclicWord> necklaces(int count_b, int count_d, int count_r) {
  require(count_b >= 0 && count_d >= 0 && count_r >= 0, "letter counts must be non-negative");
  std::string w = std::string(static_cast<std::size_t>(count_b), 'B') + std::string(static_cast<std::size_t>(count_d), 'D') +
                  std::string(static_cast<std::size_t>(count_r), 'R');
  std::vector<CyclicWord> out;
  do {
    if (least_rotation(w) == w) out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

struct LatticePath {
  std::vector<int> column_top;  // label of the highest coloured cell in columns 0..t-1
  std::vector<int> corners;     // labels of the B cells
};

// Walks one period from the corner (0, 0): R closes a column under the current height,
// D lowers the height, B is a D R corner whose cell is recorded.
LatticePath walk(std::string_view word, int s, int t) {
  LatticePath path;
  int x = 0, y = 0;
  for (char ch : word) {
    if (ch == 'B') {
      path.corners.push_back(s * x + t * (y - 1));
      --y;
    }
    if (ch == 'D') {
      --y;
      continue;
    }
    path.column_top.push_back(s * x + t * (y - 1));
    ++x;
  }
  return path;
}

BetaSpec lattice_set(const std::vector<int>& column_top, int t, const std::vector<int>& extra) {
  const int floor = *std::min_element(column_top.begin(), column_top.end());
  BetaSpec spec{floor + 1, {}};
  for (int top : column_top)
    for (int n = top; n > floor; n -= t) spec.exceptional.push_back(n);
  spec.exceptional.insert(spec.exceptional.end(), extra.begin(), extra.end());
  return spec;
}

void check_letters(std::string_view word, int b, int d, int r) {
  int nb = 0, nd = 0, nr = 0;
  for (char ch : word) {
    if (ch == 'B') ++nb;
    else if (ch == 'D') ++nd;
    else if (ch == 'R') ++nr;
    else throw PreconditionError("word letters must be B, D or R");
  }
  require(nb == b && nd == d && nr == r, "word letter counts do not match the parameters");
}

// Top label of each lattice column x in [0, t) for beta(core).
std::vector<int> column_tops(const Partition& core, int s, int t) {
  ShiftedBetaSet beta{core, 0};
  std::vector<int> tops(static_cast<std::size_t>(t));
  for (int x = 0; x < t; ++x) {
    int n = beta.top() + t;
    n -= mod_floor(n - s * x, t);
    while (!beta.contains(n)) n -= t;
    tops[static_cast<std::size_t>(x)] = n;
  }
  return tops;
}

int column_of(int label, int s, int t) {
  for (int x = 0; x < t; ++x)
    if (mod_floor(label - s * x, t) == 0) return x;
  throw std::logic_error("no lattice column for label");
}

std::string path_word(const std::vector<int>& tops, const std::vector<char>& corner, int s, int t) {
  std::vector<int> height(static_cast<std::size_t>(t));
  for (int x = 0; x < t; ++x) height[static_cast<std::size_t>(x)] = (tops[static_cast<std::size_t>(x)] - s * x) / t + 1;
  std::string word;
  int prev = height.back() + s;
  for (int x = 0; x < t; ++x) {
    int drops = prev - height[static_cast<std::size_t>(x)];
    if (drops < 0) throw PreconditionError("boundary path is not monotone; not an (s,t)-core");
    if (corner[static_cast<std::size_t>(x)]) {
      if (drops < 1) throw std::logic_error("B cell is not at a corner");
      word += std::string(static_cast<std::size_t>(drops - 1), 'D') + 'B';
    } else {
      word += std::string(static_cast<std::size_t>(drops), 'D') + 'R';
    }
    prev = height[static_cast<std::size_t>(x)];
  }
  return word;
}

}  // namespace

Partition st_decode(std::string_view word, int s, int t) {
  require(s >= 1 && t >= 1 && std::gcd(s, t) == 1, "s and t must be coprime positive integers");
  check_letters(word, 0, s, t);
  LatticePath path = walk(word, s, t);
  return normalize_beta(lattice_set(path.column_top, t, {})).partition;
}

CyclicWord st_encode(const Partition& core, int s, int t) {
  require(s >= 1 && t >= 1 && std::gcd(s, t) == 1, "s and t must be coprime positive integers");
  require(is_s_core(core, s) && is_s_core(core, t), "partition is not an (s,t)-core");
  return CyclicWord(path_word(column_tops(core, s, t), std::vector<char>(static_cast<std::size_t>(t), 0), s, t));
}

std::vector<Partition> st_cores(int s, int t) {
  require(s >= 1 && t >= 1 && std::gcd(s, t) == 1, "s and t must be coprime positive integers");
  std::vector<Partition> out;
  for (const auto& w : necklaces(0, s, t)) out.push_back(st_decode(w.letters(), s, t));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Partition, Partition> aa_decode(std::string_view word, int s, int t, int a) {
  check_aa(s, t, a);
  check_letters(word, a, s - a, t - a);
  LatticePath path = walk(word, s, t);
  Partition lambda = normalize_beta(lattice_set(path.column_top, t, {})).partition;
  Partition mu = normalize_beta(lattice_set(path.column_top, t, path.corners)).partition;
  return {std::move(lambda), std::move(mu)};
}

CyclicWord aa_encode(const Partition& lambda, const Partition& mu, int s, int t, int a) {
  check_aa(s, t, a);
  require(is_core_bipartition(lambda, mu, s, 0, a) && is_core_bipartition(lambda, mu, t, 0, a),
          "bipartition is not in C(s|0,a) n C(t|0,a)");
  const auto tops = column_tops(lambda, s, t);
  ShiftedBetaSet base{lambda, 0}, raised{mu, a};
  std::vector<char> corner(static_cast<std::size_t>(t), 0);
  for (int n = raised.top(); n >= base.threshold(); --n) {
    if (!raised.contains(n) || base.contains(n)) continue;
    int x = column_of(n, s, t);
    if (n != tops[static_cast<std::size_t>(x)] + t) throw std::logic_error("added bead is not above its column");
    corner[static_cast<std::size_t>(x)] = 1;
  }
  return CyclicWord(path_word(tops, corner, s, t));
}

std::vector<Multipartition> aa_members(int s, int t, int a) {
  check_aa(s, t, a);
  std::vector<Multipartition> out;
  for (const auto& w : necklaces(a, s - a, t - a)) {
    auto [lambda, mu] = aa_decode(w.letters(), s, t, a);
    out.push_back(Multipartition{std::move(lambda), std::move(mu)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational average_size(const std::vector<Multipartition>& members) {
  require(!members.empty(), "average of an empty list");
  BigInt total = 0;
  for (const auto& m : members) total += m.size();
  return Rational(total, BigInt(members.size()));
}

Family parse_family(std::string_view name) {
  if (name == "ss") return Family::ss;
  if (name == "t0") return Family::t0;
  if (name == "aa") return Family::aa;
  if (name == "anderson") return Family::anderson;
  throw ParseError("unknown family '" + std::string(name) + "' (expected ss, t0, aa or anderson)");
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::ss: return "ss";
    case Family::t0: return "t0";
    case Family::aa: return "aa";
    case Family::anderson: return "anderson";
  }
  return "?";
}

Rational conjecture_value(Family f, const std::vector<int>& params) {
  auto need = [&](std::size_t n) { require(params.size() == n, "wrong number of parameters for this family"); };
  switch (f) {
    case Family::ss: {
      need(3);
      const BigInt s = params[0], a = params[1], b = params[2];
      require(0 <= params[1] && params[1] < params[0] && 0 <= params[2] && params[2] < params[0],
              "need 0 <= a, b < s");
      require(gcd_abs(params[0], params[1] - params[2]) == 1, "s and a-b must be coprime");
      return Rational((s + 1) * (a * (s - a) + b * (s - b) + 1 - s), 12);
    }
    case Family::t0: {
      need(3);
      const BigInt s = params[0], a = params[1], b = params[2];
      require(0 <= params[1] && params[1] < params[0] && params[2] >= 0, "need 0 <= a < s and b >= 0");
      require(gcd_abs(params[0], params[1] - params[2]) == 1, "s and a-b must be coprime");
      return Rational((s + 1) * a * (s - a) + (s - 1) * (b - 1) * (b + s + 1), 12);
    }
    case Family::aa: {
      need(3);
      check_aa(params[0], params[1], params[2]);
      const BigInt s = params[0], t = params[1], a = params[2];
      return Rational((s - 1) * (t - 1) * (s + t - 2 * a + 1) - 2 * a * a + 2 * a, 12);
    }
    case Family::anderson: {
      need(2);
      require(params[0] >= 1 && params[1] >= 1 && std::gcd(params[0], params[1]) == 1,
              "s and t must be coprime positive integers");
      const BigInt s = params[0], t = params[1];
      return Rational((s - 1) * (t - 1) * (s + t + 1), 24);
    }
  }
  throw PreconditionError("unknown family");
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

}  // namespace simcore
