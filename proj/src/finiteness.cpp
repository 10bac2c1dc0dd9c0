#include "simcore/finiteness.hpp"

#include <algorithm>
#include <numeric>

#include "simcore/enumeration.hpp"
#include "simcore/parallel.hpp"
#include "simcore/weyl_orbit.hpp"

namespace simcore {

std::string_view to_string(FiniteReason r) {
  switch (r) {
    case FiniteReason::g_not_1: return "g-not-1";
    case FiniteReason::x_fails: return "x-fails";
    case FiniteReason::all_zero_finite: return "all-zero-finite";
    case FiniteReason::positive_modulus_finite: return "positive-modulus-finite";
    case FiniteReason::s_equals_1: return "s-equals-1";
    case FiniteReason::empty_t_infinite: return "empty-T-infinite";
  }
  return "?";
}

std::string_view to_string(Certificate c) {
  return c == Certificate::certified ? "certified" : "saturation-heuristic";
}

namespace {

void check_levels(const DatumSet& t) {
  for (const auto& d : t.data) {
    if (d.level() != t.level) throw PreconditionError("data of mixed levels");
    if (d.modulus < 0) throw PreconditionError("modulus must be non-negative");
  }
}

}  // namespace

int g_of(const DatumSet& t) {
  check_levels(t);
  int g = 0;
  for (const auto& d : t.data) g = std::gcd(g, d.modulus);
  for (const auto& x : t.data)
    for (const auto& y : t.data)
      for (std::size_t i = 0; i < t.level; ++i)
        for (std::size_t j = 0; j < t.level; ++j)
          g = std::gcd(g, std::abs(x.charges[i] - x.charges[j] - y.charges[i] + y.charges[j]));
  return g;
}

bool condition_x(const DatumSet& t) {
  check_levels(t);
  auto extremal = [&](std::size_t k, const Datum& d, bool maximal) {
    for (int c : d.charges)
      if (maximal ? c > d.charges[k] : c < d.charges[k]) return false;
    return true;
  };
  auto sometimes_not_always = [&](bool maximal) {
    for (std::size_t k = 0; k < t.level; ++k) {
      bool some = false, all = true;
      for (const auto& d : t.data) {
        bool e = extremal(k, d, maximal);
        some = some || e;
        all = all && e;
      }
      if (some && !all) return true;
    }
    return false;
  };
  return sometimes_not_always(true) && sometimes_not_always(false);
}

FinitenessVerdict decide_finite(const DatumSet& t) {
  check_levels(t);
  FinitenessVerdict v;
  v.g_value = g_of(t);
  if (t.empty()) {
    v.reason = FiniteReason::empty_t_infinite;
    return v;
  }
  const bool any_one = std::any_of(t.data.begin(), t.data.end(), [](const Datum& d) { return d.modulus == 1; });
  if (any_one) {
    v.finite = true;
    v.reason = FiniteReason::s_equals_1;
    return v;
  }
  const bool all_zero = std::all_of(t.data.begin(), t.data.end(), [](const Datum& d) { return d.modulus == 0; });
  if (v.g_value != 1) {
    v.reason = FiniteReason::g_not_1;
    if (all_zero) v.condition_x = condition_x(t);
    return v;
  }
  if (all_zero) {
    v.condition_x = condition_x(t);
    v.finite = *v.condition_x;
    v.reason = v.finite ? FiniteReason::all_zero_finite : FiniteReason::x_fails;
    return v;
  }
  v.finite = true;
  v.reason = FiniteReason::positive_modulus_finite;
  return v;
}

ConstraintTable pair_constraints(const DatumSet& t) {
  check_levels(t);
  const std::size_t l = t.level;
  ConstraintTable table;
  table.level = l;
  table.differences.assign(l, std::vector<std::set<int>>(l));
  table.core_moduli.assign(l, {});
  table.hook_bounds.assign(l, {});

  auto bound_hooks = [&](std::size_t k, int a, int bound) {
    auto [it, fresh] = table.hook_bounds[k].emplace(a, bound);
    if (!fresh) it->second = std::min(it->second, bound);
  };

  for (const auto& d : t.data) {
    if (d.modulus > 0)
      for (std::size_t k = 0; k < l; ++k) {
        table.core_moduli[k].insert(d.modulus);
        bound_hooks(k, d.modulus, 0);
      }
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < l; ++k) {
        if (j == k) continue;
        const int diff = d.charges[j] - d.charges[k];
        if (d.modulus == 0) {
          table.differences[j][k].insert(diff);
        } else {
          const int r = mod_floor(diff, d.modulus);
          table.differences[j][k].insert(r);
          table.differences[j][k].insert(r - d.modulus);
          if (j < k) table.pairs.insert(PairConstraint{j, k, d.modulus, r, false});
        }
      }
  }

  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t k = j + 1; k < l; ++k) {
      const auto& diffs = table.differences[j][k];
      for (int x : diffs)
        for (int y : diffs) {
          if (x <= y) continue;
          const int a = x - y;
          if (x >= 0 && y <= 0) {
            // opposite signs (0 counts as either): both components are a-cores and the pair is an (a | x, 0)-core
            table.pairs.insert(PairConstraint{j, k, a, mod_floor(x, a), true});
            table.core_moduli[j].insert(a);
            table.core_moduli[k].insert(a);
            bound_hooks(j, a, 0);
            bound_hooks(k, a, 0);
          } else {
            const int bound = std::min(std::abs(x), std::abs(y));
            bound_hooks(j, a, bound);
            bound_hooks(k, a, bound);
          }
        }
    }
  // A direct constraint and a derived one can coincide; keep the direct entry.
  for (auto it = table.pairs.begin(); it != table.pairs.end();) {
    PairConstraint direct = *it;
    direct.derived = false;
    if (it->derived && table.pairs.count(direct)) it = table.pairs.erase(it);
    else ++it;
  }
  return table;
}

int frobenius_number(const std::set<int>& a) {
  if (a.empty() || *a.begin() <= 0) throw PreconditionError("Frobenius number needs positive integers");
  int g = 0;
  for (int x : a) g = std::gcd(g, x);
  if (g != 1) throw PreconditionError("Frobenius number needs coprime integers");
  const int smallest = *a.begin();
  if (smallest == 1) return -1;
  std::vector<char> reachable{1};  // reachable[n]: n is a (possibly empty) sum of elements
  int run = 0, last_gap = 0;
  for (int n = 1; run < smallest; ++n) {
    char ok = 0;
    for (int x : a)
      if (x <= n && reachable[static_cast<std::size_t>(n - x)]) {
        ok = 1;
        break;
      }
    reachable.push_back(ok);
    if (ok) {
      ++run;
    } else {
      run = 0;
      last_gap = n;
    }
  }
  return last_gap == 0 ? -1 : last_gap;
}

std::optional<int> removable_bound(const ConstraintTable& table, std::size_t k) {
  const auto& bounds = table.hook_bounds.at(k);
  std::set<int> moduli;
  long total = 0;
  int g = 0;
  for (const auto& [a, f] : bounds) {
    moduli.insert(a);
    total += f;
    g = std::gcd(g, a);
  }
  if (g != 1) return std::nullopt;
  // Split the removable beads into runs of G+1; each run forces a distinct a-hook for some a.
  const long step = std::max(frobenius_number(moduli), 0) + 1;
  const long b = (total + 1) * step - 1;
  if (b > 1'000'000) return std::nullopt;
  return static_cast<int>(b);
}

namespace {

using Candidates = std::vector<Partition>;

constexpr long kBoxLimit = 400'000;

bool component_ok(const ConstraintTable& table, std::size_t k, const Partition& p) {
  for (const auto& [a, f] : table.hook_bounds[k]) {
    if (a == 1) {
      if (removable_count(p) > f) return false;
    } else if (hook_count(p, a) > f) {
      return false;
    }
  }
  return true;
}

Candidates filter(const ConstraintTable& table, std::size_t k, const Candidates& in, int threads) {
  std::vector<char> keep(in.size());
  const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long i = 0; i < n; ++i) keep[static_cast<std::size_t>(i)] = component_ok(table, k, in[static_cast<std::size_t>(i)]);
  Candidates out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (keep[i]) out.push_back(in[i]);
  return out;
}

bool box_small(int rows, int cols) {
  long double c = 1;
  for (int i = 1; i <= std::min(rows, cols); ++i) {
    c = c * (rows + cols - std::min(rows, cols) + i) / i;
    if (c > kBoxLimit) return false;
  }
  return true;
}

void box_rec(int rows_left, int max_part, std::vector<int>& prefix, Candidates& out) {
  out.emplace_back(prefix);
  if (rows_left == 0) return;
  for (int x = 1; x <= max_part; ++x) {
    prefix.push_back(x);
    box_rec(rows_left - 1, x, prefix, out);
    prefix.pop_back();
  }
}

Candidates partitions_in_box(int rows, int cols) {
  Candidates out;
  std::vector<int> prefix;
  box_rec(cols, rows, prefix, out);
  return out;
}

Candidates intersect(const Candidates& x, const Candidates& y) {
  Candidates out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// Partitions q with (known, q) or (q, known) in the given pair constraint.
std::optional<Candidates> propagate(const PairConstraint& pc, std::size_t from, const Candidates& known) {
  if (pc.modulus < 2) return std::nullopt;
  std::set<Partition> found;
  for (const auto& p : known) {
    if (!is_s_core(p, pc.modulus)) continue;
    auto partners = from == pc.j ? sandwich_partners(p, pc.modulus, pc.offset, 0)
                                 : sandwich_partners(p, pc.modulus, 0, pc.offset);
    found.insert(partners.begin(), partners.end());
  }
  return Candidates(found.begin(), found.end());
}

struct Certifier {
  const DatumSet& t;
  const ConstraintTable& table;
  int threads;
  std::vector<std::optional<Candidates>> lists;

  bool rule_cores(std::size_t k) {
    const auto& moduli = table.core_moduli[k];
    if (moduli.count(1)) {
      lists[k] = Candidates{Partition{}};
      return true;
    }
    std::optional<std::pair<int, int>> best;
    BigInt best_count = 0;
    for (int a : moduli)
      for (int b : moduli) {
        if (a >= b || std::gcd(a, b) != 1) continue;
        BigInt c = count_anderson(a, b);
        if (!best || c < best_count) {
          best = {a, b};
          best_count = c;
        }
      }
    if (!best || best_count > kBoxLimit) return false;
    lists[k] = filter(table, k, st_cores(best->first, best->second), threads);
    return true;
  }

  bool rule_propagate(std::size_t k) {
    std::optional<Candidates> acc;
    for (const auto& pc : table.pairs) {
      std::size_t other;
      if (pc.k == k) other = pc.j;
      else if (pc.j == k) other = pc.k;
      else continue;
      if (!lists[other]) continue;
      auto next = propagate(pc, other, *lists[other]);
      if (!next) continue;
      acc = acc ? intersect(*acc, *next) : std::move(*next);
    }
    if (!acc) return false;
    lists[k] = filter(table, k, *acc, threads);
    return true;
  }

  // Smallest non-negative value d with (lambda^j, lambda^k) in C(0 | d, 0).
  std::optional<int> least_nonnegative(std::size_t j, std::size_t k) const {
    for (int d : table.differences[j][k])
      if (d >= 0) return d;
    return std::nullopt;
  }

  bool rule_box(std::size_t k) {
    std::optional<int> rows, cols;
    auto tighten = [](std::optional<int>& bound, int value) { bound = bound ? std::min(*bound, value) : value; };

    if (auto b = removable_bound(table, k)) {
      for (int a : table.core_moduli[k])
        if (a >= 2) {
          tighten(rows, (a - 1) * *b);
          tighten(cols, (a - 1) * *b);
        }
    }
    for (std::size_t j = 0; j < table.level; ++j) {
      if (j == k || !lists[j]) continue;
      int max_row = 0, max_col = 0;
      for (const auto& p : *lists[j]) {
        max_row = std::max(max_row, p.first_row());
        max_col = std::max(max_col, static_cast<int>(p.length()));
      }
      // first row of lambda^k is at most that of lambda^j plus c_j - c_k when c_k <= c_j; columns by conjugation
      if (auto x = least_nonnegative(j, k)) tighten(rows, max_row + *x);
      if (auto y = least_nonnegative(k, j)) tighten(cols, max_col + *y);
    }
    if (!rows || !cols || !box_small(*rows, *cols)) return false;
    lists[k] = filter(table, k, partitions_in_box(*rows, *cols), threads);
    return true;
  }

  bool run() {
    lists.assign(table.level, std::nullopt);
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t k = 0; k < table.level; ++k)
        if (!lists[k] && (rule_cores(k) || rule_propagate(k))) progress = true;
      if (progress) continue;
      for (std::size_t k = 0; k < table.level && !progress; ++k)
        if (!lists[k] && rule_box(k)) progress = true;
    }
    return std::all_of(lists.begin(), lists.end(), [](const auto& x) { return x.has_value(); });
  }
};

bool pair_ok(const DatumSet& t, std::size_t j, const Partition& pj, std::size_t k, const Partition& pk) {
  for (const auto& d : t.data) {
    if (d.modulus == 1) {
      if (!pj.empty() || !pk.empty()) return false;
      continue;
    }
    if (!is_core_bipartition(pj, pk, d.modulus, d.charges[j], d.charges[k])) return false;
  }
  return true;
}

struct Assembly {
  const DatumSet& t;
  std::vector<std::size_t> order;       // component visited at each depth
  std::vector<const Candidates*> lists;  // indexed by component
  std::optional<int> budget;

  void extend(std::size_t depth, std::vector<const Partition*>& chosen, int size, std::vector<Multipartition>& out) const {
    if (depth == order.size()) {
      std::vector<Partition> comps;
      comps.reserve(chosen.size());
      for (auto* p : chosen) comps.push_back(*p);
      out.emplace_back(std::move(comps));
      return;
    }
    const std::size_t k = order[depth];
    for (const auto& p : *lists[k]) {
      if (budget && size + p.size() > *budget) continue;
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        const std::size_t j = order[e];
        ok = j < k ? pair_ok(t, j, *chosen[j], k, p) : pair_ok(t, k, p, j, *chosen[j]);
      }
      if (!ok) continue;
      chosen[k] = &p;
      extend(depth + 1, chosen, size + p.size(), out);
    }
    chosen[k] = nullptr;
  }

  std::vector<Multipartition> from_first(std::size_t index) const {
    std::vector<const Partition*> chosen(order.size(), nullptr);
    const Partition& p = (*lists[order[0]])[index];
    std::vector<Multipartition> out;
    if (budget && p.size() > *budget) return out;
    chosen[order[0]] = &p;
    extend(1, chosen, p.size(), out);
    return out;
  }
};

std::vector<Multipartition> assemble(const DatumSet& t, const std::vector<Candidates>& lists, std::optional<int> budget,
                                     int threads) {
  Assembly a{t, {}, {}, budget};
  for (std::size_t k = 0; k < lists.size(); ++k) {
    a.order.push_back(k);
    a.lists.push_back(&lists[k]);
  }
  std::stable_sort(a.order.begin(), a.order.end(),
                   [&](std::size_t x, std::size_t y) { return lists[x].size() < lists[y].size(); });
  const long first = static_cast<long>(lists[a.order[0]].size());
  std::vector<std::vector<Multipartition>> found(static_cast<std::size_t>(first));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < first; ++i) found[static_cast<std::size_t>(i)] = a.from_first(static_cast<std::size_t>(i));

  std::vector<Multipartition> out;
  for (auto& batch : found) std::move(batch.begin(), batch.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

Candidates bounded_candidates(const ConstraintTable& table, std::size_t k, int max_size, int threads) {
  const auto& moduli = table.core_moduli[k];
  if (moduli.count(1)) return Candidates{Partition{}};
  auto smallest = std::find_if(moduli.begin(), moduli.end(), [](int a) { return a >= 2; });
  Candidates pool;
  if (smallest != moduli.end()) {
    const Datum single{*smallest, {0}};
    auto cores = threads == 1 ? serial::orbit_members(single, max_size) : orbit_members(single, max_size);
    for (auto& m : cores) pool.push_back(m[0]);
  } else {
    pool = partitions_up_to(max_size);
  }
  return filter(table, k, pool, threads);
}

EnumerationResult bounded(const DatumSet& t, const ConstraintTable& table, int max_size, int threads) {
  EnumerationResult r;
  r.ceiling = max_size;
  std::vector<Candidates> lists;
  for (std::size_t k = 0; k < t.level; ++k) lists.push_back(bounded_candidates(table, k, max_size, threads));
  r.members = assemble(t, lists, max_size, threads);
  int largest = 0;
  for (const auto& m : r.members) largest = std::max(largest, m.size());
  r.saturated = largest <= max_size - 2;
  return r;
}

EnumerationResult enumerate_with(const DatumSet& t, int max_size, Mode mode, int threads) {
  check_levels(t);
  if (t.level == 0) throw PreconditionError("level must be positive");
  if (max_size < 0) throw PreconditionError("max_size must be non-negative");
  const ConstraintTable table = pair_constraints(t);
  if (mode == Mode::bounded) return bounded(t, table, max_size, threads);

  const auto verdict = decide_finite(t);
  if (!verdict.finite)
    throw InfiniteSetError("the set of cores is infinite (" + std::string(to_string(verdict.reason)) + ")");

  Certifier cert{t, table, threads, {}};
  if (!cert.run()) return bounded(t, table, max_size, threads);

  EnumerationResult r;
  r.certificate = Certificate::certified;
  r.saturated = true;
  std::vector<Candidates> lists;
  for (auto& l : cert.lists) lists.push_back(std::move(*l));
  for (const auto& l : lists) {
    ComponentBound b;
    b.candidates = l.size();
    for (const auto& p : l) {
      b.rows = std::max(b.rows, p.first_row());
      b.columns = std::max(b.columns, static_cast<int>(p.length()));
    }
    r.bounds.push_back(b);
  }
  r.members = assemble(t, lists, std::nullopt, threads);
  return r;
}

}  // namespace

EnumerationResult enumerate_members(const DatumSet& t, int max_size, Mode mode) {
  return enumerate_with(t, max_size, mode, thread_count());
}

namespace serial {

EnumerationResult enumerate_members(const DatumSet& t, int max_size, Mode mode) {
  return enumerate_with(t, max_size, mode, 1);
}

}  // namespace serial

}  // namespace simcore
