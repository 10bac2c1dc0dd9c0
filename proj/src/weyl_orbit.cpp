#include "simcore/weyl_orbit.hpp"

#include <algorithm>
#include <set>

#include "simcore/parallel.hpp"

namespace simcore {

namespace {

// Applies the transposition of n-1 and n, for every n in class i, to one shifted beta-set.
Partition act_on_component(const Partition& p, int charge, int s, int i) {
  ShiftedBetaSet b{p, charge};
  const int lo = b.threshold() - 1;  // thr - 1 may move up to thr
  const int hi = b.top() + 1;
  std::vector<char> member(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) member[static_cast<std::size_t>(n - lo)] = b.contains(n);

  for (int n = lo + 1; n <= hi; ++n) {
    if (mod_floor(n, s) != mod_floor(i, s)) continue;
    auto& below = member[static_cast<std::size_t>(n - 1 - lo)];
    auto& here = member[static_cast<std::size_t>(n - lo)];
    std::swap(below, here);
  }

  BetaSpec spec{lo, {}};
  for (int n = lo; n <= hi; ++n)
    if (member[static_cast<std::size_t>(n - lo)]) spec.exceptional.push_back(n);
  return normalize_beta(spec).partition;
}

void check_generator(const Datum& d, ResidueClass i) {
  if (d.modulus == 1) throw PreconditionError("no generator action for s = 1");
  if (d.modulus < 0) throw PreconditionError("modulus must be non-negative");
  if (i.modulus != d.modulus) throw PreconditionError("generator class modulus differs from the datum modulus");
}

int explore_bound(const Datum& d, int max_size) {
  const int buffer = d.modulus > 0 ? d.modulus : 2 * std::max<int>(static_cast<int>(d.level()), 1);
  return max_size + buffer;
}

std::vector<Multipartition> neighbours(const Multipartition& m, const Datum& d,
                                       const std::vector<ResidueClass>& gens, int bound) {
  std::vector<Multipartition> out;
  for (const auto& g : gens) {
    Multipartition n = act_generator(m, d, g);
    if (n.size() <= bound && n != m) out.push_back(std::move(n));
  }
  return out;
}

std::vector<Multipartition> truncate(const std::set<Multipartition>& seen, int max_size) {
  std::vector<Multipartition> out;
  for (const auto& m : seen)
    if (m.size() <= max_size) out.push_back(m);
  return out;
}

void check_orbit_args(const Datum& d, int max_size) {
  if (d.modulus == 1) throw PreconditionError("orbit generation is undefined for s = 1");
  if (d.modulus < 0 || d.level() == 0) throw PreconditionError("malformed datum");
  if (max_size < 0) throw PreconditionError("max_size must be non-negative");
}

}  // namespace

Multipartition act_generator(const Multipartition& m, const Datum& d, ResidueClass i) {
  check_generator(d, i);
  if (m.level() != d.level()) throw PreconditionError("level mismatch between multipartition and datum");
  std::vector<Partition> comps;
  comps.reserve(m.level());
  for (std::size_t k = 0; k < m.level(); ++k) comps.push_back(act_on_component(m[k], d.charges[k], d.modulus, i.value));
  return Multipartition(std::move(comps));
}

std::vector<ResidueClass> orbit_generators(const Datum& d, int max_size) {
  std::vector<ResidueClass> gens;
  if (d.modulus > 0) {
    for (int i = 0; i < d.modulus; ++i) gens.push_back(ResidueClass{d.modulus, i});
    return gens;
  }
  const auto [lo, hi] = std::minmax_element(d.charges.begin(), d.charges.end());
  const int reach = explore_bound(d, max_size);
  for (int i = *lo - reach - 1; i <= *hi + reach + 1; ++i) gens.push_back(ResidueClass{0, i});
  return gens;
}

std::vector<Multipartition> orbit_members(const Datum& d, int max_size) {
  check_orbit_args(d, max_size);
  const int bound = explore_bound(d, max_size);
  const auto gens = orbit_generators(d, max_size);

  std::set<Multipartition> seen{Multipartition::empty(d.level())};
  std::vector<Multipartition> frontier(seen.begin(), seen.end());
  const int threads = thread_count();

  while (!frontier.empty()) {
    std::vector<std::vector<Multipartition>> found(frontier.size());
    const long count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (long f = 0; f < count; ++f) found[static_cast<std::size_t>(f)] = neighbours(frontier[static_cast<std::size_t>(f)], d, gens, bound);

    std::vector<Multipartition> next;
    for (auto& batch : found)
      for (auto& n : batch)
        if (seen.insert(n).second) next.push_back(std::move(n));
    frontier = std::move(next);
  }
  return truncate(seen, max_size);
}

namespace serial {

std::vector<Multipartition> orbit_members(const Datum& d, int max_size) {
  check_orbit_args(d, max_size);
  const int bound = explore_bound(d, max_size);
  const auto gens = orbit_generators(d, max_size);

  std::set<Multipartition> seen{Multipartition::empty(d.level())};
  std::vector<Multipartition> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    Multipartition m = std::move(stack.back());
    stack.pop_back();
    for (auto& n : neighbours(m, d, gens, bound))
      if (seen.insert(n).second) stack.push_back(std::move(n));
  }
  return truncate(seen, max_size);
}

}  // namespace serial

}  // namespace simcore
