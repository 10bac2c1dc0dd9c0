#pragma once

#include <vector>

#include "simcore/multicore.hpp"

namespace simcore {

/// Adds every addable node of residue i and removes every removable node of
/// residue i, in all components at once. An involution on multipartitions.
/// For s = 0 the class is an integer (modulus 0).
Multipartition act_generator(const Multipartition& m, const Datum& d, ResidueClass i);

/// Generator indices used by orbit search. For s > 0 all classes of Z/sZ; for
/// s = 0 the integers that can label a node of a multipartition of size <= max_size.
std::vector<ResidueClass> orbit_generators(const Datum& d, int max_size);

/// Closure of the empty multipartition under the generators, truncated to size
/// <= max_size. Equals the (s|c)-cores of size <= max_size. s = 1 is rejected.
/// Frontier expansion runs in parallel.
std::vector<Multipartition> orbit_members(const Datum& d, int max_size);

namespace serial {

/// Single-threaded reference for orbit_members.
std::vector<Multipartition> orbit_members(const Datum& d, int max_size);

}  // namespace serial

}  // namespace simcore
