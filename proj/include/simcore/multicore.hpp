#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simcore/partitions.hpp"

namespace simcore {

/// An ordered l-tuple of partitions, l >= 1.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  Multipartition(std::initializer_list<Partition> components)
      : Multipartition(std::vector<Partition>(components)) {}

  /// The multipartition with l empty components.
  static Multipartition empty(std::size_t level);

  std::size_t level() const noexcept { return components_.size(); }
  const std::vector<Partition>& components() const noexcept { return components_; }
  const Partition& operator[](std::size_t k) const { return components_[k]; }
  int size() const noexcept;
  bool is_empty() const noexcept;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  /// Total size first, then componentwise in the partition order.
  friend std::strong_ordering operator<=>(const Multipartition& x, const Multipartition& y);

 private:
  std::vector<Partition> components_;
};

/// A multipartition datum (s | c_1, ..., c_l). Charges are kept as given.
struct Datum {
  int modulus = 0;
  std::vector<int> charges;

  std::size_t level() const noexcept { return charges.size(); }
  int residue(int column_minus_row, std::size_t component) const {
    return mod_floor(column_minus_row + charges[component], modulus);
  }

  friend bool operator==(const Datum&, const Datum&) = default;
};

/// A finite set of data sharing one level. An empty set still records its level.
struct DatumSet {
  std::size_t level = 0;
  std::vector<Datum> data;

  static DatumSet of(std::vector<Datum> data);
  bool empty() const noexcept { return data.empty(); }
};

/// Configuration for the exhaustive content-collision oracle.
struct BruteForceGuard {
  int max_size = 10;
  std::size_t max_level = 3;
};

Content mp_content(const Multipartition& m, const Datum& d);
/// Weight computed from residue counts; zero exactly on cores.
long long weight(const Multipartition& m, const Datum& d);

/// (p, q) is an (s | c, d)-core bipartition, decided on beta-sets.
bool is_core_bipartition(const Partition& p, const Partition& q, int s, int c, int d);
bool is_core(const Multipartition& m, const Datum& d);
bool is_core(const Multipartition& m, const DatumSet& t);
/// Definitional check: no other multipartition of the same size has the same content.
bool is_core_bruteforce(const Multipartition& m, const Datum& d, BruteForceGuard guard = {});

/// Every q with is_core_bipartition(p, q, s, c, d), in canonical order. p must be an s-core, s >= 1.
std::vector<Partition> sandwich_partners(const Partition& p, int s, int c, int d);

/// All l-multipartitions of size exactly n / at most n, in canonical order.
std::vector<Multipartition> multipartitions_of(int n, std::size_t level);
std::vector<Multipartition> multipartitions_up_to(int n, std::size_t level);

Multipartition parse_multipartition(std::string_view text);
Datum parse_datum(std::string_view text);
/// Data joined by ';'. An empty string yields an empty set with level `empty_level`.
DatumSet parse_datum_set(std::string_view text, std::size_t empty_level = 0);

std::string to_string(const Multipartition& m);
std::string to_string(const Datum& d);
std::string to_string(const DatumSet& t);

}  // namespace simcore
