#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simcore {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integer partition stored as its non-zero parts in weakly decreasing order.
///
/// Partitions order by size first and then lexicographically by parts, which
/// gives every enumeration downstream a deterministic order.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else that is not weakly decreasing
  /// and non-negative throws PreconditionError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }
  /// lambda_a for a >= 1, zero beyond the length.
  int part(std::size_t a) const noexcept { return a >= 1 && a <= parts_.size() ? parts_[a - 1] : 0; }
  int first_row() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    if (auto c = x.size_ <=> y.size_; c != 0) return c;
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Residue of an integer modulo `modulus`; modulus 0 keeps the integer itself.
struct ResidueClass {
  int modulus = 0;
  int value = 0;

  static ResidueClass of(int n, int modulus);

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  friend auto operator<=>(const ResidueClass&, const ResidueClass&) = default;
};

/// Floor-mod that is also defined for modulus 0 (returns n unchanged).
int mod_floor(int n, int modulus);

/// Multiset of residues. Keys are normalised residue values for `modulus`.
struct Content {
  int modulus = 0;
  std::map<int, int> counts;

  int multiplicity(int residue) const;
  int total() const;

  friend bool operator==(const Content&, const Content&) = default;
};

/// The beta-set {lambda_a - a + shift : a >= 1}, kept intensionally.
struct ShiftedBetaSet {
  Partition partition;
  int shift = 0;

  /// Everything strictly below this value is a member.
  int threshold() const noexcept { return shift - static_cast<int>(partition.length()); }
  /// Largest member.
  int top() const noexcept { return partition.first_row() - 1 + shift; }
  bool contains(int n) const;
  /// Members that are >= threshold(), in decreasing order.
  std::vector<int> exceptional() const;
  /// (non-negative members) - (negative non-members).
  int charge() const;
};

/// Finite encoding of a beta-like set: {n : n < threshold} union `exceptional`.
struct BetaSpec {
  int threshold = 0;
  std::vector<int> exceptional;  // any order; entries below threshold are absorbed

  static BetaSpec from(const ShiftedBetaSet& b);
};

/// The s-set of an s-core: representatives[i] is the least integer of class i
/// that is missing from the beta-set.
struct SSet {
  int modulus = 0;
  std::vector<int> representatives;

  friend bool operator==(const SSet&, const SSet&) = default;
};

ShiftedBetaSet normalize_beta(const BetaSpec& spec);

bool beta_contains(const ShiftedBetaSet& b, int n);
/// True iff b2 is a subset of b1.
bool beta_superset(const ShiftedBetaSet& b1, const ShiftedBetaSet& b2);

/// Number of a-hooks, counted on the beta-set.
int hook_count(const Partition& p, int a);
/// Number of a-hooks, counted from hook lengths in the Young diagram.
int hook_count_diagram(const Partition& p, int a);
bool is_s_core(const Partition& p, int s);
int removable_count(const Partition& p);

Content content(const Partition& p, int s, int shift);

SSet s_set(const Partition& p, int s);
Partition s_core_from_s_set(const SSet& x);

/// All partitions of n, in the canonical order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n, in the canonical order.
std::vector<Partition> partitions_up_to(int n);

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);

}  // namespace simcore
