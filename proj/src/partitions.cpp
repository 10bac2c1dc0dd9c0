#include "simcore/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace simcore {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t a = 0; a < parts_.size(); ++a) {
    if (parts_[a] <= 0) throw PreconditionError("partition parts must be positive");
    if (a + 1 < parts_.size() && parts_[a] < parts_[a + 1])
      throw PreconditionError("partition parts must be weakly decreasing");
    size_ += parts_[a];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(first_row()), 0);
  for (int row : parts_)
    for (int b = 0; b < row; ++b) ++cols[static_cast<std::size_t>(b)];
  return Partition(std::move(cols));
}

int mod_floor(int n, int modulus) {
  if (modulus == 0) return n;
  int r = n % modulus;
  return r < 0 ? r + modulus : r;
}

ResidueClass ResidueClass::of(int n, int modulus) {
  if (modulus < 0) throw PreconditionError("modulus must be non-negative");
  return ResidueClass{modulus, mod_floor(n, modulus)};
}

int Content::multiplicity(int residue) const {
  auto it = counts.find(mod_floor(residue, modulus));
  return it == counts.end() ? 0 : it->second;
}

int Content::total() const {
  int n = 0;
  for (const auto& [r, k] : counts) n += k;
  return n;
}

bool ShiftedBetaSet::contains(int n) const {
  if (n < threshold()) return true;
  // lambda_a - a + shift is strictly decreasing in a
  const auto& parts = partition.parts();
  std::size_t lo = 0, hi = parts.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int v = parts[mid] - static_cast<int>(mid + 1) + shift;
    if (v == n) return true;
    if (v > n)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

std::vector<int> ShiftedBetaSet::exceptional() const {
  std::vector<int> out;
  out.reserve(partition.length());
  const auto& parts = partition.parts();
  for (std::size_t a = 0; a < parts.size(); ++a) out.push_back(parts[a] - static_cast<int>(a + 1) + shift);
  return out;
}

int ShiftedBetaSet::charge() const {
  int lo = std::min(threshold(), 0);
  int hi = std::max(top(), 0);
  int nonneg_members = std::max(threshold(), 0);  // the run [0, threshold)
  int negative_gaps = 0;
  for (int n = lo; n <= hi; ++n) {
    bool in = contains(n);
    if (n >= 0 && in && n >= threshold()) ++nonneg_members;
    if (n < 0 && !in) ++negative_gaps;
  }
  return nonneg_members - negative_gaps;
}

BetaSpec BetaSpec::from(const ShiftedBetaSet& b) { return BetaSpec{b.threshold(), b.exceptional()}; }

ShiftedBetaSet normalize_beta(const BetaSpec& spec) {
  std::vector<int> e;
  e.reserve(spec.exceptional.size());
  for (int n : spec.exceptional)
    if (n >= spec.threshold) e.push_back(n);
  std::sort(e.begin(), e.end(), std::greater<>());
  e.erase(std::unique(e.begin(), e.end()), e.end());

  // {n < m} u E has charge m + |E|; the a-th largest member is e_a + a - charge above the run.
  const int charge = spec.threshold + static_cast<int>(e.size());
  std::vector<int> parts;
  parts.reserve(e.size());
  for (std::size_t a = 0; a < e.size(); ++a) parts.push_back(e[a] + static_cast<int>(a + 1) - charge);
  return ShiftedBetaSet{Partition(std::move(parts)), charge};
}

bool beta_contains(const ShiftedBetaSet& b, int n) { return b.contains(n); }

bool beta_superset(const ShiftedBetaSet& b1, const ShiftedBetaSet& b2) {
  if (b1.shift < b2.shift) return false;
  const int floor = std::min(b1.threshold(), b2.threshold());
  const auto& parts = b2.partition.parts();
  // members of b2 at or above the common cofinal floor, in decreasing order
  for (int a = 1;; ++a) {
    int v = (a <= static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(a - 1)] : 0) - a + b2.shift;
    if (v < floor) break;
    if (!b1.contains(v)) return false;
  }
  return true;
}

int hook_count(const Partition& p, int a) {
  if (a <= 0) throw PreconditionError("hook length must be positive");
  ShiftedBetaSet beta{p, 0};
  int hooks = 0;
  for (int b : beta.exceptional())
    if (!beta.contains(b - a)) ++hooks;
  return hooks;
}

int hook_count_diagram(const Partition& p, int a) {
  if (a <= 0) throw PreconditionError("hook length must be positive");
  const Partition conj = p.conjugate();
  int hooks = 0;
  for (std::size_t i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      int len = p.part(i) - j + conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i) + 1;
      if (len == a) ++hooks;
    }
  return hooks;
}

bool is_s_core(const Partition& p, int s) {
  if (s < 0) throw PreconditionError("modulus must be non-negative");
  if (s == 0) return true;
  if (s == 1) return p.empty();
  return hook_count(p, s) == 0;
}

int removable_count(const Partition& p) {
  // one removable node at the end of each block of equal parts
  const auto& parts = p.parts();
  int distinct = 0;
  for (std::size_t a = 0; a < parts.size(); ++a)
    if (a + 1 == parts.size() || parts[a] != parts[a + 1]) ++distinct;
  return distinct;
}

Content content(const Partition& p, int s, int shift) {
  if (s < 0) throw PreconditionError("modulus must be non-negative");
  Content c{s, {}};
  for (std::size_t a = 1; a <= p.length(); ++a)
    for (int b = 1; b <= p.part(a); ++b) ++c.counts[mod_floor(b - static_cast<int>(a) + shift, s)];
  return c;
}

SSet s_set(const Partition& p, int s) {
  if (s < 1) throw PreconditionError("s-sets need s >= 1");
  if (!is_s_core(p, s)) throw PreconditionError("s-set of a partition that is not an s-core");
  ShiftedBetaSet beta{p, 0};
  SSet out{s, std::vector<int>(static_cast<std::size_t>(s))};
  const int below = beta.threshold() - 1;
  for (int i = 0; i < s; ++i) {
    int n = below - mod_floor(below - i, s);
    while (beta.contains(n)) n += s;
    out.representatives[static_cast<std::size_t>(i)] = n;
  }
  return out;
}

Partition s_core_from_s_set(const SSet& x) {
  const int s = x.modulus;
  if (s < 1 || static_cast<int>(x.representatives.size()) != s) throw PreconditionError("malformed s-set");
  long long sum = 0;
  for (int i = 0; i < s; ++i) {
    int r = x.representatives[static_cast<std::size_t>(i)];
    if (mod_floor(r, s) != i) throw PreconditionError("s-set representative in the wrong class");
    sum += r;
  }
  if (sum != static_cast<long long>(s) * (s - 1) / 2) throw PreconditionError("s-set must sum to s(s-1)/2");

  BetaSpec spec;
  spec.threshold = *std::min_element(x.representatives.begin(), x.representatives.end());
  for (int r : x.representatives)
    for (int n = r - s; n >= spec.threshold; n -= s) spec.exceptional.push_back(n);
  ShiftedBetaSet b = normalize_beta(spec);
  return b.partition;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = partitions_of(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("partition must look like [6,4,2,1,1]: '" + std::string(text) + "'");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<int> parts;
  if (!s.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      std::string_view tok = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad partition entry '" + std::string(tok) + "'");
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t a = 0; a < p.length(); ++a) os << (a ? "," : "") << p.parts()[a];
  os << ']';
  return os.str();
}

}  // namespace simcore
