#include "simcore/multicore.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace simcore {

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("a multipartition needs at least one component");
}

Multipartition Multipartition::empty(std::size_t level) {
  return Multipartition(std::vector<Partition>(level));
}

int Multipartition::size() const noexcept {
  int n = 0;
  for (const auto& p : components_) n += p.size();
  return n;
}

bool Multipartition::is_empty() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](const Partition& p) { return p.empty(); });
}

std::strong_ordering operator<=>(const Multipartition& x, const Multipartition& y) {
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  return x.components_ <=> y.components_;
}

DatumSet DatumSet::of(std::vector<Datum> data) {
  if (data.empty()) throw PreconditionError("DatumSet::of needs at least one datum; set the level explicitly");
  DatumSet t{data.front().level(), std::move(data)};
  for (const auto& d : t.data)
    if (d.level() != t.level || d.level() == 0) throw PreconditionError("data of mixed levels");
  return t;
}

namespace {

void require_level(const Multipartition& m, const Datum& d) {
  if (d.modulus < 0) throw PreconditionError("modulus must be non-negative");
  if (m.level() != d.level()) throw PreconditionError("level mismatch between multipartition and datum");
}

}  // namespace

Content mp_content(const Multipartition& m, const Datum& d) {
  require_level(m, d);
  Content c{d.modulus, {}};
  for (std::size_t k = 0; k < m.level(); ++k) {
    const Partition& p = m[k];
    for (std::size_t a = 1; a <= p.length(); ++a)
      for (int b = 1; b <= p.part(a); ++b) ++c.counts[d.residue(b - static_cast<int>(a), k)];
  }
  return c;
}

long long weight(const Multipartition& m, const Datum& d) {
  const Content c = mp_content(m, d);
  const int s = d.modulus;
  long long twice = 0;
  for (std::size_t k = 0; k < d.level(); ++k) twice += 2LL * c.multiplicity(d.charges[k]);

  auto n = [&](int i) -> long long { return c.multiplicity(i); };
  if (s > 0) {
    for (int i = 0; i < s; ++i) {
      long long diff = n(i) - n(mod_floor(i + 1, s));
      twice -= diff * diff;
    }
  } else if (!c.counts.empty()) {
    // outside [min - 1, max + 1] every count and every difference vanishes
    const int lo = c.counts.begin()->first - 1;
    const int hi = c.counts.rbegin()->first + 1;
    for (int i = lo; i < hi; ++i) {
      long long diff = n(i) - n(i + 1);
      twice -= diff * diff;
    }
  }
  return twice / 2;
}

bool is_core_bipartition(const Partition& p, const Partition& q, int s, int c, int d) {
  if (s < 0) throw PreconditionError("modulus must be non-negative");
  if (s == 0) {
    ShiftedBetaSet bp{p, c}, bq{q, d};
    return c <= d ? beta_superset(bq, bp) : beta_superset(bp, bq);
  }
  if (s == 1) return p.empty() && q.empty();
  const int e = mod_floor(c - d, s);
  ShiftedBetaSet upper{p, e}, middle{q, 0}, lower{p, e - s};
  return beta_superset(upper, middle) && beta_superset(middle, lower);
}

bool is_core(const Multipartition& m, const Datum& d) {
  require_level(m, d);
  const int s = d.modulus;
  for (const auto& p : m.components())
    if (!is_s_core(p, s)) return false;
  for (std::size_t j = 0; j < m.level(); ++j)
    for (std::size_t k = j + 1; k < m.level(); ++k)
      if (!is_core_bipartition(m[j], m[k], s, d.charges[j], d.charges[k])) return false;
  return true;
}

bool is_core(const Multipartition& m, const DatumSet& t) {
  if (m.level() != t.level) throw PreconditionError("level mismatch between multipartition and datum set");
  return std::all_of(t.data.begin(), t.data.end(), [&](const Datum& d) { return is_core(m, d); });
}

bool is_core_bruteforce(const Multipartition& m, const Datum& d, BruteForceGuard guard) {
  require_level(m, d);
  if (m.size() > guard.max_size || m.level() > guard.max_level)
    throw PreconditionError("brute-force core test beyond its size/level guard");
  if (d.modulus == 1) return m.is_empty();
  const Content mine = mp_content(m, d);
  for (const auto& other : multipartitions_of(m.size(), m.level()))
    if (other != m && mp_content(other, d) == mine) return false;
  return true;
}

namespace {

void choose_rec(const std::vector<int>& pool, std::size_t from, std::size_t left, std::vector<int>& chosen,
                std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = from; i + left <= pool.size(); ++i) {
    chosen.push_back(pool[i]);
    choose_rec(pool, i + 1, left - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Partition> sandwich_partners(const Partition& p, int s, int c, int d) {
  if (s < 1) throw PreconditionError("sandwich partners need s >= 1 (s = 0 gives an infinite set)");
  if (!is_s_core(p, s)) throw PreconditionError("sandwich partners need an s-core");
  const int e = mod_floor(c - d, s);
  ShiftedBetaSet upper{p, e}, lower{p, e - s};

  std::vector<int> gap;  // upper \ lower, s elements
  const int floor = std::min(upper.threshold(), lower.threshold());
  for (int n = upper.top(); n >= floor; --n)
    if (upper.contains(n) && !lower.contains(n)) gap.push_back(n);
  if (static_cast<int>(gap.size()) != s) throw PreconditionError("sandwich difference is not an s-set");

  std::vector<std::vector<int>> subsets;
  std::vector<int> chosen;
  choose_rec(gap, 0, static_cast<std::size_t>(s - e), chosen, subsets);

  std::vector<Partition> out;
  out.reserve(subsets.size());
  const BetaSpec base = BetaSpec::from(lower);
  for (const auto& extra : subsets) {
    BetaSpec spec = base;
    spec.exceptional.insert(spec.exceptional.end(), extra.begin(), extra.end());
    out.push_back(normalize_beta(spec).partition);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void multipartitions_rec(int remaining, std::size_t k, std::size_t level, std::vector<Partition>& prefix,
                         std::vector<Multipartition>& out) {
  if (k + 1 == level) {
    for (auto& p : partitions_of(remaining)) {
      prefix.push_back(std::move(p));
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int n = 0; n <= remaining; ++n)
    for (auto& p : partitions_of(n)) {
      prefix.push_back(std::move(p));
      multipartitions_rec(remaining - n, k + 1, level, prefix, out);
      prefix.pop_back();
    }
}

}  // namespace

std::vector<Multipartition> multipartitions_of(int n, std::size_t level) {
  if (level == 0) throw PreconditionError("level must be positive");
  std::vector<Multipartition> out;
  if (n < 0) return out;
  std::vector<Partition> prefix;
  multipartitions_rec(n, 0, level, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> multipartitions_up_to(int n, std::size_t level) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= n; ++k) {
    auto layer = multipartitions_of(k, level);
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

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

int parse_int(std::string_view tok, std::string_view what) {
  tok = trim(tok);
  int v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("bad integer '" + std::string(tok) + "' in " + std::string(what));
  return v;
}

}  // namespace

Multipartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  for (auto tok : split(text, '|')) comps.push_back(parse_partition(tok));
  return Multipartition(std::move(comps));
}

Datum parse_datum(std::string_view text) {
  std::string_view s = trim(text);
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ParseError("datum must look like s:c1,...,cl: '" + std::string(text) + "'");
  Datum d;
  d.modulus = parse_int(s.substr(0, colon), "datum modulus");
  if (d.modulus < 0) throw ParseError("datum modulus must be non-negative");
  for (auto tok : split(s.substr(colon + 1), ',')) d.charges.push_back(parse_int(tok, "datum charges"));
  return d;
}

DatumSet parse_datum_set(std::string_view text, std::size_t empty_level) {
  if (trim(text).empty()) return DatumSet{empty_level, {}};
  std::vector<Datum> data;
  for (auto tok : split(text, ';')) data.push_back(parse_datum(tok));
  try {
    return DatumSet::of(std::move(data));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Multipartition& m) {
  std::string out;
  for (std::size_t k = 0; k < m.level(); ++k) {
    if (k) out += '|';
    out += to_string(m[k]);
  }
  return out;
}

std::string to_string(const Datum& d) {
  std::ostringstream os;
  os << d.modulus << ':';
  for (std::size_t k = 0; k < d.charges.size(); ++k) os << (k ? "," : "") << d.charges[k];
  return os.str();
}

std::string to_string(const DatumSet& t) {
  std::string out;
  for (std::size_t i = 0; i < t.data.size(); ++i) {
    if (i) out += ';';
    out += to_string(t.data[i]);
  }
  return out;
}

}  // namespace simcore
