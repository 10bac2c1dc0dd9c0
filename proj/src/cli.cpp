#include "simcore/cli.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simcore/enumeration.hpp"
#include "simcore/finiteness.hpp"
#include "simcore/weyl_orbit.hpp"

namespace simcore::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Options {
  std::string format = "text";
  std::string datum;
  std::string mp;
  std::string data;
  std::size_t level = 0;
  bool complete = false;
  int max_size = 12;
  std::string family;
  std::string params;
  std::string word;
  std::string partition;
  bool list = false;
};

Format format_of(const Options& o) {
  if (o.format == "json") return Format::json;
  if (o.format == "csv") return Format::csv;
  return Format::text;
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("parameters must be comma-separated integers: '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("missing parameters");
  return out;
}

json partition_json(const Partition& p) { return p.parts(); }

json multipartition_json(const Multipartition& m) {
  json a = json::array();
  for (const auto& p : m.components()) a.push_back(partition_json(p));
  return a;
}

json bigint_json(const BigInt& n) {
  if (n <= std::numeric_limits<long long>::max() && n >= std::numeric_limits<long long>::min())
    return static_cast<long long>(n);
  return n.str();
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

void write_members(std::ostream& out, Format f, const std::vector<Multipartition>& members, json extra) {
  switch (f) {
    case Format::json: {
      extra["count"] = members.size();
      json list = json::array();
      for (const auto& m : members) list.push_back(multipartition_json(m));
      extra["members"] = std::move(list);
      out << extra.dump() << '\n';
      return;
    }
    case Format::csv:
      out << "size,multipartition\n";
      for (const auto& m : members) out << m.size() << ',' << csv_quote(to_string(m)) << '\n';
      return;
    case Format::text:
      out << "count=" << members.size();
      for (auto it = extra.begin(); it != extra.end(); ++it) {
        if (it->is_null() || it->is_array() || it->is_object()) continue;
        out << ' ' << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump());
      }
      out << '\n';
      for (const auto& m : members) out << to_string(m) << '\n';
      return;
  }
}

DatumSet data_of(const Options& o) { return parse_datum_set(o.data, o.level); }

int cmd_check(const Options& o, std::ostream& out) {
  const Datum d = parse_datum(o.datum);
  const Multipartition m = parse_multipartition(o.mp);
  const bool core = is_core(m, d);
  const long long w = weight(m, d);
  switch (format_of(o)) {
    case Format::json:
      out << json{{"datum", to_string(d)}, {"multipartition", to_string(m)}, {"core", core}, {"weight", w}}.dump() << '\n';
      break;
    case Format::csv:
      out << "core,weight\n" << (core ? "true" : "false") << ',' << w << '\n';
      break;
    case Format::text:
      out << "core=" << (core ? "true" : "false") << " weight=" << w << '\n';
      break;
  }
  return ok;
}

int cmd_content(const Options& o, std::ostream& out) {
  const Datum d = parse_datum(o.datum);
  const Content c = mp_content(parse_multipartition(o.mp), d);
  switch (format_of(o)) {
    case Format::json: {
      json counts = json::array();
      for (const auto& [r, n] : c.counts) counts.push_back({{"residue", r}, {"count", n}});
      out << json{{"modulus", c.modulus}, {"content", counts}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "residue,count\n";
      for (const auto& [r, n] : c.counts) out << r << ',' << n << '\n';
      break;
    case Format::text: {
      bool first = true;
      for (const auto& [r, n] : c.counts) {
        out << (first ? "" : " ") << r << ':' << n;
        first = false;
      }
      out << '\n';
      break;
    }
  }
  return ok;
}

int cmd_finite(const Options& o, std::ostream& out) {
  const auto v = decide_finite(data_of(o));
  json cx = v.condition_x ? json(*v.condition_x) : json(nullptr);
  switch (format_of(o)) {
    case Format::json:
      out << json{{"finite", v.finite}, {"g", v.g_value}, {"conditionX", cx}, {"reason", to_string(v.reason)}}.dump()
          << '\n';
      break;
    case Format::csv:
      out << "finite,g,conditionX,reason\n"
          << (v.finite ? "true" : "false") << ',' << v.g_value << ',' << (cx.is_null() ? "" : cx.dump()) << ','
          << to_string(v.reason) << '\n';
      break;
    case Format::text:
      out << "finite=" << (v.finite ? "true" : "false") << " g=" << v.g_value
          << " conditionX=" << (cx.is_null() ? "n/a" : cx.dump()) << " reason=" << to_string(v.reason) << '\n';
      break;
  }
  return ok;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = enumerate_members(data_of(o), o.max_size, o.complete ? Mode::complete : Mode::bounded);
  if (o.complete && !r.saturated)
    err << "warning: no certificate and the member list has not saturated below the ceiling " << *r.ceiling << '\n';
  json extra{{"certificate", to_string(r.certificate)},
             {"saturated", r.saturated},
             {"ceiling", r.ceiling ? json(*r.ceiling) : json(nullptr)}};
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back({{"rows", b.rows}, {"columns", b.columns}, {"candidates", b.candidates}});
  extra["bounds"] = std::move(bounds);
  write_members(out, format_of(o), r.members, std::move(extra));
  return ok;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const Datum d = parse_datum(o.datum);
  write_members(out, format_of(o), orbit_members(d, o.max_size), json{{"datum", to_string(d)}, {"maxSize", o.max_size}});
  return ok;
}

struct FamilyReport {
  Family family;
  std::vector<int> params;
  BigInt count;
  std::optional<std::vector<Multipartition>> members;
  std::optional<Rational> average;
  std::optional<Rational> conjecture;
};

constexpr long kAverageLimit = 200'000;

FamilyReport family_report(const Options& o, bool want_members) {
  FamilyReport r{parse_family(o.family), parse_params(o.params), 0, std::nullopt, std::nullopt, std::nullopt};
  const auto& p = r.params;
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw ParseError("family " + std::string(to_string(r.family)) + " takes " + std::to_string(n) + " parameters");
  };
  std::function<std::vector<Multipartition>()> list;
  std::vector<int> conj_params;
  switch (r.family) {
    case Family::ss: {
      if (p.size() != 3 && p.size() != 4) throw ParseError("family ss takes s,a,b or s,t,a,b");
      const int s = p[0], t = p.size() == 4 ? p[1] : p[0], a = p[p.size() - 2], b = p.back();
      r.count = count_ss(s, t, a, b);
      list = [=] { return ss_members(s, t, a, b); };
      if (s == t) conj_params = {s, a, b};
      break;
    }
    case Family::t0: {
      need(3);
      r.count = count_t0(p[0], p[1], p[2]);
      const DatumSet t = DatumSet::of({Datum{p[0], {0, p[1]}}, Datum{0, {0, p[2]}}});
      list = [t] { return enumerate_members(t, 0, Mode::complete).members; };
      conj_params = p;
      break;
    }
    case Family::aa:
      need(3);
      r.count = count_aa(p[0], p[1], p[2]);
      list = [=] { return aa_members(p[0], p[1], p[2]); };
      conj_params = p;
      break;
    case Family::anderson:
      need(2);
      r.count = count_anderson(p[0], p[1]);
      list = [=] {
        std::vector<Multipartition> out;
        for (auto& c : st_cores(p[0], p[1])) out.push_back(Multipartition{c});
        return out;
      };
      conj_params = p;
      break;
  }
  if (!conj_params.empty()) r.conjecture = conjecture_value(r.family, conj_params);
  if (want_members || r.count <= kAverageLimit) {
    r.members = list();
    if (BigInt(r.members->size()) != r.count)
      throw std::logic_error("enumerated family size differs from the closed-form count");
    r.average = average_size(*r.members);
  }
  return r;
}

int cmd_family(const Options& o, std::ostream& out, bool average_view) {
  const FamilyReport r = family_report(o, o.list || average_view);
  const json average = r.average ? json(to_string(*r.average)) : json(nullptr);
  const json conjecture = r.conjecture ? json(to_string(*r.conjecture)) : json(nullptr);
  const json match = r.average && r.conjecture ? json(*r.average == *r.conjecture) : json(nullptr);
  auto plain = [](const json& j) { return j.is_null() ? std::string("n/a") : j.is_string() ? j.get<std::string>() : j.dump(); };

  switch (format_of(o)) {
    case Format::json: {
      json j{{"family", to_string(r.family)}, {"params", r.params}, {"count", bigint_json(r.count)},
             {"average", average}, {"conjecture", conjecture}, {"match", match}};
      if (o.list && r.members) {
        json list = json::array();
        for (const auto& m : *r.members) list.push_back(multipartition_json(m));
        j["members"] = std::move(list);
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "family,params,count,average,conjecture,match\n"
          << to_string(r.family) << ',' << csv_quote(o.params) << ',' << r.count << ',' << plain(average) << ','
          << plain(conjecture) << ',' << plain(match) << '\n';
      break;
    case Format::text:
      if (average_view)
        out << "average=" << plain(average) << " conjecture=" << plain(conjecture) << " match=" << plain(match) << '\n';
      else
        out << r.count << '\n';
      if (o.list && r.members)
        for (const auto& m : *r.members) out << to_string(m) << '\n';
      break;
  }
  return ok;
}

std::pair<int, int> coprime_pair(const std::vector<int>& p) {
  if (p.size() != 2) throw ParseError("expected the parameters s,t");
  return {p[0], p[1]};
}

int cmd_stcores(const Options& o, std::ostream& out) {
  const auto [s, t] = coprime_pair(parse_params(o.params));
  const auto cores = st_cores(s, t);
  switch (format_of(o)) {
    case Format::json: {
      json list = json::array();
      for (const auto& c : cores) list.push_back({{"partition", partition_json(c)}, {"word", st_encode(c, s, t).letters()}});
      out << json{{"s", s}, {"t", t}, {"count", cores.size()}, {"cores", list}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "word,partition\n";
      for (const auto& c : cores) out << st_encode(c, s, t).letters() << ',' << csv_quote(to_string(c)) << '\n';
      break;
    case Format::text:
      out << "count=" << cores.size() << '\n';
      for (const auto& c : cores) out << st_encode(c, s, t).letters() << ' ' << to_string(c) << '\n';
      break;
  }
  return ok;
}

int cmd_codec(const Options& o, std::ostream& out) {
  const auto p = parse_params(o.params);
  if (p.size() != 2 && p.size() != 3) throw ParseError("codec takes s,t or s,t,a");
  if (o.word.empty() == o.partition.empty()) throw ParseError("codec needs exactly one of --word or --partition");
  std::string word;
  Multipartition value;
  if (!o.word.empty()) {
    word = CyclicWord(o.word).letters();
    if (p.size() == 2) {
      value = Multipartition{st_decode(o.word, p[0], p[1])};
    } else {
      auto [lambda, mu] = aa_decode(o.word, p[0], p[1], p[2]);
      value = Multipartition{lambda, mu};
    }
  } else if (p.size() == 2) {
    value = Multipartition{parse_partition(o.partition)};
    word = st_encode(value[0], p[0], p[1]).letters();
  } else {
    value = parse_multipartition(o.partition);
    if (value.level() != 2) throw ParseError("aa codec encodes bipartitions");
    word = aa_encode(value[0], value[1], p[0], p[1], p[2]).letters();
  }
  const std::string shown = value.level() == 1 ? to_string(value[0]) : to_string(value);
  switch (format_of(o)) {
    case Format::json:
      out << json{{"params", p}, {"word", word}, {"value", shown}}.dump() << '\n';
      break;
    case Format::csv:
      out << "word,value\n" << word << ',' << csv_quote(shown) << '\n';
      break;
    case Format::text:
      out << word << ' ' << shown << '\n';
      break;
  }
  return ok;
}

struct Suite {
  std::string name;
  long checked = 0;
  long failures = 0;
};

Suite verify_equivalence(int n) {
  Suite s{"equivalence"};
  for (std::size_t level = 1; level <= 2; ++level)
    for (int modulus = 0; modulus <= 5; ++modulus)
      for (int c = -2; c <= 2; ++c) {
        const Datum d = level == 1 ? Datum{modulus, {c}} : Datum{modulus, {0, c}};
        for (const auto& m : multipartitions_up_to(n, level)) {
          const bool a = is_core(m, d), b = is_core_bruteforce(m, d), w = weight(m, d) == 0;
          ++s.checked;
          if (a != b || a != w) ++s.failures;
        }
        if (level == 1) break;
      }
  return s;
}

Suite verify_orbits(int n) {
  Suite s{"orbit-filter"};
  for (const char* text : {"3:0,1", "4:0,2,1", "2:0,0", "0:0,1"}) {
    const Datum d = parse_datum(text);
    std::vector<Multipartition> filtered;
    for (const auto& m : multipartitions_up_to(n, d.level()))
      if (is_core(m, d)) filtered.push_back(m);
    ++s.checked;
    if (orbit_members(d, n) != filtered || serial::orbit_members(d, n) != filtered) ++s.failures;
  }
  return s;
}

Suite verify_tuples() {
  Suite s{"count-u"};
  for (int g = 1; g <= 4; ++g)
    for (int q = 0; q <= 3; ++q)
      for (int a = 0; a <= g * q; ++a) {
        ++s.checked;
        long brute = 0;
        std::vector<int> u(static_cast<std::size_t>(g), 0);
        while (true) {
          if (std::accumulate(u.begin(), u.end(), 0) == a) ++brute;
          std::size_t i = 0;
          while (i < u.size() && u[i] == q) u[i++] = 0;
          if (i == u.size()) break;
          ++u[i];
        }
        if (count_u(g, g * q, a) != brute) ++s.failures;
      }
  return s;
}

Suite verify_anderson() {
  Suite s{"anderson"};
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; a + b <= 10; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++s.checked;
      const auto cores = st_cores(a, b);
      std::set<Partition> distinct(cores.begin(), cores.end());
      bool good = BigInt(distinct.size()) == count_anderson(a, b);
      for (const auto& c : cores) good = good && is_s_core(c, a) && is_s_core(c, b);
      if (!good) ++s.failures;
    }
  return s;
}

Suite verify_parallel(int n) {
  Suite s{"serial-parallel"};
  for (const char* text : {"0:1,3,0;0:3,0,1", "3:0,1;9:0,5", "0:0,0", "2:0,1;0:0,2"}) {
    const DatumSet t = parse_datum_set(text);
    ++s.checked;
    if (enumerate_members(t, n, Mode::bounded).members != serial::enumerate_members(t, n, Mode::bounded).members)
      ++s.failures;
  }
  return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const int n = std::min(o.max_size, 8);
  std::vector<Suite> suites{verify_equivalence(std::min(n, 6)), verify_orbits(n), verify_tuples(), verify_anderson(),
                            verify_parallel(n)};
  bool passed = std::all_of(suites.begin(), suites.end(), [](const Suite& s) { return s.failures == 0; });
  switch (format_of(o)) {
    case Format::json: {
      json list = json::array();
      for (const auto& s : suites) list.push_back({{"name", s.name}, {"checked", s.checked}, {"failures", s.failures}});
      out << json{{"maxSize", n}, {"suites", list}, {"passed", passed}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "suite,checked,failures\n";
      for (const auto& s : suites) out << s.name << ',' << s.checked << ',' << s.failures << '\n';
      break;
    case Format::text:
      for (const auto& s : suites) out << s.name << " checked=" << s.checked << " failures=" << s.failures << '\n';
      out << (passed ? "passed" : "FAILED") << '\n';
      break;
  }
  return passed ? ok : verify_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core multipartitions: checks, finiteness, enumeration and counting", "simcore"};
  app.require_subcommand(1);
  Options o;

  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto datum = [&](CLI::App* c) { c->add_option("--datum", o.datum, "Datum s:c1,...,cl")->required(); };
  auto mp = [&](CLI::App* c) { c->add_option("--mp", o.mp, "Multipartition [p1,...]|[...]")->required(); };
  auto data = [&](CLI::App* c) {
    c->add_option("--data", o.data, "Datum set d1;d2;...")->required();
    c->add_option("--level", o.level, "Level used when the datum set is empty");
  };
  auto max_size = [&](CLI::App* c) {
    c->add_option("--max-size", o.max_size, "Size ceiling (default 12)")->check(CLI::NonNegativeNumber);
  };
  auto family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "ss, t0, aa or anderson")->required();
    c->add_option("--params", o.params, "Comma-separated parameters")->required();
    c->add_flag("--list", o.list, "Also print the members");
  };

  auto* check = app.add_subcommand("check", "Core test and weight of a multipartition");
  datum(check), mp(check), format(check);
  auto* content = app.add_subcommand("content", "Residue content of a multipartition");
  datum(content), mp(content), format(content);
  auto* finite = app.add_subcommand("finite", "Decide whether a set of cores is finite");
  data(finite), format(finite);
  auto* enumerate = app.add_subcommand("enumerate", "List the cores for every datum of a set");
  data(enumerate), max_size(enumerate), format(enumerate);
  enumerate->add_flag("--complete", o.complete, "Require the full (finite) set");
  auto* orbit = app.add_subcommand("orbit", "Cores of one datum by generator orbit");
  datum(orbit), max_size(orbit), format(orbit);
  auto* count = app.add_subcommand("count", "Closed-form family count");
  family(count), format(count);
  auto* avg = app.add_subcommand("avg", "Exact average size against the conjectured value");
  family(avg), format(avg);
  auto* stcores = app.add_subcommand("stcores", "All (s,t)-cores with their boundary words");
  stcores->add_option("--params", o.params, "s,t")->required();
  format(stcores);
  auto* codec = app.add_subcommand("codec", "Encode or decode boundary words");
  codec->add_option("--params", o.params, "s,t or s,t,a")->required();
  codec->add_option("--word", o.word, "Word to decode");
  codec->add_option("--partition", o.partition, "Partition (s,t) or bipartition (s,t,a) to encode");
  format(codec);
  auto* verify = app.add_subcommand("verify", "Run the oracle suites");
  verify->add_option("--max-size", o.max_size, "Scale of the suites (capped at 8)")->check(CLI::PositiveNumber);
  format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (content->parsed()) return cmd_content(o, out);
    if (finite->parsed()) return cmd_finite(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (count->parsed()) return cmd_family(o, out, false);
    if (avg->parsed()) return cmd_family(o, out, true);
    if (stcores->parsed()) return cmd_stcores(o, out);
    if (codec->parsed()) return cmd_codec(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const InfiniteSetError& e) {
    err << "error: " << e.what() << '\n';
    return infinite;
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return precondition;
  }
  return usage;
}

}  // namespace simcore::cli
