#include "qset/cli_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qset/catalog.hpp"
#include "qset/classifier.hpp"
#include "qset/conjecture.hpp"
#include "qset/errors.hpp"
#include "qset/set_algebra.hpp"
#include "qset/subgroup.hpp"

namespace qset {

using nlohmann::json;

char const* to_string(Verb v) {
  switch (v) {
    case Verb::kClassify: return "classify";
    case Verb::kCensus: return "census";
    case Verb::kConjectureScan: return "conjecture-scan";
    case Verb::kConstructExtremal: return "construct-extremal";
    case Verb::kCheckLemmas: return "check-lemmas";
    case Verb::kCatalog: return "catalog";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing

GroupTable parse_group_spec(std::string_view text, std::size_t cap) { return build_group(text, cap, 1); }

std::vector<GroupTable> parse_group_file(std::string_view text, std::size_t cap) {
  std::vector<GroupTable> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    auto body = line.substr(0, line.find('#'));
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(build_group(body, cap, line_no));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

ElemSet parse_set_spec(std::string_view text, GroupTable const& g) {
  ElemSet out(g.order());
  std::size_t pos = 0;
  auto fail = [&](std::string const& msg) -> void { throw SpecError(msg, 1, pos + 1); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') fail("set literal must start with '{'");
  ++pos;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      auto at = pos;
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > 1'000'000) break;
        ++pos;
      }
      if (at == pos) fail("expected an element id");
      if (v >= g.order()) {
        pos = at;
        fail(fmt::format("element id {} out of range for group of order {}", v, g.order()));
      }
      out.insert(static_cast<Element>(v));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      fail("expected ',' or '}'");
    }
  }
  skip_ws();
  if (pos != text.size()) fail("unexpected trailing input after set literal");
  return out;
}

SizeRange parse_size_range(std::string_view text) {
  auto number = [&](std::string_view s, std::size_t offset) {
    auto b = s.find_first_not_of(' ');
    auto e = s.find_last_not_of(' ');
    if (b == std::string_view::npos) throw SpecError("expected a size", 1, offset + 1);
    s = s.substr(b, e - b + 1);
    unsigned v = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw SpecError("sizes must be integers like 2..5", 1, offset + b + 1);
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v > 64) throw SpecError("sizes above 64 are not supported", 1, offset + b + 1);
    }
    return v;
  };
  SizeRange r;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    r.lo = number(text.substr(0, dots), 0);
    r.hi = number(text.substr(dots + 2), dots + 2);
  } else {
    r.lo = r.hi = number(text, 0);
  }
  if (r.lo == 0 || r.lo > r.hi) throw SpecError("size range must satisfy 1 <= a <= b", 1, 1);
  return r;
}

std::string replay_line(std::string const& group_spec, std::string const& set_literal) {
  return "(" + group_spec + ", " + set_literal + ")";
}

std::pair<std::string, std::string> parse_replay_line(std::string_view line) {
  auto b = line.find('(');
  auto brace = line.rfind('{');
  auto close = line.rfind('}');
  if (b == std::string_view::npos || brace == std::string_view::npos || close == std::string_view::npos ||
      brace < b || close < brace)
    throw SpecError("expected '(group spec, {set})'", 1, 1);
  auto spec = line.substr(b + 1, brace - b - 1);
  auto e = spec.find_last_not_of(" ,");
  spec = spec.substr(0, e == std::string_view::npos ? 0 : e + 1);
  return {std::string(spec), std::string(line.substr(brace, close - brace + 1))};
}

void validate_command(Command const& c) {
  auto const& o = c.options;
  auto need = [&](bool ok, char const* what) {
    if (!ok) throw PreconditionError(fmt::format("{} needs {}", to_string(c.verb), what));
  };
  bool const any_group = !o.groups.empty() || !o.group_file.empty() || o.catalog_max > 0;
  switch (c.verb) {
    case Verb::kClassify:
      need(!o.replay_file.empty() || (o.groups.size() == 1 && !o.set.empty()), "--group and --set, or --replay");
      break;
    case Verb::kCensus:
    case Verb::kConjectureScan:
      need(any_group, "--group, --group-file or --catalog");
      need(o.jobs >= 1, "--jobs >= 1");
      if (c.verb == Verb::kConjectureScan) need(o.n >= 1, "--n >= 1");
      break;
    case Verb::kConstructExtremal:
      need(o.groups.size() == 1 && !o.subgroup.empty() && o.element.has_value(), "--group, --subgroup and --g");
      break;
    case Verb::kCheckLemmas:
      need(any_group, "--group, --group-file or --catalog");
      break;
    case Verb::kCatalog:
      break;
  }
}

// ---------------------------------------------------------------------------
// JSON and text rendering

namespace {

json check_json(CheckReport const& r) {
  json items = json::array();
  for (auto const& it : r.items)
    items.push_back({{"name", it.name}, {"status", to_string(it.status)}, {"detail", it.detail}});
  return {{"subject", r.subject}, {"ok", r.ok()}, {"items", items}};
}

void check_text(std::ostream& os, CheckReport const& r, char const* indent) {
  os << indent << r.subject << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
  for (auto const& it : r.items) {
    os << indent << "  " << to_string(it.status) << "  " << it.name;
    if (!it.detail.empty()) os << "  (" << it.detail << ")";
    os << "\n";
  }
}

json census_json(CensusReport const& r, bool timing) {
  json rows = json::array();
  for (auto const& row : r.by_size) {
    rows.push_back({{"size", row.size},
                    {"subsets", row.subsets},
                    {"classes", row.classes},
                    {"small_classes", row.small_classes},
                    {"min_quotient", row.min_quotient},
                    {"extremal_set", row.extremal_set},
                    {"extremal_classes", row.extremal_classes}});
  }
  json violations = json::array();
  for (auto const& v : r.violations) violations.push_back({{"set", v.set}, {"kind", v.kind}, {"detail", v.detail}});
  json j = {{"group_spec", r.group_spec},
            {"order", r.order},
            {"sizes", {{"lo", r.sizes.lo}, {"hi", r.sizes.hi}}},
            {"subsets_scanned", r.subsets_scanned},
            {"canonical_classes", r.canonical_classes},
            {"cond_i_classes", r.cond_i},
            {"cond_ii_classes", r.cond_ii},
            {"min_quotient_by_size", rows},
            {"violations", violations},
            {"enumeration_complete", r.enumeration_complete},
            {"verified", r.verified()}};
  if (timing) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

void census_text(std::ostream& os, CensusReport const& r, bool timing) {
  os << fmt::format("census {}  (order {}, sizes {}..{})\n", r.group_spec, r.order, r.sizes.lo, r.sizes.hi);
  os << fmt::format("  subsets {}  canonical classes {}  CondI {}  CondII {}\n", r.subsets_scanned,
                    r.canonical_classes, r.cond_i, r.cond_ii);
  os << fmt::format("  {:>4}  {:>12}  {:>10}  {:>6}  {:>6}  {:>9}  {}\n", "size", "subsets", "classes", "small",
                    "min|Q|", "extremal#", "extremal set");
  for (auto const& row : r.by_size) {
    os << fmt::format("  {:>4}  {:>12}  {:>10}  {:>6}  {:>6}  {:>9}  {}\n", row.size, row.subsets, row.classes,
                      row.small_classes, row.min_quotient, row.extremal_classes, row.extremal_set);
  }
  os << "  enumeration: " << (r.enumeration_complete ? "complete" : "INCOMPLETE") << "\n";
  if (r.violations.empty()) {
    os << "  violations: none\n";
  } else {
    os << "  violations: " << r.violations.size() << "\n";
    for (auto const& v : r.violations) os << "    " << v.kind << "  " << v.set << "  " << v.detail << "\n";
  }
  if (timing) os << fmt::format("  runtime {:.3f}s\n", r.runtime_seconds);
}

json conjecture_json(ConjectureReport const& r, bool timing) {
  json j = {{"group_spec", r.group_spec},
            {"order", r.order},
            {"n", r.n},
            {"canonical_classes", r.canonical_classes},
            {"in_range", r.in_range},
            {"witnessed", r.witnessed},
            {"counterexamples", r.counterexamples},
            {"fatal", r.fatal},
            {"sharpness_examined", r.sharpness_examined},
            {"sharpness_violations", r.sharpness_violations},
            {"notes", json::array({"size clause read as |A^-1 A| = (2|A0|-1)|H|"})}};
  if (timing) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

void conjecture_text(std::ostream& os, ConjectureReport const& r, bool timing) {
  os << fmt::format("conjecture-scan {}  (order {}, n={})\n", r.group_spec, r.order, r.n);
  os << fmt::format("  canonical classes {}  below threshold {}  witnessed {}\n", r.canonical_classes, r.in_range,
                    r.witnessed);
  os << fmt::format("  counterexample candidates: {}{}\n", r.counterexamples.size(),
                    r.fatal ? "  (FATAL: contradicts a proven case)" : "");
  for (auto const& s : r.counterexamples) os << "    " << s << "\n";
  os << fmt::format("  sharpness: examined {}  violations {}\n", r.sharpness_examined, r.sharpness_violations.size());
  for (auto const& s : r.sharpness_violations) os << "    " << s << "\n";
  os << "  note: size clause read as |A^-1 A| = (2|A0|-1)|H|\n";
  if (timing) os << fmt::format("  runtime {:.3f}s\n", r.runtime_seconds);
}

// Uniform envelope for every verb.
std::string envelope(Verb verb, json results, std::size_t findings) {
  json j = {{"command", to_string(verb)}, {"results", std::move(results)}, {"findings", findings}};
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Verb implementations. Each returns (report text, number of findings) and
// appends candidate lines for --dump.

struct Outcome {
  std::string report;
  std::size_t findings = 0;
  std::vector<std::string> candidates;
};

std::size_t census_cap(CommandOptions const& o) {
  if (char const* env = std::getenv(kCensusCapEnv); env != nullptr && o.census_cap == kDefaultCensusCap) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return o.census_cap;
}

std::vector<GroupTable> load_groups(CommandOptions const& o) {
  std::vector<GroupTable> out;
  for (auto const& s : o.groups) out.push_back(parse_group_spec(s));
  if (!o.group_file.empty()) {
    std::ifstream in(o.group_file);
    if (!in) throw PreconditionError("cannot read group file " + o.group_file);
    std::stringstream buf;
    buf << in.rdbuf();
    for (auto& g : parse_group_file(buf.str())) out.push_back(std::move(g));
  }
  if (o.catalog_max > 0)
    for (auto const& s : catalog_specs(o.catalog_max)) out.push_back(parse_group_spec(s));
  return out;
}

CensusOptions census_options(CommandOptions const& o) {
  CensusOptions c;
  c.sizes = o.sizes;
  c.jobs = o.jobs;
  c.cap = census_cap(o);
  c.allow_big = o.allow_big;
  return c;
}

json classify_one(GroupTable const& g, ElemSet const& a, std::size_t& findings, std::ostream& text) {
  auto const subgroups = all_subgroups(g);
  auto const c = classify(g, a, subgroups);
  json j = {{"group_spec", g.spec()},
            {"set", a.to_string()},
            {"size", a.size()},
            {"quotient", c.quotient.to_string()},
            {"quotient_size", c.quotient.size()},
            {"ratio", {{"three_q", c.ratio.lhs()}, {"five_a", c.ratio.rhs()}, {"small", c.ratio.small()}}},
            {"kind", to_string(c.kind)}};
  text << fmt::format("classify {} A={}\n", g.spec(), a.to_string());
  text << fmt::format("  |A|={} |Q|={}  3|Q|={} vs 5|A|={}\n", a.size(), c.quotient.size(), c.ratio.lhs(),
                      c.ratio.rhs());
  text << "  Q=" << c.quotient.to_string() << "\n";
  text << "  kind " << to_string(c.kind) << "\n";
  if (c.kind == Kind::kNoWitness) {
    ++findings;
  } else if (c.subgroup) {
    j["subgroup"] = c.subgroup->elements.to_string();
    j["a"] = c.a;
    text << "  H=" << c.subgroup->elements.to_string() << "  a=" << c.a;
    if (c.kind == Kind::kCondII) {
      j["b"] = c.b;
      text << "  b=" << c.b;
    }
    text << "\n";
    auto const structure = verify_structure(g, a, c);
    j["structure"] = check_json(structure);
    text << "  moreover: " << (structure.ok() ? "verified" : "FAILED") << "\n";
    check_text(text, structure, "    ");
    if (!structure.ok()) ++findings;
    if (c.kind == Kind::kCondII) {
      auto const suff = check_sufficiency(g, *c.subgroup, c.a, c.b, a);
      j["sufficiency"] = check_json(suff);
      check_text(text, suff, "    ");
      if (!suff.ok()) ++findings;
    }
  }
  return j;
}

Outcome run_classify(CommandOptions const& o) {
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  std::vector<std::pair<std::string, std::string>> jobs;
  if (!o.replay_file.empty()) {
    std::ifstream in(o.replay_file);
    if (!in) throw PreconditionError("cannot read replay file " + o.replay_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
      jobs.push_back(parse_replay_line(line));
    }
  } else {
    jobs.emplace_back(o.groups.front(), o.set);
  }
  for (auto const& [spec, set] : jobs) {
    auto const g = parse_group_spec(spec);
    auto const a = parse_set_spec(set, g);
    if (a.empty()) throw PreconditionError("classify needs a nonempty set");
    std::size_t before = out.findings;
    results.push_back(classify_one(g, a, out.findings, text));
    if (out.findings != before) out.candidates.push_back(replay_line(g.spec(), a.to_string()));
  }
  out.report = o.format == Format::kJson ? envelope(Verb::kClassify, results, out.findings) : text.str();
  return out;
}

Outcome run_census(CommandOptions const& o, std::ostream& err) {
  Outcome out;
  std::vector<CensusReport> reports;
  auto const opts = census_options(o);
  for (auto const& g : load_groups(o)) {
    auto r = theorem_census(g, opts);
    err << fmt::format("census {}: {} classes, {} violations, {:.2f}s\n", r.group_spec, r.canonical_classes,
                       r.violations.size(), r.runtime_seconds);
    out.findings += r.violations.size() + (r.enumeration_complete ? 0 : 1);
    for (auto const& v : r.violations) out.candidates.push_back(replay_line(r.group_spec, v.set));
    reports.push_back(std::move(r));
  }
  out.report = render_census(reports, o.format, o.timing);
  return out;
}

Outcome run_conjecture(CommandOptions const& o, std::ostream& err) {
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  auto const opts = census_options(o);
  for (auto const& g : load_groups(o)) {
    auto r = conjecture_scan(g, o.n, opts);
    err << fmt::format("conjecture-scan {} n={}: {} below threshold, {} candidates, {:.2f}s\n", r.group_spec, r.n,
                       r.in_range, r.counterexamples.size(), r.runtime_seconds);
    out.findings += r.counterexamples.size() + r.sharpness_violations.size();
    for (auto const& s : r.counterexamples) out.candidates.push_back(replay_line(r.group_spec, s));
    for (auto const& s : r.sharpness_violations) out.candidates.push_back(replay_line(r.group_spec, s));
    results.push_back(conjecture_json(r, o.timing));
    conjecture_text(text, r, o.timing);
  }
  out.report = o.format == Format::kJson ? envelope(Verb::kConjectureScan, results, out.findings) : text.str();
  return out;
}

Outcome run_construct(CommandOptions const& o) {
  Outcome out;
  auto const g = parse_group_spec(o.groups.front());
  Subgroup const h{parse_set_spec(o.subgroup, g)};
  auto const x = *o.element;
  auto const a = construct_threshold_example(g, h, x);
  auto const c = classify(g, a, all_subgroups(g));
  bool const exact = c.ratio.lhs() == c.ratio.rhs();
  bool const ok = exact && c.kind == Kind::kNotSmall && a.size() == 3 * h.order();
  if (!ok) {
    out.findings = 1;
    out.candidates.push_back(replay_line(g.spec(), a.to_string()));
  }
  json r = {{"group_spec", g.spec()},
            {"subgroup", h.elements.to_string()},
            {"g", x},
            {"set", a.to_string()},
            {"size", a.size()},
            {"quotient", c.quotient.to_string()},
            {"quotient_size", c.quotient.size()},
            {"three_q", c.ratio.lhs()},
            {"five_a", c.ratio.rhs()},
            {"exact_five_thirds", exact},
            {"kind", to_string(c.kind)}};
  if (o.format == Format::kJson) {
    out.report = envelope(Verb::kConstructExtremal, json::array({r}), out.findings);
  } else {
    out.report = fmt::format(
        "construct-extremal {} H={} g={}\n  A={}  |A|={}\n  Q={}  |Q|={}\n  3|Q|={} 5|A|={}  ratio {}\n  kind {}\n",
        g.spec(), h.elements.to_string(), x, a.to_string(), a.size(), c.quotient.to_string(), c.quotient.size(),
        c.ratio.lhs(), c.ratio.rhs(), exact ? "exactly 5/3" : "NOT 5/3", to_string(c.kind));
  }
  return out;
}

ElemSet random_subset(std::size_t order, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.05, 1.0);
  std::bernoulli_distribution keep(density(rng));
  ElemSet s(order);
  for (Element x = 0; x < order; ++x)
    if (keep(rng)) s.insert(x);
  if (s.empty()) s.insert(static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, order - 1)(rng)));
  return s;
}

Outcome run_check_lemmas(CommandOptions const& o) {
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  std::mt19937_64 rng(o.seed);
  for (auto const& g : load_groups(o)) {
    json checks = json::array();
    text << "check-lemmas " << g.spec() << "\n";
    auto note = [&](CheckReport const& r) {
      if (!r.ok()) ++out.findings;
      checks.push_back(check_json(r));
      check_text(text, r, "  ");
    };
    note(verify_group_axioms(g));
    if (!o.subgroup.empty()) {
      note(check_coset_lemmas(g, Subgroup{parse_set_spec(o.subgroup, g)}));
    } else {
      for (auto const& h : all_subgroups(g)) note(check_coset_lemmas(g, h));
    }
    std::size_t box_failures = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
      auto const a = random_subset(g.order(), rng);
      auto const b = random_subset(g.order(), rng);
      auto const r = check_box_kw(g, a, b);
      if (!r.ok()) {
        ++box_failures;
        note(r);
      }
    }
    if (o.trials > 0) text << fmt::format("  box/KW: {} random trials, {} failures\n", o.trials, box_failures);
    results.push_back({{"group_spec", g.spec()},
                       {"checks", checks},
                       {"box_kw_trials", o.trials},
                       {"box_kw_failures", box_failures},
                       {"seed", o.seed}});
  }
  out.report = o.format == Format::kJson ? envelope(Verb::kCheckLemmas, results, out.findings) : text.str();
  return out;
}

Outcome run_catalog(CommandOptions const& o) {
  Outcome out;
  std::ostringstream text;
  json results = json::array();
  if (!o.groups.empty() || !o.group_file.empty()) {
    for (auto const& g : load_groups(o)) {
      json elems = json::array();
      text << fmt::format("{}  (order {})\n", g.spec(), g.order());
      for (Element x = 0; x < g.order(); ++x) {
        elems.push_back({{"id", x}, {"name", g.name(x)}, {"inverse", g.inv(x)}});
        text << fmt::format("  {:>4}  {:<24}  inverse {}\n", x, g.name(x), g.inv(x));
      }
      results.push_back({{"group_spec", g.spec()}, {"order", g.order()}, {"elements", elems}});
    }
  } else {
    auto const max = o.catalog_max > 0 ? o.catalog_max : kDefaultCensusCap;
    for (auto const& s : catalog_specs(max)) {
      auto const g = parse_group_spec(s);
      results.push_back({{"group_spec", g.spec()}, {"order", g.order()}});
      text << fmt::format("{:>4}  {}\n", g.order(), g.spec());
    }
  }
  out.report = o.format == Format::kJson ? envelope(Verb::kCatalog, results, 0) : text.str();
  return out;
}

}  // namespace

std::string render_census(std::vector<CensusReport> const& reports, Format f, bool timing) {
  std::size_t findings = 0;
  for (auto const& r : reports) findings += r.violations.size() + (r.enumeration_complete ? 0 : 1);
  if (f == Format::kJson) {
    json results = json::array();
    for (auto const& r : reports) results.push_back(census_json(r, timing));
    return envelope(Verb::kCensus, results, findings);
  }
  std::ostringstream os;
  for (auto const& r : reports) census_text(os, r, timing);
  return os.str();
}

int run_command(Command const& c, std::ostream& out, std::ostream& err) {
  try {
    validate_command(c);
    auto const& o = c.options;
    Outcome res;
    switch (c.verb) {
      case Verb::kClassify: res = run_classify(o); break;
      case Verb::kCensus: res = run_census(o, err); break;
      case Verb::kConjectureScan: res = run_conjecture(o, err); break;
      case Verb::kConstructExtremal: res = run_construct(o); break;
      case Verb::kCheckLemmas: res = run_check_lemmas(o); break;
      case Verb::kCatalog: res = run_catalog(o); break;
    }
    if (o.output.empty()) {
      out << res.report;
    } else {
      std::ofstream file(o.output);
      if (!file) throw PreconditionError("cannot write " + o.output);
      file << res.report;
    }
    if (!o.dump.empty()) {
      std::ofstream file(o.dump);
      if (!file) throw PreconditionError("cannot write " + o.dump);
      for (auto const& line : res.candidates) file << line << "\n";
    }
    return res.findings == 0 ? 0 : 1;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qset
