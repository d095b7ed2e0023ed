// End-to-end acceptance run: one [PASS]/[FAIL] line per criterion, with
// indented detail lines underneath. Exit status is nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "oracle/naive.hpp"
#include "qset/catalog.hpp"
#include "qset/census.hpp"
#include "qset/classifier.hpp"
#include "qset/cli_io.hpp"
#include "qset/conjecture.hpp"
#include "qset/set_algebra.hpp"
#include "qset/subgroup.hpp"
#include "support.hpp"

using namespace qset;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void note(std::string s) { notes.push_back(std::move(s)); }
  void require(bool cond, std::string s) {
    if (!cond) ok = false;
    notes.push_back((cond ? "ok    " : "FAIL  ") + std::move(s));
  }
};

std::size_t jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<GroupTable> catalog(std::size_t max_order) {
  std::vector<GroupTable> out;
  for (auto const& s : catalog_specs(max_order)) out.push_back(build_group(s));
  return out;
}

struct CensusTally {
  std::map<std::string, std::size_t> by_kind;
  std::size_t groups = 0, groups_with_findings = 0, incomplete = 0;
  std::size_t coinciding = 0;  // necessity findings with HbH = Hb^-1H, b outside N(H)
  std::vector<std::string> examples;
};

CensusTally census_over(std::vector<GroupTable> const& groups) {
  CensusTally t;
  CensusOptions opts;
  opts.jobs = jobs();
  for (auto const& g : groups) {
    auto r = theorem_census(g, opts);
    ++t.groups;
    if (!r.enumeration_complete) ++t.incomplete;
    if (!r.violations.empty()) ++t.groups_with_findings;
    for (auto const& v : r.violations) {
      ++t.by_kind[v.kind];
      if (v.kind == "necessity" && v.detail.find("not in N(H)") != std::string::npos &&
          v.detail.find("HbH = Hb^-1H") != std::string::npos)
        ++t.coinciding;
      if (t.examples.size() < 3) t.examples.push_back(replay_line(r.group_spec, v.set));
    }
  }
  return t;
}

Verdict criterion_census() {
  Verdict v;
  for (std::size_t max : {16U, 24U}) {
    auto const start = std::chrono::steady_clock::now();
    auto t = census_over(catalog(max));
    auto const secs = seconds_since(start);
    std::size_t const total = t.by_kind["necessity"] + t.by_kind["sufficiency"] + t.by_kind["moreover"];
    v.require(total == 0 && t.incomplete == 0,
              fmt::format("catalog order <= {}: {} groups, necessity {}, sufficiency {}, moreover {}, incomplete {} "
                          "({:.1f}s)",
                          max, t.groups, t.by_kind["necessity"], t.by_kind["sufficiency"], t.by_kind["moreover"],
                          t.incomplete, secs));
    if (t.by_kind["necessity"] > 0)
      v.note(fmt::format("      {} of {} necessity classes sit in H u bH with b outside N(H) and HbH = Hb^-1H "
                         "({} groups affected)",
                         t.coinciding, t.by_kind["necessity"], t.groups_with_findings));
    for (auto const& e : t.examples) v.note("      e.g. " + e);
    v.require(secs < (max == 16 ? 300.0 : 1800.0), fmt::format("runtime budget for order <= {}", max));
  }
  return v;
}

Verdict criterion_threshold() {
  Verdict v;
  struct Case {
    char const* spec;
    std::initializer_list<Element> h;
  };
  for (auto c : {Case{"cyclic 7", {0}}, Case{"cyclic 10", {0, 5}}}) {
    auto g = build_group(c.spec);
    auto a = construct_threshold_example(g, testing::sub_of(g, c.h), 1);
    auto k = classify(g, a, all_subgroups(g));
    v.require(k.ratio.lhs() == k.ratio.rhs() && k.kind == Kind::kNotSmall,
              fmt::format("{}: A={} 3|Q|={} 5|A|={} kind={}", c.spec, a.to_string(), k.ratio.lhs(), k.ratio.rhs(),
                          to_string(k.kind)));
  }
  return v;
}

Verdict criterion_conjecture() {
  Verdict v;
  CensusOptions opts;
  opts.jobs = jobs();
  auto const groups = catalog(16);
  for (unsigned n : {1U, 2U, 3U}) {
    std::size_t cands = 0, sharp = 0, in_range = 0, affected = 0;
    std::string example;
    for (auto const& g : groups) {
      auto r = conjecture_scan(g, n, opts);
      cands += r.counterexamples.size();
      sharp += r.sharpness_violations.size();
      in_range += r.in_range;
      if (!r.counterexamples.empty()) {
        ++affected;
        if (example.empty()) example = replay_line(r.group_spec, r.counterexamples.front());
      }
    }
    auto line = fmt::format("n={}: {} groups, {} classes below threshold, {} candidates in {} groups, "
                            "{} sharpness findings",
                            n, groups.size(), in_range, cands, affected, sharp);
    if (n <= 2) {
      v.require(cands == 0 && sharp == 0, line);
    } else {
      v.note("info  " + line + " (open case, reported only)");
    }
    if (!example.empty()) v.note("      e.g. " + example);
  }
  return v;
}

Verdict criterion_lemmas() {
  Verdict v;
  std::size_t pairs = 0, bad = 0;
  std::string first_bad;
  auto const groups = catalog(24);
  for (auto const& g : groups) {
    for (auto const& h : all_subgroups(g)) {
      ++pairs;
      auto r = check_coset_lemmas(g, h);
      if (!r.ok()) {
        ++bad;
        if (first_bad.empty()) first_bad = g.spec() + " H=" + h.elements.to_string();
      }
    }
  }
  v.require(bad == 0, fmt::format("coset lemmas: {} (group, subgroup) pairs, {} failing {}", pairs, bad, first_bad));

  std::mt19937_64 rng(20240601);
  std::size_t box_bad = 0;
  for (int t = 0; t < 10000; ++t) {
    auto const& g = groups[rng() % groups.size()];
    std::uniform_real_distribution<double> p(0.05, 0.6);
    auto a = testing::random_set(g.order(), p(rng), rng);
    auto b = testing::random_set(g.order(), p(rng), rng);
    if (!check_box_kw(g, a, b).ok()) ++box_bad;
  }
  v.require(box_bad == 0, fmt::format("box principle / Kemperman-Wehn: 10000 seeded triples, {} failing", box_bad));
  return v;
}

Verdict criterion_qplus() {
  Verdict v;
  std::size_t sets = 0, bad = 0, gap_scope = 0;
  std::string first_bad;
  for (auto const& g : catalog(12)) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
      auto a = ElemSet::from_mask(g.order(), mask);
      auto d = qplus_diagnostics(g, a);
      ++sets;
      auto const* gap = d.checks.find("r_gap");
      if (gap != nullptr && gap->status == CheckStatus::kPass) ++gap_scope;
      if (!d.checks.ok()) {
        ++bad;
        if (first_bad.empty()) first_bad = replay_line(g.spec(), a.to_string());
      }
    }
  }
  v.require(bad == 0, fmt::format("{} nonempty subsets, {} failing {}", sets, bad, first_bad));
  v.note(fmt::format("      r-gap asserted on {} subsets with AF = A and 3|Q| < 5|A|", gap_scope));
  return v;
}

std::string json_of(Verb verb, std::vector<std::string> const& specs, std::size_t jobs, unsigned n) {
  CommandOptions o;
  o.groups = specs;
  o.jobs = jobs;
  o.n = n;
  o.format = Format::kJson;
  std::ostringstream out, err;
  run_command({verb, o}, out, err);
  return out.str();
}

Verdict criterion_determinism() {
  Verdict v;
  auto const specs = catalog_specs(16);
  std::vector<std::string> big{"dihedral 10", "symmetric 4", "product symmetric 3 ; cyclic 4"};
  for (auto const& [verb, list] :
       {std::pair{Verb::kCensus, specs}, std::pair{Verb::kConjectureScan, specs}, std::pair{Verb::kCensus, big}}) {
    auto a = json_of(verb, list, 1, 2);
    auto b = json_of(verb, list, 4, 2);
    auto c = json_of(verb, list, 4, 2);
    v.require(a == b && b == c && !a.empty(),
              fmt::format("{} over {} groups: jobs 1 vs 4 and repeated run byte-identical ({} bytes)",
                          to_string(verb), list.size(), a.size()));
  }
  return v;
}

Verdict criterion_oracle() {
  Verdict v;
  std::mt19937_64 rng(77);
  auto const groups = catalog(24);
  std::size_t bad = 0;
  for (int t = 0; t < 10000; ++t) {
    auto const& g = groups[rng() % groups.size()];
    auto view = testing::table_view(g);
    std::uniform_real_distribution<double> p(0.05, 0.7);
    auto a = testing::random_set(g.order(), p(rng), rng);
    auto b = testing::random_set(g.order(), p(rng), rng);
    auto oa = testing::to_oracle(a), ob = testing::to_oracle(b);
    auto h = generated_subgroup(g, testing::random_set(g.order(), 0.05, rng));
    auto x = static_cast<Element>(rng() % g.order());
    bool const same = testing::to_oracle(quotient_set(g, a)) == oracle::quotient(view, oa) &&
                      representation_counts(g, a, b, RepForm::kQuotient).counts ==
                          oracle::rep_counts(view, oa, ob, true) &&
                      representation_counts(g, a, b, RepForm::kProduct).counts ==
                          oracle::rep_counts(view, oa, ob, false) &&
                      testing::to_oracle(double_coset(g, h, x)) ==
                          oracle::double_coset(view, testing::to_oracle(h.elements), x);
    if (!same) ++bad;
  }
  v.require(bad == 0, fmt::format("10000 random instances over {} groups, {} disagreements", groups.size(), bad));
  return v;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    char const* title;
    Verdict (*run)();
  };
  Entry const entries[] = {
      {1, "exhaustive census of the 5/3 classification", criterion_census},
      {2, "threshold examples sit exactly at 5/3", criterion_threshold},
      {3, "coset-structure scan for n = 1, 2 (n = 3 reported)", criterion_conjecture},
      {4, "coset lemmas and box/Kemperman-Wehn checks", criterion_lemmas},
      {5, "Q plus / F diagnostics on every subset, order <= 12", criterion_qplus},
      {6, "JSON reports are deterministic", criterion_determinism},
      {7, "bitset kernels agree with the naive oracle", criterion_oracle},
  };
  int failures = 0;
  for (auto const& e : entries) {
    auto const start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = e.run();
    } catch (std::exception const& ex) {
      v.require(false, std::string("exception: ") + ex.what());
    }
    std::cout << fmt::format("[{}] {}. {} ({:.1f}s)\n", v.ok ? "PASS" : "FAIL", e.id, e.title, seconds_since(start));
    for (auto const& n : v.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    if (!v.ok) ++failures;
  }
  std::cout << fmt::format("{} of 7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
