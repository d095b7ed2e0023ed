// Command-line front end: CLI11 parses flags into a Command, the library runs it.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qset/cli_io.hpp"
#include "qset/errors.hpp"

namespace {

struct Flags {
  std::string sizes;
  std::string format = "text";
};

void add_common(CLI::App* sub, qset::CommandOptions& o, Flags& f) {
  sub->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output,-o", o.output, "write the report here instead of stdout");
}

void add_groups(CLI::App* sub, qset::CommandOptions& o) {
  sub->add_option("--group,-g", o.groups, "group spec, e.g. \"dihedral 5\" (repeatable)");
  sub->add_option("--group-file", o.group_file, "file with one group spec per line");
  sub->add_option("--catalog", o.catalog_max, "every catalog group of order <= N");
}

void add_scan(CLI::App* sub, qset::CommandOptions& o, Flags& f) {
  sub->add_option("--sizes", f.sizes, "subset sizes a..b (default all)");
  sub->add_option("--jobs,-j", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--dump", o.dump, "write candidate (spec, set) lines for replay");
  sub->add_flag("--i-know-this-is-big", o.allow_big, "allow orders 25..32");
  sub->add_flag("--timing", o.timing, "include wall-clock time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qset: small quotient sets A^-1 A in finite groups"};
  app.require_subcommand(1);

  qset::Command cmd;
  auto& o = cmd.options;
  Flags f;

  auto* classify = app.add_subcommand("classify", "classify one set, or replay a dump file");
  add_common(classify, o, f);
  classify->add_option("--group,-g", o.groups, "group spec");
  classify->add_option("--set,-s", o.set, "set literal, e.g. \"{0, 4, 8}\"");
  classify->add_option("--replay", o.replay_file, "file of (spec, {set}) lines");
  classify->add_option("--dump", o.dump, "write sets with findings as replay lines");

  auto* census = app.add_subcommand("census", "exhaustive check of the 5/3 classification");
  add_common(census, o, f);
  add_groups(census, o);
  add_scan(census, o, f);

  auto* conj = app.add_subcommand("conjecture-scan", "scan for the n-coset structure below 2 - 1/(n+1)");
  add_common(conj, o, f);
  add_groups(conj, o);
  add_scan(conj, o, f);
  conj->add_option("--n", o.n, "number of cosets")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct-extremal", "build g^-1 H u H u Hg with ratio 5/3");
  add_common(construct, o, f);
  construct->add_option("--group", o.groups, "group spec");
  construct->add_option("--subgroup", o.subgroup, "subgroup as a set literal");
  std::size_t element = 0;
  auto* g_opt = construct->add_option("--g", element, "element id normalizing H");

  auto* lemmas = app.add_subcommand("check-lemmas", "group axioms, coset lemmas, box principle and Kemperman-Wehn");
  add_common(lemmas, o, f);
  add_groups(lemmas, o);
  lemmas->add_option("--subgroup", o.subgroup, "only this subgroup (default all)");
  lemmas->add_option("--trials", o.trials, "random (A, B) pairs for the box/KW checks");
  lemmas->add_option("--seed", o.seed, "random seed");

  auto* catalog = app.add_subcommand("catalog", "list catalog groups, or the id/name map of a group");
  add_common(catalog, o, f);
  catalog->add_option("--group,-g", o.groups, "print element names for this group");
  catalog->add_option("--group-file", o.group_file, "file with one group spec per line");
  catalog->add_option("--max-order", o.catalog_max, "largest order to list (default 24)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using qset::Verb;
  if (classify->parsed()) cmd.verb = Verb::kClassify;
  if (census->parsed()) cmd.verb = Verb::kCensus;
  if (conj->parsed()) cmd.verb = Verb::kConjectureScan;
  if (construct->parsed()) cmd.verb = Verb::kConstructExtremal;
  if (lemmas->parsed()) cmd.verb = Verb::kCheckLemmas;
  if (catalog->parsed()) cmd.verb = Verb::kCatalog;

  try {
    o.format = f.format == "json" ? qset::Format::kJson : qset::Format::kText;
    if (!f.sizes.empty()) o.sizes = qset::parse_size_range(f.sizes);
    if (g_opt->count() > 0) o.element = static_cast<qset::Element>(element);
  } catch (qset::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return qset::run_command(cmd, std::cout, std::cerr);
}
