#ifndef QSET_CLI_IO_HPP_
#define QSET_CLI_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qset/census.hpp"
#include "qset/elem_set.hpp"
#include "qset/group_table.hpp"

namespace qset {

// Overrides the default exhaustive-scan cap when set to a positive integer.
inline constexpr char const* kCensusCapEnv = "QSET_CENSUS_CAP";

enum class Verb { kClassify, kCensus, kConjectureScan, kConstructExtremal, kCheckLemmas, kCatalog };
enum class Format { kText, kJson };

char const* to_string(Verb v);

struct CommandOptions {
  std::vector<std::string> groups;  // --group, repeatable
  std::string group_file;           // one spec per line, '#' comments
  std::size_t catalog_max = 0;      // --catalog N: every catalog group of order <= N
  std::string set;
  std::string replay_file;  // lines written by --dump
  std::string subgroup;
  std::optional<Element> element;  // --g
  unsigned n = 2;
  SizeRange sizes;
  std::size_t jobs = 1;
  Format format = Format::kText;
  std::string output;  // report destination; stdout when empty
  std::string dump;    // candidate lines destination
  bool allow_big = false;
  std::size_t census_cap = kDefaultCensusCap;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  bool timing = false;  // include wall-clock seconds in reports
};

struct Command {
  Verb verb = Verb::kCatalog;
  CommandOptions options;
};

// Single spec line; errors carry line 1 and the column.
GroupTable parse_group_spec(std::string_view text, std::size_t cap = kDefaultOrderCap);
// One spec per line; blank lines and '#' comments are skipped.
std::vector<GroupTable> parse_group_file(std::string_view text, std::size_t cap = kDefaultOrderCap);

// "{0, 4, 8}"; duplicates collapse, ids must be < |G|.
ElemSet parse_set_spec(std::string_view text, GroupTable const& g);

// "a..b" or a single size "k".
SizeRange parse_size_range(std::string_view text);

// "(group spec, {set literal})", the format written by --dump.
std::string replay_line(std::string const& group_spec, std::string const& set_literal);
std::pair<std::string, std::string> parse_replay_line(std::string_view line);

// Throws PreconditionError when required options for the verb are missing.
void validate_command(Command const& c);

// Exit status: 0 clean, 1 findings reported, 2 usage or input error.
// Reports go to `out` (or the --output file), diagnostics to `err`.
int run_command(Command const& c, std::ostream& out, std::ostream& err);

// Report rendering, exposed for tests. JSON keys are sorted and the
// runtime is omitted unless `timing` is set.
std::string render_census(std::vector<CensusReport> const& reports, Format f, bool timing);

}  // namespace qset

#endif  // QSET_CLI_IO_HPP_
