#pragma once

// Command-line front end: subcommands pi, coeff, sum, sin, classify,
// threshold, scan, trace, lemma and gap.
//
// Exit codes: 0 success, 2 domain error, 64 usage error, 65 solver failure,
// 74 I/O error.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqbasis/criteria.hpp"
#include "pqbasis/solver.hpp"

namespace pqbasis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitSolver = 65;
inline constexpr int kExitIo = 74;

enum class Format { Text, Csv, Json };

struct RunConfig {
  double tol = 1e-12;
  int k_max = 35;
  std::size_t quad_budget = 2'000'000;
  /// Empty: standard output.
  std::string output_path;
  Format format = Format::Text;
};

/// Thrown for arguments that parse but violate a documented range.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError unless tol is in [1e-13, 1e-6] and k_max is odd in [1, 101].
void validate(const RunConfig& config);

/// Apply `key = value` lines (keys tol, k_max, quad_budget, output, format;
/// '#' starts a comment) on top of `config`. Keys listed in `locked` are
/// skipped, so flags given on the command line win. Throws UsageError on an
/// unknown key or malformed value.
void apply_config_text(const std::string& text, RunConfig& config,
                       const std::vector<std::string>& locked = {});

/// Fixed 15 significant digits, trailing zeros kept: 10.4719755119660.
std::string format_sig15(double x);
/// Shortest decimal string that reads back to the same double.
std::string format_roundtrip(double x);

using Json = nlohmann::ordered_json;

Json to_json(const criteria::CriterionReport& report);
criteria::CriterionReport report_from_json(const Json& j);

Json to_json(const solver::ThresholdResult& result);
solver::ThresholdResult threshold_from_json(const Json& j);

Json to_json(const solver::ScanCell& cell);
solver::ScanCell cell_from_json(const Json& j);

/// The scan header line (without newline).
std::string scan_csv_header();
/// One CSV row per cell, floats in shortest round-trip form.
std::string scan_csv_row(const solver::ScanCell& cell);

/// Parse and run one command line. Results go to `out` (or the configured
/// output file), diagnostics to `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqbasis::cli
