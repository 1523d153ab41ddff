#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgraph {

/// A counterexample. `input` is a JSON object holding everything needed to
/// rebuild the case (edge lists for graphs, parameters for formulas).
struct Failure {
  std::string key;
  std::string input;
  std::string expected;
  std::string got;
};

struct CaseRecord {
  std::string key;
  bool passed = true;
  std::string detail;  // JSON object text
};

struct VerificationReport {
  std::string theorem_id;
  std::string parameter_grid;
  std::size_t cases_checked = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;
  /// Filled only when VerifyOptions::record_cases is set; sorted by key.
  std::vector<CaseRecord> cases;
  /// Free-form findings (e.g. nullity sets observed for small n).
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> samples;
  std::uint64_t seed = 0x5eed2013;
  bool record_cases = false;
};

/// cor2.1 thm2.2 prop2.1 lem3.1 thm3.1 thm3.2 pendant thm4.1 lem5.1 lem5.2
/// bounds.bplus bounds.bplusplus bounds.theta set.bplus set.bplusplus
/// set.theta set.bicyclic, plus nullity.agree (rank, zero-root
/// multiplicity and structural reduction on the corpus and random graphs).
const std::vector<std::string>& theorem_ids();

/// Runs one suite. Throws std::invalid_argument for an unknown id or a
/// range outside the suite's domain; ConsistencyError escapes when a
/// constructor contradicts its own oracle check.
VerificationReport run_verification(std::string_view theorem_id, const VerifyOptions& options = {});

/// JSON lines: one object per recorded case, then a summary object with
/// theorem, grid, cases_checked, failures, notes and status. Wall time is
/// left out so equal inputs give byte-identical output.
std::string report_to_json_lines(const VerificationReport& report);

/// Human-readable one-paragraph summary including elapsed time.
std::string report_summary(const VerificationReport& report);

}  // namespace sgraph
