#pragma once

// Replay suites and the JSON report format (schema "gp-lab-report/1").

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gplab/construct.hpp"
#include "gplab/density.hpp"
#include "gplab/dynsim.hpp"
#include "gplab/ipcalc.hpp"
#include "gplab/patterns.hpp"
#include "gplab/translate.hpp"
#include "gplab/verdict.hpp"

namespace gplab {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "gp-lab-report/1";

// ---- JSON views of domain values ------------------------------------------

Json to_json(const Rational& r);
Json to_json(const NatSet& a, std::size_t max_members = SIZE_MAX);
Json to_json(const GpWitness& w);
Json to_json(const GeoArithWitness& w);
Json to_json(const ApWitness& w);
Json to_json(const FsSpec& fs);
Json to_json(const TranslateWitness& w);
Json to_json(const DensityProfile& p);
Json to_json(const ComponentDecomposition& c);
Json to_json(const DiagonalOrbitReport& r);
Json to_json(const ThicknessCell& c);
Json to_json(const BoundReport& r);
Json to_json(const CoverReport& r);
Json to_json(const RankReport& r);

// ---- exhaustive thick-dilation sweep ---------------------------------------

struct ThickSweep {
  std::uint64_t subsets = 0;
  std::uint64_t signatures = 0;  // distinct residue sets among the subsets
  std::uint64_t failures = 0;    // subsets with no verified dilation
  std::optional<std::vector<Index>> first_failure;
  std::map<Index, std::uint64_t> dilations;  // s -> number of subsets it serves
  std::uint64_t sampled = 0;
  std::uint64_t sample_failures = 0;
};

// Decides every non-empty F inside `pool` (at most 30 elements). Membership
// of s*f in a periodic set depends only on f mod q, so each subset is
// reduced to the set of residues it meets, tracked incrementally in Gray-code
// order; decide_thick_dilation runs on the first subset of each residue set
// and its s is re-checked element by element. `samples` further subsets drawn
// with `seed` are decided and verified directly, from scratch.
ThickSweep thick_dilation_sweep(const PeriodicSet& p, const std::vector<Index>& pool,
                                const CosetSpec& coset, std::size_t samples, std::uint64_t seed);

std::vector<Index> odd_numbers(Index max);

Json to_json(const ThickSweep& s);

// ---- suites ---------------------------------------------------------------

struct CheckRecord {
  std::string id;
  Json params = Json::object();
  Verdict verdict = Verdict::Inconclusive;
  Json witness = Json::object();
  double seconds = 0;
  std::string detail;
};

struct SuiteOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 20240611;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;  // in declaration order
  Json environment = Json::object();
  double seconds = 0;
  // Fail if any check fails, else inconclusive if any is, else pass.
  Verdict overall() const noexcept;
};

// Canonical suite ids. "§" ids may also be given with an ASCII 'S'.
const std::vector<std::string>& suite_ids();

// Throws DomainError for unknown ids.
SuiteReport run_suite(std::string_view id, const SuiteOptions& opt = {});

// Runs independent checks on up to `jobs` threads; results keep input order.
std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& checks,
                                    unsigned jobs);

Json to_json(const SuiteReport& r, bool with_timing = true);
Json make_report(const std::vector<SuiteReport>& suites, bool with_timing = true);

// Structural validation of a report document; returns the problems found.
std::vector<std::string> validate_report(const Json& doc);

}  // namespace gplab
