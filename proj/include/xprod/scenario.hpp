#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xprod/freeness.hpp"
#include "xprod/json_io.hpp"

namespace xprod {

inline constexpr const char* kScenarioSchema = "xprod-scenario/1";
inline constexpr const char* kReportSchema = "xprod-report/1";

struct MomentsTask {
  std::vector<CrossedElement> elements;
  std::optional<NCPartition> partition;  // defaults to the whole partition
};

struct CumulantsTask {
  std::vector<CrossedElement> elements;
};

struct FreenessSplit {
  std::vector<int> a;
  std::vector<int> b;
};

struct FreenessTask {
  int max_order = 4;
  int trials = 100;  // instances per order
  std::vector<FreenessSplit> splits;
};

// Check counts for the verification suite; defaults match the acceptance
// workload.
struct VerifyParams {
  int word_checks = 500;       // trace identity tuples
  int monomial_checks = 500;   // expectation-of-products tuples
  int partition_tuples = 50;   // per partition, per order, n <= 5
  int cumulant_tuples = 200;   // per order, n <= 5
  int roundtrip_tuples = 200;  // total, n <= 4
  int oracle_tuples = 200;     // alternating centered products
  int example_checks = 100;    // third-order expansion spot checks
  int freeness_instances = 100;
  int freeness_max_order = 4;
  int spot_order = 5;
  int spot_instances = 25;
};

struct Scenario {
  std::string name;
  ContextPtr ctx;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::optional<MomentsTask> moments;
  std::optional<CumulantsTask> cumulants;
  std::optional<FreenessTask> freeness;
  VerifyParams verify;
};

Scenario scenario_from_json(const Json& j);
Scenario load_scenario(const std::string& path);

// The four bundled configurations, constructed programmatically (the JSON
// files under fixtures/ mirror them; a test keeps the two in sync).
Scenario fixture_f2_diag2();
Scenario fixture_z2z3_diag6();
Scenario fixture_f2_full2_float();
Scenario fixture_fn_split();
std::vector<Scenario> bundled_fixtures();

}  // namespace xprod
