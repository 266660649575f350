#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slq/group.hpp"

namespace slq {

/// The Sanov pair [[1,2],[0,1]], [[1,0],[2,1]] (symmetrized, |S| = 4).
GeneratorSet sanov_set();
/// The elementary pair [[1,1],[0,1]], [[1,0],[1,1]] (symmetrized).
GeneratorSet elementary_set();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::ordered_json details;
};

struct SuiteOptions {
  u64 seed = 0;
  /// Test-harness hook: added to every bracket formula value; any nonzero
  /// value must make the counting criterion fail loudly.
  long bracket_formula_corruption = 0;
  /// Empty runs all criteria; otherwise the listed ids.
  std::vector<int> criteria;
  /// Generator set for the observational gap sweep (criterion 14);
  /// default is the Sanov set.
  std::optional<GeneratorSet> sweep_gens;
};

/// Caches group tables shared between criteria.
class SuiteContext {
 public:
  SuiteContext();
  const GroupTable& sanov(u64 q);
  const GroupTable& elementary(u64 q);
  const GeneratorSet& sanov_gens() const { return sanov_; }
  const GeneratorSet& elementary_gens() const { return elementary_; }

 private:
  GeneratorSet sanov_, elementary_;
  std::map<u64, GroupTable> sanov_tables_, elementary_tables_;
};

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt);

/// One row of the observational gap sweep.
struct GapRow {
  u64 q = 0;
  u64 group_order = 0;
  int degree = 0;
  double lambda2 = 0.0;
  double cheeger_lower = 0.0;
  double cheeger_upper = 0.0;
  std::string c_exact;  // exact rational, empty when above the exhaustive cap
  std::string status;   // ok | degenerate | skipped:<reason>
};

struct GapConfig {
  GeneratorSet gens;
  std::vector<u64> qs;
  double tol = 1e-10;
  u64 seed = 0;
  u64 enum_cap = kDefaultEnumCap;
  u32 exact_cap = 24;
};

std::vector<GapRow> gap_sweep(const GapConfig& config);
std::string gap_csv(const std::vector<GapRow>& rows);
nlohmann::ordered_json gap_json(const std::vector<GapRow>& rows);

}  // namespace slq
