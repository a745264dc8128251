#pragma once

#include "symrec/noise.hpp"
#include "symrec/perm.hpp"
#include "symrec/problem.hpp"
#include "symrec/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace symrec {

class MajorityUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecoveryConfig {
  Rational epsilon{1, 4};
  std::optional<std::uint64_t> sample_size_override;
  AutStrategy aut_strategy = AutStrategy::Backtracking;
};

enum class Branch { Symmetric, Query };

struct RecoveryOutcome {
  Value value = 0;
  Branch branch = Branch::Symmetric;
  BigInt aut_order = 1;
  std::uint64_t queries_made = 0;
  // Winning count over the number of queries.
  std::optional<Rational> majority_margin;
};

// s = override, else ceil(16 p(n) ln|Sigma| / eps^2). Requires 0 < eps < 1/2.
std::uint64_t recovery_threshold(const Problem& problem, const RecoveryConfig& config);

// Strict majority; throws MajorityUndefined when no value has more than half.
Value majority(const std::vector<Value>& values);

// Everything recover_one needs that does not depend on the corruption.
struct RecoveryPlan {
  InstanceIndex instance = 0;
  Branch branch = Branch::Symmetric;
  BigInt aut_order = 1;
  Value value = 0;                     // Symmetric branch
  std::vector<InstanceIndex> queries;  // Query branch, pairwise distinct orbit members
};

RecoveryPlan plan_recovery(const Problem& problem, InstanceIndex phi, std::uint64_t s,
                           AutStrategy strategy = AutStrategy::Backtracking);
RecoveryOutcome execute_plan(const RecoveryPlan& plan, const CorruptedTable& corrupted);

RecoveryOutcome recover_one(const Problem& problem, InstanceIndex phi,
                            const CorruptedTable& corrupted, const RecoveryConfig& config);

struct RecoverySummary {
  std::uint64_t total = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t query_branch = 0;
  std::uint64_t correct = 0;
  std::uint64_t majority_undefined = 0;
  std::uint64_t queries = 0;

  RecoverySummary& operator+=(const RecoverySummary& o);
  friend bool operator==(const RecoverySummary&, const RecoverySummary&) = default;
};

// Recovers every instance and compares against `truth`. Failures are counted.
RecoverySummary recover_all(const Problem& problem, const CorruptedTable& corrupted,
                            const TruthTable& truth, const RecoveryConfig& config,
                            unsigned parallelism = 1);

// Same sweep over several corruptions of one table; each instance is planned
// once and executed against every table. Returns one summary per table.
std::vector<RecoverySummary> recover_all_multi(const Problem& problem,
                                               const std::vector<const CorruptedTable*>& tables,
                                               const TruthTable& truth,
                                               const RecoveryConfig& config,
                                               unsigned parallelism = 1);

}  // namespace symrec
