#include "symrec/recover.hpp"

#include "symrec/sicsaf.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace symrec {

std::uint64_t recovery_threshold(const Problem& problem, const RecoveryConfig& config) {
  if (config.sample_size_override) {
    if (*config.sample_size_override == 0) throw std::invalid_argument("sample size must be >= 1");
    return *config.sample_size_override;
  }
  const Rational eps = config.epsilon;
  if (eps.num == 0 || !(eps < Rational(1, 2))) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  }
  const long double e = eps.to_long_double();
  const long double raw = 16.0L * problem.instance_length() *
                          std::log(static_cast<long double>(problem.alphabet_size())) / (e * e);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(raw)));
}

Value majority(const std::vector<Value>& values) {
  if (values.empty()) throw MajorityUndefined("majority of an empty sequence");
  std::map<Value, std::uint64_t> counts;
  for (Value v : values) ++counts[v];
  for (const auto& [v, c] : counts) {
    if (2 * c > values.size()) return v;
  }
  throw MajorityUndefined("no value occurs in more than half of " +
                          std::to_string(values.size()) + " answers");
}

RecoveryPlan plan_recovery(const Problem& problem, InstanceIndex phi, std::uint64_t s,
                           AutStrategy strategy) {
  problem.check_instance(phi);
  const unsigned m = problem.group_degree();
  const StabilizerChain aut = automorphism_group(problem, phi, strategy);
  RecoveryPlan plan;
  plan.instance = phi;
  plan.aut_order = aut.order();
  if (plan.aut_order * s >= factorial(m)) {
    plan.branch = Branch::Symmetric;
    if (problem.semigroup().idempotent()) {
      plan.value = eval_compressed(problem, phi, aut, s);
    } else if (problem.regular_orbits()) {
      plan.value = eval_compressed_regular(problem, phi, aut, s);
    } else {
      throw std::invalid_argument(problem.name() +
                                  ": compression needs an idempotent semigroup or regular orbits");
    }
    return plan;
  }
  plan.branch = Branch::Query;
  const auto reps = list_coset_reps(aut, m, s, CosetSide::Left);
  plan.queries.reserve(reps.size());
  for (const Permutation& g : reps) plan.queries.push_back(problem.act_instance(g, phi));
  return plan;
}

RecoveryOutcome execute_plan(const RecoveryPlan& plan, const CorruptedTable& corrupted) {
  RecoveryOutcome out;
  out.branch = plan.branch;
  out.aut_order = plan.aut_order;
  if (plan.branch == Branch::Symmetric) {
    out.value = plan.value;
    return out;
  }
  std::vector<Value> answers;
  answers.reserve(plan.queries.size());
  for (InstanceIndex i : plan.queries) answers.push_back(corrupted.query(i));
  out.queries_made = answers.size();
  out.value = majority(answers);
  const auto wins = static_cast<std::uint64_t>(std::count(answers.begin(), answers.end(), out.value));
  out.majority_margin = Rational(wins, answers.size());
  return out;
}

RecoveryOutcome recover_one(const Problem& problem, InstanceIndex phi,
                            const CorruptedTable& corrupted, const RecoveryConfig& config) {
  if (corrupted.size() != problem.instance_count()) {
    throw std::invalid_argument("corrupted table does not match the problem's instance space");
  }
  const std::uint64_t s = recovery_threshold(problem, config);
  return execute_plan(plan_recovery(problem, phi, s, config.aut_strategy), corrupted);
}

RecoverySummary& RecoverySummary::operator+=(const RecoverySummary& o) {
  total += o.total;
  symmetric += o.symmetric;
  query_branch += o.query_branch;
  correct += o.correct;
  majority_undefined += o.majority_undefined;
  queries += o.queries;
  return *this;
}

std::vector<RecoverySummary> recover_all_multi(const Problem& problem,
                                               const std::vector<const CorruptedTable*>& tables,
                                               const TruthTable& truth,
                                               const RecoveryConfig& config,
                                               unsigned parallelism) {
  const std::uint64_t entries = problem.instance_count();
  if (truth.size() != entries) throw std::invalid_argument("truth table size mismatch");
  for (const CorruptedTable* t : tables) {
    if (t->size() != entries) throw std::invalid_argument("corrupted table size mismatch");
  }
  const std::uint64_t s = recovery_threshold(problem, config);
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (entries + kChunk - 1) / kChunk;
  std::vector<std::vector<RecoverySummary>> partial(chunks,
                                                    std::vector<RecoverySummary>(tables.size()));
  detail::parallel_chunks(chunks, parallelism, [&](std::uint64_t c) {
    auto& sums = partial[c];
    const std::uint64_t hi = std::min(entries, (c + 1) * kChunk);
    for (InstanceIndex phi = c * kChunk; phi < hi; ++phi) {
      const RecoveryPlan plan = plan_recovery(problem, phi, s, config.aut_strategy);
      const Value expected = truth.get(phi);
      for (std::size_t t = 0; t < tables.size(); ++t) {
        RecoverySummary& r = sums[t];
        ++r.total;
        if (plan.branch == Branch::Symmetric) {
          ++r.symmetric;
        } else {
          ++r.query_branch;
        }
        try {
          const RecoveryOutcome o = execute_plan(plan, *tables[t]);
          r.queries += o.queries_made;
          if (o.value == expected) ++r.correct;
        } catch (const MajorityUndefined&) {
          r.queries += plan.queries.size();
          ++r.majority_undefined;
        }
      }
    }
  });
  std::vector<RecoverySummary> out(tables.size());
  for (const auto& p : partial) {
    for (std::size_t t = 0; t < tables.size(); ++t) out[t] += p[t];
  }
  return out;
}

RecoverySummary recover_all(const Problem& problem, const CorruptedTable& corrupted,
                            const TruthTable& truth, const RecoveryConfig& config,
                            unsigned parallelism) {
  return recover_all_multi(problem, {&corrupted}, truth, config, parallelism).front();
}

}  // namespace symrec
