#include "oracles.hpp"

#include <symrec/recover.hpp>
#include <symrec/sicsaf.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symrec;

namespace {

ProblemParams with(unsigned n, unsigned k = 0, unsigned d = 0) {
  ProblemParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  return p;
}

RecoveryConfig override_s(std::uint64_t s) {
  RecoveryConfig c;
  c.sample_size_override = s;
  return c;
}

struct Fixture {
  ProblemPtr problem;
  std::shared_ptr<const TruthTable> truth;
};

Fixture fixture(const char* id, ProblemParams params) {
  Fixture f;
  f.problem = make_problem(id, params);
  f.truth = std::make_shared<const TruthTable>(build_table(*f.problem));
  return f;
}

CorruptedTable noisy(const Fixture& f, Rational delta, std::uint64_t seed) {
  const CorruptionStrategy strategy = f.problem->value_max() == 1
                                          ? CorruptionStrategy::flip()
                                          : CorruptionStrategy::uniform_wrong();
  return corrupt(f.truth, delta, seed, CorruptionModel::ExactFraction, strategy,
                 f.problem->value_max());
}

}  // namespace

TEST(Majority, Examples) {
  EXPECT_EQ(majority({1, 1, 0}), 1u);
  EXPECT_THROW(majority({1, 0}), MajorityUndefined);
  EXPECT_EQ(majority({5, 5, 7}), 5u);
  EXPECT_THROW(majority({}), MajorityUndefined);
  EXPECT_THROW(majority({1, 2, 3}), MajorityUndefined);
}

TEST(Threshold, Formula) {
  const ProblemPtr p = make_problem("clique", with(5));  // p(n) = 10, binary alphabet
  RecoveryConfig c;
  c.epsilon = Rational(1, 4);
  EXPECT_EQ(recovery_threshold(*p, c), 1775u);  // ceil(160 ln 2 * 16)
  c.epsilon = Rational(45, 100);
  EXPECT_EQ(recovery_threshold(*p, c), 548u);
  // Halving epsilon quadruples s up to the ceiling.
  c.epsilon = Rational(1, 8);
  const std::uint64_t small = recovery_threshold(*p, c);
  c.epsilon = Rational(1, 4);
  EXPECT_LE(small, 4 * recovery_threshold(*p, c));
  EXPECT_GE(small, 4 * recovery_threshold(*p, c) - 3);
  EXPECT_EQ(recovery_threshold(*p, override_s(240)), 240u);
  c.epsilon = Rational(1, 2);
  EXPECT_THROW(recovery_threshold(*p, c), std::invalid_argument);
  c.epsilon = Rational(0, 1);
  EXPECT_THROW(recovery_threshold(*p, c), std::invalid_argument);
}

TEST(RecoverOne, UncorruptedMatchesBruteforceOnBothBranches) {
  const Fixture f = fixture("clique", with(4));
  const CorruptedTable clean = noisy(f, Rational(0, 1), 1);
  unsigned query = 0, symmetric = 0;
  for (std::uint64_t s : {1u, 3u, 7u, 24u}) {
    for (InstanceIndex phi = 0; phi < f.truth->size(); ++phi) {
      const RecoveryOutcome o = recover_one(*f.problem, phi, clean, override_s(s));
      EXPECT_EQ(o.value, eval_bruteforce(*f.problem, phi));
      (o.branch == Branch::Query ? query : symmetric)++;
    }
  }
  EXPECT_GT(query, 0u);
  EXPECT_GT(symmetric, 0u);
}

TEST(RecoverOne, CompleteGraphIsSymmetric) {
  const Fixture f = fixture("clique", with(5));
  const CorruptedTable c = noisy(f, Rational(1, 4), 3);
  const InstanceIndex k5 = graph_family_index(5, 3, (1u << 10) - 1);
  const RecoveryOutcome o = recover_one(*f.problem, k5, c, override_s(1));
  EXPECT_EQ(o.branch, Branch::Symmetric);
  EXPECT_EQ(o.aut_order, 120);
  EXPECT_EQ(o.value, 1u);
  EXPECT_EQ(o.queries_made, 0u);
  EXPECT_EQ(c.queries(), 0u);
}

TEST(RecoverOne, BoundaryGoesToSymmetric) {
  // K_4 minus an edge has |Aut| = 4, so s = 6 hits 4 * 6 = 4! exactly.
  const ProblemPtr p = make_problem("clique", with(4));
  const InstanceIndex phi = graph_family_index(4, 2, 0b011111);
  EXPECT_EQ(plan_recovery(*p, phi, 6).branch, Branch::Symmetric);
  EXPECT_EQ(plan_recovery(*p, phi, 5).branch, Branch::Query);
}

TEST(RecoverOne, AsymmetricInstancesSurviveNoiseAtSixVertices) {
  const Fixture f = fixture("clique", with(6));
  const CorruptedTable c = noisy(f, Rational(1, 5), 2024);
  std::mt19937_64 rng(5);
  unsigned tested = 0;
  while (tested < 40) {
    const InstanceIndex phi = rng() % f.truth->size();
    const RecoveryOutcome o = recover_one(*f.problem, phi, c, override_s(240));
    if (o.aut_order > 3) continue;
    ++tested;
    EXPECT_EQ(o.branch, Branch::Query);
    EXPECT_EQ(o.queries_made, 240u);
    EXPECT_EQ(o.value, f.truth->get(phi));
    ASSERT_TRUE(o.majority_margin.has_value());
    EXPECT_GT(*o.majority_margin, Rational(1, 2));
  }
}

TEST(RecoverOne, SymmetricOutcomesIgnoreCorruption) {
  const Fixture f = fixture("clique", with(5));
  RecoveryConfig c;
  c.epsilon = Rational(45, 100);
  std::vector<std::vector<Value>> values;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CorruptedTable t = noisy(f, Rational(1, 4), seed);
    std::vector<Value> row;
    for (InstanceIndex phi = 0; phi < f.truth->size(); phi += 7) {
      const RecoveryOutcome o = recover_one(*f.problem, phi, t, c);
      EXPECT_EQ(o.branch, Branch::Symmetric);
      row.push_back(o.value);
    }
    EXPECT_EQ(t.queries(), 0u);
    values.push_back(row);
  }
  for (const auto& row : values) EXPECT_EQ(row, values.front());
}

TEST(Plan, QueriesAreDistinctOrbitMembers) {
  for (const char* id : {"clique", "kcol", "hampath", "dir_hampath_count", "ksat"}) {
    const ProblemPtr p = make_problem(id, with(id == std::string("ksat") ? 3 : 5, 2));
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
      const InstanceIndex phi = rng() % p->instance_count();
      const RecoveryPlan plan = plan_recovery(*p, phi, 17);
      if (plan.branch != Branch::Query) continue;
      const auto orbit = orbit_of(
          [&](const Permutation& g, InstanceIndex x) { return p->act_instance(g, x); }, phi,
          p->group_degree());
      std::set<InstanceIndex> seen(plan.queries.begin(), plan.queries.end());
      EXPECT_EQ(seen.size(), plan.queries.size()) << id;
      EXPECT_EQ(plan.queries.size(), 17u);
      for (InstanceIndex q : plan.queries) EXPECT_EQ(orbit.count(q), 1u) << id;
    }
  }
}

TEST(Plan, Deterministic) {
  const ProblemPtr p = make_problem("clique", with(6));
  for (InstanceIndex phi : {InstanceIndex{12345}, InstanceIndex{99999}}) {
    const RecoveryPlan a = plan_recovery(*p, phi, 240), b = plan_recovery(*p, phi, 240);
    EXPECT_EQ(a.queries, b.queries);
    EXPECT_EQ(a.branch, b.branch);
    EXPECT_EQ(plan_recovery(*p, phi, 240, AutStrategy::Exhaustive).queries, a.queries);
  }
}

TEST(Plan, NonCompressibleSymmetricBranchIsRefused) {
  const ProblemPtr p = make_problem("parity_kclique", with(4, 3));
  EXPECT_THROW(plan_recovery(*p, 63, 1), std::invalid_argument);
}

TEST(RecoverOne, TieSurfacesAsMajorityUndefined) {
  const Fixture f = fixture("clique", with(5));
  const InstanceIndex phi = graph_family_index(5, 2, 0b0000100101);
  const RecoveryPlan plan = plan_recovery(*f.problem, phi, 2);
  ASSERT_EQ(plan.branch, Branch::Query);
  std::vector<std::uint64_t> bits((f.truth->size() + 63) / 64, 0);
  bits[plan.queries[0] / 64] |= std::uint64_t{1} << (plan.queries[0] % 64);
  const CorruptedTable t(f.truth,
                         CorruptionMask::from_bits(CorruptionModel::ExactFraction, Rational(0, 1),
                                                   0, f.truth->size(), bits),
                         CorruptionStrategy::flip(), 1);
  EXPECT_THROW(recover_one(*f.problem, phi, t, override_s(2)), MajorityUndefined);
  const RecoverySummary sum = recover_all(*f.problem, t, *f.truth, override_s(2));
  EXPECT_GE(sum.majority_undefined, 1u);
  EXPECT_EQ(sum.correct + sum.majority_undefined + (sum.total - sum.correct - sum.majority_undefined),
            sum.total);
}

TEST(RecoverAll, CleanTablesAreFullyRecovered) {
  const std::vector<std::pair<const char*, ProblemParams>> settings = {
      {"clique", with(4)},     {"indset", with(4)},  {"vertexcover", with(4)},
      {"kcol", with(4, 3)},    {"hampath", with(4)}, {"hamcycle", with(4)},
      {"dir_hampath_parity", with(3)}, {"dir_hampath_count", with(4)},
      {"ksat", with(2, 2)},    {"kcsp", with(3, 2)}, {"maxkcsp", with(3, 2)},
      {"ov", with(4, 0, 2)}};
  for (const auto& [id, params] : settings) {
    const Fixture f = fixture(id, params);
    const CorruptedTable clean = noisy(f, Rational(0, 1), 0);
    for (std::uint64_t s : {2u, 5u}) {
      const RecoverySummary sum = recover_all(*f.problem, clean, *f.truth, override_s(s));
      EXPECT_EQ(sum.correct, sum.total) << id;
      EXPECT_EQ(sum.total, f.truth->size());
      EXPECT_EQ(sum.symmetric + sum.query_branch, sum.total);
    }
  }
}

TEST(RecoverAll, SmallEpsilonForcesSymmetricBranch) {
  const Fixture f = fixture("clique", with(4));
  RecoveryConfig c;
  c.epsilon = Rational(1, 4);  // s = 1065 >= 24
  const CorruptedTable t = noisy(f, Rational(2, 5), 8);
  const RecoverySummary sum = recover_all(*f.problem, t, *f.truth, c);
  EXPECT_EQ(sum.symmetric, sum.total);
  EXPECT_EQ(sum.correct, sum.total);
  EXPECT_EQ(sum.queries, 0u);
}

TEST(RecoverAll, ParallelismAndBatchingAgree) {
  const Fixture f = fixture("clique", with(5));
  std::vector<CorruptedTable> tables;
  std::vector<const CorruptedTable*> ptrs;
  for (std::uint64_t seed = 0; seed < 3; ++seed) tables.push_back(noisy(f, Rational(1, 5), seed));
  for (const auto& t : tables) ptrs.push_back(&t);
  const auto batched = recover_all_multi(*f.problem, ptrs, *f.truth, override_s(31), 3);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    EXPECT_EQ(batched[i], recover_all(*f.problem, tables[i], *f.truth, override_s(31), 1));
  }
}

TEST(RecoverAll, QueryCounterMatchesSummary) {
  const Fixture f = fixture("clique", with(5));
  const CorruptedTable t = noisy(f, Rational(1, 5), 4);
  const RecoverySummary sum = recover_all(*f.problem, t, *f.truth, override_s(15), 2);
  EXPECT_EQ(sum.queries, t.queries());
  EXPECT_EQ(sum.queries, 15 * sum.query_branch);
}
