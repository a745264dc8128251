#include "oracles.hpp"

#include <symrec/noise.hpp>
#include <symrec/sicsaf.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symrec;

namespace {

ProblemParams with(unsigned n, unsigned k = 0) {
  ProblemParams p;
  p.n = n;
  p.k = k;
  return p;
}

std::shared_ptr<const TruthTable> table_of(const char* id, ProblemParams params) {
  return std::make_shared<const TruthTable>(build_table(*make_problem(id, params)));
}

}  // namespace

TEST(Seeds, SplitmixKnownValues) {
  // Reference outputs of the splitmix64 finalizer for inputs 0 and 1.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(1), 0x910a2dec89025cc1ULL);
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_EQ(trial_seed(9, 4), splitmix64(9 ^ 4));
}

TEST(Seeds, UniformBelowStaysInRange) {
  std::mt19937_64 rng(1);
  std::vector<unsigned> hist(7, 0);
  for (int t = 0; t < 70000; ++t) ++hist[uniform_below(rng, 7)];
  for (unsigned h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(TruthTable, PackedStorage) {
  TruthTable t("x", 3, 100, 5);
  for (std::uint64_t i = 0; i < 100; ++i) t.set(i, i % 32);
  for (std::uint64_t i = 0; i < 100; ++i) EXPECT_EQ(t.get(i), i % 32);
  EXPECT_THROW(t.set(0, 32), std::out_of_range);
  EXPECT_THROW((void)t.get(100), std::out_of_range);
  EXPECT_EQ(value_width(1), 1u);
  EXPECT_EQ(value_width(720), 10u);
}

TEST(BuildTable, SizesAndEntries) {
  EXPECT_EQ(table_of("clique", with(3))->size(), 24u);
  const auto t = table_of("clique", with(4));
  EXPECT_EQ(t->get(graph_family_index(4, 2, 0b000100)), 1u);
  for (InstanceIndex phi = 0; phi < t->size(); ++phi) {
    const auto a = oracle::undirected(4, phi % 64);
    EXPECT_EQ(t->get(phi), oracle::has_clique(a, static_cast<int>(phi / 64) + 1) ? 1u : 0u);
  }
}

TEST(BuildTable, ParallelismDoesNotChangeContent) {
  const ProblemPtr p = make_problem("dir_hampath_count", with(4));
  EXPECT_EQ(build_table(*p, 1), build_table(*p, 4));
  EXPECT_THROW(build_table(*make_problem("clique", with(6)), 1, 1000), BudgetExceeded);
}

TEST(Mask, ExactFractionCounts) {
  for (std::uint64_t n : {0ULL, 1ULL, 10ULL, 1024ULL, 5000ULL}) {
    for (const char* d : {"0", "0.25", "1/3", "0.49"}) {
      const Rational delta = Rational::parse(d);
      const auto m = CorruptionMask::exact_fraction(n, delta, 5);
      std::uint64_t set = 0;
      for (std::uint64_t i = 0; i < n; ++i) set += m.selected(i);
      EXPECT_EQ(set, delta.floor_times(n));
      EXPECT_EQ(m.count(), set);
    }
  }
  EXPECT_EQ(CorruptionMask::exact_fraction(1024, Rational(1, 4), 3).count(), 256u);
}

TEST(Mask, DeterministicAndSeedSensitive) {
  const auto a = CorruptionMask::exact_fraction(4096, Rational(1, 5), 42);
  EXPECT_EQ(a, CorruptionMask::exact_fraction(4096, Rational(1, 5), 42));
  EXPECT_NE(a.bits(), CorruptionMask::exact_fraction(4096, Rational(1, 5), 43).bits());
  const auto b = CorruptionMask::bernoulli(4096, Rational(1, 5), 42);
  EXPECT_EQ(b, CorruptionMask::bernoulli(4096, Rational(1, 5), 42));
}

TEST(Mask, BernoulliLazyMatchesMaterialized) {
  const auto eager = CorruptionMask::bernoulli(100000, Rational(1, 5), 7, true);
  const auto lazy = CorruptionMask::bernoulli(100000, Rational(1, 5), 7, false);
  EXPECT_FALSE(lazy.count().has_value());
  for (std::uint64_t i = 0; i < 100000; ++i) ASSERT_EQ(eager.selected(i), lazy.selected(i));
  // Binomial(1e5, 0.2): mean 20000, sd about 126.
  EXPECT_NEAR(static_cast<double>(*eager.count()), 20000.0, 700.0);
}

TEST(Mask, ExactFractionIsUniformOverPositions) {
  std::vector<unsigned> hits(20, 0);
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const auto m = CorruptionMask::exact_fraction(20, Rational(1, 4), seed);
    for (unsigned i = 0; i < 20; ++i) hits[i] += m.selected(i);
  }
  for (unsigned h : hits) EXPECT_NEAR(h, 1000, 120);
}

TEST(Corrupted, ZeroDeltaIsTruth) {
  const auto t = table_of("clique", with(4));
  const CorruptedTable c = corrupt(t, Rational(0, 1), 1, CorruptionModel::ExactFraction,
                                   CorruptionStrategy::flip(), 1);
  EXPECT_EQ(c.mask().count(), 0u);
  for (std::uint64_t i = 0; i < t->size(); ++i) EXPECT_EQ(c.query(i), t->get(i));
  EXPECT_EQ(c.queries(), t->size());
}

TEST(Corrupted, FlipNegatesExactlyTheMask) {
  const auto t = table_of("clique", with(4));
  const CorruptedTable c = corrupt(t, Rational(1, 4), 9, CorruptionModel::ExactFraction,
                                   CorruptionStrategy::flip(), 1);
  for (std::uint64_t i = 0; i < t->size(); ++i) {
    EXPECT_EQ(c.peek(i), c.mask().selected(i) ? 1 - t->get(i) : t->get(i));
  }
  EXPECT_EQ(c.queries(), 0u);
}

TEST(Corrupted, UniformWrongAlwaysChangesValue) {
  ProblemParams params;
  params.n = 3;
  params.k = 2;
  const ProblemPtr p = make_problem("maxkcsp", params);
  auto t = std::make_shared<const TruthTable>(build_table(*p));
  const CorruptedTable c = corrupt(t, Rational(2, 5), 4, CorruptionModel::ExactFraction,
                                   CorruptionStrategy::uniform_wrong(), p->value_max());
  std::set<Value> wrong;
  for (std::uint64_t i = 0; i < t->size(); ++i) {
    const Value v = c.peek(i);
    EXPECT_LE(v, p->value_max());
    if (c.mask().selected(i)) {
      EXPECT_NE(v, t->get(i));
      wrong.insert(v);
    } else {
      EXPECT_EQ(v, t->get(i));
    }
  }
  EXPECT_GT(wrong.size(), 3u);
}

TEST(Corrupted, ConstantStrategyAndValidation) {
  const auto t = table_of("clique", with(4));
  // Entries whose truth equals the constant still change value.
  const CorruptedTable c = corrupt(t, Rational(1, 4), 1, CorruptionModel::ExactFraction,
                                   CorruptionStrategy::constant_value(1), 1);
  for (std::uint64_t i = 0; i < t->size(); ++i) {
    if (c.mask().selected(i)) EXPECT_NE(c.peek(i), t->get(i));
  }
  EXPECT_THROW(corrupt(t, Rational(1, 1), 1, CorruptionModel::ExactFraction,
                       CorruptionStrategy::flip(), 1),
               std::invalid_argument);
  EXPECT_THROW(corrupt(t, Rational(1, 4), 1, CorruptionModel::ExactFraction,
                       CorruptionStrategy::flip(), 3),
               std::invalid_argument);
  EXPECT_THROW(strategy_from_name("bogus"), std::invalid_argument);
  EXPECT_EQ(strategy_name(strategy_from_name("constant:3")), "constant:3");
  EXPECT_EQ(model_from_name(model_name(CorruptionModel::IIDBernoulli)),
            CorruptionModel::IIDBernoulli);
}

TEST(Corrupted, LazyOracleBinding) {
  const ProblemPtr p = make_problem("clique", with(4));
  const auto t = table_of("clique", with(4));
  const auto mask = CorruptionMask::bernoulli(t->size(), Rational(1, 5), 3, false);
  const CorruptedTable lazy([&](InstanceIndex i) { return eval_bruteforce(*p, i); }, t->size(),
                            mask, CorruptionStrategy::flip(), 1);
  const CorruptedTable eager(t, CorruptionMask::bernoulli(t->size(), Rational(1, 5), 3),
                             CorruptionStrategy::flip(), 1);
  for (std::uint64_t i = 0; i < t->size(); ++i) EXPECT_EQ(lazy.query(i), eager.peek(i));
  EXPECT_EQ(lazy.queries(), t->size());
}

TEST(MaskStats, Fractions) {
  const auto zero = CorruptionMask::exact_fraction(1000, Rational(0, 1), 1);
  std::vector<std::uint64_t> all(1000);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(mask_stats(zero, {all, {1, 2, 3}}), (std::vector<Rational>{{1, 1}, {1, 1}}));
  const auto quarter = CorruptionMask::exact_fraction(1000, Rational(1, 4), 1);
  EXPECT_EQ(mask_stats(quarter, {all})[0], Rational(3, 4));
}
