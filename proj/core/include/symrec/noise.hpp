#pragma once

#include "symrec/problem.hpp"
#include "symrec/rational.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace symrec {

inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 24;

std::uint64_t splitmix64(std::uint64_t x);
// Seed of trial t derived from the master seed; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

// Uniform integer in [0, range) by rejection; identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range);

// Number of bits needed to store values in [0, max].
unsigned value_width(Value max);

class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(std::string problem_key, unsigned n, std::uint64_t entries, unsigned width);

  const std::string& problem_key() const { return key_; }
  unsigned n() const { return n_; }
  std::uint64_t size() const { return entries_; }
  unsigned width() const { return width_; }

  Value get(std::uint64_t i) const;
  void set(std::uint64_t i, Value v);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::string key_;
  unsigned n_ = 0;
  std::uint64_t entries_ = 0;
  unsigned width_ = 1;
  std::vector<std::uint64_t> words_;
};

// Exact table of f over the full instance space. Content does not depend on
// parallelism. Throws BudgetExceeded above `budget` entries.
TruthTable build_table(const Problem& problem, unsigned parallelism = 1,
                       std::uint64_t budget = kDefaultTableBudget);

enum class CorruptionModel : std::uint8_t { ExactFraction = 0, IIDBernoulli = 1 };

enum class StrategyKind { FlipBoolean, ReplaceUniformWrong, Constant };

struct CorruptionStrategy {
  StrategyKind kind = StrategyKind::FlipBoolean;
  Value constant = 0;

  static CorruptionStrategy flip() { return {StrategyKind::FlipBoolean, 0}; }
  static CorruptionStrategy uniform_wrong() { return {StrategyKind::ReplaceUniformWrong, 0}; }
  static CorruptionStrategy constant_value(Value d) { return {StrategyKind::Constant, d}; }
};

std::string model_name(CorruptionModel model);
CorruptionModel model_from_name(std::string_view name);
std::string strategy_name(const CorruptionStrategy& strategy);
// "flip", "uniform_wrong", "constant:<d>".
CorruptionStrategy strategy_from_name(std::string_view name);

class CorruptionMask {
 public:
  CorruptionMask() = default;

  // Exactly floor(delta * entries) indices by seeded partial Fisher-Yates.
  static CorruptionMask exact_fraction(std::uint64_t entries, Rational delta, std::uint64_t seed);
  // Each index independently with probability delta via a keyed hash. The
  // bit vector is materialized only when `materialize` is set.
  static CorruptionMask bernoulli(std::uint64_t entries, Rational delta, std::uint64_t seed,
                                  bool materialize = true);
  // Rebuilds a mask from stored bits.
  static CorruptionMask from_bits(CorruptionModel model, Rational delta, std::uint64_t seed,
                                  std::uint64_t entries, std::vector<std::uint64_t> bits);

  CorruptionModel model() const { return model_; }
  Rational delta() const { return delta_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t entry_count() const { return entries_; }
  bool materialized() const { return !bits_.empty() || entries_ == 0; }
  // Number of selected entries; only known for materialized masks.
  std::optional<std::uint64_t> count() const { return count_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }

  bool selected(std::uint64_t i) const;

  friend bool operator==(const CorruptionMask&, const CorruptionMask&) = default;

 private:
  CorruptionModel model_ = CorruptionModel::ExactFraction;
  Rational delta_;
  std::uint64_t seed_ = 0;
  std::uint64_t entries_ = 0;
  std::uint64_t threshold_ = 0;
  std::vector<std::uint64_t> bits_;
  std::optional<std::uint64_t> count_;
};

using TruthOracle = std::function<Value(InstanceIndex)>;

class CorruptedTable {
 public:
  CorruptedTable(std::shared_ptr<const TruthTable> base, CorruptionMask mask,
                 CorruptionStrategy strategy, Value value_max);
  // Lazy binding: true values come from `oracle` on demand.
  CorruptedTable(TruthOracle oracle, std::uint64_t entries, CorruptionMask mask,
                 CorruptionStrategy strategy, Value value_max);
  CorruptedTable(CorruptedTable&& other) noexcept;
  CorruptedTable(const CorruptedTable&) = delete;
  CorruptedTable& operator=(const CorruptedTable&) = delete;

  std::uint64_t size() const { return entries_; }
  const CorruptionMask& mask() const { return mask_; }
  const CorruptionStrategy& strategy() const { return strategy_; }

  // Counted oracle access.
  Value query(InstanceIndex i) const;
  // Same value as query() without touching the counter.
  Value peek(InstanceIndex i) const;
  Value true_value(InstanceIndex i) const;

  std::uint64_t queries() const { return counter_.load(std::memory_order_relaxed); }
  void reset_queries() { counter_.store(0, std::memory_order_relaxed); }

 private:
  Value corrupted_value(InstanceIndex i, Value truth) const;
  void validate() const;

  std::shared_ptr<const TruthTable> base_;
  TruthOracle oracle_;
  std::uint64_t entries_ = 0;
  CorruptionMask mask_;
  CorruptionStrategy strategy_;
  Value value_max_ = 1;
  mutable std::atomic<std::uint64_t> counter_{0};
};

// Corrupts a materialized table. delta must lie in [0, 1).
CorruptedTable corrupt(std::shared_ptr<const TruthTable> table, Rational delta,
                       std::uint64_t seed, CorruptionModel model, CorruptionStrategy strategy,
                       Value value_max);

// Uncorrupted fraction of each index set.
std::vector<Rational> mask_stats(const CorruptionMask& mask,
                                 const std::vector<std::vector<std::uint64_t>>& subsets);

}  // namespace symrec
