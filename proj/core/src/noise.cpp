#include "symrec/noise.hpp"

#include "symrec/sicsaf.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace symrec {

namespace {

void check_delta(Rational delta) {
  if (delta.num >= delta.den) throw std::invalid_argument("delta must lie in [0, 1)");
}

std::uint64_t popcount_words(const std::vector<std::uint64_t>& w) {
  std::uint64_t c = 0;
  for (std::uint64_t x : w) c += static_cast<std::uint64_t>(std::popcount(x));
  return c;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(master ^ trial);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range) {
  if (range == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t max = ~std::uint64_t{0};
  const std::uint64_t limit = max - max % range;
  std::uint64_t r = 0;
  do {
    r = rng();
  } while (r >= limit);
  return r % range;
}

unsigned value_width(Value max) {
  return max == 0 ? 1 : static_cast<unsigned>(std::bit_width(max));
}

TruthTable::TruthTable(std::string problem_key, unsigned n, std::uint64_t entries, unsigned width)
    : key_(std::move(problem_key)), n_(n), entries_(entries), width_(width) {
  if (width == 0 || width > 64) throw std::invalid_argument("truth table: width in [1, 64]");
  words_.assign((entries * width + 63) / 64, 0);
}

Value TruthTable::get(std::uint64_t i) const {
  if (i >= entries_) throw std::out_of_range("truth table index out of range");
  const std::uint64_t pos = i * width_;
  const std::uint64_t w = pos / 64;
  const unsigned off = static_cast<unsigned>(pos % 64);
  std::uint64_t v = words_[w] >> off;
  if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
  return width_ == 64 ? v : v & ((std::uint64_t{1} << width_) - 1);
}

void TruthTable::set(std::uint64_t i, Value v) {
  if (i >= entries_) throw std::out_of_range("truth table index out of range");
  if (width_ < 64 && (v >> width_) != 0) throw std::out_of_range("value exceeds table width");
  const std::uint64_t pos = i * width_;
  const std::uint64_t w = pos / 64;
  const unsigned off = static_cast<unsigned>(pos % 64);
  const std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
  words_[w] = (words_[w] & ~(mask << off)) | (v << off);
  if (off + width_ > 64) {
    const unsigned spill = off + width_ - 64;
    const std::uint64_t hi = (std::uint64_t{1} << spill) - 1;
    words_[w + 1] = (words_[w + 1] & ~hi) | (v >> (64 - off));
  }
}

TruthTable build_table(const Problem& problem, unsigned parallelism, std::uint64_t budget) {
  const std::uint64_t entries = problem.instance_count();
  if (entries > budget) {
    throw BudgetExceeded(problem.name() + ": " + std::to_string(entries) +
                         " entries exceed the table budget " + std::to_string(budget));
  }
  TruthTable table(problem.key(), problem.n(), entries, value_width(problem.value_max()));
  // Chunks of 64 entries start on word boundaries for every width.
  constexpr std::uint64_t kChunk = 64 * 64;
  const std::uint64_t chunks = (entries + kChunk - 1) / kChunk;
  detail::parallel_chunks(chunks, parallelism, [&](std::uint64_t c) {
    const std::uint64_t hi = std::min(entries, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < hi; ++i) table.set(i, eval_bruteforce(problem, i));
  });
  return table;
}

std::string model_name(CorruptionModel model) {
  return model == CorruptionModel::ExactFraction ? "exact" : "bernoulli";
}

CorruptionModel model_from_name(std::string_view name) {
  if (name == "exact" || name == "exact_fraction") return CorruptionModel::ExactFraction;
  if (name == "bernoulli" || name == "iid") return CorruptionModel::IIDBernoulli;
  throw std::invalid_argument("unknown corruption model '" + std::string(name) + "'");
}

std::string strategy_name(const CorruptionStrategy& strategy) {
  switch (strategy.kind) {
    case StrategyKind::FlipBoolean:
      return "flip";
    case StrategyKind::ReplaceUniformWrong:
      return "uniform_wrong";
    case StrategyKind::Constant:
      return "constant:" + std::to_string(strategy.constant);
  }
  return "?";
}

CorruptionStrategy strategy_from_name(std::string_view name) {
  if (name == "flip") return CorruptionStrategy::flip();
  if (name == "uniform_wrong") return CorruptionStrategy::uniform_wrong();
  if (name.rfind("constant:", 0) == 0) {
    const std::string digits(name.substr(9));
    std::size_t used = 0;
    Value d = 0;
    try {
      d = std::stoull(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (!digits.empty() && used == digits.size()) return CorruptionStrategy::constant_value(d);
  }
  throw std::invalid_argument("unknown corruption strategy '" + std::string(name) + "'");
}

CorruptionMask CorruptionMask::exact_fraction(std::uint64_t entries, Rational delta,
                                              std::uint64_t seed) {
  check_delta(delta);
  if (entries > (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("exact-fraction masks need at most 2^32 entries");
  }
  CorruptionMask m;
  m.model_ = CorruptionModel::ExactFraction;
  m.delta_ = delta;
  m.seed_ = seed;
  m.entries_ = entries;
  m.bits_.assign((entries + 63) / 64, 0);
  const std::uint64_t count = delta.floor_times(entries);
  std::vector<std::uint32_t> perm(entries);
  for (std::uint64_t i = 0; i < entries; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + uniform_below(rng, entries - i);
    std::swap(perm[i], perm[j]);
    m.bits_[perm[i] / 64] |= std::uint64_t{1} << (perm[i] % 64);
  }
  m.count_ = count;
  return m;
}

CorruptionMask CorruptionMask::bernoulli(std::uint64_t entries, Rational delta,
                                         std::uint64_t seed, bool materialize) {
  check_delta(delta);
  CorruptionMask m;
  m.model_ = CorruptionModel::IIDBernoulli;
  m.delta_ = delta;
  m.seed_ = seed;
  m.entries_ = entries;
  m.threshold_ = static_cast<std::uint64_t>((static_cast<detail::uint128>(delta.num) << 64) /
                                            delta.den);
  if (materialize) {
    std::vector<std::uint64_t> bits((entries + 63) / 64, 0);
    for (std::uint64_t i = 0; i < entries; ++i) {
      if (m.selected(i)) bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    m.bits_ = std::move(bits);
    m.count_ = popcount_words(m.bits_);
  }
  return m;
}

CorruptionMask CorruptionMask::from_bits(CorruptionModel model, Rational delta,
                                         std::uint64_t seed, std::uint64_t entries,
                                         std::vector<std::uint64_t> bits) {
  check_delta(delta);
  if (bits.size() != (entries + 63) / 64) throw std::invalid_argument("mask bit length mismatch");
  if (entries % 64 != 0 && !bits.empty() && (bits.back() >> (entries % 64)) != 0) {
    throw std::invalid_argument("mask has bits beyond the entry count");
  }
  CorruptionMask m;
  m.model_ = model;
  m.delta_ = delta;
  m.seed_ = seed;
  m.entries_ = entries;
  if (model == CorruptionModel::IIDBernoulli) {
    m.threshold_ = static_cast<std::uint64_t>(
        (static_cast<detail::uint128>(delta.num) << 64) / delta.den);
  }
  m.bits_ = std::move(bits);
  m.count_ = popcount_words(m.bits_);
  return m;
}

bool CorruptionMask::selected(std::uint64_t i) const {
  if (i >= entries_) throw std::out_of_range("mask index out of range");
  if (!bits_.empty()) return (bits_[i / 64] >> (i % 64)) & 1u;
  if (model_ == CorruptionModel::ExactFraction) return false;
  return splitmix64(seed_ ^ splitmix64(i)) < threshold_;
}

CorruptedTable::CorruptedTable(std::shared_ptr<const TruthTable> base, CorruptionMask mask,
                               CorruptionStrategy strategy, Value value_max)
    : base_(std::move(base)),
      entries_(base_ ? base_->size() : 0),
      mask_(std::move(mask)),
      strategy_(strategy),
      value_max_(value_max) {
  if (!base_) throw std::invalid_argument("corrupted table needs a base table");
  validate();
}

CorruptedTable::CorruptedTable(TruthOracle oracle, std::uint64_t entries, CorruptionMask mask,
                               CorruptionStrategy strategy, Value value_max)
    : oracle_(std::move(oracle)),
      entries_(entries),
      mask_(std::move(mask)),
      strategy_(strategy),
      value_max_(value_max) {
  if (!oracle_) throw std::invalid_argument("corrupted table needs a truth oracle");
  validate();
}

CorruptedTable::CorruptedTable(CorruptedTable&& other) noexcept
    : base_(std::move(other.base_)),
      oracle_(std::move(other.oracle_)),
      entries_(other.entries_),
      mask_(std::move(other.mask_)),
      strategy_(other.strategy_),
      value_max_(other.value_max_),
      counter_(other.counter_.load()) {}

void CorruptedTable::validate() const {
  if (mask_.entry_count() != entries_) {
    throw std::invalid_argument("mask covers " + std::to_string(mask_.entry_count()) +
                                " entries but the table has " + std::to_string(entries_));
  }
  if (value_max_ == 0) throw std::invalid_argument("corruption needs at least two values");
  if (strategy_.kind == StrategyKind::FlipBoolean && value_max_ != 1) {
    throw std::invalid_argument("flip strategy needs a Boolean table");
  }
  if (strategy_.kind == StrategyKind::Constant && strategy_.constant > value_max_) {
    throw std::invalid_argument("constant corruption value outside the value range");
  }
}

Value CorruptedTable::true_value(InstanceIndex i) const {
  if (i >= entries_) throw std::out_of_range("query index out of range");
  return base_ ? base_->get(i) : oracle_(i);
}

Value CorruptedTable::corrupted_value(InstanceIndex i, Value truth) const {
  switch (strategy_.kind) {
    case StrategyKind::FlipBoolean:
      return truth ^ 1u;
    case StrategyKind::Constant:
      if (strategy_.constant != truth) return strategy_.constant;
      [[fallthrough]];
    case StrategyKind::ReplaceUniformWrong: {
      const std::uint64_t r = splitmix64(mask_.seed() ^ splitmix64(~i));
      const auto u = static_cast<Value>((static_cast<detail::uint128>(r) * value_max_) >> 64);
      return u < truth ? u : u + 1;
    }
  }
  return truth;
}

Value CorruptedTable::peek(InstanceIndex i) const {
  const Value truth = true_value(i);
  return mask_.selected(i) ? corrupted_value(i, truth) : truth;
}

Value CorruptedTable::query(InstanceIndex i) const {
  counter_.fetch_add(1, std::memory_order_relaxed);
  return peek(i);
}

CorruptedTable corrupt(std::shared_ptr<const TruthTable> table, Rational delta,
                       std::uint64_t seed, CorruptionModel model, CorruptionStrategy strategy,
                       Value value_max) {
  if (!table) throw std::invalid_argument("corrupt: null table");
  const std::uint64_t n = table->size();
  CorruptionMask mask = model == CorruptionModel::ExactFraction
                            ? CorruptionMask::exact_fraction(n, delta, seed)
                            : CorruptionMask::bernoulli(n, delta, seed);
  return CorruptedTable(std::move(table), std::move(mask), strategy, value_max);
}

std::vector<Rational> mask_stats(const CorruptionMask& mask,
                                 const std::vector<std::vector<std::uint64_t>>& subsets) {
  std::vector<Rational> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) {
    if (s.empty()) {
      out.emplace_back(1, 1);
      continue;
    }
    std::uint64_t clean = 0;
    for (std::uint64_t i : s) clean += mask.selected(i) ? 0 : 1;
    out.emplace_back(clean, s.size());
  }
  return out;
}

}  // namespace symrec
