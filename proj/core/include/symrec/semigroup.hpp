#pragma once

#include "symrec/bigint.hpp"

#include <cstdint>
#include <string_view>

namespace symrec {

using Value = std::uint64_t;

enum class SemigroupId { BoolOr, IntMax, BoolXor, IntAdd };

class Semigroup {
 public:
  constexpr Semigroup() = default;
  constexpr explicit Semigroup(SemigroupId id) : id_(id) {}

  constexpr SemigroupId id() const { return id_; }
  constexpr bool idempotent() const {
    return id_ == SemigroupId::BoolOr || id_ == SemigroupId::IntMax;
  }
  constexpr bool boolean() const {
    return id_ == SemigroupId::BoolOr || id_ == SemigroupId::BoolXor;
  }

  // IntAdd throws std::overflow_error on wrap-around.
  Value combine(Value a, Value b) const;
  bool valid(Value v) const { return !boolean() || v <= 1; }
  std::string_view name() const;

  friend constexpr bool operator==(Semigroup a, Semigroup b) { return a.id_ == b.id_; }

 private:
  SemigroupId id_ = SemigroupId::BoolOr;
};

Semigroup semigroup_from_name(std::string_view name);

// t-fold combine of d by repeated squaring. Throws std::invalid_argument for t < 1.
Value semigroup_power(Value d, const BigInt& t, Semigroup s);

}  // namespace symrec
