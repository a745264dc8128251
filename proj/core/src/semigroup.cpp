#include "symrec/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symrec {

Value Semigroup::combine(Value a, Value b) const {
  switch (id_) {
    case SemigroupId::BoolOr:
      return (a | b) & 1u;
    case SemigroupId::IntMax:
      return std::max(a, b);
    case SemigroupId::BoolXor:
      return (a ^ b) & 1u;
    case SemigroupId::IntAdd:
      if (a > ~Value{0} - b) throw std::overflow_error("IntAdd overflow");
      return a + b;
  }
  return a;
}

std::string_view Semigroup::name() const {
  switch (id_) {
    case SemigroupId::BoolOr:
      return "bool_or";
    case SemigroupId::IntMax:
      return "int_max";
    case SemigroupId::BoolXor:
      return "bool_xor";
    case SemigroupId::IntAdd:
      return "int_add";
  }
  return "?";
}

Semigroup semigroup_from_name(std::string_view name) {
  for (SemigroupId id :
       {SemigroupId::BoolOr, SemigroupId::IntMax, SemigroupId::BoolXor, SemigroupId::IntAdd}) {
    if (Semigroup(id).name() == name) return Semigroup(id);
  }
  throw std::invalid_argument("unknown semigroup '" + std::string(name) + "'");
}

Value semigroup_power(Value d, const BigInt& t, Semigroup s) {
  if (t < 1) throw std::invalid_argument("semigroup_power: exponent must be at least 1");
  if (s.idempotent()) return d;
  BigInt e = t;
  Value base = d;
  bool have = false;
  Value acc = 0;
  while (true) {
    if (bit_test(e, 0)) {
      acc = have ? s.combine(acc, base) : base;
      have = true;
    }
    e >>= 1;
    if (e == 0) break;
    base = s.combine(base, base);
  }
  return acc;
}

}  // namespace symrec
