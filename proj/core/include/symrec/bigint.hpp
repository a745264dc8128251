#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace symrec {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned m) {
  BigInt r = 1;
  for (unsigned i = 2; i <= m; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace symrec
