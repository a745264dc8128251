#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symrec {

namespace detail {
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

// Non-negative rational num/den in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    const std::uint64_t g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  // Accepts "p/q", integers, and finite decimals such as "0.25".
  static Rational parse(std::string_view text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  long double to_long_double() const {
    return static_cast<long double>(num) / static_cast<long double>(den);
  }
  // floor(this * n), exact.
  std::uint64_t floor_times(std::uint64_t n) const {
    return static_cast<std::uint64_t>(static_cast<detail::uint128>(num) * n / den);
  }
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<detail::uint128>(a.num) * b.den <
           static_cast<detail::uint128>(b.num) * a.den;
  }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  auto digits = [&](std::string_view s) {
    if (s.empty() || s.size() > 18) throw fail();
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw fail();
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(digits(text.substr(0, slash)), digits(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::uint64_t w = whole.empty() ? 0 : digits(whole);
    const std::uint64_t f = frac.empty() ? 0 : digits(frac);
    if (whole.empty() && frac.empty()) throw fail();
    return Rational(w * scale + f, scale);
  }
  return Rational(digits(text), 1);
}

}  // namespace symrec
