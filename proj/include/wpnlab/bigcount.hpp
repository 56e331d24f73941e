#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wpnlab {

/// Exact nonnegative counts (Bell numbers, family sizes, census totals).
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& x) { return x.str(); }

inline BigCount pow2(std::uint64_t e) {
  BigCount r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline BigCount factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Row n of Pascal's triangle.
inline std::vector<BigCount> binomial_row(unsigned n) {
  std::vector<BigCount> row(n + 1);
  row[0] = 1;
  for (unsigned k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

inline BigCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t bit_length(const BigCount& x) {
  return x == 0 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

/// num/den rendered with `digits` significant digits, rounding half up.
inline std::string decimal_fraction(const BigCount& num, const BigCount& den, int digits = 15) {
  if (den == 0) return "nan";
  if (num == 0) return "0";
  // Scale so the integer quotient carries exactly `digits` significant digits.
  int exp10 = 0;
  BigCount scaled_num = num;
  BigCount scaled_den = den;
  BigCount lo = 1;
  for (int i = 1; i < digits; ++i) lo *= 10;
  BigCount hi = lo * 10;
  while (scaled_num / scaled_den < lo) { scaled_num *= 10; ++exp10; }
  while (scaled_num / scaled_den >= hi) { scaled_den *= 10; --exp10; }
  BigCount q = scaled_num / scaled_den;
  BigCount rem = scaled_num % scaled_den;
  if (rem * 2 >= scaled_den) ++q;
  if (q >= hi) { q /= 10; --exp10; }
  std::string s = q.str();
  // value = q * 10^-exp10
  int point = static_cast<int>(s.size()) - exp10;
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  } else if (point >= static_cast<int>(s.size())) {
    out = s + std::string(static_cast<std::size_t>(point - static_cast<int>(s.size())), '0');
  } else {
    out = s.substr(0, static_cast<std::size_t>(point)) + "." + s.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

}  // namespace wpnlab
