#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace ntc {

// Exact integer scalar used wherever values can leave the int64 range
// (bound formulas, public normal coordinates, homology matrices).
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt acc = 1, b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

inline BigInt lcm_range(std::int64_t lo, std::int64_t hi) {
  BigInt acc = 1;
  for (std::int64_t k = lo; k <= hi; ++k) acc = boost::multiprecision::lcm(acc, BigInt(k));
  return acc;
}

inline BigInt factorial_big(std::int64_t n) {
  BigInt acc = 1;
  for (std::int64_t k = 2; k <= n; ++k) acc *= k;
  return acc;
}

} // namespace ntc
