#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace hca {

using BigInt = boost::multiprecision::cpp_int;

// Quotient of an exact division; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("exact_div: zero divisor");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("exact_div: not divisible");
  return q;
}

// Natural log of a positive integer, valid far beyond double range.
inline double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: nonpositive argument");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 512) return std::log(x.convert_to<double>());
  const BigInt top = x >> (bits - 52);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 52) * std::log(2.0);
}

}  // namespace hca
