#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "hca/bigint.hpp"

namespace hca {

// Gaussian integer re + i*im with arbitrary-precision parts.
struct GaussianInt {
  BigInt re;
  BigInt im;

  GaussianInt() = default;
  GaussianInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& o) {
    BigInt r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
};

inline GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }

// |z|^2, exact.
inline BigInt norm2(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

inline GaussianInt mul_i(const GaussianInt& z) { return {-z.im, z.re}; }
inline GaussianInt mul_neg_i(const GaussianInt& z) { return {z.im, -z.re}; }

// Exact Gaussian division; throws if b does not divide a in Z[i].
inline GaussianInt gauss_div(const GaussianInt& a, const GaussianInt& b) {
  const BigInt n = norm2(b);
  if (n == 0) throw std::domain_error("gauss_div: zero divisor");
  const GaussianInt p = a * conj(b);
  return {exact_div(p.re, n), exact_div(p.im, n)};
}

// "a+bi" / "a-bi" with explicit sign on the imaginary part, e.g. "1-1i", "0+0i".
std::string to_string(const GaussianInt& z);
GaussianInt parse_gaussian(const std::string& s);

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
  return os << to_string(z);
}

}  // namespace hca
