#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "hca/gauss_linalg.hpp"

namespace hca {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Dense complex matrix, row-major; the floating-point side of the toolkit.
struct CMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Complex> a;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Complex& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

CVec apply(const CMat& m, const CVec& v);
CMat mul(const CMat& x, const CMat& y);
CMat adjoint(const CMat& m);

CVec to_complex(const GaussVector& v);
CMat to_complex(const GaussMatrix& m);

inline CVec add(const CVec& x, const CVec& y) {
  CVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}
inline CVec sub(const CVec& x, const CVec& y) {
  CVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}
inline CVec scaled(Complex c, const CVec& v) {
  CVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}
inline Complex dot_conj(const CVec& bra, const CVec& ket) {
  Complex s = 0;
  for (std::size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * ket[i];
  return s;
}
inline double norm(const CVec& v) {
  double s = 0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}
inline double max_abs(const CVec& v) {
  double m = 0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}
inline double max_abs(const CMat& m) {
  double r = 0;
  for (const Complex& z : m.a) r = std::max(r, std::abs(z));
  return r;
}

}  // namespace hca
