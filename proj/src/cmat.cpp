#include "hca/cmat.hpp"

#include <stdexcept>

namespace hca {

CVec apply(const CMat& m, const CVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  CVec r(m.rows, Complex(0, 0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    Complex s = 0;
    for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

CMat mul(const CMat& x, const CMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
  CMat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Complex xik = x.at(i, k);
      if (xik == Complex(0, 0)) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

CMat adjoint(const CMat& m) {
  CMat r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = std::conj(m.at(i, j));
  return r;
}

CVec to_complex(const GaussVector& v) {
  CVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = Complex(v[i].re.convert_to<double>(), v[i].im.convert_to<double>());
  return r;
}

CMat to_complex(const GaussMatrix& m) {
  CMat r(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const GaussianInt& z = m.at(i, j);
      r.at(i, j) = Complex(z.re.convert_to<double>(), z.im.convert_to<double>());
    }
  return r;
}

}  // namespace hca
