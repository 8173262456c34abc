#pragma once

#include <cstddef>
#include <vector>

#include "hca/gaussian.hpp"

namespace hca {

using GaussVector = std::vector<GaussianInt>;
using IntVector = std::vector<BigInt>;

GaussVector add(const GaussVector& a, const GaussVector& b);
GaussVector sub(const GaussVector& a, const GaussVector& b);
GaussVector scaled(const GaussianInt& c, const GaussVector& v);
GaussVector conj(const GaussVector& v);
bool is_zero(const GaussVector& v);

// <bra|ket> = sum_a conj(bra_a) * ket_a
GaussianInt dot_conj(const GaussVector& bra, const GaussVector& ket);

// Dense square matrix over the Gaussian integers, row-major.
class GaussMatrix {
 public:
  GaussMatrix() = default;
  explicit GaussMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static GaussMatrix identity(std::size_t dim);
  static GaussMatrix from_rows(const std::vector<GaussVector>& rows);

  std::size_t dim() const { return dim_; }
  GaussianInt& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const GaussianInt& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  const std::vector<GaussianInt>& flat() const { return a_; }
  std::vector<GaussianInt>& flat() { return a_; }

  friend bool operator==(const GaussMatrix& x, const GaussMatrix& y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_;
  }
  friend bool operator!=(const GaussMatrix& x, const GaussMatrix& y) { return !(x == y); }

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianInt> a_;
};

GaussVector mat_apply(const GaussMatrix& m, const GaussVector& v);
GaussMatrix mat_mul(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix mat_add(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix mat_sub(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix scaled(const GaussianInt& c, const GaussMatrix& m);
GaussMatrix adjoint(const GaussMatrix& m);
bool is_zero(const GaussMatrix& m);
bool is_self_adjoint(const GaussMatrix& m);
bool commutes(const GaussMatrix& g, const GaussMatrix& h);

// Kronecker product; row index r1*dim(b)+r2.
GaussMatrix kron(const GaussMatrix& a, const GaussMatrix& b);

// Integer square matrix, row-major; carries the split parts of a Hamiltonian.
struct IntMatrix {
  std::size_t dim = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t d) : dim(d), a(d * d) {}
  BigInt& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

IntVector mat_apply(const IntMatrix& m, const IntVector& v);

// Self-adjoint H decomposed as H = h_S + i*h_A with h_S symmetric and
// h_A antisymmetric, both integer-valued.
struct HamiltonianSpec {
  GaussMatrix H;
  IntMatrix sym;
  IntMatrix antisym;

  std::size_t dim() const { return H.dim(); }
};

// Validates self-adjointness, then splits. Throws std::invalid_argument otherwise.
HamiltonianSpec split_hamiltonian(const GaussMatrix& h);

}  // namespace hca
