#pragma once

#include <cstdint>
#include <vector>

#include "hca/history.hpp"

namespace hca {

// Integer polynomial g(f) = sum_k coeff[k] f^k.
struct IntPoly {
  std::vector<BigInt> coeff;
  BigInt eval(const BigInt& f) const;
};

// Symmetric integer difference quotient [g(f+d) - g(f-d)] / (2d); exact by
// construction for integer polynomials, and 0 by convention when d = 0.
BigInt integer_variation(const IntPoly& g, const BigInt& f, const BigInt& d);

// Windowed action over steps n_lo..n_hi (each step n uses slices n-1, n, n+1).
// Summand: Im(psi_n^* psidot_n) + psi_n^* H psi_n, all exact. The imaginary
// part of `total` is zero whenever H is self-adjoint.
struct ActionValue {
  GaussianInt total;
  std::vector<GaussianInt> per_step;  // per_step[k] is the summand at n_lo + k
  std::size_t n_lo = 0;
};

ActionValue action_eval(const CAHistory& hist, std::size_t n_lo, std::size_t n_hi);

// Exact first-order coefficients of the action under an independent variation
// of the conjugate field (wrt_conj) or the field itself (wrt_plain) at one
// interior site. Both vanish exactly on solutions.
struct VariationCoefficient {
  GaussianInt wrt_conj;
  GaussianInt wrt_plain;
  bool vanishes() const { return wrt_conj.is_zero() && wrt_plain.is_zero(); }
};

VariationCoefficient variation_coefficient(const CAHistory& hist, std::size_t n,
                                           std::size_t comp);

// Symmetric-difference variation of the full action when one field entry is
// shifted by +-delta; returns the exact linear coefficient (0 when delta = 0).
GaussianInt action_variation(const CAHistory& hist, std::size_t n, std::size_t comp,
                             const GaussianInt& delta, bool vary_conjugate);

struct StationarityReport {
  struct Violation {
    std::size_t n = 0;
    std::size_t comp = 0;
    GaussianInt wrt_conj;
    GaussianInt wrt_plain;
  };
  std::size_t trials = 0;
  std::vector<Violation> violations;
  bool stationary() const { return violations.empty(); }
};

// Draws `trials` random interior sites and random nonzero Gaussian shifts;
// cross-checks the closed coefficient against the brute symmetric difference
// of the action and records any site where the coefficient is nonzero.
StationarityReport stationarity_check(const CAHistory& hist, std::size_t trials,
                                      std::uint64_t seed);

// Deterministic full scan over every interior site and component.
StationarityReport stationarity_scan(const CAHistory& hist);

}  // namespace hca
