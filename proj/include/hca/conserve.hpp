#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hca/history.hpp"

namespace hca {

// Exact half-integer, stored as twice its value.
struct HalfInt {
  BigInt twice;
  double value() const { return twice.convert_to<double>() / 2.0; }
  friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice == b.twice; }
  friend bool operator!=(const HalfInt& a, const HalfInt& b) { return !(a == b); }
};

// Two-point charge q_G(n) = psi_n^* G psi_{n-1} + psi_{n-1}^* G psi_n, n in [1, N].
GaussianInt q_of_g(const CAHistory& hist, const GaussMatrix& g, std::size_t n);

struct ConservedSeries {
  GaussMatrix g;
  std::vector<GaussianInt> values;  // values[k] = q_G(k+1)
  bool is_real = false;             // every value has zero imaginary part
  bool is_constant = false;
};

ConservedSeries conserved_series(const CAHistory& hist, const GaussMatrix& g);

// Serial reference for the parallel series evaluation.
std::vector<GaussianInt> conserved_series_values_serial(const CAHistory& hist,
                                                        const GaussMatrix& g);

// Checks the conservation theorem on a solution history: requires [G,H] = 0
// (reported as a precondition failure otherwise, with the series still
// evaluated for diagnosis) and then verifies exact constancy plus the
// vanishing of psi_n^* G psidot_n + psidot_n^* G psi_n at interior slices.
struct TheoremReport {
  bool commutes = false;
  ConservedSeries series;
  std::optional<std::size_t> first_violation_n;  // smallest n with q(n) != q(1)
  bool balance_holds = false;                    // interior two-sided balance
  bool conserved() const { return commutes && !first_violation_n && balance_holds; }
};

TheoremReport verify_conservation(const CAHistory& hist, const GaussMatrix& g);

// Half-integer symmetrized charge (1/2) Re psi_n^* (psi_{n+1} + psi_{n-1}),
// n in [1, N-1]; equal to (q_1(n) + q_1(n+1))/4.
HalfInt q_symmetrized(const CAHistory& hist, std::size_t n);

}  // namespace hca
