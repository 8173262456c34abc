#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hca/cmat.hpp"
#include "hca/history.hpp"

namespace hca {

// Eigendecomposition of the (self-adjoint) dimensionless matrix l*eps.
// Admissible means every |l*eps| <= 2 (band edges included).
struct SpectralData {
  std::vector<double> eigenvalues;  // ascending
  CMat eigenvectors;                // column k belongs to eigenvalues[k]
  bool admissible = false;
  double max_abs_eigenvalue = 0.0;
  double reconstruction_residual = 0.0;  // max |V D V^+ - H|
};

// Cyclic Jacobi on the 2d x 2d real-symmetric embedding [[A,-B],[B,A]].
SpectralData spectrum(const HamiltonianSpec& h);

// Real-symmetric cyclic Jacobi; a is row-major dim x dim and is destroyed.
// Eigenvalues come back ascending, eigenvectors as columns of v.
void jacobi_symmetric(std::vector<double>& a, std::size_t dim,
                      std::vector<double>& eigvals, std::vector<double>& v);

// Closed-form slice at clock n from the two seeds, via the spectral phases
// 2 sin(phi) = l*eps per mode. Throws PreconditionError when some |l*eps| = 2
// (the prefactor 1/(2 cos phi) is singular). Inadmissible modes get complex
// phases and grow; that is legitimate and flagged in SpectralData.
CVec closed_form_state(const SpectralData& sd, const GaussVector& psi0,
                       const GaussVector& psi1, long long n);
CVec closed_form_state(const HamiltonianSpec& h, const GaussVector& psi0,
                       const GaussVector& psi1, long long n);

// Transfer matrices T(0..k_max): T(0)=1, T(1)=0, T(k+1) = T(k-1) - i H T(k),
// so that psi_n = T(n+1) psi_1 + T(n) psi_0.
std::vector<GaussMatrix> transfer_matrices(const HamiltonianSpec& h, std::size_t k_max);

// Exact two-point composition: psi_n = T(n-m+1) psi_{m+1} + T(n-m) psi_m.
struct CompositionReport {
  bool holds = false;
  std::optional<std::size_t> first_failure_n;
};
CompositionReport composition_check(const CAHistory& hist, std::size_t m);

// Per-step growth rate of an inadmissible spectrum: acosh(max|l*eps| / 2).
double growth_rate(const SpectralData& sd);

// Smallest p with (psi_p, psi_{p+1}) = (psi_0, psi_1) (period) or
// = (-psi_0, -psi_1) (antiperiod), scanned up to max_steps. Exact.
struct CycleReport {
  std::optional<std::size_t> period;
  std::optional<std::size_t> antiperiod;
  bool ontological = false;
  std::optional<std::size_t> first_superposition_index;
};

CycleReport detect_cycle(const GaussVector& psi0, const GaussVector& psi1,
                         const HamiltonianSpec& h, std::size_t max_steps);

// True when v is an exact Gaussian-rational multiple of b (cross-product test,
// no floats). The zero vector counts as a multiple of anything.
bool is_gauss_multiple(const GaussVector& v, const GaussVector& b);

// Classifies every slice against the basis; fills the ontological fields of a
// CycleReport (period fields are left empty).
CycleReport ontology_scan(const CAHistory& hist, const std::vector<GaussVector>& basis);

}  // namespace hca
