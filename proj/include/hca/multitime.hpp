#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hca/cmat.hpp"
#include "hca/conserve.hpp"
#include "hca/history.hpp"

namespace hca {

inline constexpr std::size_t kMaxTensorEntries = 10u * 1000u * 1000u;

// Many-clock tensor Psi(n_1..n_m)^{a_1..a_m}, flat row-major with the clock
// indices leading, so the component block at a fixed clock tuple is
// contiguous. Each subsystem k carries its own Hamiltonian on dims[k]; an
// optional interaction acts on the product component space.
struct MultiHistory {
  std::size_t parts = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> clocks;  // slices per axis
  std::vector<HamiltonianSpec> hams;
  std::optional<GaussMatrix> interaction;
  std::vector<GaussianInt> values;
  std::vector<CAHistory> factors;  // populated only by build_product
  double scale = 1.0;

  std::size_t comp_dim() const;   // product of dims
  std::size_t site_count() const; // product of clocks

  std::size_t clock_flat(const std::vector<std::size_t>& n) const;
  // Contiguous component block at a clock tuple, as a vector copy.
  GaussVector block(const std::vector<std::size_t>& n) const;
  void set_block(const std::vector<std::size_t>& n, const GaussVector& v);

  static MultiHistory zeros(std::vector<std::size_t> dims,
                            std::vector<std::size_t> clocks,
                            std::vector<HamiltonianSpec> hams,
                            std::optional<GaussMatrix> interaction = std::nullopt,
                            double scale = 1.0);
};

// Tensor product of single-subsystem solution histories (interaction-free).
MultiHistory build_product(const std::vector<CAHistory>& factors);

// a*X + b*Y for tensors with identical shape, Hamiltonians and interaction.
MultiHistory linear_combination(const GaussianInt& a, const MultiHistory& x,
                                const GaussianInt& b, const MultiHistory& y);

// Per-site equation-of-motion residual over the component block:
// sum_k [Psi(n+e_k) - Psi(n-e_k)] + i (sum_k H_(k) + interaction) Psi(n).
GaussVector multi_eom_residual(const MultiHistory& m, const std::vector<std::size_t>& n);

// Residual blocks for every interior clock tuple, row-major over the interior
// lattice (OpenMP), with a serial reference.
std::vector<GaussianInt> eom_residual_map(const MultiHistory& m);
std::vector<GaussianInt> eom_residual_map_serial(const MultiHistory& m);

// Windowed action: per-axis step windows [lo_k, hi_k] within the interior.
GaussianInt multi_action_eval(const MultiHistory& m,
                              const std::vector<std::pair<std::size_t, std::size_t>>& window);

// Single-site action contribution (localization diagnostics).
GaussianInt multi_action_site(const MultiHistory& m, const std::vector<std::size_t>& n);

// Corrected product rule for integer sequences: the symmetrized
// (1/2)[Adot (B_+ + B_-) + (A_+ + A_-) Bdot] against the exact difference and
// the naive Adot B + A Bdot.
struct LeibnizReport {
  BigInt exact;
  BigInt corrected;
  BigInt naive;
  bool corrected_matches = false;
  bool naive_matches = false;
};

LeibnizReport leibniz_check(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                            std::size_t n);

// Multi-clock two-point charge with one observable per subsystem, evaluated
// at clock tuple n (each n_k in [1, clocks_k - 1]):
// sum over corner choices s in {0,1}^m of Psi*(n-s) (kron G) Psi(n-(1-s)).
GaussianInt q_multi(const MultiHistory& m, const std::vector<GaussMatrix>& gs,
                    const std::vector<std::size_t>& n);

// Factorization / connected-part survey over all valid clock tuples.
struct CorrelationReport {
  bool product_applicable = false;  // factors recorded and interaction-free
  bool factorizes = true;           // q_multi == product of per-factor charges
  std::optional<std::vector<std::size_t>> first_factorization_failure;
  bool connected_all_zero = true;   // m = 2 cross-multiplied connected part
  std::optional<std::vector<std::size_t>> first_connected_nonzero;
};

CorrelationReport correlation_check(const MultiHistory& m, const std::vector<GaussMatrix>& gs);

// Complex-valued counterpart used by the continuum bridge.
struct MultiSignal {
  std::size_t parts = 0;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> clocks;
  std::vector<CMat> hams;
  std::optional<CMat> interaction;
  std::vector<Complex> values;
  double scale = 1.0;

  std::size_t comp_dim() const;
  explicit MultiSignal(const MultiHistory& m);
  // Product of per-axis complex slice lists (e.g. stationary factors).
  MultiSignal(const std::vector<std::vector<CVec>>& factor_slices,
              std::vector<CMat> hams, double scale,
              std::optional<CMat> interaction = std::nullopt);

  // Bandlimited evaluation at clock times t (guarded to each axis's central
  // half); exact at sample tuples.
  CVec value_at(const std::vector<double>& ts) const;
};

// sum_k [Psi(t + l e_k) - Psi(t - l e_k)] + i (sum_k H_(k) + interaction) Psi(t).
CVec multi_clock_residual(const MultiSignal& s, const std::vector<double>& ts);

}  // namespace hca
