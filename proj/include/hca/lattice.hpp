#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hca/cmat.hpp"

namespace hca {

// Position/momentum pair on the integer lattice r = -R..R with spacing l:
// X = diag(l r), P = nearest-neighbour central difference -i/(2l).
struct LatticeOps {
  std::size_t half_width = 0;  // R
  double l = 1.0;
  CMat x;
  CMat p;

  std::size_t dim() const { return 2 * half_width + 1; }
};

LatticeOps build_xp(std::size_t half_width, double l);

// Commutator [X, P]; nonzero only on the off-diagonals r, r+-1 with value i/2.
CMat commutator_xp(const LatticeOps& ops);

// Normalized amplitude vector over the lattice; construction normalizes and
// records whether the input needed rescaling.
struct LatticeState {
  CVec amp;
  double l = 1.0;
  std::size_t half_width = 0;
  bool was_normalized = false;
};

LatticeState make_state(CVec amp, const LatticeOps& ops);

// Gaussian wave packet centered at site 0 with width sigma (in units of l)
// and plane-wave factor e^{i k l r}.
LatticeState gaussian_state(const LatticeOps& ops, double sigma, double k);

// Uncertainty data for one state. The Robertson bound |<[X,P]>|/2 is exact
// quantum mechanics and must hold; the two printed candidates
// |1 +- l^2 <P^2> / 2| are reported as data, not asserted.
struct UncertaintyReport {
  double mean_x = 0, mean_p = 0, mean_x2 = 0, mean_p2 = 0;
  double dx = 0, dp = 0;
  double product = 0;             // dx * dp
  double robertson = 0;           // |<[X,P]>| / 2
  double bound_plus = 0;          // |1 + l^2 <P^2> / 2|
  double bound_minus = 0;         // |1 - l^2 <P^2> / 2|
  bool robertson_holds = false;   // product >= robertson - slack
  bool bound_plus_holds = false;
};

// Guard: the state must be normalized and supported away from the lattice
// edge (outermost `guard` sites empty), else PreconditionError.
UncertaintyReport uncertainty_report(const LatticeOps& ops, const LatticeState& s,
                                     std::size_t guard = 2);

// Random guarded states (OpenMP) with a serial reference; all reports must
// satisfy Robertson within slack.
std::vector<UncertaintyReport> robertson_sweep(const LatticeOps& ops, std::size_t count,
                                               std::uint64_t seed);
std::vector<UncertaintyReport> robertson_sweep_serial(const LatticeOps& ops,
                                                      std::size_t count,
                                                      std::uint64_t seed);

// Constrained minimum-dx search over few-site trial families (supports of
// 2..4 adjacent central sites, coarse amplitude/phase grid plus local
// refinement). The constraint is near-saturation of the printed bound
// |1 + l^2 <P^2>/2| within saturation_tol (relative); satisfying states
// (product >= bound, not necessarily tight) are tracked separately.
struct MinSearchResult {
  bool found_saturating = false;
  double dx_saturating = 0;
  bool found_satisfying = false;
  double dx_satisfying = 0;
  double best_ratio = 0;      // closest product/bound ratio seen
  double target = 0;          // l / sqrt(2), the printed reference value
  UncertaintyReport best;     // report of the saturating (or closest) state
};

MinSearchResult min_dx_search(const LatticeOps& ops, double saturation_tol = 0.05);

}  // namespace hca
