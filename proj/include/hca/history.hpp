#pragma once

#include <cstddef>
#include <vector>

#include "hca/errors.hpp"
#include "hca/gauss_linalg.hpp"

namespace hca {

// Hard cap on stored history entries (slices * dim); keeps runaway configs honest.
inline constexpr std::size_t kMaxHistoryEntries = 64u * 1024u * 1024u;

// A run of state slices psi_0..psi_N on a clock of spacing l ("scale").
// `solution` marks histories produced by the update rule, as opposed to
// arbitrary slice lists assembled by hand.
struct CAHistory {
  std::vector<GaussVector> states;
  HamiltonianSpec ham;
  double scale = 1.0;
  bool solution = false;

  std::size_t dim() const { return ham.dim(); }
  std::size_t last_index() const { return states.size() - 1; }
};

// psi_{n+1} = psi_{n-1} - i H psi_n
GaussVector evolve_step(const GaussVector& prev, const GaussVector& cur,
                        const HamiltonianSpec& h);

// Full run from the two seed slices; result has slices 0..count and is
// flagged `solution`. count >= 1.
CAHistory evolve(const GaussVector& psi0, const GaussVector& psi1,
                 const HamiltonianSpec& h, std::size_t count, double scale = 1.0);

// Wraps externally supplied slices (not flagged as a solution).
CAHistory history_from_states(std::vector<GaussVector> states, HamiltonianSpec h,
                              double scale = 1.0);

// Exact check of the update rule at every interior slice.
bool satisfies_update_rule(const CAHistory& hist);

// Component form: integer (x, p) slices evolved by the split parts only,
// never touching complex arithmetic.
struct XPHistory {
  std::vector<IntVector> xs;
  std::vector<IntVector> ps;
  HamiltonianSpec ham;
  double scale = 1.0;
};

// x_{n+1} = x_{n-1} + h_S p_n + h_A x_n
// p_{n+1} = p_{n-1} - h_S x_n + h_A p_n
XPHistory evolve_xp(const IntVector& x0, const IntVector& p0, const IntVector& x1,
                    const IntVector& p1, const HamiltonianSpec& h, std::size_t count,
                    double scale = 1.0);

// Reassembles psi = x + i p slices; flagged `solution`.
CAHistory recombine(const XPHistory& xp);

IntVector re_part(const GaussVector& psi);
IntVector im_part(const GaussVector& psi);

}  // namespace hca
