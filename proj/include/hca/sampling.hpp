#pragma once

#include <cstddef>
#include <vector>

#include "hca/cmat.hpp"
#include "hca/errors.hpp"
#include "hca/history.hpp"

namespace hca {

// Normalized sinc: sin(pi x)/(pi x), 1 at x = 0.
double sinc_pi(double x);
// Its second derivative; -pi^2/3 at x = 0.
double sinc_pi_dd(double x);

// Bandlimited interpolant through complex slices on the clock grid t = n*l.
// Evaluation is guarded to the central half of the window; the edge tail of
// the discarded terms is estimated from a fixed horizon beyond the window.
class ContinuumSignal {
 public:
  ContinuumSignal(std::vector<CVec> samples, double l, long long n0 = 0);
  explicit ContinuumSignal(const CAHistory& hist);

  std::size_t dim() const { return dim_; }
  double scale() const { return l_; }
  std::size_t count() const { return samples_.size(); }
  const CVec& sample(std::size_t k) const { return samples_[k]; }
  long long first_clock() const { return n0_; }

  // Central-half guard band; evaluation outside throws PreconditionError.
  double guard_lo() const;
  double guard_hi() const;

  struct Value {
    CVec value;
    double tail_estimate = 0.0;  // bound on the dropped out-of-window terms
  };

  Value reconstruct(double t) const;         // exact at t = n*l
  Value second_derivative(double t) const;   // term-wise sinc'' sum

 private:
  std::vector<CVec> samples_;
  double l_ = 1.0;
  long long n0_ = 0;
  std::size_t dim_ = 0;
  double max_abs_sample_ = 0.0;
};

// 2 sinh(l d/dt) side of the clock equation evaluated in the continuum:
// psi(t+l) - psi(t-l) + i H psi(t).
CVec clock_equation_residual(const ContinuumSignal& sig, const CMat& h, double t);
CVec clock_equation_residual(const CAHistory& hist, double t);

// lE = arcsin(l*eps / 2); domain |l*eps| <= 2, band edges +-pi/2.
double dispersion(double l_eps);

// Single mode: eigenvector v with dimensionless eigenvalue l*eps = 2 sin(lE).
struct StationaryState {
  double l_eps = 0.0;
  double energy_l = 0.0;  // lE
  CVec vec;
};

StationaryState make_stationary(double l_eps, CVec v);

// Complex slices e^{-i n lE} v for n = 0..count-1.
std::vector<CVec> stationary_history(const StationaryState& s, std::size_t count);

// (1/2) Re psi(t)^* (psi(t+l) + psi(t-l)); equals the exact symmetrized
// charge at sample points and cos(lE) on normalized stationary signals.
double continuum_charge(const ContinuumSignal& sig, double t);

// Grid evaluation (OpenMP) with a serial reference.
std::vector<CVec> reconstruct_grid(const ContinuumSignal& sig,
                                   const std::vector<double>& ts);
std::vector<CVec> reconstruct_grid_serial(const ContinuumSignal& sig,
                                          const std::vector<double>& ts);

}  // namespace hca
