#include "hca/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hca {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kTailHorizon = 64;  // per-side terms folded into the tail estimate

// |sinc(x)| <= 1/(pi |x|) and |sinc''(x)| <= 6/|x| for |x| >= 1.
double tail_sum(double dist_lo, double dist_hi, double per_term_c) {
  double s = 0;
  for (int j = 1; j <= kTailHorizon; ++j) {
    s += per_term_c / (dist_lo + j);
    s += per_term_c / (dist_hi + j);
  }
  return s;
}

}  // namespace

double sinc_pi(double x) {
  if (x == 0.0) return 1.0;
  const double y = kPi * x;
  return std::sin(y) / y;
}

double sinc_pi_dd(double x) {
  const double y = kPi * x;
  if (std::abs(y) <= 0.1) {
    const double y2 = y * y;
    return kPi * kPi *
           (-1.0 / 3.0 + y2 * (1.0 / 10.0 + y2 * (-1.0 / 168.0 + y2 / 6480.0)));
  }
  return kPi * kPi * ((2.0 - y * y) * std::sin(y) - 2.0 * y * std::cos(y)) / (y * y * y);
}

ContinuumSignal::ContinuumSignal(std::vector<CVec> samples, double l, long long n0)
    : samples_(std::move(samples)), l_(l), n0_(n0) {
  if (samples_.empty()) throw std::invalid_argument("signal needs samples");
  if (!(l_ > 0)) throw std::invalid_argument("signal needs positive clock spacing");
  dim_ = samples_.front().size();
  for (const CVec& s : samples_) {
    if (s.size() != dim_) throw std::invalid_argument("signal: ragged samples");
    max_abs_sample_ = std::max(max_abs_sample_, max_abs(s));
  }
}

ContinuumSignal::ContinuumSignal(const CAHistory& hist)
    : ContinuumSignal(
          [&] {
            std::vector<CVec> s;
            s.reserve(hist.states.size());
            for (const auto& st : hist.states) s.push_back(to_complex(st));
            return s;
          }(),
          hist.scale, 0) {}

double ContinuumSignal::guard_lo() const {
  const double span = static_cast<double>(samples_.size() - 1);
  return (static_cast<double>(n0_) + span / 4.0) * l_;
}

double ContinuumSignal::guard_hi() const {
  const double span = static_cast<double>(samples_.size() - 1);
  return (static_cast<double>(n0_) + 3.0 * span / 4.0) * l_;
}

ContinuumSignal::Value ContinuumSignal::reconstruct(double t) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(t));
  if (t < guard_lo() - slack || t > guard_hi() + slack)
    throw PreconditionError("evaluation outside the central half of the window");
  const double tau = t / l_;

  const long long near = std::llround(tau);
  if (std::abs(tau - static_cast<double>(near)) <= 1e-12 * std::max(1.0, std::abs(tau)) &&
      near >= n0_ && near < n0_ + static_cast<long long>(samples_.size())) {
    // Every other sinc term vanishes identically on the clock grid.
    return {samples_[static_cast<std::size_t>(near - n0_)], 0.0};
  }

  Value out;
  out.value.assign(dim_, Complex(0, 0));
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    const double w = sinc_pi(tau - static_cast<double>(n0_ + static_cast<long long>(k)));
    for (std::size_t a = 0; a < dim_; ++a) out.value[a] += w * samples_[k][a];
  }
  const double dist_lo = tau - static_cast<double>(n0_);
  const double dist_hi = static_cast<double>(n0_ + static_cast<long long>(samples_.size()) - 1) - tau;
  out.tail_estimate = max_abs_sample_ * tail_sum(dist_lo, dist_hi, 1.0 / kPi);
  return out;
}

ContinuumSignal::Value ContinuumSignal::second_derivative(double t) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(t));
  if (t < guard_lo() - slack || t > guard_hi() + slack)
    throw PreconditionError("evaluation outside the central half of the window");
  const double tau = t / l_;
  Value out;
  out.value.assign(dim_, Complex(0, 0));
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    const double w = sinc_pi_dd(tau - static_cast<double>(n0_ + static_cast<long long>(k)));
    for (std::size_t a = 0; a < dim_; ++a) out.value[a] += w * samples_[k][a];
  }
  for (auto& z : out.value) z /= l_ * l_;
  const double dist_lo = tau - static_cast<double>(n0_);
  const double dist_hi = static_cast<double>(n0_ + static_cast<long long>(samples_.size()) - 1) - tau;
  out.tail_estimate = max_abs_sample_ * tail_sum(dist_lo, dist_hi, 6.0) / (l_ * l_);
  return out;
}

CVec clock_equation_residual(const ContinuumSignal& sig, const CMat& h, double t) {
  if (h.rows != sig.dim() || h.cols != sig.dim())
    throw std::invalid_argument("clock_equation_residual: dimension mismatch");
  const CVec plus = sig.reconstruct(t + sig.scale()).value;
  const CVec minus = sig.reconstruct(t - sig.scale()).value;
  const CVec mid = sig.reconstruct(t).value;
  CVec hm = hca::apply(h, mid);
  CVec r(sig.dim());
  for (std::size_t a = 0; a < sig.dim(); ++a)
    r[a] = plus[a] - minus[a] + Complex(0, 1) * hm[a];
  return r;
}

CVec clock_equation_residual(const CAHistory& hist, double t) {
  ContinuumSignal sig(hist);
  return clock_equation_residual(sig, to_complex(hist.ham.H), t);
}

double dispersion(double l_eps) {
  if (std::abs(l_eps) > 2.0)
    throw PreconditionError("dispersion undefined outside |l*eps| <= 2");
  return std::asin(l_eps / 2.0);
}

StationaryState make_stationary(double l_eps, CVec v) {
  StationaryState s;
  s.l_eps = l_eps;
  s.energy_l = dispersion(l_eps);
  s.vec = std::move(v);
  return s;
}

std::vector<CVec> stationary_history(const StationaryState& s, std::size_t count) {
  std::vector<CVec> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const Complex ph = std::exp(Complex(0, -s.energy_l * static_cast<double>(n)));
    out.push_back(scaled(ph, s.vec));
  }
  return out;
}

double continuum_charge(const ContinuumSignal& sig, double t) {
  const CVec mid = sig.reconstruct(t).value;
  const CVec plus = sig.reconstruct(t + sig.scale()).value;
  const CVec minus = sig.reconstruct(t - sig.scale()).value;
  return 0.5 * dot_conj(mid, add(plus, minus)).real();
}

std::vector<CVec> reconstruct_grid_serial(const ContinuumSignal& sig,
                                          const std::vector<double>& ts) {
  std::vector<CVec> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = sig.reconstruct(ts[i]).value;
  return out;
}

std::vector<CVec> reconstruct_grid(const ContinuumSignal& sig,
                                   const std::vector<double>& ts) {
  for (double t : ts) {
    const double slack = 1e-12 * std::max(1.0, std::abs(t));
    if (t < sig.guard_lo() - slack || t > sig.guard_hi() + slack)
      throw PreconditionError("grid point outside the central half of the window");
  }
  std::vector<CVec> out(ts.size());
  const long long count = static_cast<long long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = sig.reconstruct(ts[static_cast<std::size_t>(i)]).value;
  return out;
}

}  // namespace hca
