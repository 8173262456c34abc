#include "hca/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hca/errors.hpp"
#include "hca/rng.hpp"

namespace hca {

namespace {

constexpr double kRobertsonSlack = 1e-10;

double sq(double x) { return x * x; }

}  // namespace

LatticeOps build_xp(std::size_t half_width, double l) {
  if (!(l > 0)) throw std::invalid_argument("build_xp: need positive spacing");
  LatticeOps ops;
  ops.half_width = half_width;
  ops.l = l;
  const std::size_t d = ops.dim();
  ops.x = CMat(d, d);
  ops.p = CMat(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const double r = static_cast<double>(i) - static_cast<double>(half_width);
    ops.x.at(i, i) = Complex(l * r, 0);
    if (i + 1 < d) {
      ops.p.at(i, i + 1) = Complex(0, -1.0 / (2.0 * l));
      ops.p.at(i + 1, i) = Complex(0, 1.0 / (2.0 * l));
    }
  }
  return ops;
}

CMat commutator_xp(const LatticeOps& ops) {
  CMat xp = mul(ops.x, ops.p);
  CMat px = mul(ops.p, ops.x);
  CMat c(xp.rows, xp.cols);
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = xp.a[i] - px.a[i];
  return c;
}

LatticeState make_state(CVec amp, const LatticeOps& ops) {
  if (amp.size() != ops.dim()) throw std::invalid_argument("make_state: size mismatch");
  const double n = norm(amp);
  if (!(n > 0)) throw std::invalid_argument("make_state: zero state");
  LatticeState s;
  s.was_normalized = std::abs(n - 1.0) > 1e-12;
  for (auto& z : amp) z /= n;
  s.amp = std::move(amp);
  s.l = ops.l;
  s.half_width = ops.half_width;
  return s;
}

LatticeState gaussian_state(const LatticeOps& ops, double sigma, double k) {
  if (!(sigma > 0)) throw std::invalid_argument("gaussian_state: need sigma > 0");
  CVec amp(ops.dim());
  const double rmax = static_cast<double>(ops.half_width);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const double r = static_cast<double>(i) - rmax;
    amp[i] = std::exp(-r * r / (4.0 * sigma * sigma)) *
             std::exp(Complex(0, k * ops.l * r));
  }
  return make_state(std::move(amp), ops);
}

UncertaintyReport uncertainty_report(const LatticeOps& ops, const LatticeState& s,
                                     std::size_t guard) {
  if (s.amp.size() != ops.dim())
    throw std::invalid_argument("uncertainty_report: size mismatch");
  if (std::abs(norm(s.amp) - 1.0) > 1e-9)
    throw PreconditionError("state must be normalized");
  const std::size_t d = ops.dim();
  if (guard * 2 >= d) throw std::invalid_argument("guard wider than the lattice");
  for (std::size_t i = 0; i < guard; ++i)
    if (std::abs(s.amp[i]) > 1e-12 || std::abs(s.amp[d - 1 - i]) > 1e-12)
      throw PreconditionError("state touches the lattice edge guard band");

  UncertaintyReport rep;
  const CVec xa = hca::apply(ops.x, s.amp);
  const CVec pa = hca::apply(ops.p, s.amp);
  rep.mean_x = dot_conj(s.amp, xa).real();
  rep.mean_p = dot_conj(s.amp, pa).real();
  rep.mean_x2 = dot_conj(xa, xa).real();
  rep.mean_p2 = dot_conj(pa, pa).real();
  rep.dx = std::sqrt(std::max(0.0, rep.mean_x2 - sq(rep.mean_x)));
  rep.dp = std::sqrt(std::max(0.0, rep.mean_p2 - sq(rep.mean_p)));
  rep.product = rep.dx * rep.dp;

  const Complex comm = dot_conj(s.amp, hca::apply(ops.x, pa)) - dot_conj(s.amp, hca::apply(ops.p, xa));
  rep.robertson = 0.5 * std::abs(comm);
  rep.bound_plus = std::abs(1.0 + sq(ops.l) * rep.mean_p2 / 2.0);
  rep.bound_minus = std::abs(1.0 - sq(ops.l) * rep.mean_p2 / 2.0);
  rep.robertson_holds = rep.product >= rep.robertson - kRobertsonSlack;
  rep.bound_plus_holds = rep.product >= rep.bound_plus - kRobertsonSlack;
  return rep;
}

namespace {

LatticeState random_guarded_state(const LatticeOps& ops, Rng& rng) {
  const std::size_t d = ops.dim();
  const std::size_t guard = 2;
  const std::size_t usable = d - 2 * guard;
  const std::size_t len = 1 + static_cast<std::size_t>(rng.below(std::min<std::size_t>(usable, 9)));
  const std::size_t start = guard + static_cast<std::size_t>(rng.below(usable - len + 1));
  CVec amp(d, Complex(0, 0));
  bool nonzero = false;
  for (std::size_t i = 0; i < len; ++i) {
    const double re = rng.uniform() * 2.0 - 1.0;
    const double im = rng.uniform() * 2.0 - 1.0;
    amp[start + i] = Complex(re, im);
    if (re != 0 || im != 0) nonzero = true;
  }
  if (!nonzero) amp[start] = Complex(1, 0);
  return make_state(std::move(amp), ops);
}

std::vector<UncertaintyReport> sweep_impl(const LatticeOps& ops, std::size_t count,
                                          std::uint64_t seed, bool parallel) {
  std::vector<UncertaintyReport> out(count);
  const Rng root(seed);
  auto one = [&](std::size_t i) {
    Rng stream = root.split(i);
    LatticeState s = random_guarded_state(ops, stream);
    out[i] = uncertainty_report(ops, s);
  };
  if (parallel) {
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) one(i);
  }
  return out;
}

}  // namespace

std::vector<UncertaintyReport> robertson_sweep(const LatticeOps& ops, std::size_t count,
                                               std::uint64_t seed) {
  return sweep_impl(ops, count, seed, true);
}

std::vector<UncertaintyReport> robertson_sweep_serial(const LatticeOps& ops,
                                                      std::size_t count,
                                                      std::uint64_t seed) {
  return sweep_impl(ops, count, seed, false);
}

namespace {

struct SearchState {
  CVec support;        // amplitudes on the occupied sites
  std::size_t start;   // first occupied site index
};

LatticeState place(const LatticeOps& ops, const SearchState& st) {
  CVec amp(ops.dim(), Complex(0, 0));
  for (std::size_t i = 0; i < st.support.size(); ++i) amp[st.start + i] = st.support[i];
  return make_state(std::move(amp), ops);
}

}  // namespace

MinSearchResult min_dx_search(const LatticeOps& ops, double saturation_tol) {
  if (ops.half_width < 4)
    throw std::invalid_argument("min_dx_search: need half_width >= 4");
  MinSearchResult res;
  res.target = ops.l / std::sqrt(2.0);

  const double mags[] = {0.0, 1.0, 2.0, 3.0};
  const double phases[] = {0.0, 1.5707963267948966, 3.141592653589793, 4.71238898038469};

  double best_ratio_err = 1e300;
  SearchState best_state;
  bool have_best = false;

  auto consider = [&](const SearchState& st) {
    LatticeState ls = place(ops, st);
    UncertaintyReport rep = uncertainty_report(ops, ls);
    if (rep.dx <= 1e-12) return;
    const double ratio = rep.product / std::max(rep.bound_plus, 1e-300);
    if (std::abs(ratio - 1.0) < best_ratio_err) {
      best_ratio_err = std::abs(ratio - 1.0);
      res.best_ratio = ratio;
      best_state = st;
      have_best = true;
    }
    if (std::abs(rep.product - rep.bound_plus) <= saturation_tol * rep.bound_plus) {
      if (!res.found_saturating || rep.dx < res.dx_saturating) {
        res.found_saturating = true;
        res.dx_saturating = rep.dx;
        res.best = rep;
      }
    }
    if (rep.product >= rep.bound_plus - kRobertsonSlack) {
      if (!res.found_satisfying || rep.dx < res.dx_satisfying) {
        res.found_satisfying = true;
        res.dx_satisfying = rep.dx;
      }
    }
  };

  // Coarse pass: supports of 2..4 adjacent central sites, magnitude x phase
  // grid with the first site's phase pinned (global phase is irrelevant).
  for (std::size_t size = 2; size <= 4; ++size) {
    const std::size_t start = ops.half_width - size / 2;
    const std::size_t combos_mag = 4, combos_ph = 4;
    // size magnitude slots followed by size-1 phase slots
    std::vector<std::size_t> counter(2 * size - 1, 0);
    bool done = false;
    while (!done) {
      SearchState st;
      st.start = start;
      st.support.resize(size);
      bool any = false;
      for (std::size_t i = 0; i < size; ++i) {
        const double m = mags[counter[i]];
        const double ph = (i == 0) ? 0.0 : phases[counter[size + i - 1]];
        st.support[i] = m * std::exp(Complex(0, ph));
        if (m != 0) any = true;
      }
      if (any) consider(st);
      // odometer
      std::size_t k = 0;
      for (; k < counter.size(); ++k) {
        const std::size_t lim = (k < size) ? combos_mag : combos_ph;
        if (++counter[k] < lim) break;
        counter[k] = 0;
      }
      done = k == counter.size();
    }
  }

  // Local refinement around the closest-to-saturation support.
  if (have_best) {
    const double steps[] = {0.5, 0.2, 0.08, 0.03};
    SearchState cur = best_state;
    for (double step : steps) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::size_t i = 0; i < cur.support.size(); ++i) {
          for (int part = 0; part < 2; ++part) {
            for (double dir : {+1.0, -1.0}) {
              SearchState trial = cur;
              Complex delta = part == 0 ? Complex(dir * step, 0) : Complex(0, dir * step);
              trial.support[i] += delta;
              bool all_zero = true;
              for (const auto& z : trial.support)
                if (std::abs(z) > 1e-12) all_zero = false;
              if (all_zero) continue;
              const double before_sat = res.found_saturating ? res.dx_saturating : 1e300;
              const double before_err = best_ratio_err;
              consider(trial);
              const bool gained_sat =
                  res.found_saturating && res.dx_saturating < before_sat - 1e-12;
              const bool gained_ratio = best_ratio_err < before_err - 1e-15;
              if (gained_sat || (!res.found_saturating && gained_ratio)) {
                cur = trial;
                improved = true;
              }
            }
          }
        }
      }
    }
  }
  if (!res.found_saturating && have_best)
    res.best = uncertainty_report(ops, place(ops, best_state));
  return res;
}

}  // namespace hca
