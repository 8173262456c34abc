#include "hca/action.hpp"

#include <stdexcept>

#include "hca/rng.hpp"

namespace hca {

namespace {

GaussianInt dot_plain(const GaussVector& a, const GaussVector& b) {
  GaussianInt s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// 2i times the action with the conjugate field treated as independent data;
// keeping the doubled value avoids half-integers away from the standard slice.
GaussianInt twice_i_action(const std::vector<GaussVector>& psi,
                           const std::vector<GaussVector>& phi, const GaussMatrix& h) {
  GaussianInt total;
  const GaussianInt two_i(0, 2);
  for (std::size_t n = 1; n + 1 < psi.size(); ++n) {
    GaussVector psidot = sub(psi[n + 1], psi[n - 1]);
    GaussVector phidot = sub(phi[n + 1], phi[n - 1]);
    GaussianInt w = dot_plain(phi[n], psidot) - dot_plain(phidot, psi[n]);
    total += w + two_i * dot_plain(phi[n], mat_apply(h, psi[n]));
  }
  return total;
}

void require_step_range(const CAHistory& hist, std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < 1 || n_hi + 1 > hist.last_index() || n_lo > n_hi)
    throw std::invalid_argument("action window must sit inside [1, N-1]");
}

}  // namespace

BigInt IntPoly::eval(const BigInt& f) const {
  BigInt acc = 0;
  for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * f + coeff[k];
  return acc;
}

BigInt integer_variation(const IntPoly& g, const BigInt& f, const BigInt& d) {
  if (d == 0) return 0;
  return exact_div(g.eval(f + d) - g.eval(f - d), 2 * d);
}

ActionValue action_eval(const CAHistory& hist, std::size_t n_lo, std::size_t n_hi) {
  require_step_range(hist, n_lo, n_hi);
  ActionValue out;
  out.n_lo = n_lo;
  out.per_step.reserve(n_hi - n_lo + 1);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    GaussVector psidot = sub(hist.states[n + 1], hist.states[n - 1]);
    GaussianInt z = dot_conj(hist.states[n], psidot);
    GaussianInt s = GaussianInt(z.im) + dot_conj(hist.states[n], mat_apply(hist.ham.H, hist.states[n]));
    out.total += s;
    out.per_step.push_back(std::move(s));
  }
  return out;
}

VariationCoefficient variation_coefficient(const CAHistory& hist, std::size_t n,
                                           std::size_t comp) {
  if (n < 1 || n + 1 > hist.last_index())
    throw std::invalid_argument("variation site must sit inside [1, N-1]");
  if (comp >= hist.dim()) throw std::invalid_argument("component out of range");
  const GaussVector& cur = hist.states[n];
  GaussVector psidot = sub(hist.states[n + 1], hist.states[n - 1]);
  GaussVector w = mat_apply(hist.ham.H, cur);

  VariationCoefficient vc;
  vc.wrt_conj = mul_neg_i(psidot[comp]) + w[comp];
  GaussianInt row;  // sum_b conj(psi_b) H_{b,comp}
  for (std::size_t b = 0; b < hist.dim(); ++b)
    row += conj(cur[b]) * hist.ham.H.at(b, comp);
  vc.wrt_plain = mul_i(conj(psidot[comp])) + row;
  return vc;
}

GaussianInt action_variation(const CAHistory& hist, std::size_t n, std::size_t comp,
                             const GaussianInt& delta, bool vary_conjugate) {
  if (delta.is_zero()) return {};
  if (n < 2 || n + 2 > hist.last_index())
    throw std::invalid_argument("variation needs both neighbouring steps in window");
  if (comp >= hist.dim()) throw std::invalid_argument("component out of range");

  std::vector<GaussVector> phi(hist.states.size());
  for (std::size_t k = 0; k < phi.size(); ++k) phi[k] = conj(hist.states[k]);

  auto shifted = [&](const GaussianInt& d) {
    std::vector<GaussVector> psi = hist.states;
    std::vector<GaussVector> bar = phi;
    if (vary_conjugate)
      bar[n][comp] += d;
    else
      psi[n][comp] += d;
    return twice_i_action(psi, bar, hist.ham.H);
  };

  GaussianInt diff = shifted(delta) - shifted(-delta);
  return gauss_div(diff, GaussianInt(0, 4) * delta);
}

StationarityReport stationarity_scan(const CAHistory& hist) {
  StationarityReport rep;
  for (std::size_t n = 1; n + 1 <= hist.last_index(); ++n) {
    for (std::size_t c = 0; c < hist.dim(); ++c) {
      VariationCoefficient vc = variation_coefficient(hist, n, c);
      ++rep.trials;
      if (!vc.vanishes()) rep.violations.push_back({n, c, vc.wrt_conj, vc.wrt_plain});
    }
  }
  return rep;
}

StationarityReport stationarity_check(const CAHistory& hist, std::size_t trials,
                                      std::uint64_t seed) {
  if (hist.last_index() < 4)
    throw std::invalid_argument("stationarity check needs at least 5 slices");
  Rng rng(seed);
  StationarityReport rep;
  rep.trials = trials;
  const std::size_t site_count = hist.last_index() - 3;  // sites 2 .. N-2
  for (std::size_t t = 0; t < trials; ++t) {
    Rng stream = rng.split(t);
    const std::size_t n = 2 + static_cast<std::size_t>(stream.below(site_count));
    const std::size_t c = static_cast<std::size_t>(stream.below(hist.dim()));
    GaussianInt delta(stream.range(-3, 3), stream.range(-3, 3));
    if (delta.is_zero()) delta = GaussianInt(1);
    const bool conj_side = stream.coin();

    VariationCoefficient vc = variation_coefficient(hist, n, c);
    GaussianInt brute = action_variation(hist, n, c, delta, conj_side);
    const GaussianInt& closed = conj_side ? vc.wrt_conj : vc.wrt_plain;
    if (brute != closed)
      throw std::logic_error("variation coefficient disagrees with direct difference");
    if (!vc.vanishes()) rep.violations.push_back({n, c, vc.wrt_conj, vc.wrt_plain});
  }
  return rep;
}

}  // namespace hca
