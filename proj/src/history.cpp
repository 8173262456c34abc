#include "hca/history.hpp"

#include <stdexcept>

namespace hca {

namespace {

void check_capacity(std::size_t slices, std::size_t dim) {
  if (dim != 0 && slices > kMaxHistoryEntries / dim)
    throw std::invalid_argument("history exceeds the storage cap");
}

}  // namespace

GaussVector evolve_step(const GaussVector& prev, const GaussVector& cur,
                        const HamiltonianSpec& h) {
  if (prev.size() != h.dim() || cur.size() != h.dim())
    throw std::invalid_argument("evolve_step: dimension mismatch");
  GaussVector w = mat_apply(h.H, cur);
  GaussVector next(h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a) next[a] = prev[a] + mul_neg_i(w[a]);
  return next;
}

CAHistory evolve(const GaussVector& psi0, const GaussVector& psi1,
                 const HamiltonianSpec& h, std::size_t count, double scale) {
  if (count < 1) throw std::invalid_argument("evolve: need count >= 1");
  if (psi0.size() != h.dim() || psi1.size() != h.dim())
    throw std::invalid_argument("evolve: dimension mismatch");
  check_capacity(count + 1, h.dim());
  CAHistory hist;
  hist.ham = h;
  hist.scale = scale;
  hist.solution = true;
  hist.states.reserve(count + 1);
  hist.states.push_back(psi0);
  hist.states.push_back(psi1);
  for (std::size_t n = 1; n < count; ++n)
    hist.states.push_back(evolve_step(hist.states[n - 1], hist.states[n], h));
  return hist;
}

CAHistory history_from_states(std::vector<GaussVector> states, HamiltonianSpec h,
                              double scale) {
  if (states.size() < 2) throw std::invalid_argument("history needs >= 2 slices");
  check_capacity(states.size(), h.dim());
  for (const auto& s : states)
    if (s.size() != h.dim()) throw std::invalid_argument("history: dimension mismatch");
  CAHistory hist;
  hist.states = std::move(states);
  hist.ham = std::move(h);
  hist.scale = scale;
  hist.solution = false;
  return hist;
}

bool satisfies_update_rule(const CAHistory& hist) {
  for (std::size_t n = 1; n + 1 < hist.states.size(); ++n) {
    GaussVector expect = evolve_step(hist.states[n - 1], hist.states[n], hist.ham);
    if (expect != hist.states[n + 1]) return false;
  }
  return true;
}

XPHistory evolve_xp(const IntVector& x0, const IntVector& p0, const IntVector& x1,
                    const IntVector& p1, const HamiltonianSpec& h, std::size_t count,
                    double scale) {
  if (count < 1) throw std::invalid_argument("evolve_xp: need count >= 1");
  const std::size_t d = h.dim();
  if (x0.size() != d || p0.size() != d || x1.size() != d || p1.size() != d)
    throw std::invalid_argument("evolve_xp: dimension mismatch");
  check_capacity(count + 1, d);
  XPHistory xp;
  xp.ham = h;
  xp.scale = scale;
  xp.xs = {x0, x1};
  xp.ps = {p0, p1};
  xp.xs.reserve(count + 1);
  xp.ps.reserve(count + 1);
  for (std::size_t n = 1; n < count; ++n) {
    IntVector sp = mat_apply(h.sym, xp.ps[n]);
    IntVector ax = mat_apply(h.antisym, xp.xs[n]);
    IntVector sx = mat_apply(h.sym, xp.xs[n]);
    IntVector ap = mat_apply(h.antisym, xp.ps[n]);
    IntVector xn(d), pn(d);
    for (std::size_t a = 0; a < d; ++a) {
      xn[a] = xp.xs[n - 1][a] + sp[a] + ax[a];
      pn[a] = xp.ps[n - 1][a] - sx[a] + ap[a];
    }
    xp.xs.push_back(std::move(xn));
    xp.ps.push_back(std::move(pn));
  }
  return xp;
}

CAHistory recombine(const XPHistory& xp) {
  CAHistory hist;
  hist.ham = xp.ham;
  hist.scale = xp.scale;
  hist.solution = true;
  hist.states.reserve(xp.xs.size());
  for (std::size_t n = 0; n < xp.xs.size(); ++n) {
    GaussVector s(xp.ham.dim());
    for (std::size_t a = 0; a < s.size(); ++a)
      s[a] = GaussianInt(xp.xs[n][a], xp.ps[n][a]);
    hist.states.push_back(std::move(s));
  }
  return hist;
}

IntVector re_part(const GaussVector& psi) {
  IntVector r(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) r[i] = psi[i].re;
  return r;
}

IntVector im_part(const GaussVector& psi) {
  IntVector r(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) r[i] = psi[i].im;
  return r;
}

}  // namespace hca
