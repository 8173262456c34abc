#include "hca/conserve.hpp"

#include <stdexcept>

#include "hca/errors.hpp"

namespace hca {

GaussianInt q_of_g(const CAHistory& hist, const GaussMatrix& g, std::size_t n) {
  if (n < 1 || n > hist.last_index())
    throw std::invalid_argument("q_of_g: clock index outside [1, N]");
  if (g.dim() != hist.dim()) throw std::invalid_argument("q_of_g: dimension mismatch");
  const GaussVector& cur = hist.states[n];
  const GaussVector& prev = hist.states[n - 1];
  return dot_conj(cur, mat_apply(g, prev)) + dot_conj(prev, mat_apply(g, cur));
}

std::vector<GaussianInt> conserved_series_values_serial(const CAHistory& hist,
                                                        const GaussMatrix& g) {
  std::vector<GaussianInt> values(hist.last_index());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = q_of_g(hist, g, k + 1);
  return values;
}

ConservedSeries conserved_series(const CAHistory& hist, const GaussMatrix& g) {
  if (g.dim() != hist.dim())
    throw std::invalid_argument("conserved_series: dimension mismatch");
  ConservedSeries out;
  out.g = g;
  out.values.resize(hist.last_index());
  const long long count = static_cast<long long>(out.values.size());
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < count; ++k)
    out.values[static_cast<std::size_t>(k)] =
        q_of_g(hist, g, static_cast<std::size_t>(k) + 1);

  out.is_real = true;
  out.is_constant = true;
  for (const auto& v : out.values) {
    if (v.im != 0) out.is_real = false;
    if (v != out.values.front()) out.is_constant = false;
  }
  return out;
}

TheoremReport verify_conservation(const CAHistory& hist, const GaussMatrix& g) {
  if (!hist.solution)
    throw PreconditionError("conservation check needs a solution history");
  TheoremReport rep;
  rep.commutes = commutes(g, hist.ham.H);
  rep.series = conserved_series(hist, g);
  for (std::size_t k = 1; k < rep.series.values.size(); ++k) {
    if (rep.series.values[k] != rep.series.values[0]) {
      rep.first_violation_n = k + 1;
      break;
    }
  }
  rep.balance_holds = true;
  for (std::size_t n = 1; n + 1 <= hist.last_index(); ++n) {
    GaussVector psidot = sub(hist.states[n + 1], hist.states[n - 1]);
    GaussianInt balance = dot_conj(hist.states[n], mat_apply(g, psidot)) +
                          dot_conj(psidot, mat_apply(g, hist.states[n]));
    if (!balance.is_zero()) {
      rep.balance_holds = false;
      break;
    }
  }
  return rep;
}

HalfInt q_symmetrized(const CAHistory& hist, std::size_t n) {
  if (n < 1 || n + 1 > hist.last_index())
    throw std::invalid_argument("q_symmetrized: clock index outside [1, N-1]");
  GaussVector mid = add(hist.states[n + 1], hist.states[n - 1]);
  GaussianInt z = dot_conj(hist.states[n], mid);
  return HalfInt{z.re};  // twice the value: 2 * (1/2) Re(...) = Re(...)
}

}  // namespace hca
