#include "hca/multitime.hpp"

#include <cmath>
#include <stdexcept>

#include "hca/errors.hpp"
#include "hca/sampling.hpp"

namespace hca {

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& extents) {
  std::vector<std::size_t> s(extents.size(), 1);
  for (std::size_t k = extents.size(); k-- > 1;) s[k - 1] = s[k] * extents[k];
  return s;
}

std::size_t product_of(const std::vector<std::size_t>& extents) {
  std::size_t p = 1;
  for (std::size_t e : extents) p *= e;
  return p;
}

// Odometer over per-axis ranges [lo_k, hi_k]; returns false when exhausted.
bool advance(std::vector<std::size_t>& n, const std::vector<std::size_t>& lo,
             const std::vector<std::size_t>& hi) {
  for (std::size_t k = n.size(); k-- > 0;) {
    if (n[k] < hi[k]) {
      ++n[k];
      for (std::size_t j = k + 1; j < n.size(); ++j) n[j] = lo[j];
      return true;
    }
  }
  return false;
}

// One-axis operator action on a flat component block.
template <typename Scalar, typename Mat, typename Entry>
void apply_axis(const std::vector<std::size_t>& dims, std::size_t axis,
                const Mat& h, const std::vector<Scalar>& in, std::vector<Scalar>& out,
                Entry entry) {
  const std::vector<std::size_t> cs = strides_of(dims);
  const std::size_t d = dims[axis];
  const std::size_t stride = cs[axis];
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t ak = (i / stride) % d;
    const std::size_t base = i - ak * stride;
    Scalar s{};
    for (std::size_t b = 0; b < d; ++b) s += entry(h, ak, b) * in[base + b * stride];
    out[i] += s;
  }
}

}  // namespace

std::size_t MultiHistory::comp_dim() const { return product_of(dims); }
std::size_t MultiHistory::site_count() const { return product_of(clocks); }

std::size_t MultiHistory::clock_flat(const std::vector<std::size_t>& n) const {
  if (n.size() != parts) throw std::invalid_argument("clock tuple arity mismatch");
  const std::vector<std::size_t> s = strides_of(clocks);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < parts; ++k) {
    if (n[k] >= clocks[k]) throw std::invalid_argument("clock index out of range");
    idx += n[k] * s[k];
  }
  return idx;
}

GaussVector MultiHistory::block(const std::vector<std::size_t>& n) const {
  const std::size_t d = comp_dim();
  const std::size_t base = clock_flat(n) * d;
  return GaussVector(values.begin() + static_cast<std::ptrdiff_t>(base),
                     values.begin() + static_cast<std::ptrdiff_t>(base + d));
}

void MultiHistory::set_block(const std::vector<std::size_t>& n, const GaussVector& v) {
  const std::size_t d = comp_dim();
  if (v.size() != d) throw std::invalid_argument("set_block: block size mismatch");
  const std::size_t base = clock_flat(n) * d;
  for (std::size_t i = 0; i < d; ++i) values[base + i] = v[i];
}

MultiHistory MultiHistory::zeros(std::vector<std::size_t> dims,
                                 std::vector<std::size_t> clocks,
                                 std::vector<HamiltonianSpec> hams,
                                 std::optional<GaussMatrix> interaction, double scale) {
  MultiHistory m;
  m.parts = dims.size();
  if (m.parts == 0 || clocks.size() != m.parts || hams.size() != m.parts)
    throw std::invalid_argument("tensor shape arity mismatch");
  for (std::size_t k = 0; k < m.parts; ++k) {
    if (dims[k] == 0 || clocks[k] < 2)
      throw std::invalid_argument("each axis needs dim >= 1 and >= 2 slices");
    if (hams[k].dim() != dims[k])
      throw std::invalid_argument("subsystem Hamiltonian dimension mismatch");
  }
  m.dims = std::move(dims);
  m.clocks = std::move(clocks);
  m.hams = std::move(hams);
  const std::size_t total = product_of(m.clocks) * product_of(m.dims);
  if (total > kMaxTensorEntries)
    throw std::invalid_argument("tensor exceeds the entry cap");
  if (interaction) {
    if (interaction->dim() != product_of(m.dims))
      throw std::invalid_argument("interaction must act on the product space");
    if (!is_self_adjoint(*interaction))
      throw std::invalid_argument("interaction must be self-adjoint");
  }
  m.interaction = std::move(interaction);
  m.scale = scale;
  m.values.assign(total, GaussianInt());
  return m;
}

MultiHistory build_product(const std::vector<CAHistory>& factors) {
  if (factors.empty()) throw std::invalid_argument("build_product: no factors");
  std::vector<std::size_t> dims, clocks;
  std::vector<HamiltonianSpec> hams;
  for (const auto& f : factors) {
    if (!f.solution)
      throw PreconditionError("build_product: factors must be solution histories");
    if (f.scale != factors.front().scale)
      throw std::invalid_argument("build_product: factors disagree on clock spacing");
    dims.push_back(f.dim());
    clocks.push_back(f.states.size());
    hams.push_back(f.ham);
  }
  MultiHistory m = MultiHistory::zeros(dims, clocks, hams, std::nullopt,
                                       factors.front().scale);

  std::vector<std::size_t> lo(m.parts, 0), hi(m.parts);
  for (std::size_t k = 0; k < m.parts; ++k) hi[k] = m.clocks[k] - 1;
  std::vector<std::size_t> n = lo;
  do {
    GaussVector blockv{GaussianInt(1)};
    for (std::size_t k = 0; k < m.parts; ++k) {
      const GaussVector& fk = factors[k].states[n[k]];
      GaussVector next(blockv.size() * fk.size());
      for (std::size_t i = 0; i < blockv.size(); ++i)
        for (std::size_t a = 0; a < fk.size(); ++a)
          next[i * fk.size() + a] = blockv[i] * fk[a];
      blockv = std::move(next);
    }
    m.set_block(n, blockv);
  } while (advance(n, lo, hi));

  m.factors = factors;
  return m;
}

MultiHistory linear_combination(const GaussianInt& a, const MultiHistory& x,
                                const GaussianInt& b, const MultiHistory& y) {
  if (x.dims != y.dims || x.clocks != y.clocks || x.scale != y.scale)
    throw std::invalid_argument("linear_combination: shape mismatch");
  for (std::size_t k = 0; k < x.parts; ++k)
    if (x.hams[k].H != y.hams[k].H)
      throw std::invalid_argument("linear_combination: Hamiltonian mismatch");
  const bool xi = x.interaction.has_value(), yi = y.interaction.has_value();
  if (xi != yi || (xi && x.interaction->flat() != y.interaction->flat()))
    throw std::invalid_argument("linear_combination: interaction mismatch");
  MultiHistory m = x;
  m.factors.clear();
  for (std::size_t i = 0; i < m.values.size(); ++i)
    m.values[i] = a * x.values[i] + b * y.values[i];
  return m;
}

GaussVector multi_eom_residual(const MultiHistory& m, const std::vector<std::size_t>& n) {
  if (n.size() != m.parts) throw std::invalid_argument("clock tuple arity mismatch");
  for (std::size_t k = 0; k < m.parts; ++k)
    if (n[k] < 1 || n[k] + 2 > m.clocks[k])
      throw std::invalid_argument("residual needs an interior clock tuple");

  const std::size_t d = m.comp_dim();
  GaussVector res(d);
  std::vector<std::size_t> nn = n;
  for (std::size_t k = 0; k < m.parts; ++k) {
    nn[k] = n[k] + 1;
    GaussVector plus = m.block(nn);
    nn[k] = n[k] - 1;
    GaussVector minus = m.block(nn);
    nn[k] = n[k];
    for (std::size_t i = 0; i < d; ++i) res[i] += plus[i] - minus[i];
  }

  GaussVector mid = m.block(n);
  GaussVector ham_part(d);
  for (std::size_t k = 0; k < m.parts; ++k)
    apply_axis<GaussianInt>(m.dims, k, m.hams[k].H, mid, ham_part,
                            [](const GaussMatrix& h, std::size_t r, std::size_t c) {
                              return h.at(r, c);
                            });
  if (m.interaction) {
    GaussVector iv = mat_apply(*m.interaction, mid);
    for (std::size_t i = 0; i < d; ++i) ham_part[i] += iv[i];
  }
  for (std::size_t i = 0; i < d; ++i) res[i] += mul_i(ham_part[i]);
  return res;
}

namespace {

std::vector<GaussianInt> residual_map_impl(const MultiHistory& m, bool parallel) {
  const std::size_t d = m.comp_dim();
  std::vector<std::size_t> interior(m.parts);
  for (std::size_t k = 0; k < m.parts; ++k) {
    if (m.clocks[k] < 3) return {};
    interior[k] = m.clocks[k] - 2;
  }
  const std::size_t sites = product_of(interior);
  const std::vector<std::size_t> is = strides_of(interior);
  std::vector<GaussianInt> out(sites * d);

  auto fill_site = [&](std::size_t flat) {
    std::vector<std::size_t> n(m.parts);
    for (std::size_t k = 0; k < m.parts; ++k) n[k] = 1 + (flat / is[k]) % interior[k];
    GaussVector r = multi_eom_residual(m, n);
    for (std::size_t i = 0; i < d; ++i) out[flat * d + i] = std::move(r[i]);
  };

  if (parallel) {
    const long long count = static_cast<long long>(sites);
#pragma omp parallel for schedule(static)
    for (long long f = 0; f < count; ++f) fill_site(static_cast<std::size_t>(f));
  } else {
    for (std::size_t f = 0; f < sites; ++f) fill_site(f);
  }
  return out;
}

}  // namespace

std::vector<GaussianInt> eom_residual_map(const MultiHistory& m) {
  return residual_map_impl(m, true);
}

std::vector<GaussianInt> eom_residual_map_serial(const MultiHistory& m) {
  return residual_map_impl(m, false);
}

GaussianInt multi_action_site(const MultiHistory& m, const std::vector<std::size_t>& n) {
  for (std::size_t k = 0; k < m.parts; ++k)
    if (n[k] < 1 || n[k] + 2 > m.clocks[k])
      throw std::invalid_argument("action site must be interior");
  const std::size_t d = m.comp_dim();
  GaussVector mid = m.block(n);
  GaussianInt s;
  std::vector<std::size_t> nn = n;
  for (std::size_t k = 0; k < m.parts; ++k) {
    nn[k] = n[k] + 1;
    GaussVector plus = m.block(nn);
    nn[k] = n[k] - 1;
    GaussVector minus = m.block(nn);
    nn[k] = n[k];
    GaussVector dot(d);
    for (std::size_t i = 0; i < d; ++i) dot[i] = plus[i] - minus[i];
    s += GaussianInt(dot_conj(mid, dot).im);

    GaussVector hm(d);
    apply_axis<GaussianInt>(m.dims, k, m.hams[k].H, mid, hm,
                            [](const GaussMatrix& h, std::size_t r, std::size_t c) {
                              return h.at(r, c);
                            });
    s += dot_conj(mid, hm);
  }
  if (m.interaction) s += dot_conj(mid, mat_apply(*m.interaction, mid));
  return s;
}

GaussianInt multi_action_eval(
    const MultiHistory& m,
    const std::vector<std::pair<std::size_t, std::size_t>>& window) {
  if (window.size() != m.parts) throw std::invalid_argument("window arity mismatch");
  std::vector<std::size_t> lo(m.parts), hi(m.parts);
  for (std::size_t k = 0; k < m.parts; ++k) {
    lo[k] = window[k].first;
    hi[k] = window[k].second;
    if (lo[k] < 1 || hi[k] + 2 > m.clocks[k] || lo[k] > hi[k])
      throw std::invalid_argument("window must sit inside the interior");
  }
  GaussianInt total;
  std::vector<std::size_t> n = lo;
  do {
    total += multi_action_site(m, n);
  } while (advance(n, lo, hi));
  return total;
}

LeibnizReport leibniz_check(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                            std::size_t n) {
  if (a.size() != b.size()) throw std::invalid_argument("leibniz_check: size mismatch");
  if (n < 1 || n + 1 >= a.size())
    throw std::invalid_argument("leibniz_check: n must be interior");
  LeibnizReport rep;
  rep.exact = a[n + 1] * b[n + 1] - a[n - 1] * b[n - 1];
  const BigInt adot = a[n + 1] - a[n - 1];
  const BigInt bdot = b[n + 1] - b[n - 1];
  rep.corrected = exact_div(adot * (b[n + 1] + b[n - 1]) + (a[n + 1] + a[n - 1]) * bdot, 2);
  rep.naive = adot * b[n] + a[n] * bdot;
  rep.corrected_matches = rep.corrected == rep.exact;
  rep.naive_matches = rep.naive == rep.exact;
  return rep;
}

GaussianInt q_multi(const MultiHistory& m, const std::vector<GaussMatrix>& gs,
                    const std::vector<std::size_t>& n) {
  if (gs.size() != m.parts) throw std::invalid_argument("q_multi: observable arity mismatch");
  for (std::size_t k = 0; k < m.parts; ++k) {
    if (gs[k].dim() != m.dims[k])
      throw std::invalid_argument("q_multi: observable dimension mismatch");
    if (n[k] < 1 || n[k] >= m.clocks[k])
      throw std::invalid_argument("q_multi: clock tuple outside [1, N]");
  }
  GaussMatrix big = gs[0];
  for (std::size_t k = 1; k < m.parts; ++k) big = kron(big, gs[k]);

  GaussianInt total;
  const std::size_t corners = static_cast<std::size_t>(1) << m.parts;
  std::vector<std::size_t> bra_n(m.parts), ket_n(m.parts);
  for (std::size_t mask = 0; mask < corners; ++mask) {
    for (std::size_t k = 0; k < m.parts; ++k) {
      const bool s = (mask >> k) & 1u;
      bra_n[k] = n[k] - (s ? 1 : 0);
      ket_n[k] = n[k] - (s ? 0 : 1);
    }
    total += dot_conj(m.block(bra_n), mat_apply(big, m.block(ket_n)));
  }
  return total;
}

CorrelationReport correlation_check(const MultiHistory& m,
                                    const std::vector<GaussMatrix>& gs) {
  CorrelationReport rep;
  const bool interaction_free = !m.interaction || is_zero(*m.interaction);
  rep.product_applicable = !m.factors.empty() && interaction_free;

  std::vector<std::size_t> lo(m.parts, 1), hi(m.parts);
  for (std::size_t k = 0; k < m.parts; ++k) hi[k] = m.clocks[k] - 1;

  if (rep.product_applicable) {
    std::vector<std::size_t> n = lo;
    do {
      GaussianInt joint = q_multi(m, gs, n);
      GaussianInt prod(1);
      for (std::size_t k = 0; k < m.parts; ++k)
        prod *= q_of_g(m.factors[k], gs[k], n[k]);
      if (joint != prod) {
        rep.factorizes = false;
        rep.first_factorization_failure = n;
        break;
      }
    } while (advance(n, lo, hi));
  }

  if (m.parts == 2) {
    const GaussMatrix i1 = GaussMatrix::identity(m.dims[0]);
    const GaussMatrix i2 = GaussMatrix::identity(m.dims[1]);
    std::vector<std::size_t> n = lo;
    do {
      GaussianInt q12 = q_multi(m, {gs[0], gs[1]}, n);
      GaussianInt q00 = q_multi(m, {i1, i2}, n);
      GaussianInt q10 = q_multi(m, {gs[0], i2}, n);
      GaussianInt q01 = q_multi(m, {i1, gs[1]}, n);
      GaussianInt connected = q12 * q00 - q10 * q01;
      if (!connected.is_zero()) {
        rep.connected_all_zero = false;
        rep.first_connected_nonzero = n;
        break;
      }
    } while (advance(n, lo, hi));
  }
  return rep;
}

std::size_t MultiSignal::comp_dim() const { return product_of(dims); }

MultiSignal::MultiSignal(const MultiHistory& m) {
  parts = m.parts;
  dims = m.dims;
  clocks = m.clocks;
  scale = m.scale;
  for (const auto& h : m.hams) hams.push_back(to_complex(h.H));
  if (m.interaction) interaction = to_complex(*m.interaction);
  values.reserve(m.values.size());
  for (const auto& z : m.values)
    values.emplace_back(z.re.convert_to<double>(), z.im.convert_to<double>());
}

MultiSignal::MultiSignal(const std::vector<std::vector<CVec>>& factor_slices,
                         std::vector<CMat> hs, double l, std::optional<CMat> inter) {
  parts = factor_slices.size();
  if (parts == 0 || hs.size() != parts)
    throw std::invalid_argument("MultiSignal: arity mismatch");
  hams = std::move(hs);
  scale = l;
  for (std::size_t k = 0; k < parts; ++k) {
    if (factor_slices[k].empty())
      throw std::invalid_argument("MultiSignal: empty factor");
    dims.push_back(factor_slices[k].front().size());
    clocks.push_back(factor_slices[k].size());
    if (hams[k].rows != dims[k] || hams[k].cols != dims[k])
      throw std::invalid_argument("MultiSignal: Hamiltonian dimension mismatch");
  }
  interaction = std::move(inter);
  const std::size_t d = comp_dim();
  const std::size_t total = product_of(clocks) * d;
  if (total > kMaxTensorEntries) throw std::invalid_argument("tensor exceeds the entry cap");
  values.assign(total, Complex(0, 0));

  std::vector<std::size_t> lo(parts, 0), hi(parts);
  for (std::size_t k = 0; k < parts; ++k) hi[k] = clocks[k] - 1;
  const std::vector<std::size_t> cs = strides_of(clocks);
  std::vector<std::size_t> n = lo;
  do {
    CVec blockv{Complex(1, 0)};
    for (std::size_t k = 0; k < parts; ++k) {
      const CVec& fk = factor_slices[k][n[k]];
      CVec next(blockv.size() * fk.size());
      for (std::size_t i = 0; i < blockv.size(); ++i)
        for (std::size_t a = 0; a < fk.size(); ++a)
          next[i * fk.size() + a] = blockv[i] * fk[a];
      blockv = std::move(next);
    }
    std::size_t base = 0;
    for (std::size_t k = 0; k < parts; ++k) base += n[k] * cs[k];
    base *= d;
    for (std::size_t i = 0; i < d; ++i) values[base + i] = blockv[i];
  } while (advance(n, lo, hi));
}

CVec MultiSignal::value_at(const std::vector<double>& ts) const {
  if (ts.size() != parts) throw std::invalid_argument("value_at: arity mismatch");
  const std::size_t d = comp_dim();

  std::vector<std::vector<double>> w(parts);
  for (std::size_t k = 0; k < parts; ++k) {
    const double tau = ts[k] / scale;
    const double span = static_cast<double>(clocks[k] - 1);
    const double slack = 1e-12 * std::max(1.0, std::abs(tau));
    if (tau < span / 4.0 - slack || tau > 3.0 * span / 4.0 + slack)
      throw PreconditionError("clock time outside the central half of its window");
    w[k].resize(clocks[k]);
    const long long nearest = std::llround(tau);
    const bool snap =
        std::abs(tau - static_cast<double>(nearest)) <= 1e-12 * std::max(1.0, std::abs(tau)) &&
        nearest >= 0 && nearest < static_cast<long long>(clocks[k]);
    for (std::size_t nk = 0; nk < clocks[k]; ++nk)
      w[k][nk] = snap ? (static_cast<long long>(nk) == nearest ? 1.0 : 0.0)
                      : sinc_pi(tau - static_cast<double>(nk));
  }

  CVec out(d, Complex(0, 0));
  std::vector<std::size_t> lo(parts, 0), hi(parts);
  for (std::size_t k = 0; k < parts; ++k) hi[k] = clocks[k] - 1;
  const std::vector<std::size_t> cs = strides_of(clocks);
  std::vector<std::size_t> n = lo;
  do {
    double weight = 1.0;
    for (std::size_t k = 0; k < parts; ++k) weight *= w[k][n[k]];
    if (weight == 0.0) continue;
    std::size_t base = 0;
    for (std::size_t k = 0; k < parts; ++k) base += n[k] * cs[k];
    base *= d;
    for (std::size_t i = 0; i < d; ++i) out[i] += weight * values[base + i];
  } while (advance(n, lo, hi));
  return out;
}

CVec multi_clock_residual(const MultiSignal& s, const std::vector<double>& ts) {
  const std::size_t d = s.comp_dim();
  CVec res(d, Complex(0, 0));
  std::vector<double> tt = ts;
  for (std::size_t k = 0; k < s.parts; ++k) {
    tt[k] = ts[k] + s.scale;
    CVec plus = s.value_at(tt);
    tt[k] = ts[k] - s.scale;
    CVec minus = s.value_at(tt);
    tt[k] = ts[k];
    for (std::size_t i = 0; i < d; ++i) res[i] += plus[i] - minus[i];
  }

  CVec mid = s.value_at(ts);
  CVec ham_part(d, Complex(0, 0));
  for (std::size_t k = 0; k < s.parts; ++k)
    apply_axis<Complex>(s.dims, k, s.hams[k], mid, ham_part,
                        [](const CMat& h, std::size_t r, std::size_t c) {
                          return h.at(r, c);
                        });
  if (s.interaction) {
    CVec iv = hca::apply(*s.interaction, mid);
    for (std::size_t i = 0; i < d; ++i) ham_part[i] += iv[i];
  }
  for (std::size_t i = 0; i < d; ++i) res[i] += Complex(0, 1) * ham_part[i];
  return res;
}

}  // namespace hca
