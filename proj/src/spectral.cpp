#include "hca/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hca {

namespace {

constexpr double kOffDiagTol = 1e-12;
constexpr double kBandEdgeTol = 1e-9;

double off_diag_norm(const std::vector<double>& a, std::size_t d) {
  double s = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) s += a[i * d + j] * a[i * d + j];
  return std::sqrt(s);
}

}  // namespace

void jacobi_symmetric(std::vector<double>& a, std::size_t d,
                      std::vector<double>& eigvals, std::vector<double>& v) {
  if (a.size() != d * d) throw std::invalid_argument("jacobi: bad matrix size");
  v.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = 1.0;

  double scale = 0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  const double stop = kOffDiagTol * std::max(1.0, scale);

  for (int sweep = 0; sweep < 100 && off_diag_norm(a, d) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a[p * d + q];
        if (std::abs(apq) <= stop / (static_cast<double>(d) * 10 + 1)) continue;
        const double theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < d; ++k) {
          const double akp = a[k * d + p], akq = a[k * d + q];
          a[k * d + p] = c * akp - s * akq;
          a[k * d + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double apk = a[p * d + k], aqk = a[q * d + k];
          a[p * d + k] = c * apk - s * aqk;
          a[q * d + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double vkp = v[k * d + p], vkq = v[k * d + q];
          v[k * d + p] = c * vkp - s * vkq;
          v[k * d + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  eigvals.resize(d);
  for (std::size_t i = 0; i < d; ++i) eigvals[i] = a[i * d + i];

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return eigvals[x] < eigvals[y]; });
  std::vector<double> ev(d), vv(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    ev[k] = eigvals[order[k]];
    for (std::size_t r = 0; r < d; ++r) vv[r * d + k] = v[r * d + order[k]];
  }
  eigvals.swap(ev);
  v.swap(vv);
}

SpectralData spectrum(const HamiltonianSpec& h) {
  const std::size_t d = h.dim();
  SpectralData sd;
  sd.eigenvectors = CMat(d, d);
  if (d == 0) {
    sd.admissible = true;
    return sd;
  }

  // Real-symmetric embedding [[A, -B], [B, A]] of H = A + iB doubles every
  // eigenvalue; the pair (u;v) <-> u + iv collapses back to d complex modes.
  const std::size_t dd = 2 * d;
  std::vector<double> m(dd * dd, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double aij = h.sym.at(i, j).convert_to<double>();
      const double bij = h.antisym.at(i, j).convert_to<double>();
      m[i * dd + j] = aij;
      m[i * dd + (d + j)] = -bij;
      m[(d + i) * dd + j] = bij;
      m[(d + i) * dd + (d + j)] = aij;
    }

  std::vector<double> evals, evecs;
  jacobi_symmetric(m, dd, evals, evecs);

  std::vector<CVec> accepted;
  std::vector<double> lam;
  for (std::size_t k = 0; k < dd && accepted.size() < d; ++k) {
    CVec z(d);
    for (std::size_t r = 0; r < d; ++r)
      z[r] = Complex(evecs[r * dd + k], evecs[(d + r) * dd + k]);
    for (const CVec& w : accepted) {
      const Complex proj = dot_conj(w, z);
      for (std::size_t r = 0; r < d; ++r) z[r] -= proj * w[r];
    }
    const double nz = norm(z);
    if (nz < 0.3) continue;  // the i*z partner of an accepted mode
    for (auto& x : z) x /= nz;
    accepted.push_back(std::move(z));
    lam.push_back(evals[k]);
  }
  if (accepted.size() != d)
    throw std::logic_error("spectrum: eigenvector extraction came up short");

  sd.eigenvalues = std::move(lam);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) sd.eigenvectors.at(r, k) = accepted[k][r];

  sd.max_abs_eigenvalue = 0;
  for (double x : sd.eigenvalues)
    sd.max_abs_eigenvalue = std::max(sd.max_abs_eigenvalue, std::abs(x));
  sd.admissible = sd.max_abs_eigenvalue <= 2.0 + kBandEdgeTol;

  // max |V D V^+ - H|
  CMat hh = to_complex(h.H);
  double resid = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < d; ++k)
        s += sd.eigenvectors.at(i, k) * sd.eigenvalues[k] *
             std::conj(sd.eigenvectors.at(j, k));
      resid = std::max(resid, std::abs(s - hh.at(i, j)));
    }
  sd.reconstruction_residual = resid;
  return sd;
}

CVec closed_form_state(const SpectralData& sd, const GaussVector& psi0,
                       const GaussVector& psi1, long long n) {
  const std::size_t d = sd.eigenvalues.size();
  if (psi0.size() != d || psi1.size() != d)
    throw std::invalid_argument("closed_form_state: dimension mismatch");
  for (double lam : sd.eigenvalues)
    if (std::abs(std::abs(lam) - 2.0) < kBandEdgeTol)
      throw PreconditionError("closed form is singular at a band edge |l*eps| = 2");

  const CVec c0 = to_complex(psi0), c1 = to_complex(psi1);
  CVec out(d, Complex(0, 0));
  for (std::size_t k = 0; k < d; ++k) {
    CVec zk(d);
    for (std::size_t r = 0; r < d; ++r) zk[r] = sd.eigenvectors.at(r, k);
    const Complex a0 = dot_conj(zk, c0);
    const Complex a1 = dot_conj(zk, c1);
    // 2 sin(phi) = l*eps; inadmissible modes get complex phi and grow.
    const Complex phi = std::asin(Complex(sd.eigenvalues[k] / 2.0, 0.0));
    const Complex eip = std::exp(Complex(0, 1) * phi);
    const Complex ein = std::exp(Complex(0, -1) * phi);
    const Complex rot = std::exp(Complex(0, -1) * phi * static_cast<double>(n));
    const Complex alt = std::exp(Complex(0, 1) * phi * static_cast<double>(n));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const Complex coeff =
        (rot * (eip * a0 + a1) + sign * alt * (ein * a0 - a1)) / (2.0 * std::cos(phi));
    for (std::size_t r = 0; r < d; ++r) out[r] += coeff * zk[r];
  }
  return out;
}

CVec closed_form_state(const HamiltonianSpec& h, const GaussVector& psi0,
                       const GaussVector& psi1, long long n) {
  return closed_form_state(spectrum(h), psi0, psi1, n);
}

std::vector<GaussMatrix> transfer_matrices(const HamiltonianSpec& h, std::size_t k_max) {
  std::vector<GaussMatrix> t;
  t.reserve(k_max + 1);
  t.push_back(GaussMatrix::identity(h.dim()));
  if (k_max >= 1) t.push_back(GaussMatrix(h.dim()));  // zero
  const GaussianInt minus_i(0, -1);
  for (std::size_t k = 1; k < k_max; ++k)
    t.push_back(mat_add(t[k - 1], scaled(minus_i, mat_mul(h.H, t[k]))));
  return t;
}

CompositionReport composition_check(const CAHistory& hist, std::size_t m) {
  if (m + 1 > hist.last_index())
    throw std::invalid_argument("composition_check: need m + 1 <= N");
  CompositionReport rep;
  rep.holds = true;
  const std::size_t span = hist.last_index() - m;
  std::vector<GaussMatrix> t = transfer_matrices(hist.ham, span + 1);
  for (std::size_t n = m + 1; n <= hist.last_index(); ++n) {
    const std::size_t k = n - m;
    GaussVector expect = add(mat_apply(t[k + 1], hist.states[m + 1]),
                             mat_apply(t[k], hist.states[m]));
    if (expect != hist.states[n]) {
      rep.holds = false;
      rep.first_failure_n = n;
      break;
    }
  }
  return rep;
}

double growth_rate(const SpectralData& sd) {
  if (sd.max_abs_eigenvalue <= 2.0) return 0.0;
  return std::acosh(sd.max_abs_eigenvalue / 2.0);
}

CycleReport detect_cycle(const GaussVector& psi0, const GaussVector& psi1,
                         const HamiltonianSpec& h, std::size_t max_steps) {
  CycleReport rep;
  GaussVector neg0 = scaled(GaussianInt(-1), psi0);
  GaussVector neg1 = scaled(GaussianInt(-1), psi1);
  GaussVector a = psi0, b = psi1;
  for (std::size_t p = 1; p <= max_steps; ++p) {
    GaussVector next = evolve_step(a, b, h);
    a = std::move(b);
    b = std::move(next);
    // (a, b) is now (psi_p, psi_{p+1})
    if (!rep.antiperiod && a == neg0 && b == neg1) rep.antiperiod = p;
    if (a == psi0 && b == psi1) {
      rep.period = p;
      break;
    }
  }
  return rep;
}

bool is_gauss_multiple(const GaussVector& v, const GaussVector& b) {
  if (v.size() != b.size()) throw std::invalid_argument("is_gauss_multiple: size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (b[i].is_zero() && !v[i].is_zero()) return false;
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] * b[j] != v[j] * b[i]) return false;
  }
  return true;
}

CycleReport ontology_scan(const CAHistory& hist, const std::vector<GaussVector>& basis) {
  if (basis.empty()) throw std::invalid_argument("ontology_scan: empty basis");
  CycleReport rep;
  rep.ontological = true;
  for (std::size_t n = 0; n < hist.states.size(); ++n) {
    bool aligned = false;
    for (const auto& b : basis)
      if (is_gauss_multiple(hist.states[n], b)) {
        aligned = true;
        break;
      }
    if (!aligned) {
      rep.ontological = false;
      rep.first_superposition_index = n;
      break;
    }
  }
  return rep;
}

}  // namespace hca
