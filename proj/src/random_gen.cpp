#include "hca/random_gen.hpp"

#include "hca/spectral.hpp"

namespace hca {

GaussVector random_gauss_vector(Rng& rng, std::size_t dim, long long mag) {
  GaussVector v(dim);
  for (auto& z : v) z = GaussianInt(rng.range(-mag, mag), rng.range(-mag, mag));
  return v;
}

GaussVector random_nonzero_gauss_vector(Rng& rng, std::size_t dim, long long mag) {
  GaussVector v = random_gauss_vector(rng, dim, mag);
  if (is_zero(v)) v[rng.below(dim)] = GaussianInt(1);
  return v;
}

GaussMatrix random_self_adjoint(Rng& rng, std::size_t dim, long long mag) {
  GaussMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m.at(i, i) = GaussianInt(rng.range(-mag, mag));
    for (std::size_t j = i + 1; j < dim; ++j) {
      GaussianInt z(rng.range(-mag, mag), rng.range(-mag, mag));
      m.at(i, j) = z;
      m.at(j, i) = conj(z);
    }
  }
  return m;
}

GaussMatrix random_admissible_hamiltonian(Rng& rng, std::size_t dim) {
  GaussMatrix m(dim);
  std::vector<long long> budget(dim, 2);  // Gershgorin row budget
  for (std::size_t i = 0; i < dim; ++i) {
    if (rng.coin()) {
      const long long d = rng.range(-budget[i], budget[i]);
      m.at(i, i) = GaussianInt(d);
      budget[i] -= std::abs(d);
    }
  }
  const std::size_t attempts = dim * dim;
  for (std::size_t t = 0; t < attempts; ++t) {
    const std::size_t i = rng.below(dim);
    const std::size_t j = rng.below(dim);
    if (i == j) continue;
    const std::size_t a = std::min(i, j), b = std::max(i, j);
    if (budget[a] < 1 || budget[b] < 1 || !m.at(a, b).is_zero()) continue;
    static const GaussianInt units[4] = {GaussianInt(1), GaussianInt(-1),
                                         GaussianInt(0, 1), GaussianInt(0, -1)};
    const GaussianInt& u = units[rng.below(4)];
    m.at(a, b) = u;
    m.at(b, a) = conj(u);
    budget[a] -= 1;
    budget[b] -= 1;
  }
  return m;
}

GaussMatrix random_strictly_admissible_hamiltonian(Rng& rng, std::size_t dim,
                                                   double margin) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    GaussMatrix m = random_admissible_hamiltonian(rng, dim);
    SpectralData sd = spectrum(split_hamiltonian(m));
    if (sd.max_abs_eigenvalue < 2.0 - margin) return m;
  }
  GaussMatrix m(dim);  // diagonal fallback, trivially strict
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = GaussianInt(rng.range(-1, 1));
  return m;
}

}  // namespace hca
