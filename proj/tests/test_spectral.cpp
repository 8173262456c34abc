#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hca/errors.hpp"
#include "hca/random_gen.hpp"
#include "hca/spectral.hpp"

using namespace hca;

namespace {

GaussMatrix sx(long long w = 1) {
  GaussMatrix h(2);
  h.at(0, 1) = GaussianInt(w);
  h.at(1, 0) = GaussianInt(w);
  return h;
}

}  // namespace

TEST_CASE("known spectra") {
  SpectralData a = spectrum(split_hamiltonian(sx()));
  REQUIRE(a.eigenvalues.size() == 2);
  CHECK(a.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(a.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.admissible);
  CHECK(a.reconstruction_residual < 1e-9);

  GaussMatrix c(2);
  c.at(0, 0) = GaussianInt(1);
  c.at(0, 1) = GaussianInt(0, 1);
  c.at(1, 0) = GaussianInt(0, -1);
  c.at(1, 1) = GaussianInt(1);
  SpectralData b = spectrum(split_hamiltonian(c));
  CHECK(b.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.max_abs_eigenvalue == doctest::Approx(2.0));
  CHECK(b.admissible);

  SpectralData w = spectrum(split_hamiltonian(sx(3)));
  CHECK(w.eigenvalues[0] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK_FALSE(w.admissible);
}

TEST_CASE("eigenvector reconstruction on random matrices") {
  Rng rng(888);
  for (int t = 0; t < 20; ++t) {
    const std::size_t dim = 2 + rng.below(11);
    SpectralData sd = spectrum(split_hamiltonian(random_self_adjoint(rng, dim)));
    CHECK(sd.eigenvalues.size() == dim);
    CHECK(sd.reconstruction_residual < 1e-8);
    for (std::size_t k = 1; k < dim; ++k)
      CHECK(sd.eigenvalues[k - 1] <= sd.eigenvalues[k] + 1e-12);
  }
}

TEST_CASE("modal solution matches exact iteration") {
  Rng rng(3141);
  for (int t = 0; t < 25; ++t) {
    const std::size_t dim = 2 + rng.below(5);
    HamiltonianSpec h =
        split_hamiltonian(random_strictly_admissible_hamiltonian(rng, dim));
    GaussVector psi0 = random_gauss_vector(rng, dim), psi1 = random_gauss_vector(rng, dim);
    CAHistory hist = evolve(psi0, psi1, h, 200);
    SpectralData sd = spectrum(h);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7},
                          std::size_t{100}, std::size_t{200}}) {
      CVec cf = closed_form_state(sd, psi0, psi1, static_cast<long long>(n));
      CVec ex = to_complex(hist.states[n]);
      CHECK(norm(sub(cf, ex)) <= 1e-10 * std::max(1.0, norm(ex)));
    }
  }
}

TEST_CASE("band-edge modes are rejected, not mangled") {
  GaussMatrix edge = sx(2);  // eigenvalues exactly -2, 2
  SpectralData sd = spectrum(split_hamiltonian(edge));
  CHECK(sd.admissible);  // closed (boundary) case still admissible
  GaussVector psi0{GaussianInt(1), GaussianInt(0)};
  GaussVector psi1{GaussianInt(0), GaussianInt(1)};
  CHECK_THROWS_AS(closed_form_state(sd, psi0, psi1, 5), PreconditionError);
}

TEST_CASE("transfer matrices compose exactly") {
  Rng rng(1729);
  for (int t = 0; t < 10; ++t) {
    const std::size_t dim = 1 + rng.below(4);
    HamiltonianSpec h = split_hamiltonian(random_self_adjoint(rng, dim));
    std::vector<GaussMatrix> ts = transfer_matrices(h, 6);
    CHECK(ts[0] == GaussMatrix::identity(dim));
    CHECK(ts[1] == GaussMatrix(dim));
    CHECK(ts[2] == GaussMatrix::identity(dim));

    CAHistory hist = evolve(random_gauss_vector(rng, dim), random_gauss_vector(rng, dim),
                            h, 14);
    for (std::size_t m : {std::size_t{0}, std::size_t{3}, std::size_t{9}}) {
      CompositionReport rep = composition_check(hist, m);
      CHECK(rep.holds);
    }
  }
}

TEST_CASE("growth rate") {
  CHECK(growth_rate(spectrum(split_hamiltonian(sx()))) == 0.0);
  const double g = growth_rate(spectrum(split_hamiltonian(sx(3))));
  CHECK(g == doctest::Approx(std::acosh(1.5)).epsilon(1e-12));
}

TEST_CASE("cycle detection") {
  HamiltonianSpec h = split_hamiltonian(sx());
  GaussVector e0{GaussianInt(1), GaussianInt(0)};
  GaussVector e1{GaussianInt(0), GaussianInt(1)};
  CycleReport rep = detect_cycle(e0, e1, h, 40);
  REQUIRE(rep.period.has_value());
  REQUIRE(rep.antiperiod.has_value());
  CHECK(*rep.antiperiod == 6);
  CHECK(*rep.period == 12);

  HamiltonianSpec zero = split_hamiltonian(GaussMatrix(2));
  CycleReport still = detect_cycle(e0, e1, zero, 10);
  REQUIRE(still.period.has_value());
  CHECK(*still.period == 2);

  // Growing run has no cycle within the horizon.
  HamiltonianSpec wide = split_hamiltonian(sx(3));
  CycleReport none = detect_cycle(e0, e1, wide, 50);
  CHECK_FALSE(none.period.has_value());
}

TEST_CASE("basis-ray scan") {
  CHECK(is_gauss_multiple({GaussianInt(2, 2), GaussianInt(0)},
                          {GaussianInt(1), GaussianInt(0)}));
  CHECK(is_gauss_multiple({GaussianInt(0), GaussianInt(0)},
                          {GaussianInt(1), GaussianInt(0)}));
  CHECK_FALSE(is_gauss_multiple({GaussianInt(1), GaussianInt(1)},
                                {GaussianInt(1), GaussianInt(0)}));
  // Non-integer ratio is still a multiple in the lattice sense only when exact.
  CHECK(is_gauss_multiple({GaussianInt(3, 1), GaussianInt(6, 2)},
                          {GaussianInt(1), GaussianInt(2)}));

  HamiltonianSpec h = split_hamiltonian(sx());
  GaussVector e0{GaussianInt(1), GaussianInt(0)};
  GaussVector e1{GaussianInt(0), GaussianInt(1)};
  CAHistory hist = evolve(e0, e1, h, 12);
  CycleReport ont = ontology_scan(hist, {e0, e1});
  CHECK(ont.ontological);

  CAHistory mixed = evolve(e0, GaussVector{GaussianInt(1), GaussianInt(1)}, h, 6);
  CycleReport bad = ontology_scan(mixed, {e0, e1});
  CHECK_FALSE(bad.ontological);
  REQUIRE(bad.first_superposition_index.has_value());
  CHECK(*bad.first_superposition_index == 1);

  CHECK_THROWS_AS(ontology_scan(hist, {}), std::invalid_argument);
}
