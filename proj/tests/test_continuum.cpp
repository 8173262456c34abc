#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hca/conserve.hpp"
#include "hca/errors.hpp"
#include "hca/random_gen.hpp"
#include "hca/sampling.hpp"
#include "hca/spectral.hpp"

using namespace hca;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("sinc values") {
  CHECK(sinc_pi(0.0) == 1.0);
  CHECK(sinc_pi(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sinc_pi(0.5) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(sinc_pi(-0.5) == sinc_pi(0.5));

  CHECK(sinc_pi_dd(0.0) == doctest::Approx(-kPi * kPi / 3.0).epsilon(1e-14));
  // Both branches agree around the series cutoff (|pi x| = 0.1).
  for (double x : {0.031, 0.0318, 0.0319, 0.033}) {
    const double u = kPi * x;
    const double direct =
        kPi * kPi * ((2.0 - u * u) * std::sin(u) - 2.0 * u * std::cos(u)) / (u * u * u);
    CHECK(sinc_pi_dd(x) == doctest::Approx(direct).epsilon(1e-10));
  }
  // Exact zero crossing pattern of the interpolant's second derivative at
  // integers: sinc''(k) = 2 (-1)^k / k^2 for k != 0.
  CHECK(sinc_pi_dd(1.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sinc_pi_dd(2.0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(sinc_pi_dd(3.0) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("reconstruction is exact at clock points") {
  Rng rng(2718);
  HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, 3));
  CAHistory hist = evolve(random_gauss_vector(rng, 3), random_gauss_vector(rng, 3), h, 32);
  ContinuumSignal sig(hist);
  CHECK(sig.dim() == 3);
  for (std::size_t n = 9; n <= 23; ++n) {
    auto v = sig.reconstruct(static_cast<double>(n) * sig.scale());
    CHECK(v.value == to_complex(hist.states[n]));
    CHECK(v.tail_estimate == 0.0);
  }
}

TEST_CASE("guard band is enforced") {
  StationaryState st = make_stationary(1.0, {Complex(1, 0)});
  ContinuumSignal sig(stationary_history(st, 32), 1.0);
  CHECK_THROWS_AS(sig.reconstruct(1.0), PreconditionError);
  CHECK_THROWS_AS(sig.reconstruct(30.0), PreconditionError);
  CHECK_NOTHROW(sig.reconstruct(15.5));
  CHECK_THROWS_AS(sig.second_derivative(1.0), PreconditionError);
}

TEST_CASE("dispersion inverts the band relation") {
  CHECK(dispersion(1.0) == doctest::Approx(kPi / 6.0).epsilon(1e-14));
  CHECK(dispersion(0.0) == 0.0);
  CHECK(dispersion(2.0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(dispersion(-1.0) == doctest::Approx(-kPi / 6.0).epsilon(1e-14));
  for (double le : {0.1, 0.7, 1.3, 1.9})
    CHECK(2.0 * std::sin(dispersion(le)) == doctest::Approx(le).epsilon(1e-13));
  CHECK_THROWS_AS(dispersion(2.5), PreconditionError);
  CHECK_THROWS_AS(dispersion(-2.01), PreconditionError);
}

TEST_CASE("stationary sequences solve the sampled clock equation") {
  for (double le : {0.5, 1.0, -1.2}) {
    StationaryState st = make_stationary(le, {Complex(0.8, 0.6)});
    std::vector<CVec> slices = stationary_history(st, 400);
    ContinuumSignal sig(slices, 1.0);
    CMat h(1, 1);
    h.at(0, 0) = Complex(le, 0.0);
    // At clock points the residual telescopes exactly up to rounding.
    for (double t : {150.0, 200.0, 251.0})
      CHECK(norm(clock_equation_residual(sig, h, t)) < 1e-12);
    // Between clock points it is truncation-limited but still small.
    CHECK(norm(clock_equation_residual(sig, h, 200.25)) < 2e-2);
  }
}

TEST_CASE("interpolated charge matches the discrete one at clock points") {
  Rng rng(1618);
  HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, 2));
  CAHistory hist = evolve(random_gauss_vector(rng, 2), random_gauss_vector(rng, 2), h, 48);
  ContinuumSignal sig(hist);
  for (std::size_t n = 13; n <= 35; ++n) {
    const double qc = continuum_charge(sig, static_cast<double>(n) * sig.scale());
    const double qs = q_symmetrized(hist, n).value();
    CHECK(qc == doctest::Approx(qs).epsilon(1e-12));
  }
}

TEST_CASE("stationary charge approaches cos(lE) off the grid") {
  StationaryState st = make_stationary(1.0, {Complex(1, 0)});
  ContinuumSignal sig(stationary_history(st, 2048), 1.0);
  const double want = std::cos(st.energy_l);
  for (double t : {1000.3, 1023.5, 1070.9})
    CHECK(continuum_charge(sig, t) == doctest::Approx(want).epsilon(5e-3));
}

TEST_CASE("tail estimate shrinks as the window grows") {
  StationaryState st = make_stationary(1.0, {Complex(1, 0)});
  double prev_tail = 1e300;
  double prev_err = 1e300;
  for (std::size_t w : {std::size_t{128}, std::size_t{512}, std::size_t{2048}}) {
    ContinuumSignal sig(stationary_history(st, w), 1.0);
    const double t = std::floor((w - 1) / 2.0) + 0.5;
    auto v = sig.reconstruct(t);
    const Complex analytic = std::exp(Complex(0.0, -st.energy_l * t));
    const double err = std::abs(v.value[0] - analytic);
    CHECK(v.tail_estimate < prev_tail);
    CHECK(err < prev_err);
    prev_tail = v.tail_estimate;
    prev_err = err;
  }
  CHECK(prev_err < 2e-3);
}

TEST_CASE("grid reconstruction validates before running") {
  StationaryState st = make_stationary(0.5, {Complex(1, 0)});
  ContinuumSignal sig(stationary_history(st, 64), 1.0);
  std::vector<double> ts{20.0, 25.5, 31.0};
  auto grid = reconstruct_grid(sig, ts);
  CHECK(grid.size() == 3);
  CHECK(grid == reconstruct_grid_serial(sig, ts));
  std::vector<double> bad{20.0, 2.0};
  CHECK_THROWS_AS(reconstruct_grid(sig, bad), PreconditionError);
}

TEST_CASE("signal construction rejects bad input") {
  CHECK_THROWS_AS(ContinuumSignal(std::vector<CVec>{}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ContinuumSignal({{Complex(1, 0)}}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ContinuumSignal({{Complex(1, 0)}, {Complex(1, 0), Complex(0, 0)}}, 1.0),
                  std::invalid_argument);
}
