#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hca/action.hpp"
#include "hca/history.hpp"
#include "hca/random_gen.hpp"

using namespace hca;

namespace {

HamiltonianSpec sx_spec() {
  GaussMatrix h(2);
  h.at(0, 1) = GaussianInt(1);
  h.at(1, 0) = GaussianInt(1);
  return split_hamiltonian(h);
}

GaussVector e(std::size_t dim, std::size_t k) {
  GaussVector v(dim);
  v[k] = GaussianInt(1);
  return v;
}

}  // namespace

TEST_CASE("one-component run") {
  GaussMatrix h(1);
  h.at(0, 0) = GaussianInt(2);
  CAHistory hist = evolve({GaussianInt(1)}, {GaussianInt(1)}, split_hamiltonian(h), 3);
  CHECK(hist.states[2][0] == GaussianInt(1, -2));   // 1 - 2i*1
  CHECK(hist.states[3][0] == GaussianInt(-3, -2));  // 1 - 2i*(1-2i)
  CHECK(hist.solution);
  CHECK(satisfies_update_rule(hist));
}

TEST_CASE("two-state reference sequence") {
  CAHistory hist = evolve(e(2, 0), e(2, 1), sx_spec(), 12);
  const GaussianInt i(0, 1), one(1);
  CHECK(hist.states[2] == scaled(one - i, e(2, 0)));
  CHECK(hist.states[3] == scaled(-i, e(2, 1)));
  CHECK(hist.states[4] == scaled(-i, e(2, 0)));
  CHECK(hist.states[5] == scaled(-(one + i), e(2, 1)));
  CHECK(hist.states[6] == scaled(-one, e(2, 0)));
  CHECK(hist.states[7] == scaled(-one, e(2, 1)));
  CHECK(hist.states[12] == e(2, 0));

  CAHistory bad = hist;
  bad.states[5][0] += GaussianInt(1);
  CHECK_FALSE(satisfies_update_rule(bad));
}

TEST_CASE("update is exactly linear") {
  Rng rng(2024);
  for (int t = 0; t < 30; ++t) {
    const std::size_t dim = 1 + rng.below(5);
    HamiltonianSpec h = split_hamiltonian(random_self_adjoint(rng, dim));
    GaussVector a0 = random_gauss_vector(rng, dim), a1 = random_gauss_vector(rng, dim);
    GaussVector b0 = random_gauss_vector(rng, dim), b1 = random_gauss_vector(rng, dim);
    GaussianInt ca(rng.range(-4, 4), rng.range(-4, 4));
    GaussianInt cb(rng.range(-4, 4), rng.range(-4, 4));
    CAHistory ha = evolve(a0, a1, h, 12);
    CAHistory hb = evolve(b0, b1, h, 12);
    CAHistory hc = evolve(add(scaled(ca, a0), scaled(cb, b0)),
                          add(scaled(ca, a1), scaled(cb, b1)), h, 12);
    for (std::size_t n = 0; n <= 12; ++n)
      CHECK(add(scaled(ca, ha.states[n]), scaled(cb, hb.states[n])) == hc.states[n]);
  }
}

TEST_CASE("split integer pair runs match the complex run") {
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    const std::size_t dim = 1 + rng.below(4);
    HamiltonianSpec h = split_hamiltonian(random_self_adjoint(rng, dim));
    GaussVector psi0 = random_gauss_vector(rng, dim), psi1 = random_gauss_vector(rng, dim);
    CAHistory direct = evolve(psi0, psi1, h, 10);
    XPHistory split = evolve_xp(re_part(psi0), im_part(psi0), re_part(psi1),
                                im_part(psi1), h, 10);
    CAHistory glued = recombine(split);
    CHECK(glued.states == direct.states);
    CHECK(glued.solution);
  }
}

TEST_CASE("input validation") {
  HamiltonianSpec h = sx_spec();
  CHECK_THROWS_AS(evolve(e(2, 0), e(3, 0), h, 4), std::invalid_argument);
  CHECK_THROWS_AS(evolve(e(3, 0), e(3, 0), h, 4), std::invalid_argument);
  CHECK_THROWS_AS(evolve(e(2, 0), e(2, 1), h, 0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(e(2, 0), e(2, 1), h, kMaxHistoryEntries), std::invalid_argument);
}

TEST_CASE("per-step action summands vanish exactly on solutions") {
  Rng rng(5150);
  for (int t = 0; t < 25; ++t) {
    const std::size_t dim = 1 + rng.below(6);
    HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
    CAHistory hist = evolve(random_gauss_vector(rng, dim), random_gauss_vector(rng, dim),
                            h, 20);
    ActionValue av = action_eval(hist, 1, hist.last_index() - 1);
    CHECK(av.total.is_zero());
    for (const auto& s : av.per_step) CHECK(s.is_zero());
  }
}

TEST_CASE("action summands see a broken slice") {
  CAHistory hist = evolve(e(2, 0), e(2, 1), sx_spec(), 10);
  hist.states[5][0] += GaussianInt(2, 0);
  hist.solution = false;
  ActionValue av = action_eval(hist, 1, hist.last_index() - 1);
  bool some_nonzero = false;
  for (const auto& s : av.per_step) some_nonzero = some_nonzero || !s.is_zero();
  CHECK(some_nonzero);
}

TEST_CASE("variation coefficient vanishes exactly on solutions") {
  Rng rng(31337);
  for (int t = 0; t < 25; ++t) {
    const std::size_t dim = 1 + rng.below(5);
    HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
    CAHistory hist = evolve(random_gauss_vector(rng, dim), random_gauss_vector(rng, dim),
                            h, 12);
    StationarityReport rep = stationarity_scan(hist);
    CHECK(rep.stationary());
    CHECK(stationarity_check(hist, 6, rng.next_u64()).stationary());
  }
}

TEST_CASE("finite differences reproduce the variation coefficient") {
  Rng rng(404);
  HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, 3));
  CAHistory hist = evolve(random_gauss_vector(rng, 3), random_gauss_vector(rng, 3), h, 12);
  hist.states[6][1] += GaussianInt(2, -1);  // force nonzero coefficients nearby
  hist.solution = false;
  for (std::size_t n : {std::size_t{5}, std::size_t{6}, std::size_t{7}}) {
    for (std::size_t comp = 0; comp < 3; ++comp) {
      VariationCoefficient vc = variation_coefficient(hist, n, comp);
      for (GaussianInt delta : {GaussianInt(1), GaussianInt(0, 1), GaussianInt(3, -2)}) {
        CHECK(action_variation(hist, n, comp, delta, true) == vc.wrt_conj);
        CHECK(action_variation(hist, n, comp, delta, false) == vc.wrt_plain);
      }
    }
  }
}

TEST_CASE("corruption is localized by the scan") {
  Rng rng(808);
  for (int t = 0; t < 20; ++t) {
    const std::size_t dim = 2 + rng.below(3);
    HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
    CAHistory hist = evolve(random_gauss_vector(rng, dim), random_gauss_vector(rng, dim),
                            h, 16);
    const std::size_t m = 2 + rng.below(13);
    hist.states[m][rng.below(dim)] += GaussianInt(1, 1);
    hist.solution = false;
    StationarityReport rep = stationarity_scan(hist);
    CHECK_FALSE(rep.stationary());
    bool lo = false, hi = false;
    for (const auto& v : rep.violations) {
      CHECK(v.n + 1 >= m);  // v.n >= m-1 without unsigned underflow
      CHECK(v.n <= m + 1);
      lo = lo || v.n == m - 1;
      hi = hi || v.n == m + 1;
    }
    CHECK(lo);
    CHECK(hi);
  }
}
