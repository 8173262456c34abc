#include "hca/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "hca/action.hpp"
#include "hca/conserve.hpp"
#include "hca/lattice.hpp"
#include "hca/multitime.hpp"
#include "hca/random_gen.hpp"
#include "hca/sampling.hpp"
#include "hca/spectral.hpp"

namespace hca {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
};

GaussMatrix pauli_x_like() {
  GaussMatrix h(2);
  h.at(0, 1) = GaussianInt(1);
  h.at(1, 0) = GaussianInt(1);
  return h;
}

GaussVector basis_vec(std::size_t dim, std::size_t k) {
  GaussVector v(dim);
  v[k] = GaussianInt(1);
  return v;
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(6);
  ss << x;
  return ss.str();
}

// ---- criterion bodies ----------------------------------------------------

CriterionResult run_reference_two_state(const SuiteOptions& opt) {
  CriterionResult r{1, "two-state-reference-run", "pass", "", 0};
  if (opt.max_steps < 12) {
    r.status = "skip";
    r.detail = "needs 12 steps";
    return r;
  }
  Check c;
  const GaussMatrix hm = opt.fixture_h ? *opt.fixture_h : pauli_x_like();
  const GaussVector psi0 = opt.fixture_psi0 ? *opt.fixture_psi0 : basis_vec(2, 0);
  const GaussVector psi1 = opt.fixture_psi1 ? *opt.fixture_psi1 : basis_vec(2, 1);
  HamiltonianSpec h = split_hamiltonian(hm);
  CAHistory hist = evolve(psi0, psi1, h, 12);

  const GaussianInt one(1), i(0, 1);
  const GaussVector want[] = {
      scaled(one - i, psi0),        // n = 2
      scaled(-i, psi1),             // n = 3
      scaled(-i, psi0),             // n = 4
      scaled(-(one + i), psi1),     // n = 5
      scaled(-one, psi0),           // n = 6
      scaled(-one, psi1),           // n = 7
  };
  for (std::size_t k = 0; k < 6; ++k)
    c.require(hist.states[k + 2] == want[k],
              "slice " + std::to_string(k + 2) + " differs from the reference sequence");

  CycleReport cyc = detect_cycle(psi0, psi1, h, std::min<std::size_t>(opt.max_steps, 64));
  c.require(cyc.antiperiod && *cyc.antiperiod == 6, "antiperiod 6 not found");
  c.require(cyc.period && *cyc.period == 12, "period 12 not found");

  CycleReport ont = ontology_scan(hist, {basis_vec(2, 0), basis_vec(2, 1)});
  c.require(ont.ontological, "run left the reference basis rays");
  c.require(!ont.first_superposition_index, "unexpected superposition index");

  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "sequence, antiperiod 6, period 12, basis-aligned";
  }
  return r;
}

CriterionResult run_action_vanishes(const SuiteOptions& opt) {
  CriterionResult r{2, "action-vanishes-on-solutions", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0x2222u);
  const std::size_t steps = std::min<std::size_t>(40, std::max<std::size_t>(opt.max_steps, 4));
  for (std::size_t t = 0; t < 100 && c.ok; ++t) {
    Rng rng = root.split(t);
    const std::size_t dim = 1 + rng.below(8);
    HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
    CAHistory hist = evolve(random_gauss_vector(rng, dim), random_gauss_vector(rng, dim),
                            h, steps);
    ActionValue av = action_eval(hist, 1, hist.last_index() - 1);
    c.require(av.total.is_zero(), "windowed action is nonzero on a solution");
    for (const auto& s : av.per_step)
      c.require(s.is_zero(), "a per-step summand is nonzero on a solution");
  }
  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "100 random admissible runs, every summand exactly zero";
  }
  return r;
}

CriterionResult run_stationarity(const SuiteOptions& opt) {
  CriterionResult r{3, "variation-detects-corruption", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0x3333u);
  const std::size_t steps = std::min<std::size_t>(24, std::max<std::size_t>(opt.max_steps, 6));
  for (std::size_t t = 0; t < 100 && c.ok; ++t) {
    Rng rng = root.split(t);
    const std::size_t dim = 2 + rng.below(5);
    HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
    CAHistory hist = evolve(random_gauss_vector(rng, dim), random_gauss_vector(rng, dim),
                            h, steps);
    StationarityReport clean = stationarity_check(hist, 8, rng.next_u64());
    c.require(clean.stationary(), "variation coefficient nonzero on a clean solution");

    const std::size_t m = 2 + rng.below(hist.last_index() - 3);
    const std::size_t comp = rng.below(dim);
    CAHistory bad = hist;
    bad.states[m][comp] += GaussianInt(1, 1);
    bad.solution = false;
    StationarityReport scan = stationarity_scan(bad);
    c.require(!scan.stationary(), "corruption went undetected");
    bool near_lo = false, near_hi = false;
    for (const auto& v : scan.violations) {
      const std::size_t lo = m >= 1 ? m - 1 : 0;
      c.require(v.n >= lo && v.n <= m + 1, "violation leaked away from the corrupted slice");
      if (v.n == m - 1) near_lo = true;
      if (v.n == m + 1) near_hi = true;
    }
    c.require(near_lo && near_hi, "corruption missing from an adjacent slice");
  }
  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "100 corrupt-and-detect runs, violations localized to the slice +-1";
  }
  return r;
}

CriterionResult run_charge_constancy(const SuiteOptions& opt) {
  CriterionResult r{4, "two-point-charge-constancy", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0x4444u);
  const std::size_t steps = std::min<std::size_t>(10000, std::max<std::size_t>(opt.max_steps, 8));
  for (std::size_t t = 0; t < 50 && c.ok; ++t) {
    Rng rng = root.split(t);
    const std::size_t dim = 2 + rng.below(7);
    const HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
    CAHistory hist = evolve(random_gauss_vector(rng, dim, 2), random_gauss_vector(rng, dim, 2),
                            h, steps);
    const GaussMatrix ident = GaussMatrix::identity(dim);
    const GaussMatrix h2 = mat_mul(h.H, h.H);
    const GaussMatrix poly = mat_add(scaled(GaussianInt(3), ident),
                                     mat_add(scaled(GaussianInt(2), h.H), h2));
    for (const GaussMatrix* g : {&ident, &h.H, &poly}) {
      TheoremReport rep = verify_conservation(hist, *g);
      c.require(rep.commutes, "commuting observable reported as non-commuting");
      c.require(!rep.first_violation_n, "conserved charge drifted");
      c.require(rep.balance_holds, "two-sided balance violated on a solution");
      c.require(rep.series.is_real, "self-adjoint charge grew an imaginary part");
    }
  }

  // Non-commuting control: the distinct precondition signal plus visible drift.
  HamiltonianSpec h = split_hamiltonian(pauli_x_like());
  GaussMatrix sz(2);
  sz.at(0, 0) = GaussianInt(1);
  sz.at(1, 1) = GaussianInt(-1);
  GaussVector a = basis_vec(2, 0);
  GaussVector b{GaussianInt(1), GaussianInt(1)};
  CAHistory drift = evolve(a, b, h, std::min<std::size_t>(steps, 16));
  TheoremReport rep = verify_conservation(drift, sz);
  c.require(!rep.commutes, "non-commuting observable not flagged");
  c.require(rep.first_violation_n.has_value(), "non-commuting charge failed to drift");

  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "50 runs x " + std::to_string(steps) + " steps x {1, H, 3+2H+H^2} exactly constant";
  }
  return r;
}

CriterionResult run_closed_form(const SuiteOptions& opt) {
  CriterionResult r{5, "modal-closed-form-matches-iteration", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0x5555u);
  const std::size_t steps = std::min<std::size_t>(1000, std::max<std::size_t>(opt.max_steps, 8));
  double worst = 0;
  for (std::size_t t = 0; t < 100 && c.ok; ++t) {
    Rng rng = root.split(t);
    const std::size_t dim = 2 + rng.below(15);
    HamiltonianSpec h =
        split_hamiltonian(random_strictly_admissible_hamiltonian(rng, dim));
    GaussVector psi0 = random_gauss_vector(rng, dim);
    GaussVector psi1 = random_gauss_vector(rng, dim);
    CAHistory hist = evolve(psi0, psi1, h, steps);
    SpectralData sd = spectrum(h);
    c.require(sd.admissible, "strict generator produced an inadmissible matrix");
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, steps / 2, steps - 1, steps}) {
      CVec cf = closed_form_state(sd, psi0, psi1, static_cast<long long>(n));
      CVec ex = to_complex(hist.states[n]);
      const double scale = std::max(1.0, norm(ex));
      const double dev = norm(sub(cf, ex)) / scale;
      worst = std::max(worst, dev);
      c.require(dev <= 1e-9, "closed form deviates beyond 1e-9 at n=" + std::to_string(n));
    }
    if (t < 5) {
      CAHistory short_hist = evolve(psi0, psi1, h, std::min<std::size_t>(steps, 32));
      CompositionReport comp = composition_check(short_hist, rng.below(short_hist.last_index()));
      c.require(comp.holds, "transfer-matrix composition failed exactly");
    }
  }
  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "100 spectra, worst relative deviation " + fmt(worst);
  }
  return r;
}

CriterionResult run_dispersion(const SuiteOptions& opt) {
  CriterionResult r{6, "dispersion-between-band-edges", "pass", "", 0};
  (void)opt;
  Check c;
  double worst = 0;
  for (int k = -2000; k <= 2000; ++k) {
    const double le = static_cast<double>(k) * 1e-3;
    const double e = dispersion(le);
    const double resid = std::abs(2.0 * std::sin(e) - le);
    worst = std::max(worst, resid);
    if (resid > 1e-12) {
      c.require(false, "inversion residual " + fmt(resid) + " at l*eps=" + fmt(le));
      break;
    }
  }
  c.require(std::abs(dispersion(2.0) - std::asin(1.0)) <= 1e-12, "upper band edge off pi/2");
  c.require(std::abs(dispersion(-2.0) + std::asin(1.0)) <= 1e-12, "lower band edge off -pi/2");

  // Small-argument expansion lE = le/2 + (le)^3/48 + O(le^5).
  for (double le : {0.05, 0.1, 0.2, 0.4}) {
    const double e = dispersion(le);
    const double err = std::abs(e - le / 2.0 - le * le * le / 48.0);
    c.require(err <= 0.0026 * std::pow(le, 5) + 1e-15,
              "cubic expansion off at l*eps=" + fmt(le));
  }

  // Single-mode stationary slices satisfy the discrete update to rounding.
  for (double le : {0.0, 0.5, 1.0, -1.5, 2.0}) {
    StationaryState st = make_stationary(le, {Complex(1, 0)});
    std::vector<CVec> s = stationary_history(st, 64);
    double resid = 0;
    for (std::size_t n = 1; n + 1 < s.size(); ++n)
      resid = std::max(resid, std::abs(s[n + 1][0] - s[n - 1][0] + Complex(0, le) * s[n][0]));
    c.require(resid <= 1e-12, "stationary residual " + fmt(resid) + " at l*eps=" + fmt(le));
  }

  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "4001-point inversion within 1e-12, band edges at +-pi/2";
  }
  return r;
}

CriterionResult run_reconstruction(const SuiteOptions& opt) {
  CriterionResult r{7, "clock-grid-reconstruction", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0x7777u);

  // Exactness at clock points and charge agreement, on an exact solution.
  {
    Rng rng = root.split(1);
    HamiltonianSpec h = split_hamiltonian(random_strictly_admissible_hamiltonian(rng, 3));
    CAHistory hist = evolve(random_gauss_vector(rng, 3), random_gauss_vector(rng, 3), h,
                            std::min<std::size_t>(64, std::max<std::size_t>(opt.max_steps, 8)));
    ContinuumSignal sig(hist);
    const std::size_t n_lo = hist.states.size() / 4 + 1;
    const std::size_t n_hi = 3 * hist.states.size() / 4 - 1;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      auto val = sig.reconstruct(static_cast<double>(n) * sig.scale());
      CVec exact = to_complex(hist.states[n]);
      c.require(val.value == exact, "reconstruction not exact at a clock point");
      c.require(val.tail_estimate == 0.0, "clock-point tail estimate not zero");
      const double qc = continuum_charge(sig, static_cast<double>(n) * sig.scale());
      const double qe = q_symmetrized(hist, n).value();
      c.require(std::abs(qc - qe) <= 1e-12 * std::max(1.0, std::abs(qe)),
                "charge mismatch at a clock point");
    }
  }

  // Residual at a midpoint shrinks as the window grows.
  {
    StationaryState st = make_stationary(1.0, {Complex(1, 0)});
    CMat h(1, 1);
    h.at(0, 0) = Complex(1.0, 0);
    double prev = 1e300;
    double last = 0;
    for (std::size_t w : {std::size_t{256}, std::size_t{512}, std::size_t{1024},
                          std::size_t{2048}, std::size_t{4096}}) {
      ContinuumSignal sig(stationary_history(st, w), 1.0);
      const double t = std::floor(static_cast<double>(w - 1) / 2.0) + 0.5;
      const double resid = norm(clock_equation_residual(sig, h, t));
      c.require(resid < prev, "midpoint residual did not shrink with the window");
      prev = resid;
      last = resid;
    }
    c.require(last <= 1e-3, "midpoint residual stuck at " + fmt(last));

    // Charge between clock points approaches cos(lE).
    ContinuumSignal sig(stationary_history(st, 4096), 1.0);
    const double want = std::cos(st.energy_l);
    double worst = 0;
    for (double t : {2047.3, 2047.5, 2048.7}) {
      worst = std::max(worst, std::abs(continuum_charge(sig, t) - want));
    }
    c.require(worst <= 5e-3, "stationary charge off cos(lE) by " + fmt(worst));
  }

  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "exact at clock points; midpoint residual shrinks over 5 windows";
  }
  return r;
}

CriterionResult run_many_clock(const SuiteOptions& opt) {
  CriterionResult r{8, "many-clock-closure", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0x8888u);

  // Corrected product rule: exact identity, and the naive rule's failure.
  for (std::size_t t = 0; t < 50 && c.ok; ++t) {
    Rng rng = root.split(t);
    std::vector<BigInt> a(16), b(16);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = rng.range(-9, 9);
      b[i] = rng.range(-9, 9);
    }
    for (std::size_t n = 1; n + 1 < a.size(); ++n) {
      LeibnizReport rep = leibniz_check(a, b, n);
      c.require(rep.corrected_matches, "corrected product rule missed");
    }
  }
  {
    std::vector<BigInt> sq(8);
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = BigInt(i) * BigInt(i);
    LeibnizReport rep = leibniz_check(sq, sq, 2);
    c.require(rep.corrected_matches && !rep.naive_matches,
              "quadratic witness did not separate the rules");
  }

  const std::size_t steps = std::min<std::size_t>(7, std::max<std::size_t>(opt.max_steps, 4));
  for (std::size_t t = 0; t < 20 && c.ok; ++t) {
    Rng rng = root.split(1000 + t);
    std::vector<CAHistory> factors;
    for (int k = 0; k < 2; ++k) {
      const std::size_t dim = 2 + rng.below(2);
      HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, dim));
      factors.push_back(evolve(random_gauss_vector(rng, dim, 2),
                               random_gauss_vector(rng, dim, 2), h, steps));
    }
    MultiHistory prod = build_product(factors);
    for (const auto& z : eom_residual_map(prod))
      c.require(z.is_zero(), "product tensor violates the many-clock update");

    std::vector<std::pair<std::size_t, std::size_t>> window = {
        {1, prod.clocks[0] - 2}, {1, prod.clocks[1] - 2}};
    c.require(multi_action_eval(prod, window).is_zero(),
              "many-clock action nonzero on a product of solutions");

    std::vector<GaussMatrix> gs = {random_self_adjoint(rng, prod.dims[0]),
                                   random_self_adjoint(rng, prod.dims[1])};
    CorrelationReport corr = correlation_check(prod, gs);
    c.require(corr.product_applicable, "product tensor not recognized as a product");
    c.require(corr.factorizes, "pair charge failed to factorize on a product");
    c.require(corr.connected_all_zero, "connected part nonzero on a product");

    // Same-shape superposition stays a solution.
    std::vector<CAHistory> factors2;
    for (int k = 0; k < 2; ++k)
      factors2.push_back(evolve(random_gauss_vector(rng, factors[k].dim(), 2),
                                random_gauss_vector(rng, factors[k].dim(), 2),
                                factors[k].ham, steps));
    MultiHistory prod2 = build_product(factors2);
    MultiHistory sup = linear_combination(GaussianInt(1, 1), prod, GaussianInt(2, -1), prod2);
    for (const auto& z : eom_residual_map(sup))
      c.require(z.is_zero(), "superposed tensor violates the many-clock update");
  }

  // An entangled superposition carries a nonzero connected part somewhere.
  {
    HamiltonianSpec h = split_hamiltonian(pauli_x_like());
    const std::size_t n = std::max<std::size_t>(steps, 4);
    CAHistory h00 = evolve(basis_vec(2, 0), basis_vec(2, 1), h, n);
    CAHistory h11 = evolve(basis_vec(2, 1), basis_vec(2, 0), h, n);
    MultiHistory pa = build_product({h00, h00});
    MultiHistory pb = build_product({h11, h11});
    MultiHistory ent = linear_combination(GaussianInt(1), pa, GaussianInt(1), pb);
    GaussMatrix sz(2);
    sz.at(0, 0) = GaussianInt(1);
    sz.at(1, 1) = GaussianInt(-1);
    CorrelationReport corr = correlation_check(ent, {sz, sz});
    c.require(!corr.connected_all_zero, "entangled tensor shows no connected part");
  }

  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "products, superpositions, factorization and the corrected rule all exact";
  }
  return r;
}

CriterionResult run_uncertainty(const SuiteOptions& opt) {
  CriterionResult r{9, "lattice-uncertainty-floor", "pass", "", 0};
  Check c;

  LatticeOps ops = build_xp(40, 1.0);
  std::vector<UncertaintyReport> sweep = robertson_sweep(ops, 1000, opt.seed ^ 0x9999u);
  std::size_t robertson_ok = 0;
  for (const auto& rep : sweep)
    if (rep.robertson_holds) ++robertson_ok;
  c.require(robertson_ok == sweep.size(),
            std::to_string(sweep.size() - robertson_ok) + " states broke the exact bound");

  LatticeOps wide_ops = build_xp(96, 1.0);
  UncertaintyReport wide = uncertainty_report(wide_ops, gaussian_state(wide_ops, 8.0, 0.0));
  c.require(std::abs(wide.product - 0.5) <= 0.025,
            "wide packet product " + fmt(wide.product) + " not within 5% of 1/2");

  MinSearchResult search = min_dx_search(build_xp(16, 1.0));
  std::ostringstream note;
  if (search.found_saturating)
    note << "min dx at saturation " << fmt(search.dx_saturating) << " vs printed target "
         << fmt(search.target);
  else
    note << "no 2-4-site state saturates the printed bound (closest product/bound "
         << fmt(search.best_ratio) << "); printed target " << fmt(search.target);

  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "1000/1000 states obey the exact bound; wide packet at " +
               fmt(wide.product) + "; " + note.str();
  }
  return r;
}

CriterionResult run_linearity(const SuiteOptions& opt) {
  CriterionResult r{10, "update-rule-linearity", "pass", "", 0};
  if (opt.max_steps == 0) {
    r.status = "skip";
    r.detail = "evolution capped to zero steps";
    return r;
  }
  Check c;
  Rng root(opt.seed ^ 0xAAAAu);
  const std::size_t steps = std::min<std::size_t>(30, std::max<std::size_t>(opt.max_steps, 4));
  for (std::size_t t = 0; t < 100 && c.ok; ++t) {
    Rng rng = root.split(t);
    const std::size_t dim = 1 + rng.below(6);
    HamiltonianSpec h = split_hamiltonian(random_self_adjoint(rng, dim));
    GaussVector a0 = random_gauss_vector(rng, dim), a1 = random_gauss_vector(rng, dim);
    GaussVector b0 = random_gauss_vector(rng, dim), b1 = random_gauss_vector(rng, dim);
    GaussianInt ca(rng.range(-3, 3), rng.range(-3, 3));
    GaussianInt cb(rng.range(-3, 3), rng.range(-3, 3));
    CAHistory ha = evolve(a0, a1, h, steps);
    CAHistory hb = evolve(b0, b1, h, steps);
    CAHistory hc = evolve(add(scaled(ca, a0), scaled(cb, b0)),
                          add(scaled(ca, a1), scaled(cb, b1)), h, steps);
    for (std::size_t n = 0; n <= steps && c.ok; ++n) {
      GaussVector combo = add(scaled(ca, ha.states[n]), scaled(cb, hb.states[n]));
      c.require(combo == hc.states[n], "single-run evolution is not exactly linear");
    }
  }
  if (!c.ok) {
    r.status = "fail";
    r.detail = c.why.str();
  } else {
    r.detail = "100 random pairs evolve exactly linearly over " + std::to_string(steps) +
               " steps";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt) {
  using Body = CriterionResult (*)(const SuiteOptions&);
  struct Entry {
    int id;
    const char* name;
    Body body;
  };
  const Entry entries[] = {
      {1, "two-state-reference-run", run_reference_two_state},
      {2, "action-vanishes-on-solutions", run_action_vanishes},
      {3, "variation-detects-corruption", run_stationarity},
      {4, "two-point-charge-constancy", run_charge_constancy},
      {5, "modal-closed-form-matches-iteration", run_closed_form},
      {6, "dispersion-between-band-edges", run_dispersion},
      {7, "clock-grid-reconstruction", run_reconstruction},
      {8, "many-clock-closure", run_many_clock},
      {9, "lattice-uncertainty-floor", run_uncertainty},
      {10, "update-rule-linearity", run_linearity},
  };
  std::vector<CriterionResult> out;
  out.reserve(10);
  for (const Entry& e : entries) {
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = e.body(opt);
    } catch (const std::exception& ex) {
      r.status = "fail";
      r.detail = std::string("exception: ") + ex.what();
    }
    r.id = e.id;
    r.name = e.name;
    const auto t1 = Clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream ss;
  const char* tag = r.status == "pass" ? "PASS" : (r.status == "skip" ? "SKIP" : "FAIL");
  ss << "[" << tag << "] " << r.id << ". " << r.name << " ("
     << static_cast<long long>(r.millis + 0.5) << " ms) - " << r.detail;
  return ss.str();
}

}  // namespace hca
