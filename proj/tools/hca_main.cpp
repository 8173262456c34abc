#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "hca/acceptance.hpp"
#include "hca/action.hpp"
#include "hca/conserve.hpp"
#include "hca/errors.hpp"
#include "hca/io.hpp"
#include "hca/lattice.hpp"
#include "hca/multitime.hpp"
#include "hca/random_gen.hpp"
#include "hca/sampling.hpp"
#include "hca/spectral.hpp"

namespace {

using hca::Json;

constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSuiteFailed = 4;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Every file the command produced gets a sibling manifest with its checksum,
// so downstream consumers can verify byte-identical reruns.
void write_manifest(const std::vector<std::string>& paths) {
  if (paths.empty()) return;
  Json m;
  m["outputs"] = Json::array();
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary | std::ios::ate);
    Json e;
    e["path"] = p;
    e["bytes"] = in ? static_cast<long long>(in.tellg()) : -1;
    e["fnv1a64"] = hex64(hca::fnv1a64_file(p));
    m["outputs"].push_back(e);
  }
  std::ofstream out(paths.front() + ".manifest.json");
  out << m.dump(2) << "\n";
}

struct RunSpec {
  double l = 1.0;
  hca::GaussMatrix h{1};
  hca::GaussVector psi0, psi1;
  std::size_t steps = 32;
};

RunSpec parse_run_spec(const Json& j) {
  RunSpec rs;
  rs.h = hca::matrix_from_json(j.at("H"));
  rs.psi0 = hca::vector_from_json(j.at("psi0"));
  rs.psi1 = hca::vector_from_json(j.at("psi1"));
  rs.l = j.value("l", 1.0);
  rs.steps = j.value("steps", std::size_t{32});
  return rs;
}

hca::CAHistory evolve_spec(const RunSpec& rs) {
  return hca::evolve(rs.psi0, rs.psi1, hca::split_hamiltonian(rs.h), rs.steps, rs.l);
}

hca::CAHistory history_from_config(const Json& cfg) {
  if (cfg.contains("history"))
    return hca::read_history_file(cfg.at("history").get<std::string>());
  return evolve_spec(parse_run_spec(cfg));
}

std::string gauss_str(const hca::GaussianInt& z) { return hca::to_string(z); }

// ---- subcommand bodies ----------------------------------------------------

int cmd_evolve(const std::string& config, const std::string& out) {
  RunSpec rs = parse_run_spec(load_json_file(config));
  hca::CAHistory hist = evolve_spec(rs);
  std::cout << "dim " << hist.dim() << ", slices 0.." << hist.last_index() << "\n";
  std::cout << "final";
  for (const auto& z : hist.states.back()) std::cout << " " << gauss_str(z);
  std::cout << "\n";
  if (!out.empty()) {
    hca::write_history_file(out, hist);
    write_manifest({out});
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_conserve(const std::string& config) {
  Json cfg = load_json_file(config);
  hca::CAHistory hist = history_from_config(cfg);
  hca::GaussMatrix g = cfg.contains("g") ? hca::matrix_from_json(cfg.at("g"))
                                         : hca::GaussMatrix::identity(hist.dim());
  hca::TheoremReport rep = hca::verify_conservation(hist, g);
  std::cout << "commutes: " << (rep.commutes ? "yes" : "no") << "\n";
  std::cout << "real-valued: " << (rep.series.is_real ? "yes" : "no") << "\n";
  if (rep.first_violation_n)
    std::cout << "first drift at n=" << *rep.first_violation_n << "\n";
  else if (!rep.series.values.empty())
    std::cout << "constant: q = " << gauss_str(rep.series.values.front()) << "\n";
  std::cout << "balance: " << (rep.balance_holds ? "holds" : "violated") << "\n";
  std::cout << (rep.conserved() ? "conserved" : "not conserved") << "\n";
  return 0;
}

int cmd_closed_form(const std::string& config, std::vector<long long> ns) {
  Json cfg = load_json_file(config);
  RunSpec rs = parse_run_spec(cfg);
  hca::SpectralData sd = hca::spectrum(hca::split_hamiltonian(rs.h));
  std::cout << "admissible: " << (sd.admissible ? "yes" : "no")
            << ", max |l*eps| = " << hca::format_double(sd.max_abs_eigenvalue) << "\n";
  if (ns.empty()) ns.push_back(static_cast<long long>(rs.steps));
  hca::CAHistory hist = evolve_spec(rs);
  for (long long n : ns) {
    hca::CVec cf = hca::closed_form_state(sd, rs.psi0, rs.psi1, n);
    std::cout << "n=" << n << ":";
    for (const auto& z : cf)
      std::cout << " (" << hca::format_double(z.real()) << ", "
                << hca::format_double(z.imag()) << ")";
    if (n >= 0 && static_cast<std::size_t>(n) <= hist.last_index()) {
      const double dev =
          hca::norm(hca::sub(cf, hca::to_complex(hist.states[static_cast<std::size_t>(n)])));
      std::cout << "  |closed - exact| = " << hca::format_double(dev);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_cycle(const std::string& config, std::size_t max_steps) {
  Json cfg = load_json_file(config);
  RunSpec rs = parse_run_spec(cfg);
  hca::HamiltonianSpec h = hca::split_hamiltonian(rs.h);
  hca::CycleReport rep = hca::detect_cycle(rs.psi0, rs.psi1, h, max_steps);
  if (rep.antiperiod) std::cout << "antiperiod " << *rep.antiperiod << "\n";
  if (rep.period)
    std::cout << "period " << *rep.period << "\n";
  else
    std::cout << "no period within " << max_steps << " steps\n";

  std::vector<hca::GaussVector> basis;
  if (cfg.contains("basis"))
    for (const auto& b : cfg.at("basis")) basis.push_back(hca::vector_from_json(b));
  else
    for (std::size_t k = 0; k < rs.psi0.size(); ++k) {
      hca::GaussVector e(rs.psi0.size());
      e[k] = hca::GaussianInt(1);
      basis.push_back(e);
    }
  const std::size_t span = rep.period ? *rep.period : std::min<std::size_t>(max_steps, 256);
  hca::CAHistory hist = hca::evolve(rs.psi0, rs.psi1, h, std::max<std::size_t>(span, 2), rs.l);
  hca::CycleReport ont = hca::ontology_scan(hist, basis);
  if (ont.ontological)
    std::cout << "every slice stays on a basis ray\n";
  else
    std::cout << "leaves the basis rays first at n=" << *ont.first_superposition_index << "\n";
  return 0;
}

int cmd_dispersion(std::vector<double> les, std::vector<double> grid,
                   const std::string& format, const std::string& out) {
  if (!grid.empty()) {
    if (grid.size() != 3) throw std::invalid_argument("--grid wants lo hi count");
    const double lo = grid[0], hi = grid[1];
    const int count = static_cast<int>(grid[2]);
    if (count < 2 || hi <= lo) throw std::invalid_argument("bad --grid range");
    for (int k = 0; k < count; ++k)
      les.push_back(lo + (hi - lo) * static_cast<double>(k) / (count - 1));
  }
  if (les.empty()) throw std::invalid_argument("give --le values or --grid");

  std::vector<std::vector<std::string>> rows;
  for (double le : les) {
    const double e = hca::dispersion(le);
    rows.push_back({hca::format_double(le), hca::format_double(e),
                    hca::format_double(2.0 * std::sin(e))});
  }
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    os = &file;
  }
  if (format == "csv") {
    hca::write_csv(*os, {"l_eps", "l_E", "two_sin_lE"}, rows);
  } else {
    Json j = Json::array();
    for (const auto& r : rows)
      j.push_back({{"l_eps", r[0]}, {"l_E", r[1]}, {"two_sin_lE", r[2]}});
    *os << j.dump(2) << "\n";
  }
  if (!out.empty()) {
    file.close();
    write_manifest({out});
  }
  return 0;
}

int cmd_reconstruct(const std::string& config, std::vector<double> ts,
                    const std::string& out) {
  Json cfg = load_json_file(config);
  hca::CAHistory hist = history_from_config(cfg);
  hca::ContinuumSignal sig(hist);
  if (ts.empty())
    ts.push_back(0.5 * (sig.guard_lo() + sig.guard_hi()));
  std::vector<std::vector<std::string>> rows;
  for (double t : ts) {
    auto v = sig.reconstruct(t);
    std::vector<std::string> row{hca::format_double(t)};
    for (const auto& z : v.value) {
      row.push_back(hca::format_double(z.real()));
      row.push_back(hca::format_double(z.imag()));
    }
    row.push_back(hca::format_double(v.tail_estimate));
    row.push_back(hca::format_double(hca::continuum_charge(sig, t)));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> header{"t"};
  for (std::size_t k = 0; k < sig.dim(); ++k) {
    header.push_back("re" + std::to_string(k));
    header.push_back("im" + std::to_string(k));
  }
  header.push_back("tail_bound");
  header.push_back("charge");
  if (!out.empty()) {
    std::ofstream file(out);
    hca::write_csv(file, header, rows);
    file.close();
    write_manifest({out});
    std::cout << "wrote " << out << "\n";
  } else {
    hca::write_csv(std::cout, header, rows);
  }
  return 0;
}

int cmd_multi(const std::string& config, const std::string& out) {
  Json cfg = load_json_file(config);
  hca::MultiHistory m = [&] {
    if (cfg.contains("tensor"))
      return hca::read_tensor_file(cfg.at("tensor").get<std::string>());
    std::vector<hca::CAHistory> factors;
    for (const auto& f : cfg.at("factors")) factors.push_back(history_from_config(f));
    return hca::build_product(factors);
  }();
  std::vector<hca::GaussianInt> resid = hca::eom_residual_map(m);
  std::size_t nonzero = 0;
  for (const auto& z : resid)
    if (!z.is_zero()) ++nonzero;
  std::cout << "parts " << m.parts << ", interior residuals " << resid.size() << ", nonzero "
            << nonzero << "\n";

  if (cfg.contains("g")) {
    std::vector<hca::GaussMatrix> gs;
    for (const auto& g : cfg.at("g")) gs.push_back(hca::matrix_from_json(g));
    hca::CorrelationReport corr = hca::correlation_check(m, gs);
    if (corr.product_applicable)
      std::cout << "pair charge factorizes: " << (corr.factorizes ? "yes" : "no") << "\n";
    std::cout << "connected part: "
              << (corr.connected_all_zero ? "all zero" : "nonzero somewhere") << "\n";
  }
  if (!out.empty()) {
    hca::write_tensor_file(out, m);
    write_manifest({out});
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_uncertainty(long long half_width, double l, std::size_t states,
                    std::uint64_t seed, bool search, double sigma) {
  hca::LatticeOps ops = hca::build_xp(half_width, l);
  if (sigma > 0) {
    hca::UncertaintyReport rep =
        hca::uncertainty_report(ops, hca::gaussian_state(ops, sigma, 0.0));
    std::cout << "dx " << hca::format_double(rep.dx) << ", dp " << hca::format_double(rep.dp)
              << ", dx*dp " << hca::format_double(rep.product) << "\n";
    std::cout << "exact bound " << hca::format_double(rep.robertson) << " ("
              << (rep.robertson_holds ? "holds" : "violated") << ")\n";
    std::cout << "printed bounds |1 +- (l^2/2)<P^2>|: " << hca::format_double(rep.bound_plus)
              << " / " << hca::format_double(rep.bound_minus) << "\n";
  }
  if (states > 0) {
    auto sweep = hca::robertson_sweep(ops, states, seed);
    std::size_t ok = 0;
    double min_product = 1e300;
    for (const auto& rep : sweep) {
      if (rep.robertson_holds) ++ok;
      min_product = std::min(min_product, rep.product);
    }
    std::cout << ok << "/" << sweep.size() << " random states obey the exact bound; smallest "
              << "dx*dp " << hca::format_double(min_product) << "\n";
  }
  if (search) {
    hca::MinSearchResult res = hca::min_dx_search(ops);
    std::cout << "target dx = l/sqrt(2) = " << hca::format_double(res.target) << "\n";
    if (res.found_saturating)
      std::cout << "smallest dx saturating the printed bound: "
                << hca::format_double(res.dx_saturating) << "\n";
    else
      std::cout << "no trial state saturates the printed bound; closest product/bound = "
                << hca::format_double(res.best_ratio) << "\n";
    std::cout << "closest state: dx " << hca::format_double(res.best.dx) << ", dx*dp "
              << hca::format_double(res.best.product) << ", printed bound "
              << hca::format_double(res.best.bound_plus) << "\n";
  }
  return 0;
}

int cmd_suite(std::uint64_t seed, std::size_t max_steps, const std::string& fixture,
              const std::string& out) {
  hca::SuiteOptions opt;
  opt.seed = seed;
  opt.max_steps = max_steps;
  if (!fixture.empty()) {
    Json f = load_json_file(fixture);
    if (f.contains("H")) opt.fixture_h = hca::matrix_from_json(f.at("H"));
    if (f.contains("psi0")) opt.fixture_psi0 = hca::vector_from_json(f.at("psi0"));
    if (f.contains("psi1")) opt.fixture_psi1 = hca::vector_from_json(f.at("psi1"));
  }
  std::vector<hca::CriterionResult> results = hca::run_acceptance(opt);
  std::size_t failed = 0, skipped = 0;
  for (const auto& r : results) {
    std::cout << hca::format_result_line(r) << "\n";
    if (r.failed()) ++failed;
    if (r.status == "skip") ++skipped;
  }
  std::cout << results.size() - failed - skipped << " passed, " << failed << " failed, "
            << skipped << " skipped\n";
  if (!out.empty()) {
    Json j = Json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.id},
                   {"name", r.name},
                   {"status", r.status},
                   {"detail", r.detail},
                   {"millis", r.millis}});
    std::ofstream file(out);
    file << j.dump(2) << "\n";
    file.close();
    write_manifest({out});
  }
  return failed == 0 ? 0 : kExitSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simulator for integer-valued Hamiltonian cellular automata"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = default)");

  std::string config, out, format = "json", fixture;
  std::vector<long long> ns;
  std::vector<double> ts, les, grid;
  std::size_t max_steps = 10000, states = 0;
  std::uint64_t seed = 0xC0FFEEull;
  long long half_width = 40;
  double l = 1.0, sigma = 0.0;
  bool search = false;

  auto* evolve = app.add_subcommand("evolve", "iterate the update rule, optionally save JSONL");
  evolve->add_option("--config", config, "run spec (H, psi0, psi1, steps, l)")->required();
  evolve->add_option("--out", out, "history output path");

  auto* conserve = app.add_subcommand("conserve", "check a two-point charge along a history");
  conserve->add_option("--config", config, "history file or run spec, plus g")->required();

  auto* closed = app.add_subcommand("closed-form", "evaluate the modal solution");
  closed->add_option("--config", config, "run spec")->required();
  closed->add_option("-n", ns, "clock indices to evaluate");

  auto* cycle = app.add_subcommand("cycle", "find period / antiperiod and basis alignment");
  cycle->add_option("--config", config, "run spec (optional basis)")->required();
  cycle->add_option("--max-steps", max_steps, "search horizon");

  auto* disp = app.add_subcommand("dispersion", "band-limited energy for l*eps values");
  disp->add_option("--le", les, "l*eps values");
  disp->add_option("--grid", grid, "lo hi count")->expected(3);
  disp->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  disp->add_option("--out", out, "output path");

  auto* rec = app.add_subcommand("reconstruct", "interpolate a history between clock points");
  rec->add_option("--config", config, "history file or run spec")->required();
  rec->add_option("-t", ts, "times to evaluate (guarded central region)");
  rec->add_option("--out", out, "CSV output path");

  auto* multi = app.add_subcommand("multi", "build and check a many-clock tensor");
  multi->add_option("--config", config, "factors / tensor file, optional g list")->required();
  multi->add_option("--out", out, "tensor output path");

  auto* unc = app.add_subcommand("uncertainty", "position/momentum spreads on the line lattice");
  unc->add_option("--half-width", half_width, "lattice half-width");
  unc->add_option("--l", l, "lattice spacing");
  unc->add_option("--states", states, "random states to sweep");
  unc->add_option("--seed", seed, "sweep seed");
  unc->add_option("--sigma", sigma, "report one Gaussian packet of this width");
  unc->add_flag("--search", search, "run the constrained minimum-dx search");

  auto* suite = app.add_subcommand("suite", "run the full verification battery");
  suite->add_option("--seed", seed, "suite seed");
  suite->add_option("--max-steps", max_steps, "cap on evolution length (0 skips those checks)");
  suite->add_option("--fixture", fixture, "override the reference-run fixture (JSON)");
  suite->add_option("--out", out, "write the report as JSON");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (evolve->parsed()) return cmd_evolve(config, out);
    if (conserve->parsed()) return cmd_conserve(config);
    if (closed->parsed()) return cmd_closed_form(config, ns);
    if (cycle->parsed()) return cmd_cycle(config, max_steps);
    if (disp->parsed()) return cmd_dispersion(les, grid, format, out);
    if (rec->parsed()) return cmd_reconstruct(config, ts, out);
    if (multi->parsed()) return cmd_multi(config, out);
    if (unc->parsed()) return cmd_uncertainty(half_width, l, states, seed, search, sigma);
    if (suite->parsed()) return cmd_suite(seed, max_steps, fixture, out);
  } catch (const hca::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Json::exception& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
