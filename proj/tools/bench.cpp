#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hca/conserve.hpp"
#include "hca/lattice.hpp"
#include "hca/multitime.hpp"
#include "hca/random_gen.hpp"
#include "hca/sampling.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   x%.2f   %s\n", name.c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (argc > 1) omp_set_num_threads(std::stoi(argv[1]));
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  (void)argc;
  (void)argv;
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif

  hca::Rng rng(0xBE7C4u);

  {
    const std::size_t dim = 6, steps = 20000;
    hca::HamiltonianSpec h =
        hca::split_hamiltonian(hca::random_admissible_hamiltonian(rng, dim));
    hca::CAHistory hist = hca::evolve(hca::random_gauss_vector(rng, dim),
                                      hca::random_gauss_vector(rng, dim), h, steps);
    const hca::GaussMatrix g = hca::mat_mul(h.H, h.H);
    auto t0 = Clock::now();
    auto serial = hca::conserved_series_values_serial(hist, g);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    hca::ConservedSeries par = hca::conserved_series(hist, g);
    const double p_ms = ms_since(t0);
    report("charge series (N=20000)", s_ms, p_ms, serial == par.values);
  }

  {
    std::vector<hca::CAHistory> factors;
    for (int k = 0; k < 2; ++k) {
      hca::Rng sub = rng.split(k);
      hca::HamiltonianSpec h =
          hca::split_hamiltonian(hca::random_admissible_hamiltonian(sub, 3));
      factors.push_back(hca::evolve(hca::random_gauss_vector(sub, 3),
                                    hca::random_gauss_vector(sub, 3), h, 60));
    }
    hca::MultiHistory m = hca::build_product(factors);
    auto t0 = Clock::now();
    auto serial = hca::eom_residual_map_serial(m);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    auto par = hca::eom_residual_map(m);
    const double p_ms = ms_since(t0);
    report("residual map (61x61 grid)", s_ms, p_ms, serial == par);
  }

  {
    hca::StationaryState st = hca::make_stationary(1.0, {hca::Complex(1, 0)});
    hca::ContinuumSignal sig(hca::stationary_history(st, 4096), 1.0);
    std::vector<double> ts;
    for (int k = 0; k < 2000; ++k)
      ts.push_back(sig.guard_lo() + (sig.guard_hi() - sig.guard_lo()) * k / 1999.0);
    auto t0 = Clock::now();
    auto serial = hca::reconstruct_grid_serial(sig, ts);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    auto par = hca::reconstruct_grid(sig, ts);
    const double p_ms = ms_since(t0);
    report("grid reconstruction (2000)", s_ms, p_ms, serial == par);
  }

  {
    hca::LatticeOps ops = hca::build_xp(60, 1.0);
    auto t0 = Clock::now();
    auto serial = hca::robertson_sweep_serial(ops, 3000, 0x5EEDu);
    const double s_ms = ms_since(t0);
    t0 = Clock::now();
    auto par = hca::robertson_sweep(ops, 3000, 0x5EEDu);
    const double p_ms = ms_since(t0);
    bool equal = serial.size() == par.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
      equal = serial[i].product == par[i].product && serial[i].dx == par[i].dx &&
              serial[i].dp == par[i].dp;
    report("uncertainty sweep (3000)", s_ms, p_ms, equal);
  }

  return 0;
}
