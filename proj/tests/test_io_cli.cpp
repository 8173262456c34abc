#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hca/io.hpp"
#include "hca/random_gen.hpp"

using namespace hca;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HCA_BIN_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  while (std::fgets(buf, sizeof(buf), pipe)) res.output += buf;
  const int status = pclose(pipe);
  REQUIRE(status >= 0);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string tmp_path(const std::string& name) { return "/tmp/hca_test_" + name; }

CAHistory sample_history() {
  GaussMatrix h(2);
  h.at(0, 1) = GaussianInt(1, 1);
  h.at(1, 0) = GaussianInt(1, -1);
  h.at(1, 1) = GaussianInt(-1);
  return evolve({GaussianInt(2, 1), GaussianInt(0, -1)},
                {GaussianInt(1), GaussianInt(1, 1)}, split_hamiltonian(h), 9, 0.25);
}

}  // namespace

TEST_CASE("json forms of values, vectors, matrices") {
  CHECK(to_json(GaussianInt(3, -4)) == Json("3-4i"));
  CHECK(gaussian_from_json(Json("3-4i")) == GaussianInt(3, -4));

  GaussVector v{GaussianInt(1), GaussianInt(0, 2)};
  CHECK(vector_from_json(to_json(v)) == v);

  GaussMatrix m(2);
  m.at(0, 1) = GaussianInt(5, 5);
  m.at(1, 0) = GaussianInt(-5, 5);
  CHECK(matrix_from_json(to_json(m)) == m);

  // Flat dim^2 arrays are accepted on input.
  Json flat = Json::array({"0+0i", "5+5i", "-5+5i", "0+0i"});
  CHECK(matrix_from_json(flat) == m);
  Json ragged = Json::array({"0+0i", "5+5i", "-5+5i"});
  CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);
}

TEST_CASE("history files round-trip exactly") {
  CAHistory hist = sample_history();
  const std::string p1 = tmp_path("hist_a.jsonl");
  const std::string p2 = tmp_path("hist_b.jsonl");
  write_history_file(p1, hist);
  CAHistory back = read_history_file(p1);
  CHECK(back.states == hist.states);
  CHECK(back.scale == hist.scale);
  CHECK(back.solution);
  CHECK(back.ham.H == hist.ham.H);
  write_history_file(p2, back);
  CHECK(slurp(p1) == slurp(p2));

  // A tampered slice clears the solution flag on load.
  CAHistory bent = hist;
  bent.states[4][0] += GaussianInt(1);
  write_history_file(p1, bent);
  CHECK_FALSE(read_history_file(p1).solution);
}

TEST_CASE("tensor files round-trip exactly") {
  Rng rng(60);
  std::vector<CAHistory> fs;
  for (int k = 0; k < 2; ++k) {
    HamiltonianSpec h = split_hamiltonian(random_admissible_hamiltonian(rng, 2));
    fs.push_back(evolve(random_gauss_vector(rng, 2), random_gauss_vector(rng, 2), h, 5));
  }
  MultiHistory m = build_product(fs);
  const std::string p = tmp_path("tensor.json");
  write_tensor_file(p, m);
  MultiHistory back = read_tensor_file(p);
  CHECK(back.parts == m.parts);
  CHECK(back.dims == m.dims);
  CHECK(back.clocks == m.clocks);
  CHECK(back.values == m.values);
  CHECK(back.scale == m.scale);
  const std::string p2 = tmp_path("tensor2.json");
  write_tensor_file(p2, back);
  CHECK(slurp(p) == slurp(p2));
}

TEST_CASE("doubles print round-trip exact") {
  // strtod, not stod: stod throws out_of_range on subnormals like 5e-324.
  for (double x : {0.1, 1.0, -0.0, 3.141592653589793, 1e300, 5e-324}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("csv writer") {
  std::ostringstream ss;
  write_csv(ss, {"a", "b"}, {{"1", "2"}, {"3", "4"}});
  CHECK(ss.str() == "a,b\n1,2\n3,4\n");
}

TEST_CASE("checksums match the reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  const std::string p = tmp_path("sum.bin");
  spit(p, "foobar");
  CHECK(fnv1a64_file(p) == 0x85944171f73967e8ull);
}

// ---- command-line surface ---------------------------------------------

TEST_CASE("dispersion command prints the band energy") {
  CliResult r = run_cli("dispersion --le 1.0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.52359877") != std::string::npos);  // asin(1/2)
}

TEST_CASE("evolve runs are byte-stable") {
  const std::string cfg = tmp_path("run.json");
  spit(cfg, R"({"H": [["0+0i","1+0i"],["1+0i","0+0i"]],
                "psi0": ["1+0i","0+0i"], "psi1": ["0+0i","1+0i"],
                "steps": 12, "l": 1.0})");
  const std::string o1 = tmp_path("run_a.jsonl");
  const std::string o2 = tmp_path("run_b.jsonl");
  CHECK(run_cli("evolve --config " + cfg + " --out " + o1).exit_code == 0);
  CHECK(run_cli("evolve --config " + cfg + " --out " + o2).exit_code == 0);
  CHECK(slurp(o1) == slurp(o2));

  const std::string m1 = slurp(o1 + ".manifest.json");
  const std::string m2 = slurp(o2 + ".manifest.json");
  const Json j1 = Json::parse(m1), j2 = Json::parse(m2);
  CHECK(j1.at("outputs").at(0).at("fnv1a64") == j2.at("outputs").at(0).at("fnv1a64"));
  CHECK(j1.at("outputs").at(0).at("bytes") == j2.at("outputs").at(0).at("bytes"));
}

TEST_CASE("conserve command reports a constant charge") {
  const std::string cfg = tmp_path("conserve.json");
  spit(cfg, R"({"H": [["0+0i","1+0i"],["1+0i","0+0i"]],
                "psi0": ["1+0i","0+0i"], "psi1": ["0+0i","1+0i"],
                "steps": 16,
                "g": [["0+0i","1+0i"],["1+0i","0+0i"]]})");
  CliResult r = run_cli("conserve --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("commutes: yes") != std::string::npos);
  CHECK(r.output.find("constant: q = 2+0i") != std::string::npos);
  CHECK(r.output.find("not conserved") == std::string::npos);
}

TEST_CASE("config errors exit 2") {
  CHECK(run_cli("evolve --config /tmp/hca_missing_config.json").exit_code == 2);
  const std::string bad = tmp_path("bad.json");
  spit(bad, "{ not json");
  CHECK(run_cli("evolve --config " + bad).exit_code == 2);
  const std::string mism = tmp_path("mism.json");
  spit(mism, R"({"H": [["0+0i","1+0i"],["1+0i","0+0i"]],
                 "psi0": ["1+0i"], "psi1": ["0+0i","1+0i"], "steps": 4})");
  CHECK(run_cli("evolve --config " + mism).exit_code == 2);
}

TEST_CASE("guard violations exit 3") {
  const std::string cfg = tmp_path("rec.json");
  spit(cfg, R"({"H": [["0+0i","1+0i"],["1+0i","0+0i"]],
                "psi0": ["1+0i","0+0i"], "psi1": ["0+0i","1+0i"],
                "steps": 16, "l": 1.0})");
  CHECK(run_cli("reconstruct --config " + cfg + " -t 0.5").exit_code == 3);
  CHECK(run_cli("reconstruct --config " + cfg + " -t 8.25").exit_code == 0);
}

TEST_CASE("suite skips iteration checks when capped to zero") {
  CliResult r = run_cli("suite --max-steps 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[SKIP]") != std::string::npos);
  CHECK(r.output.find("8 skipped") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("suite flags a corrupted fixture and exits 4") {
  const std::string fx = tmp_path("fixture.json");
  spit(fx, R"({"H": [["1+0i","1+0i"],["1+0i","0+0i"]]})");
  const std::string rep = tmp_path("suite_report.json");
  CliResult r = run_cli("suite --max-steps 12 --fixture " + fx + " --out " + rep);
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("[FAIL] 1.") != std::string::npos);
  const Json j = Json::parse(slurp(rep));
  CHECK(j.at(0).at("status") == "fail");
}

TEST_CASE("shipped example configs work end to end") {
  const std::string root(HCA_REPO_ROOT);
  CliResult cycle = run_cli("cycle --config " + root + "/configs/pauli_cycle.json");
  CHECK(cycle.exit_code == 0);
  CHECK(cycle.output.find("antiperiod 6") != std::string::npos);
  CHECK(cycle.output.find("period 12") != std::string::npos);
  CHECK(cycle.output.find("basis ray") != std::string::npos);

  CliResult cf = run_cli("closed-form --config " + root + "/configs/dimer.json -n 24");
  CHECK(cf.exit_code == 0);
  CHECK(cf.output.find("admissible: yes") != std::string::npos);

  CliResult mu = run_cli("multi --config " + root + "/configs/pair_product.json");
  CHECK(mu.exit_code == 0);
  CHECK(mu.output.find("nonzero 0") != std::string::npos);
  CHECK(mu.output.find("factorizes: yes") != std::string::npos);

  CliResult un = run_cli("uncertainty --half-width 24 --states 50 --search");
  CHECK(un.exit_code == 0);
  CHECK(un.output.find("50/50") != std::string::npos);
}
