#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "hca/acceptance.hpp"

// Standalone verification battery: one line per criterion, nonzero exit if
// any of them fail. `--max-steps N` and `--seed S` override the defaults.
int main(int argc, char** argv) {
  hca::SuiteOptions opt;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--max-steps") == 0)
      opt.max_steps = std::strtoull(argv[i + 1], nullptr, 10);
    else if (std::strcmp(argv[i], "--seed") == 0)
      opt.seed = std::strtoull(argv[i + 1], nullptr, 10);
  }

  const auto results = hca::run_acceptance(opt);
  std::size_t failed = 0, skipped = 0;
  for (const auto& r : results) {
    std::puts(hca::format_result_line(r).c_str());
    if (r.failed()) ++failed;
    if (r.status == "skip") ++skipped;
  }
  std::printf("%zu passed, %zu failed, %zu skipped\n", results.size() - failed - skipped,
              failed, skipped);
  return failed == 0 ? 0 : 4;
}
