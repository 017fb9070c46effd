// Wall-time comparison of the serial reference kernels against their
// OpenMP counterparts.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fwords/sweeps.hpp"

namespace {

using fwords::SweepResult;

double run_ms(const std::function<SweepResult()>& fn, uint64_t* checked) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res = fn();
  auto t1 = std::chrono::steady_clock::now();
  *checked = res.checked;
  if (!res.clean()) {
    std::fprintf(stderr, "kernel reported %llu mismatches!\n",
                 static_cast<unsigned long long>(res.mismatches));
  }
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel kernels run serially\n");
#endif
  struct Row {
    std::string name;
    std::function<SweepResult()> serial;
    std::function<SweepResult()> parallel;
  };
  std::vector<Row> rows = {
      {"fr2_commutator(9)", [] { return fwords::fr2_commutator_sweep_serial(9); },
       [] { return fwords::fr2_commutator_sweep(9); }},
      {"munn_word_problem(4)",
       [] { return fwords::munn_word_problem_sweep_serial(4); },
       [] { return fwords::munn_word_problem_sweep(4); }},
      {"factor_automaton(2,5)",
       [] { return fwords::factor_automaton_sweep_serial(2, 5); },
       [] { return fwords::factor_automaton_sweep(2, 5); }},
      {"eraser_soundness(3)",
       [] { return fwords::eraser_soundness_sweep_serial(3); },
       [] { return fwords::eraser_soundness_sweep(3); }},
  };
  std::printf("%-24s %12s %12s %12s %8s\n", "kernel", "items", "serial ms",
              "parallel ms", "speedup");
  for (const auto& row : rows) {
    uint64_t checked = 0;
    double s = run_ms(row.serial, &checked);
    double p = run_ms(row.parallel, &checked);
    std::printf("%-24s %12llu %12.1f %12.1f %8.2f\n", row.name.c_str(),
                static_cast<unsigned long long>(checked), s, p,
                p > 0 ? s / p : 0.0);
  }
  return 0;
}
