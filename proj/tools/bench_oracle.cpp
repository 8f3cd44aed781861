#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "qfckit/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qfc;

namespace {

// Pair-enumeration kernel benchmark: serial reference against the OpenMP
// kernel on the same exhaustive run, with a report-equality check.

double run_once(const FgMonoid& m, const FuzzConfig& cfg, OracleReport& out) {
  auto start = std::chrono::steady_clock::now();
  out = fuzz_monoid_algebra(m, cfg);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

bool same_report(const OracleReport& a, const OracleReport& b) {
  if (a.pairs_checked != b.pairs_checked) return false;
  if (a.products_in_algebra != b.products_in_algebra) return false;
  if (a.counterexamples_found != b.counterexamples_found) return false;
  if (a.counterexamples.size() != b.counterexamples.size()) return false;
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    if (!(a.counterexamples[i].f.terms() == b.counterexamples[i].f.terms())) return false;
    if (!(a.counterexamples[i].g.terms() == b.counterexamples[i].g.terms())) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  long width = 8;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--width") && i + 1 < argc) {
      width = std::atol(argv[++i]);
    } else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc) {
      reps = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--width W] [--reps R]\n", argv[0]);
      return 64;
    }
  }
  if (width < 1 || width > 12 || reps < 1) {
    std::fprintf(stderr, "width must be in [1,12], reps positive\n");
    return 64;
  }

  FgMonoid m({ExponentVector{Int(2)}, ExponentVector{Int(3)}}, 1);
  FuzzConfig cfg;
  cfg.box.lo.push_back(Int(-2));
  cfg.box.hi.push_back(Int(width));
  cfg.property = FuzzProperty::Pfc;
  cfg.max_counterexamples = 4;

#ifdef _OPENMP
  std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in\n");
#endif
  std::printf("monoid <2,3>, property pfc, box [-2,%ld], reps %d\n", width, reps);

  double serial_best = 0, parallel_best = 0;
  OracleReport serial, parallel;
  for (int r = 0; r < reps; ++r) {
    FuzzConfig scfg = cfg;
    scfg.force_serial = true;
    double s = run_once(m, scfg, serial);
    double p = run_once(m, cfg, parallel);
    if (r == 0 || s < serial_best) serial_best = s;
    if (r == 0 || p < parallel_best) parallel_best = p;
  }

  std::printf("pairs checked: %llu\n", (unsigned long long)serial.pairs_checked);
  std::printf("counterexamples: %llu\n", (unsigned long long)serial.counterexamples_found);
  std::printf("serial:   %10.3f ms\n", serial_best);
  std::printf("parallel: %10.3f ms\n", parallel_best);
  std::printf("speedup:  %10.2fx\n", serial_best / parallel_best);

  if (!same_report(serial, parallel)) {
    std::printf("MISMATCH between serial and parallel reports\n");
    return 1;
  }
  std::printf("reports identical\n");
  return 0;
}
