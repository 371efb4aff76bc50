// Serial vs OpenMP sweep timing on a grid larger than the acceptance grid.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "extcauchy/verify.hpp"

using namespace extcauchy;

namespace {

double seconds_for(const SweepConfig& config, Execution execution, SweepReport& report) {
  const auto start = std::chrono::steady_clock::now();
  report = run_sweep(config, execution, nullptr);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;

  SweepConfig config;
  config.a_values = {0.25, 0.5, 1.0, 2.0, 4.0};
  config.m_values = {0.25, 0.5, 1.0, 1.5, 2.5, cplx(0.75, 0.5), cplx(1.25, -1.0)};
  config.k_values = {0, 1, 2, 3, 5, 8, DLogDeriv{}};
  config.pairs = {{2, 4}, {2, 8}, {4, 6}, {4, 8}, {6, 8}, {2, 10}, {6, 10}};
  config.tolerance = 1e-8;

  SweepReport serial, parallel;
  double best_serial = 1e300, best_parallel = 1e300;
  for (int i = 0; i < repeats; ++i) {
    best_serial = std::min(best_serial, seconds_for(config, Execution::Serial, serial));
    best_parallel = std::min(best_parallel, seconds_for(config, Execution::Parallel, parallel));
  }

  bool identical = serial.records.size() == parallel.records.size();
  for (std::size_t i = 0; identical && i < serial.records.size(); ++i)
    identical = serial.records[i].closed_form == parallel.records[i].closed_form &&
                serial.records[i].oracle == parallel.records[i].oracle;

  const auto& s = serial.summary;
  std::printf("cells %d (passed %d, failed %d, errored %d), threads %d, best of %d\n", s.total, s.passed,
              s.failed, s.errored, omp_get_max_threads(), repeats);
  std::printf("serial   %.3f s\n", best_serial);
  std::printf("parallel %.3f s\n", best_parallel);
  std::printf("speedup  %.2fx\n", best_serial / best_parallel);
  std::printf("results identical: %s\n", identical ? "yes" : "no");
  return identical ? 0 : 1;
}
