// Benchmark: corpus-level invariant scan, serial reference path vs the
// OpenMP-parallel path. Prints wall times and verifies both paths agree.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "tilinglab/experiments.hpp"

using namespace tilinglab;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 6;
  ExperimentSpec spec;
  spec.id = "invariant-corpus";
  spec.params["n"] = std::to_string(n);

  auto timed = [&](int threads) {
    spec.threads = threads;
    auto start = std::chrono::steady_clock::now();
    Report r = run_experiment(spec);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return std::pair<long long, bool>(ms, r.all_passed);
  };

  auto [serial_ms, serial_ok] = timed(1);
  auto [parallel_ms, parallel_ok] = timed(0);
  std::cout << "invariant corpus n<=" << n << "\n"
            << "  serial:   " << serial_ms << " ms, "
            << (serial_ok ? "pass" : "FAIL") << "\n"
            << "  parallel: " << parallel_ms << " ms, "
            << (parallel_ok ? "pass" : "FAIL") << "\n";
  if (serial_ms > 0 && parallel_ms > 0)
    std::cout << "  speedup:  "
              << static_cast<double>(serial_ms) / parallel_ms << "x\n";
  return serial_ok && parallel_ok ? 0 : 1;
}
