#pragma once

// Runtime scaling harness: time a solver on generated instances of growing
// size and fit the slope of log(time) against log(N).

#include "swreg/io/generate.hpp"
#include "swreg/solvers.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

namespace swreg {

struct BenchResult {
  std::vector<int> sizes;
  std::vector<double> times_ms;
  double fitted_exponent = 0.0;  // slope of log(time) vs log(N)
  double log_linear_slope = 0.0; // slope of log(time) vs N
  bool partial = false;
  std::string note;
};

/// Least-squares slope of ys against xs.
inline double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  if (m < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0.0;
}

/// Each size is solved repeatedly until min_total_ms has elapsed and the
/// mean time per solve is recorded. Stops at the first size that exceeds a
/// cap and flags the result as partial.
inline BenchResult bench_scaling(Method method, GeneratorSpec spec, const std::vector<int>& sizes,
                                 LossModel loss, const SolverConfig& cfg = {},
                                 double min_total_ms = 20.0) {
  BenchResult r;
  for (std::size_t t = 1; t < sizes.size(); ++t)
    if (sizes[t] <= sizes[t - 1]) throw std::invalid_argument("bench sizes must be strictly increasing");
  for (int size : sizes) {
    spec.N = size;
    const Instance inst = generate_instance(spec);
    double total = 0;
    int runs = 0;
    try {
      const auto start = std::chrono::steady_clock::now();
      do {
        solve(inst.data, spec.n, method, loss, cfg);
        ++runs;
        total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      } while (total < min_total_ms);
    } catch (const CapsExceeded& e) {
      r.partial = true;
      r.note = "stopped at N=" + std::to_string(size) + ": " + e.what();
      break;
    }
    r.sizes.push_back(size);
    r.times_ms.push_back(total / runs);
  }
  std::vector<double> log_n, n, log_t;
  for (std::size_t t = 0; t < r.sizes.size(); ++t) {
    log_n.push_back(std::log(static_cast<double>(r.sizes[t])));
    n.push_back(static_cast<double>(r.sizes[t]));
    log_t.push_back(std::log(r.times_ms[t]));
  }
  r.fitted_exponent = fit_slope(log_n, log_t);
  r.log_linear_slope = fit_slope(n, log_t);
  return r;
}

}  // namespace swreg
