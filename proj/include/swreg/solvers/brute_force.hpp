#pragma once

#include "swreg/solvers/fit.hpp"
#include "swreg/solvers/report.hpp"

#include <cmath>
#include <limits>

namespace swreg {

/// Calls fn(q) for every labeling of `count` points with at most n modes in
/// canonical form (first occurrences numbered 0, 1, ...), lexicographically.
template <typename Fn>
void for_each_canonical_labeling(int count, int n, Fn&& fn) {
  std::vector<int> q(static_cast<std::size_t>(count), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(count), 0);  // max label in q[0..i]
  while (true) {
    fn(static_cast<const std::vector<int>&>(q));
    int i = count - 1;
    for (; i > 0; --i) {
      const int cap = std::min(n - 1, prefix_max[i - 1] + 1);
      if (q[i] < cap) break;
    }
    if (i <= 0) return;
    ++q[i];
    prefix_max[i] = std::max(prefix_max[i - 1], q[i]);
    for (int t = i + 1; t < count; ++t) {
      q[t] = 0;
      prefix_max[t] = prefix_max[t - 1];
    }
  }
}

/// Exhaustive search over every labeling, up to mode permutation.
inline SolveReport brute_force_solve(const Dataset& data, int n, LossModel loss,
                                     const SolverConfig& cfg = {}) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("need at least one mode");
  const double labelings = std::pow(static_cast<double>(n), static_cast<double>(data.size()));
  if (labelings > cfg.brute_budget)
    throw CapsExceeded("brute force would examine " + std::to_string(labelings) +
                           " labelings, budget is " + std::to_string(cfg.brute_budget),
                       labelings);
  Stopwatch clock;
  SolveReport report;
  report.method = "brute";
  report.status = Status::optimal;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_q;
  for_each_canonical_labeling(static_cast<int>(data.size()), n, [&](const std::vector<int>& q) {
    ++report.candidates_examined;
    const ModelSet models = fit_modes(data, q, n, loss);
    const double cost = empirical_cost(data, models, q, loss);
    if (cost < best) {
      best = cost;
      best_q = q;
      report.models = models;
    }
  });
  report.labeling.q = std::move(best_q);
  finalize_report(report, data, loss, cfg.tol);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace swreg
