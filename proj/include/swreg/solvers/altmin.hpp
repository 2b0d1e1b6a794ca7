#pragma once

// Multi-start alternating minimization. Fast, but only locally optimal.

#include "swreg/random.hpp"
#include "swreg/solvers/fit.hpp"
#include "swreg/solvers/report.hpp"

#include <limits>

namespace swreg {

inline SolveReport altmin_solve(const Dataset& data, int n, LossModel loss, int restarts,
                                std::uint64_t seed, const Tolerances& tol = {}) {
  tol.validate();
  if (n < 1) throw std::invalid_argument("need at least one mode");
  if (restarts < 1) throw std::invalid_argument("need at least one restart");
  Stopwatch clock;
  Rng rng(seed);
  const int count = static_cast<int>(data.size());
  const int d = static_cast<int>(data.dim());

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_canonical;
  SolveReport report;
  for (int r = 0; r < restarts; ++r) {
    // Each mode interpolates its own random points; disjoint while supply lasts.
    const int per_mode = std::max(1, std::min(d, count / n));
    const auto picks = rng.sample(count, std::min(count, per_mode * n));
    ModelSet start = ModelSet::zeros(n, d);
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows;
      for (int t = 0; t < per_mode; ++t) {
        const std::size_t at = static_cast<std::size_t>((j * per_mode + t) % picks.size());
        rows.push_back(picks[at]);
      }
      const Matrix a = detail::gather_rows(data.x(), rows);
      start.set_mode(j, Eigen::CompleteOrthogonalDecomposition<Matrix>(a).solve(detail::gather(data.y(), rows)));
    }
    RefineResult refined = refine_alternate(data, start, loss, tol);
    const double cost = empirical_cost(data, refined.models, refined.labeling, loss);
    auto canonical = canonicalize_labels(refined.labeling, n).q;
    ++report.candidates_examined;
    if (better_candidate(cost, canonical, best, best_canonical)) {
      best = cost;
      best_canonical = std::move(canonical);
      report.models = std::move(refined.models);
      report.labeling = std::move(refined.labeling);
    }
  }
  report.method = "altmin";
  report.status = Status::heuristic;
  finalize_report(report, data, loss, tol);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace swreg
