#pragma once

#include "swreg/core.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace swreg {

enum class Status { optimal, heuristic, infeasible };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::heuristic: return "heuristic";
    case Status::infeasible: return "infeasible";
  }
  return "unknown";
}

struct SolverConfig {
  int max_tie_alterations = 12;
  int d_max = 3;
  int n_max = 3;
  double brute_budget = 2e6;        // n^N labelings
  double combination_budget = 5e7;  // classifier combinations for enumeration
  double noiseless_budget = 1e9;    // subset collections
  int restarts = 20;
  std::uint64_t seed = 0;
  int threads = 1;
  Tolerances tol;

  void validate() const {
    tol.validate();
    if (max_tie_alterations < 0 || d_max < 1 || n_max < 1 || restarts < 1 || threads < 1 ||
        !(brute_budget > 0) || !(combination_budget > 0) || !(noiseless_budget > 0))
      throw std::invalid_argument("solver caps must be positive");
  }
};

struct SolveReport {
  double cost = 0.0;
  ModelSet models;
  Labeling labeling;
  std::string method;
  std::size_t candidates_examined = 0;
  double elapsed_ms = 0.0;
  Status status = Status::optimal;
  std::vector<std::string> warnings;
};

/// Canonicalizes the labeling (permuting models to match), recomputes the
/// cost and refreshes the tie set from the final models.
inline void finalize_report(SolveReport& report, const Dataset& data, LossModel loss,
                            const Tolerances& tol) {
  const int n = report.models.modes();
  const auto map = canonical_permutation(report.labeling.q, n);
  report.models = permute_models(report.models, map);
  for (auto& label : report.labeling.q) label = map[label];
  report.labeling.tie_set = assign_modes(data, report.models, loss, tol).tie_set;
  report.cost = empirical_cost(data, report.models, report.labeling, loss);
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Lexicographic comparison used to make best-so-far reductions independent
/// of evaluation order.
inline bool better_candidate(double cost, const std::vector<int>& q, double best_cost,
                             const std::vector<int>& best_q) {
  if (cost != best_cost) return cost < best_cost;
  return q < best_q;
}

}  // namespace swreg
