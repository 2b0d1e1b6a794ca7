#pragma once

// Exact-fit search for noiseless data. Each mode is pinned down by at most d
// of its own points, so it suffices to search collections of small,
// linearly independent point subsets, one per mode.
//
// The search is organized around the smallest-index point not yet fit
// exactly: it must belong to some remaining mode, so that mode's subset can
// be taken to contain it. Subsets of 1..d points are tried (smaller ones
// cover modes whose points span less than R^d), best-covering first.

#include "swreg/combinatorics.hpp"
#include "swreg/solvers/fit.hpp"
#include "swreg/solvers/report.hpp"

#include <algorithm>
#include <limits>

namespace swreg {

namespace detail {

class ExactFitSearch {
 public:
  ExactFitSearch(const Dataset& data, int n, const SolverConfig& cfg)
      : data_(data), n_(n), cfg_(cfg), models_(ModelSet::zeros(n, data.dim())) {}

  /// Returns true once a zero-cost collection has been found.
  bool run() { return descend(0, std::vector<char>(static_cast<std::size_t>(data_.size()), 0)); }

  std::size_t examined = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  ModelSet best_models;

 private:
  bool fits(Index i, const Vector& w) const {
    const double r = data_.y()(i) - data_.x().row(i).dot(w);
    return std::abs(r) <= cfg_.tol.tie_tol * (1.0 + std::abs(data_.y()(i)));
  }

  bool finish(int used) {
    ++examined;
    ModelSet full = models_;
    for (int j = used; j < n_; ++j) full.set_mode(j, models_.mode(std::max(used - 1, 0)).transpose());
    const LossModel squared{LossKind::squared};
    const double cost = empirical_cost(data_, full, assign_modes(data_, full, squared, cfg_.tol), squared);
    if (cost < best_cost) {
      best_cost = cost;
      best_models = full;
    }
    return cost <= cfg_.tol.zero_tol;
  }

  bool descend(int level, const std::vector<char>& fitted) {
    std::vector<int> open;
    for (Index i = 0; i < data_.size(); ++i)
      if (!fitted[i]) open.push_back(static_cast<int>(i));
    if (open.empty() || level == n_) return finish(level);

    struct Branch {
      Vector w;
      std::vector<char> fitted;
      int covered;
    };
    std::vector<Branch> branches;
    const int anchor = open.front();
    const int rest = static_cast<int>(open.size()) - 1;
    const int d = static_cast<int>(data_.dim());
    for (int k = std::min(d, rest + 1); k >= 1; --k) {
      for_each_combination(rest, k - 1, [&](const std::vector<int>& pick) {
        std::vector<int> rows{anchor};
        for (int t : pick) rows.push_back(open[t + 1]);
        const Matrix a = gather_rows(data_.x(), rows);
        Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
        if (cod.rank() < k) return true;
        Branch b{cod.solve(gather(data_.y(), rows)), fitted, 0};
        for (int i : open)
          if (fits(i, b.w)) {
            b.fitted[i] = 1;
            ++b.covered;
          }
        if (b.fitted[anchor]) branches.push_back(std::move(b));
        return true;
      });
    }
    std::stable_sort(branches.begin(), branches.end(),
                     [](const Branch& l, const Branch& r) { return l.covered > r.covered; });
    for (auto& b : branches) {
      models_.set_mode(level, b.w);
      if (descend(level + 1, b.fitted)) return true;
    }
    return false;
  }

  const Dataset& data_;
  int n_;
  const SolverConfig& cfg_;
  ModelSet models_;
};

}  // namespace detail

/// Upper bound on the number of subset collections the exact-fit search visits.
inline double noiseless_collection_bound(Index count, Index d, int n) {
  double per_level = 0;
  for (Index k = 1; k <= d; ++k) per_level += binomial(count - 1, k - 1);
  return std::pow(per_level, n);
}

/// Certifies an exact switching-linear fit (status optimal) or reports the
/// best cost among the searched collections (status infeasible). Costs use
/// the squared loss; any admissible loss is zero on an exact fit.
inline SolveReport noiseless_solve(const Dataset& data, int n, const SolverConfig& cfg = {}) {
  cfg.validate();
  if (n < 1) throw std::invalid_argument("need at least one mode");
  const double bound = noiseless_collection_bound(data.size(), data.dim(), n);
  if (bound > cfg.noiseless_budget)
    throw CapsExceeded("exact-fit search may visit " + std::to_string(bound) +
                           " collections, budget is " + std::to_string(cfg.noiseless_budget),
                       bound);
  Stopwatch clock;
  detail::ExactFitSearch search(data, n, cfg);
  const bool exact = search.run();

  SolveReport report;
  report.method = "noiseless";
  report.candidates_examined = search.examined;
  report.models = search.best_models;
  const LossModel squared{LossKind::squared};
  report.labeling = assign_modes(data, report.models, squared, cfg.tol);
  report.status = exact ? Status::optimal : Status::infeasible;
  if (!exact) report.warnings.push_back("no exact switching-linear fit found");
  finalize_report(report, data, squared, cfg.tol);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace swreg
