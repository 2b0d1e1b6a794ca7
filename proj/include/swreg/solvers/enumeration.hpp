#pragma once

// Exact solver by enumeration of candidate labelings.
//
// For a model set, the minimum-error label of a point (off the tie set) is
// the winner of a vote among pairwise classifiers c_jk = g_jk * h_jk, where
// g_jk is a linear classifier of the lifted point [x, y] and h_jk one of x.
// Enumerating every realizable pattern of g (dimension d+1) and of h
// (dimension d), multiplying them, and combining one product per mode pair
// yields a finite superset of all minimum-error labelings. The global
// optimum is among them, so fitting each candidate and keeping the best
// solves the problem exactly when the data are in general position.

#include "swreg/geometry.hpp"
#include "swreg/solvers/fit.hpp"
#include "swreg/solvers/report.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <thread>
#include <unordered_set>

namespace swreg {

struct CandidateStats {
  std::size_t lifted_dichotomies = 0;
  std::size_t regressor_dichotomies = 0;
  std::size_t pair_patterns = 0;        // distinct products g * h
  double combinations = 0;              // pair_patterns ^ (n(n-1)/2)
  double combination_bound = 0;         // closed-form bound from the dichotomy bounds
  std::size_t emitted = 0;              // distinct canonical labelings
  std::size_t tied_bases = 0;           // combinations with at least one undecided vote
  std::size_t truncated_expansions = 0;
  bool coverage_warning = false;
  std::vector<std::string> warnings;
};

namespace detail {

struct LabelingHash {
  std::size_t operator()(const std::vector<int>& q) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : q) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// Streams distinct canonical candidate labelings to fn(const std::vector<int>&).
template <typename Fn>
CandidateStats for_each_candidate_labeling(const Dataset& data, int n, const SolverConfig& cfg,
                                           Fn&& fn) {
  cfg.validate();
  CandidateStats stats;
  const int d = static_cast<int>(data.dim());
  const int count = static_cast<int>(data.size());
  if (n < 1) throw std::invalid_argument("need at least one mode");
  if (d > cfg.d_max)
    throw CapsExceeded("dimension " + std::to_string(d) + " exceeds d_max " +
                           std::to_string(cfg.d_max),
                       d);
  if (n > cfg.n_max)
    throw CapsExceeded("mode count " + std::to_string(n) + " exceeds n_max " +
                           std::to_string(cfg.n_max),
                       n);
  if (n == 1) {
    fn(std::vector<int>(static_cast<std::size_t>(count), 0));
    stats.emitted = 1;
    return stats;
  }

  const Matrix lifted = data.lifted();
  for (const auto& [name, pts] : {std::pair<const char*, const Matrix*>{"regression vectors", &data.x()},
                                  std::pair<const char*, const Matrix*>{"lifted points", &lifted}}) {
    const auto gp = check_general_position(*pts, {.seed = cfg.seed});
    if (!gp.ok) {
      stats.coverage_warning = true;
      stats.warnings.push_back(std::string(name) +
                               " are not in general position; optimality is not guaranteed");
    }
  }

  const DichotomyOptions dopt{.sign_tol = cfg.tol.sign_tol};
  const DichotomySet lifted_set = enumerate_linear_dichotomies(lifted, dopt);
  const DichotomySet regressor_set = enumerate_linear_dichotomies(data.x(), dopt);
  stats.lifted_dichotomies = lifted_set.size();
  stats.regressor_dichotomies = regressor_set.size();

  std::set<SignPattern> products;
  for (const auto& g : lifted_set.items)
    for (const auto& h : regressor_set.items) {
      SignPattern c(static_cast<std::size_t>(count));
      for (int i = 0; i < count; ++i) c[i] = static_cast<signed char>(g.signs[i] * h.signs[i]);
      products.insert(std::move(c));
    }
  const std::vector<SignPattern> patterns(products.begin(), products.end());
  stats.pair_patterns = patterns.size();
  if (patterns.empty()) {
    // Every spanning subset was degenerate (too few or dependent points).
    stats.coverage_warning = true;
    stats.warnings.push_back("no classifier sign patterns could be built; only the single-mode labeling is tried");
    fn(std::vector<int>(static_cast<std::size_t>(count), 0));
    stats.emitted = 1;
    return stats;
  }

  const int pairs = pair_count(n);
  stats.combinations = std::pow(static_cast<double>(patterns.size()), pairs);
  stats.combination_bound =
      std::pow(dichotomy_bound(count, d + 1) * dichotomy_bound(count, d), pairs);
  if (stats.combinations > cfg.combination_budget)
    throw CapsExceeded("enumeration would combine " + std::to_string(stats.combinations) +
                           " classifier patterns, budget is " +
                           std::to_string(cfg.combination_budget),
                       stats.combinations);

  std::unordered_set<std::vector<int>, detail::LabelingHash> seen;
  auto emit = [&](std::vector<int> q) {
    const auto map = canonical_permutation(q, n);
    for (auto& label : q) label = map[label];
    if (seen.insert(q).second) {
      ++stats.emitted;
      fn(static_cast<const std::vector<int>&>(q));
    }
  };

  std::vector<std::size_t> choice(static_cast<std::size_t>(pairs), 0);
  std::vector<int> pair_signs(static_cast<std::size_t>(pairs));
  std::vector<int> base(static_cast<std::size_t>(count));
  std::vector<int> tied_points;
  std::vector<std::vector<int>> tied_sets;
  while (true) {
    tied_points.clear();
    tied_sets.clear();
    for (int i = 0; i < count; ++i) {
      for (int p = 0; p < pairs; ++p) pair_signs[p] = patterns[choice[p]][i];
      VoteResult vote = vote_from_pair_signs(pair_signs, n);
      base[i] = vote.mode;
      if (!vote.decided()) {
        tied_points.push_back(i);
        tied_sets.push_back(std::move(vote.tied));
      }
    }
    emit(base);

    // Undecided votes: every resolution, lexicographically, while the number
    // of extra variants stays within the cap.
    if (!tied_points.empty()) {
      ++stats.tied_bases;
      double variants = 1;
      for (const auto& s : tied_sets) variants *= static_cast<double>(s.size());
      if (variants - 1 > cfg.max_tie_alterations) {
        ++stats.truncated_expansions;
      } else {
        std::vector<std::size_t> pick(tied_points.size(), 0);
        while (true) {
          std::size_t t = 0;
          while (t < pick.size() && ++pick[t] == tied_sets[t].size()) pick[t++] = 0;
          if (t == pick.size()) break;
          std::vector<int> variant = base;
          for (std::size_t u = 0; u < pick.size(); ++u) variant[tied_points[u]] = tied_sets[u][pick[u]];
          emit(std::move(variant));
        }
      }
    }

    int p = pairs - 1;
    while (p >= 0 && ++choice[p] == patterns.size()) choice[p--] = 0;
    if (p < 0) break;
  }
  return stats;
}

inline std::vector<std::vector<int>> enumerate_candidate_labelings(const Dataset& data, int n,
                                                                   const SolverConfig& cfg,
                                                                   CandidateStats* stats = nullptr) {
  std::vector<std::vector<int>> out;
  auto s = for_each_candidate_labeling(data, n, cfg, [&](const std::vector<int>& q) { out.push_back(q); });
  if (stats) *stats = std::move(s);
  return out;
}

inline SolveReport enumeration_solve(const Dataset& data, int n, LossModel loss,
                                     const SolverConfig& cfg = {}) {
  Stopwatch clock;
  CandidateStats stats;
  const auto candidates = enumerate_candidate_labelings(data, n, cfg, &stats);

  struct Best {
    double cost = std::numeric_limits<double>::infinity();
    std::vector<int> canonical;
    ModelSet models;
    Labeling labeling;
  };
  auto evaluate = [&](std::size_t begin, std::size_t end, std::size_t stride, Best& best) {
    for (std::size_t c = begin; c < end; c += stride) {
      const ModelSet start = fit_modes(data, candidates[c], n, loss);
      RefineResult refined = refine_alternate(data, start, loss, cfg.tol);
      const double cost = empirical_cost(data, refined.models, refined.labeling, loss);
      auto canonical = canonicalize_labels(refined.labeling, n).q;
      if (better_candidate(cost, canonical, best.cost, best.canonical)) {
        best = {cost, std::move(canonical), std::move(refined.models), std::move(refined.labeling)};
      }
    }
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(cfg.threads),
                                                     candidates.size()));
  std::vector<Best> partial(workers);
  if (workers == 1) {
    evaluate(0, candidates.size(), 1, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { evaluate(w, candidates.size(), workers, partial[w]); });
  }
  Best best;
  for (auto& b : partial)
    if (better_candidate(b.cost, b.canonical, best.cost, best.canonical)) best = std::move(b);

  SolveReport report;
  report.method = "enum";
  report.candidates_examined = candidates.size();
  report.models = std::move(best.models);
  report.labeling = std::move(best.labeling);
  report.status = stats.coverage_warning ? Status::heuristic : Status::optimal;
  report.warnings = std::move(stats.warnings);
  finalize_report(report, data, loss, cfg.tol);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace swreg
