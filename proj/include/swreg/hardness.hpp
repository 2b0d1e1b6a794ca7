#pragma once

// Partition reduces to the zero-threshold decision form of switching
// regression: with n = 2 and points (s_i e_i, s_i), (s_i e_i, 0) and
// (sum_k s_k e_k, sum_k s_k / 2), a zero-error fit exists iff S splits into
// two halves of equal sum, and the split can be read off either model.

#include "swreg/solvers.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace swreg {

struct PartitionInstance {
  std::vector<long long> s;

  long long total() const { return std::accumulate(s.begin(), s.end(), 0LL); }
};

/// Drops zero entries (they never affect a split); rejects negatives.
inline PartitionInstance make_partition_instance(const std::vector<long long>& values) {
  PartitionInstance p;
  for (long long v : values) {
    if (v < 0) throw std::invalid_argument("partition entries must be non-negative");
    if (v > 0) p.s.push_back(v);
  }
  return p;
}

/// Parses "1,2,3" (whitespace tolerated).
inline PartitionInstance parse_partition(const std::string& text) {
  std::vector<long long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty field in partition list");
    const auto last = item.find_last_not_of(" \t\r\n");
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty partition instance");
  return make_partition_instance(values);
}

struct DecisionInstance {
  Dataset data;
  int n = 2;
  double epsilon = 0.0;
};

inline DecisionInstance partition_to_instance(const PartitionInstance& p) {
  const Index d = static_cast<Index>(p.s.size());
  if (d < 1) throw std::invalid_argument("partition instance is empty");
  for (long long v : p.s)
    if (v <= 0) throw std::invalid_argument("partition entries must be positive");
  Matrix x = Matrix::Zero(2 * d + 1, d);
  Vector y(2 * d + 1);
  for (Index i = 0; i < d; ++i) {
    const double s = static_cast<double>(p.s[i]);
    x(i, i) = s;
    y(i) = s;
    x(d + i, i) = s;
    y(d + i) = 0.0;
    x(2 * d, i) = s;
  }
  y(2 * d) = static_cast<double>(p.total()) / 2.0;
  return {Dataset(std::move(x), std::move(y)), 2, 0.0};
}

struct DecisionResult {
  bool yes = false;
  double best_cost = 0.0;
  SolveReport report;  // the certificate when yes
};

/// Decides whether some (models, labeling) reaches cost <= epsilon. Only
/// exact methods can answer "no".
inline DecisionResult decide_threshold(const DecisionInstance& inst, LossModel loss,
                                       Method method = Method::brute, const SolverConfig& cfg = {}) {
  if (!(inst.epsilon >= 0)) throw std::invalid_argument("epsilon must be non-negative");
  if (method == Method::altmin)
    throw std::invalid_argument("heuristic methods cannot decide the threshold problem");
  if (method == Method::noiseless && inst.epsilon > cfg.tol.zero_tol)
    throw std::invalid_argument("the exact-fit search only decides zero thresholds");

  DecisionResult r;
  r.report = solve(inst.data, inst.n, method, loss, cfg);
  r.best_cost = r.report.cost;
  if (method == Method::noiseless) {
    r.yes = r.report.status == Status::optimal;
  } else {
    r.yes = r.report.cost <= inst.epsilon + cfg.tol.zero_tol;
    if (!r.yes && r.report.status != Status::optimal)
      throw std::runtime_error("solver could not certify optimality, so 'no' is not established");
  }
  return r;
}

struct PartitionSplit {
  std::vector<int> indices;  // positions in the instance, ascending
  std::vector<long long> values;
  int mode = 0;              // model the split was read from
};

/// Reads S_1 = {s_i : w_mode,i = 1}. Throws unless every coordinate rounds
/// to 0 or 1 and the two halves have equal sums.
inline PartitionSplit extract_partition(const ModelSet& models, const PartitionInstance& p,
                                        const Tolerances& tol = {}, int mode = 0) {
  if (models.dim() != static_cast<Index>(p.s.size()))
    throw std::invalid_argument("model dimension does not match the partition instance");
  if (mode < 0 || mode >= models.modes()) throw std::invalid_argument("mode out of range");
  PartitionSplit split;
  split.mode = mode;
  long long inside = 0;
  for (Index i = 0; i < models.dim(); ++i) {
    const double w = models.w()(mode, i);
    if (std::abs(w - 1.0) <= tol.tie_tol) {
      split.indices.push_back(static_cast<int>(i));
      split.values.push_back(p.s[i]);
      inside += p.s[i];
    } else if (std::abs(w) > tol.tie_tol) {
      throw std::runtime_error("coordinate " + std::to_string(i + 1) + " of model " +
                               std::to_string(mode + 1) + " is " + std::to_string(w) +
                               ", not 0 or 1; not a zero-error certificate");
    }
  }
  if (2 * inside != p.total())
    throw std::runtime_error("model " + std::to_string(mode + 1) + " selects a subset summing to " +
                             std::to_string(inside) + ", not half of " + std::to_string(p.total()));
  return split;
}

/// Tries each model in turn; the last point may be fit by either.
inline PartitionSplit extract_partition_any(const ModelSet& models, const PartitionInstance& p,
                                            const Tolerances& tol = {}) {
  std::string errors;
  for (int j = 0; j < models.modes(); ++j) {
    try {
      return extract_partition(models, p, tol, j);
    } catch (const std::runtime_error& e) {
      errors += std::string(errors.empty() ? "" : "; ") + e.what();
    }
  }
  throw std::runtime_error(errors);
}

}  // namespace swreg
