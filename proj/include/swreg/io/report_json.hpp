#pragma once

#include "swreg/io/dataset_io.hpp"
#include "swreg/solvers/report.hpp"

#include <algorithm>
#include <numeric>

namespace swreg {

/// Recomputes the cost from models and labels; throws if the stored value
/// disagrees by more than zero_tol.
inline void validate_report(const SolveReport& report, const Dataset& data, LossModel loss,
                            const Tolerances& tol) {
  const double cost = empirical_cost(data, report.models, report.labeling, loss);
  if (std::abs(cost - report.cost) > tol.zero_tol)
    throw std::logic_error("report cost " + std::to_string(report.cost) +
                           " does not match recomputed cost " + std::to_string(cost));
  if (!is_canonical(report.labeling.q)) throw std::logic_error("report labeling is not canonical");
}

inline nlohmann::json report_to_json(const SolveReport& report, const Dataset& data, LossModel loss,
                                     const Tolerances& tol) {
  validate_report(report, data, loss, tol);
  nlohmann::json j;
  j["method"] = report.method;
  j["loss"] = std::string(to_string(loss.kind));
  j["cost"] = report.cost;
  j["labels"] = labels_to_json_form(report.labeling.q);
  j["tie_set"] = labels_to_json_form(report.labeling.tie_set);
  j["models"] = matrix_to_json(report.models.w());
  j["candidates_examined"] = report.candidates_examined;
  j["elapsed_ms"] = report.elapsed_ms;
  j["status"] = std::string(to_string(report.status));
  j["warnings"] = report.warnings;
  return j;
}

inline SolveReport report_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("models")) throw FormatError("report JSON needs 'models'");
  SolveReport r;
  r.models = ModelSet(matrix_from_json(j["models"], "models"));
  r.method = j.value("method", "");
  r.cost = j.value("cost", 0.0);
  if (j.contains("labels")) {
    r.labeling.q = j["labels"].get<std::vector<int>>();
    for (auto& v : r.labeling.q) --v;
  }
  if (j.contains("tie_set")) {
    r.labeling.tie_set = j["tie_set"].get<std::vector<int>>();
    for (auto& v : r.labeling.tie_set) --v;
  }
  r.candidates_examined = j.value("candidates_examined", std::size_t{0});
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  const std::string status = j.value("status", "optimal");
  r.status = status == "heuristic" ? Status::heuristic
             : status == "infeasible" ? Status::infeasible
                                      : Status::optimal;
  if (j.contains("warnings")) r.warnings = j["warnings"].get<std::vector<std::string>>();
  return r;
}

/// Fraction of points whose estimated label matches the truth, maximized
/// over relabelings of the estimate. Exhaustive over permutations, so meant
/// for small n.
inline double label_accuracy(const std::vector<int>& truth, const std::vector<int>& estimate, int n) {
  if (truth.size() != estimate.size()) throw std::invalid_argument("labelings differ in length");
  if (n > 8) throw std::invalid_argument("permutation search is limited to n <= 8");
  validate_labeling(truth, n, static_cast<Index>(truth.size()));
  validate_labeling(estimate, n, static_cast<Index>(estimate.size()));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) hits += perm[estimate[i]] == truth[i];
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return truth.empty() ? 1.0 : static_cast<double>(best) / static_cast<double>(truth.size());
}

}  // namespace swreg
