#pragma once

// Per-mode regression and the alternating refinement built from the two
// exact half-steps (assignment for fixed models, fitting for fixed labels).

#include "swreg/combinatorics.hpp"
#include "swreg/core.hpp"

#include <limits>
#include <span>
#include <vector>

namespace swreg {

namespace detail {

inline Matrix gather_rows(const Matrix& m, std::span<const int> rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t t = 0; t < rows.size(); ++t) out.row(static_cast<Index>(t)) = m.row(rows[t]);
  return out;
}

inline Vector gather(const Vector& v, std::span<const int> rows) {
  Vector out(static_cast<Index>(rows.size()));
  for (std::size_t t = 0; t < rows.size(); ++t) out(static_cast<Index>(t)) = v(rows[t]);
  return out;
}

inline Vector least_squares(const Matrix& x, const Vector& y) {
  const Index d = x.cols();
  Matrix gram = x.transpose() * x;
  const Vector rhs = x.transpose() * y;
  Eigen::FullPivLU<Matrix> lu(gram);
  lu.setThreshold(1e-12);
  if (lu.rank() < d) gram.diagonal().array() += 1e-10;
  return gram.ldlt().solve(rhs);
}

/// Minimizer of sum |y - x w|. Some L1-optimal fit passes through rank(x)
/// of the points, so every interpolating hyperplane is a candidate.
inline Vector least_absolute(const Matrix& x, const Vector& y) {
  const Index count = x.rows();
  const Index d = x.cols();
  if (count <= d) return Eigen::CompleteOrthogonalDecomposition<Matrix>(x).solve(y);

  const Index rank = Eigen::CompleteOrthogonalDecomposition<Matrix>(x).rank();
  Vector best = Vector::Zero(d);
  double best_cost = std::numeric_limits<double>::infinity();
  Matrix a(rank, d);
  Vector b(rank);
  for_each_combination(static_cast<int>(count), static_cast<int>(rank), [&](const std::vector<int>& s) {
    for (Index t = 0; t < rank; ++t) {
      a.row(t) = x.row(s[t]);
      b(t) = y(s[t]);
    }
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
    if (cod.rank() < rank) return true;
    const Vector w = cod.solve(b);
    const double cost = (y - x * w).cwiseAbs().sum();
    if (cost < best_cost) {
      best_cost = cost;
      best = w;
    }
    return true;
  });
  return best;
}

}  // namespace detail

/// Best single linear model for the given rows. Empty selections yield the
/// zero vector.
inline Vector solve_mode_regression(const Dataset& data, std::span<const int> rows, LossModel loss) {
  for (int r : rows)
    if (r < 0 || r >= data.size()) throw std::invalid_argument("row index out of range");
  if (rows.empty()) return Vector::Zero(data.dim());
  const Matrix x = detail::gather_rows(data.x(), rows);
  const Vector y = detail::gather(data.y(), rows);
  return loss.kind == LossKind::squared ? detail::least_squares(x, y) : detail::least_absolute(x, y);
}

inline ModelSet fit_modes(const Dataset& data, const std::vector<int>& q, int n, LossModel loss) {
  validate_labeling(q, n, data.size());
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < q.size(); ++i) members[q[i]].push_back(static_cast<int>(i));
  ModelSet models = ModelSet::zeros(n, data.dim());
  for (int j = 0; j < n; ++j) models.set_mode(j, solve_mode_regression(data, members[j], loss));
  return models;
}

struct RefineResult {
  ModelSet models;
  Labeling labeling;  // always assign_modes(models)
  std::vector<double> trace;  // cost after each half-step
  int label_changes = 0;
};

/// Alternates assignment and fitting until the labeling stops changing or
/// a full round improves the cost by less than zero_tol.
inline RefineResult refine_alternate(const Dataset& data, const ModelSet& start, LossModel loss,
                                     const Tolerances& tol = {}, int max_rounds = 10000) {
  RefineResult r;
  r.models = start;
  r.labeling = assign_modes(data, r.models, loss, tol);
  r.trace.push_back(empirical_cost(data, r.models, r.labeling, loss));
  for (int round = 0; round < max_rounds; ++round) {
    ModelSet fitted = fit_modes(data, r.labeling.q, start.modes(), loss);
    r.trace.push_back(empirical_cost(data, fitted, r.labeling, loss));
    Labeling next = assign_modes(data, fitted, loss, tol);
    const double previous = r.trace[r.trace.size() - 2];
    r.trace.push_back(empirical_cost(data, fitted, next, loss));
    const bool changed = next.q != r.labeling.q;
    r.models = std::move(fitted);
    r.labeling = std::move(next);
    if (!changed) break;
    ++r.label_changes;
    if (previous - r.trace.back() < tol.zero_tol) break;
  }
  return r;
}

}  // namespace swreg
