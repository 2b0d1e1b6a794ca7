#pragma once

// Domain types and the elementary operations of switching linear regression:
// losses, the empirical cost, the minimum-error assignment rule, per-pair
// product classifiers and the majority vote they induce.
//
// Mode indices are 0-based throughout the library (mode j of the math is
// index j-1 here). Serialized reports use 1-based labels.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swreg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Raised when an enumeration would exceed a configured budget. Carries the
/// computed size so callers can report it.
class CapsExceeded : public std::runtime_error {
 public:
  CapsExceeded(const std::string& what, double requested)
      : std::runtime_error(what), requested_(requested) {}
  double requested() const noexcept { return requested_; }

 private:
  double requested_;
};

struct Tolerances {
  double tie_tol = 1e-9;
  double zero_tol = 1e-9;
  double sign_tol = 1e-12;

  void validate() const {
    if (!(tie_tol > 0) || !(zero_tol > 0) || !(sign_tol > 0))
      throw std::invalid_argument("tolerances must be strictly positive");
  }
};

/// -1, 0 (on boundary) or +1.
inline int sign_with_tol(double v, double tol) {
  if (v > tol) return 1;
  if (v < -tol) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Dataset

class Dataset {
 public:
  Dataset(Matrix x, Vector y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.rows() < 1) throw std::invalid_argument("dataset needs at least one point");
    if (x_.cols() < 1) throw std::invalid_argument("dataset dimension must be at least 1");
    if (x_.rows() != y_.size())
      throw std::invalid_argument("x has " + std::to_string(x_.rows()) + " rows but y has " +
                                  std::to_string(y_.size()) + " entries");
    if (!x_.allFinite() || !y_.allFinite())
      throw std::invalid_argument("dataset contains non-finite values");
  }

  const Matrix& x() const noexcept { return x_; }
  const Vector& y() const noexcept { return y_; }
  Index size() const noexcept { return x_.rows(); }
  Index dim() const noexcept { return x_.cols(); }

  /// Points z_i = [x_i, y_i] in dimension d+1.
  Matrix lifted() const {
    Matrix z(size(), dim() + 1);
    z.leftCols(dim()) = x_;
    z.col(dim()) = y_;
    return z;
  }

 private:
  Matrix x_;
  Vector y_;
};

// ---------------------------------------------------------------------------
// Loss

enum class LossKind { squared, absolute };

struct LossModel {
  LossKind kind = LossKind::squared;

  double operator()(double e) const {
    if (!std::isfinite(e)) throw std::invalid_argument("loss of a non-finite residual");
    return kind == LossKind::squared ? e * e : std::abs(e);
  }
};

inline double loss_eval(LossModel loss, double e) { return loss(e); }

inline std::string_view to_string(LossKind k) {
  return k == LossKind::squared ? "squared" : "absolute";
}

inline LossKind parse_loss(std::string_view s) {
  if (s == "squared") return LossKind::squared;
  if (s == "absolute") return LossKind::absolute;
  throw std::invalid_argument("unknown loss '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Models and labelings

class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(Matrix w) : w_(std::move(w)) {
    if (w_.rows() < 1) throw std::invalid_argument("model set needs at least one mode");
    if (!w_.allFinite()) throw std::invalid_argument("model set contains non-finite values");
  }
  static ModelSet zeros(int n, Index d) { return ModelSet(Matrix::Zero(n, d)); }

  int modes() const noexcept { return static_cast<int>(w_.rows()); }
  Index dim() const noexcept { return w_.cols(); }
  const Matrix& w() const noexcept { return w_; }
  auto mode(int j) const { return w_.row(j); }
  void set_mode(int j, const Vector& v) { w_.row(j) = v.transpose(); }

 private:
  Matrix w_;
};

struct Labeling {
  std::vector<int> q;
  std::vector<int> tie_set;  // sorted point indices

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

inline void validate_labeling(const std::vector<int>& q, int n, Index count) {
  if (static_cast<Index>(q.size()) != count)
    throw std::invalid_argument("labeling has " + std::to_string(q.size()) + " entries, expected " +
                                std::to_string(count));
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < 0 || q[i] >= n)
      throw std::invalid_argument("label " + std::to_string(q[i]) + " at point " +
                                  std::to_string(i) + " out of range for " + std::to_string(n) +
                                  " modes");
}

inline void check_dims(const Dataset& data, const ModelSet& models) {
  if (models.dim() != data.dim())
    throw std::invalid_argument("model dimension " + std::to_string(models.dim()) +
                                " does not match data dimension " + std::to_string(data.dim()));
}

inline double residual(const Dataset& data, const ModelSet& models, Index i, int j) {
  return data.y()(i) - models.mode(j).dot(data.x().row(i));
}

/// Mean loss over all points under the given assignment.
inline double empirical_cost(const Dataset& data, const ModelSet& models,
                             const std::vector<int>& q, LossModel loss) {
  check_dims(data, models);
  validate_labeling(q, models.modes(), data.size());
  double total = 0.0;
  for (Index i = 0; i < data.size(); ++i) total += loss(residual(data, models, i, q[i]));
  return total / static_cast<double>(data.size());
}

inline double empirical_cost(const Dataset& data, const ModelSet& models, const Labeling& q,
                             LossModel loss) {
  return empirical_cost(data, models, q.q, loss);
}

/// Minimum-error assignment. Ties (within tie_tol on absolute residuals) go
/// to the smallest mode index. A point enters tie_set when any two modes
/// have equal absolute error, which over-approximates the exact tie set.
inline Labeling assign_modes(const Dataset& data, const ModelSet& models, LossModel /*loss*/,
                             const Tolerances& tol = {}) {
  check_dims(data, models);
  const int n = models.modes();
  Labeling out;
  out.q.resize(static_cast<std::size_t>(data.size()));
  std::vector<double> err(static_cast<std::size_t>(n));
  for (Index i = 0; i < data.size(); ++i) {
    for (int j = 0; j < n; ++j) err[j] = std::abs(residual(data, models, i, j));
    // The loss is increasing in |e|, so the smallest absolute residual wins.
    const double least = *std::min_element(err.begin(), err.end());
    int best = 0;
    while (err[best] - least > tol.tie_tol) ++best;
    out.q[i] = best;

    std::vector<double> sorted(err);
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j + 1 < n; ++j)
      if (sorted[j + 1] - sorted[j] <= tol.tie_tol) {
        out.tie_set.push_back(static_cast<int>(i));
        break;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pairwise product classifiers

/// Position of pair (j, k), j < k, in lexicographic pair order.
inline int pair_index(int j, int k, int n) { return j * n - j * (j + 1) / 2 + (k - j - 1); }
inline int pair_count(int n) { return n * (n - 1) / 2; }

struct PairwiseClassifier {
  int j = 0;
  int k = 1;
  Vector w_bar;    // (w_j + w_k) / 2
  Vector w_tilde;  // w_j - w_k

  /// Sign of y - w_bar.x, i.e. the lifted-space factor.
  int lifted_sign(const Eigen::Ref<const Vector>& x, double y, double tol) const {
    return sign_with_tol(y - w_bar.dot(x), tol);
  }
  /// Sign of w_tilde.x, the regressor-space factor.
  int regressor_sign(const Eigen::Ref<const Vector>& x, double tol) const {
    return sign_with_tol(w_tilde.dot(x), tol);
  }
  /// +1 votes for mode j, -1 for mode k, 0 when either factor is on its boundary.
  int value(const Eigen::Ref<const Vector>& x, double y, double tol) const {
    return lifted_sign(x, y, tol) * regressor_sign(x, tol);
  }
};

inline std::vector<PairwiseClassifier> pairwise_classifiers_from_models(const ModelSet& models) {
  const int n = models.modes();
  if (n < 2) throw std::invalid_argument("pairwise classifiers need at least two modes");
  std::vector<PairwiseClassifier> out;
  out.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Vector wj = models.mode(j).transpose();
      Vector wk = models.mode(k).transpose();
      out.push_back({j, k, (wj + wk) / 2.0, wj - wk});
    }
  return out;
}

struct VoteResult {
  int mode = 0;
  std::vector<int> tied;  // all candidate maximizers, ascending; size 1 when decided

  bool decided() const noexcept { return tied.size() == 1; }
};

/// Majority vote from per-pair signs given in lexicographic pair order.
/// Boundary values (0) may count for either side, so every mode that could
/// reach the maximum vote under some resolution is reported as tied.
inline VoteResult vote_from_pair_signs(std::span<const int> pair_signs, int n) {
  if (static_cast<int>(pair_signs.size()) != pair_count(n))
    throw std::invalid_argument("expected " + std::to_string(pair_count(n)) +
                                " pairwise values, got " + std::to_string(pair_signs.size()));
  std::vector<int> strict(static_cast<std::size_t>(n), 0);
  std::vector<int> loose(static_cast<std::size_t>(n), 0);
  int p = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k, ++p) {
      const int c = pair_signs[p];
      if (c > 0) {
        ++strict[j];
        ++loose[j];
      } else if (c < 0) {
        ++strict[k];
        ++loose[k];
      } else {
        ++loose[j];
        ++loose[k];
      }
    }
  const int best = *std::max_element(strict.begin(), strict.end());
  VoteResult r;
  for (int j = 0; j < n; ++j)
    if (loose[j] >= best) r.tied.push_back(j);
  // A mode holding every strict comparison wins outright.
  for (int j = 0; j < n; ++j)
    if (strict[j] == n - 1) r.tied = {j};
  r.mode = r.tied.front();
  return r;
}

inline VoteResult majority_vote_label(const Eigen::Ref<const Vector>& x, double y,
                                      std::span<const PairwiseClassifier> classifiers,
                                      const Tolerances& tol = {}) {
  int n = 2;
  while (pair_count(n) < static_cast<int>(classifiers.size())) ++n;
  if (pair_count(n) != static_cast<int>(classifiers.size()))
    throw std::invalid_argument("incomplete pairwise classifier list");
  std::vector<int> signs(classifiers.size(), 0);
  for (const auto& c : classifiers) {
    if (c.j < 0 || c.k <= c.j || c.k >= n)
      throw std::invalid_argument("classifier pair out of range");
    signs[pair_index(c.j, c.k, n)] = c.value(x, y, tol.sign_tol);
  }
  return vote_from_pair_signs(signs, n);
}

// ---------------------------------------------------------------------------
// Label canonicalization

/// old mode -> new mode, numbering modes by first occurrence; unused modes
/// take the remaining numbers in their original order.
inline std::vector<int> canonical_permutation(const std::vector<int>& q, int n) {
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int label : q)
    if (map[label] < 0) map[label] = next++;
  for (int j = 0; j < n; ++j)
    if (map[j] < 0) map[j] = next++;
  return map;
}

inline Labeling canonicalize_labels(const Labeling& labeling, int n) {
  validate_labeling(labeling.q, n, static_cast<Index>(labeling.q.size()));
  const auto map = canonical_permutation(labeling.q, n);
  Labeling out = labeling;
  for (auto& label : out.q) label = map[label];
  return out;
}

inline bool is_canonical(const std::vector<int>& q) {
  int next = 0;
  for (int label : q) {
    if (label > next) return false;
    if (label == next) ++next;
  }
  return true;
}

/// Reorders modes so that old mode j becomes map[j].
inline ModelSet permute_models(const ModelSet& models, const std::vector<int>& map) {
  Matrix w(models.modes(), models.dim());
  for (int j = 0; j < models.modes(); ++j) w.row(map[j]) = models.mode(j);
  return ModelSet(std::move(w));
}

}  // namespace swreg
