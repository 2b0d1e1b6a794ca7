#pragma once

// General-position checks and enumeration of the sign patterns that linear
// (through-origin) classifiers induce on a finite point set.

#include "swreg/combinatorics.hpp"
#include "swreg/core.hpp"
#include "swreg/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace swreg {

// ---------------------------------------------------------------------------
// General position

struct GeneralPositionReport {
  bool ok = true;
  /// Index sets of (m+1) points lying on a common affine hyperplane. Capped
  /// at GeneralPositionOptions::max_violations entries.
  std::vector<std::vector<int>> violations;
  bool sampled = false;  // true when subsets were drawn at random
  std::size_t subsets_checked = 0;
};

struct GeneralPositionOptions {
  double exhaustive_limit = 2e5;  // above this many subsets, sample instead
  std::size_t samples = 200000;
  std::uint64_t seed = 0;
  double rank_tol = 1e-10;  // relative pivot threshold
  std::size_t max_violations = 64;
};

/// Every (m+1)-subset must be affinely independent.
inline GeneralPositionReport check_general_position(const Matrix& points,
                                                    const GeneralPositionOptions& opt = {}) {
  if (!points.allFinite()) throw std::invalid_argument("non-finite point coordinates");
  const int count = static_cast<int>(points.rows());
  const int m = static_cast<int>(points.cols());
  GeneralPositionReport report;
  if (count < m + 1) return report;

  Matrix diff(m, m);
  auto test = [&](const std::vector<int>& subset) {
    ++report.subsets_checked;
    for (int t = 1; t <= m; ++t) diff.row(t - 1) = points.row(subset[t]) - points.row(subset[0]);
    Eigen::FullPivLU<Matrix> lu(diff);
    lu.setThreshold(opt.rank_tol);
    if (lu.rank() < m) {
      report.ok = false;
      if (report.violations.size() < opt.max_violations) {
        auto sorted = subset;
        std::sort(sorted.begin(), sorted.end());
        report.violations.push_back(std::move(sorted));
      }
    }
    return true;
  };

  if (binomial(count, m + 1) <= opt.exhaustive_limit) {
    for_each_combination(count, m + 1, test);
  } else {
    report.sampled = true;
    Rng rng(opt.seed);
    for (std::size_t s = 0; s < opt.samples; ++s) test(rng.sample(count, m + 1));
    std::sort(report.violations.begin(), report.violations.end());
    report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                            report.violations.end());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Dichotomies

/// +1 / -1 per point; 0 only for a point at the origin, which lies on
/// every hyperplane.
using SignPattern = std::vector<signed char>;

struct Dichotomy {
  SignPattern signs;
  Vector witness;     // normal vector h with sign(h.p_i) == signs[i]
  bool verified = true;

  std::string key() const {
    std::string s(signs.size(), '+');
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (signs[i] < 0) s[i] = '-';
    return s;
  }
};

struct DichotomySet {
  std::vector<Dichotomy> items;  // ordered by sign pattern
  std::size_t degenerate_subsets = 0;
  std::size_t unverified = 0;

  std::size_t size() const noexcept { return items.size(); }
  bool contains(const SignPattern& s) const {
    return std::any_of(items.begin(), items.end(), [&](const Dichotomy& d) { return d.signs == s; });
  }
};

/// Upper bound 2^m * C(N, m-1) on the number of linear dichotomies.
inline double dichotomy_bound(long long count, int m) {
  return std::ldexp(1.0, m) * binomial(count, m - 1);
}

inline bool is_origin(const Matrix& points, Index i, double tol) {
  return points.row(i).cwiseAbs().maxCoeff() <= tol;
}

/// True when every point off the origin satisfies signs_i * (h . p_i) > margin.
inline bool witness_realizes(const Matrix& points, const Vector& h, const SignPattern& signs,
                             double margin) {
  for (Index i = 0; i < points.rows(); ++i) {
    if (signs[i] == 0) {
      if (!is_origin(points, i, margin)) return false;
      continue;
    }
    if (signs[i] * points.row(i).dot(h) <= margin) return false;
  }
  return true;
}

struct DichotomyOptions {
  double sign_tol = 1e-12;
  int max_free_points = 20;  // cap on branch doubling at one spanning subset
};

/// All sign patterns (sign(h.p_1), ..., sign(h.p_N)) with no point on the
/// boundary. For every (m-1)-subset, the hyperplane through the subset and
/// the origin is perturbed so the spanning points take each of their 2^(m-1)
/// sign assignments, with and without a global flip. Points other than the
/// spanning ones that also lie on that hyperplane are given both signs.
inline DichotomySet enumerate_linear_dichotomies(const Matrix& points,
                                                 const DichotomyOptions& opt = {}) {
  if (!points.allFinite()) throw std::invalid_argument("non-finite point coordinates");
  const int count = static_cast<int>(points.rows());
  const int m = static_cast<int>(points.cols());
  if (m < 1) throw std::invalid_argument("points must have dimension at least 1");

  std::map<SignPattern, Dichotomy> found;
  DichotomySet out;

  for_each_combination(count, m - 1, [&](const std::vector<int>& span) {
    Vector h;
    if (m == 1) {
      h = Vector::Ones(1);
    } else {
      Matrix a(m - 1, m);
      for (int t = 0; t < m - 1; ++t) a.row(t) = points.row(span[t]);
      Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      if (sv(m - 2) <= 1e-12 * std::max(1.0, sv(0))) {
        ++out.degenerate_subsets;
        return true;
      }
      h = svd.matrixV().col(m - 1);
    }
    const Vector proj = points * h;

    std::vector<char> at_origin(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i) at_origin[i] = is_origin(points, i, opt.sign_tol);
    std::vector<int> free;
    for (int i = 0; i < count; ++i)
      if (!at_origin[i] && (std::abs(proj(i)) <= opt.sign_tol ||
                            std::find(span.begin(), span.end(), i) != span.end()))
        free.push_back(i);
    std::sort(free.begin(), free.end());
    if (static_cast<int>(free.size()) > opt.max_free_points)
      throw CapsExceeded("too many points on one spanning hyperplane",
                         std::ldexp(1.0, static_cast<int>(free.size())));
    std::vector<char> is_free(static_cast<std::size_t>(count), 0);
    for (int i : free) is_free[i] = 1;

    Matrix free_pts(static_cast<Index>(free.size()), m);
    for (std::size_t t = 0; t < free.size(); ++t) free_pts.row(static_cast<Index>(t)) = points.row(free[t]);
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
    if (!free.empty()) cod.compute(free_pts);

    const std::uint64_t assignments = std::uint64_t{1} << free.size();
    for (int flip : {1, -1}) {
      for (std::uint64_t mask = 0; mask < assignments; ++mask) {
        SignPattern signs(static_cast<std::size_t>(count));
        Vector sigma(static_cast<Index>(free.size()));
        for (std::size_t t = 0; t < free.size(); ++t) {
          sigma(static_cast<Index>(t)) = (mask >> t) & 1 ? -1.0 : 1.0;
          signs[free[t]] = static_cast<signed char>(sigma(static_cast<Index>(t)));
        }
        for (int i = 0; i < count; ++i)
          if (at_origin[i]) signs[i] = 0;
          else if (!is_free[i]) signs[i] = static_cast<signed char>(proj(i) > 0 ? flip : -flip);
        if (found.contains(signs)) continue;

        // Witness: flip * h + step * v with v . p_t = sigma_t on the free points.
        Vector v = free.empty() ? Vector::Zero(m) : Vector(cod.solve(sigma));
        // Dependent free points: an assignment the best direction cannot
        // reproduce is not realizable near this hyperplane.
        if (!free.empty() && ((free_pts * v).cwiseProduct(sigma).array() <= opt.sign_tol).any()) continue;
        double min_proj = std::numeric_limits<double>::infinity();
        double max_shift = 1.0;
        for (int i = 0; i < count; ++i)
          if (!is_free[i] && !at_origin[i]) {
            min_proj = std::min(min_proj, std::abs(proj(i)));
            max_shift = std::max(max_shift, std::abs(points.row(i).dot(v)));
          }
        const double step = std::isfinite(min_proj) ? 0.5 * min_proj / max_shift : 1.0;
        Dichotomy d{signs, static_cast<double>(flip) * h + step * v, true};
        d.verified = witness_realizes(points, d.witness, d.signs, opt.sign_tol);
        if (!d.verified) ++out.unverified;
        found.emplace(std::move(signs), std::move(d));
      }
    }
    return true;
  });

  out.items.reserve(found.size());
  for (auto& [signs, d] : found) out.items.push_back(std::move(d));
  return out;
}

/// Independent first-principles enumeration for m <= 2: the two half-lines
/// for m = 1, and an angular sweep of the normal direction for m = 2.
inline DichotomySet sweep_dichotomies_oracle(const Matrix& points, double sign_tol = 1e-12) {
  const int count = static_cast<int>(points.rows());
  const int m = static_cast<int>(points.cols());
  if (m > 2 || m < 1) throw std::invalid_argument("sweep oracle supports dimension 1 or 2 only");
  if (!points.allFinite()) throw std::invalid_argument("non-finite point coordinates");

  std::map<SignPattern, Dichotomy> found;
  auto emit = [&](const Vector& h) {
    SignPattern signs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      if (is_origin(points, i, sign_tol)) {
        signs[i] = 0;
        continue;
      }
      const int s = sign_with_tol(points.row(i).dot(h), sign_tol);
      if (s == 0) return;
      signs[i] = static_cast<signed char>(s);
    }
    found.emplace(signs, Dichotomy{signs, h, true});
  };

  if (m == 1) {
    emit(Vector::Constant(1, 1.0));
    emit(Vector::Constant(1, -1.0));
  } else {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> critical;
    for (int i = 0; i < count; ++i) {
      if (is_origin(points, i, sign_tol)) continue;
      const double phi = std::atan2(points(i, 1), points(i, 0));
      for (double a : {phi + std::numbers::pi / 2, phi - std::numbers::pi / 2})
        critical.push_back(std::fmod(a + 2 * two_pi, two_pi));
    }
    std::sort(critical.begin(), critical.end());
    if (critical.empty()) critical.push_back(0.0);
    for (std::size_t t = 0; t < critical.size(); ++t) {
      const double lo = critical[t];
      const double hi = t + 1 < critical.size() ? critical[t + 1] : critical.front() + two_pi;
      if (hi - lo < 1e-12) continue;
      const double theta = 0.5 * (lo + hi);
      Vector h(2);
      h << std::cos(theta), std::sin(theta);
      emit(h);
    }
  }

  DichotomySet out;
  for (auto& [signs, d] : found) out.items.push_back(std::move(d));
  return out;
}

}  // namespace swreg
