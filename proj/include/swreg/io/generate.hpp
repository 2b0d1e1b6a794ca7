#pragma once

// Synthetic instances y_i = w_{q_i} . x_i + v_i with modes drawn
// independently of the regressors.

#include "swreg/core.hpp"
#include "swreg/random.hpp"

#include <cstdint>
#include <string>

namespace swreg {

enum class ModeProcess { iid_uniform, markov };
enum class XDistribution { gaussian, uniform_box };

struct GeneratorSpec {
  int n = 2;
  int d = 1;
  int N = 10;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  ModeProcess mode_process = ModeProcess::iid_uniform;
  double p_stay = 0.9;  // markov only
  XDistribution x_distribution = XDistribution::gaussian;

  void validate() const {
    if (n < 1 || d < 1) throw std::invalid_argument("generator needs n >= 1 and d >= 1");
    if (N < n * d)
      throw std::invalid_argument("generator needs N >= n*d (" + std::to_string(N) + " < " +
                                  std::to_string(n * d) + ")");
    if (!(noise_sigma >= 0)) throw std::invalid_argument("noise_sigma must be non-negative");
    if (mode_process == ModeProcess::markov && !(p_stay >= 0 && p_stay <= 1))
      throw std::invalid_argument("p_stay must lie in [0, 1]");
  }
};

struct Instance {
  Dataset data;
  ModelSet truth_models;
  Labeling truth_labels;
};

/// Draw order is fixed: model entries (standard normal), then per point its
/// regressor, mode and noise. Uniform boxes are [-1, 1]^d.
inline Instance generate_instance(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Matrix w(spec.n, spec.d);
  for (int j = 0; j < spec.n; ++j)
    for (int k = 0; k < spec.d; ++k) w(j, k) = rng.normal();

  Matrix x(spec.N, spec.d);
  Vector y(spec.N);
  Labeling truth;
  truth.q.resize(static_cast<std::size_t>(spec.N));
  for (int i = 0; i < spec.N; ++i) {
    for (int k = 0; k < spec.d; ++k)
      x(i, k) = spec.x_distribution == XDistribution::gaussian ? rng.normal() : rng.uniform(-1.0, 1.0);
    int mode = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n)));
    if (spec.mode_process == ModeProcess::markov && i > 0) {
      if (rng.uniform() < spec.p_stay || spec.n == 1) {
        mode = truth.q[i - 1];
      } else {
        mode = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n - 1)));
        if (mode >= truth.q[i - 1]) ++mode;
      }
    }
    truth.q[i] = mode;
    const double noise = spec.noise_sigma > 0 ? rng.normal(0.0, spec.noise_sigma) : 0.0;
    y(i) = w.row(mode).dot(x.row(i)) + noise;
  }
  return {Dataset(std::move(x), std::move(y)), ModelSet(std::move(w)), std::move(truth)};
}

}  // namespace swreg
