#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace swreg;
using swreg::oracle::construct_exact_ties;
using swreg::oracle::for_each_labeling;

namespace {

Dataset points_1d(std::initializer_list<std::pair<double, double>> pts) {
  Matrix x(static_cast<Index>(pts.size()), 1);
  Vector y(static_cast<Index>(pts.size()));
  Index i = 0;
  for (auto [xi, yi] : pts) {
    x(i, 0) = xi;
    y(i++) = yi;
  }
  return Dataset(x, y);
}

ModelSet models_1d(std::initializer_list<double> ws) {
  Matrix w(static_cast<Index>(ws.size()), 1);
  Index j = 0;
  for (double v : ws) w(j++, 0) = v;
  return ModelSet(w);
}

const LossModel kSquared{LossKind::squared};
const LossModel kAbsolute{LossKind::absolute};

}  // namespace

TEST(Loss, Examples) {
  EXPECT_EQ(loss_eval(kSquared, 0.0), 0.0);
  EXPECT_EQ(loss_eval(kSquared, -2.0), 4.0);
  EXPECT_EQ(loss_eval(kSquared, -2.0), loss_eval(kSquared, 2.0));
  EXPECT_EQ(loss_eval(kAbsolute, 3.0), 3.0);
}

TEST(Loss, RejectsNonFinite) {
  EXPECT_THROW(loss_eval(kSquared, std::nan("")), std::invalid_argument);
  EXPECT_THROW(loss_eval(kAbsolute, INFINITY), std::invalid_argument);
}

TEST(Loss, AxiomsOnSampledPairs) {
  Rng rng(11);
  for (const LossModel loss : {kSquared, kAbsolute}) {
    EXPECT_EQ(loss(0.0), 0.0);
    for (int t = 0; t < 10000; ++t) {
      const double e = rng.normal() * 5;
      const double f = rng.normal() * 5;
      EXPECT_EQ(loss(-e), loss(e));
      EXPECT_EQ(loss(e) < loss(f), std::abs(e) < std::abs(f));
    }
  }
}

TEST(Dataset, RejectsBadInput) {
  EXPECT_THROW(Dataset(Matrix(0, 1), Vector(0)), std::invalid_argument);
  EXPECT_THROW(Dataset(Matrix::Zero(2, 1), Vector::Zero(3)), std::invalid_argument);
  Matrix x = Matrix::Zero(2, 1);
  x(1, 0) = INFINITY;
  EXPECT_THROW(Dataset(x, Vector::Zero(2)), std::invalid_argument);
}

TEST(EmpiricalCost, Examples) {
  const Dataset one = points_1d({{1, 2}});
  EXPECT_EQ(empirical_cost(one, models_1d({2}), std::vector<int>{0}, kSquared), 0.0);
  EXPECT_EQ(empirical_cost(one, models_1d({1, 2}), std::vector<int>{0}, kSquared), 1.0);
  EXPECT_EQ(empirical_cost(one, models_1d({1, 2}), std::vector<int>{1}, kSquared), 0.0);

  const Dataset four = points_1d({{1, 2}, {2, 4}, {1, -1}, {3, -3}});
  EXPECT_EQ(empirical_cost(four, models_1d({2, -1}), std::vector<int>{0, 0, 1, 1}, kSquared), 0.0);
}

TEST(EmpiricalCost, Errors) {
  const Dataset one = points_1d({{1, 2}});
  EXPECT_THROW(empirical_cost(one, models_1d({1, 2}), std::vector<int>{2}, kSquared), std::invalid_argument);
  EXPECT_THROW(empirical_cost(one, models_1d({1}), std::vector<int>{0, 0}, kSquared), std::invalid_argument);
  EXPECT_THROW(empirical_cost(one, ModelSet(Matrix::Zero(1, 2)), std::vector<int>{0}, kSquared),
               std::invalid_argument);
}

TEST(AssignModes, Examples) {
  auto r = assign_modes(points_1d({{2, 1.9}}), models_1d({1, -1}), kSquared);
  EXPECT_EQ(r.q, std::vector<int>{0});
  EXPECT_TRUE(r.tie_set.empty());

  r = assign_modes(points_1d({{1, 0}}), models_1d({1, -1}), kSquared);
  EXPECT_EQ(r.q, std::vector<int>{0});
  EXPECT_EQ(r.tie_set, std::vector<int>{0});

  r = assign_modes(points_1d({{1, 1.7}}), models_1d({2, 0, -2}), kAbsolute);
  EXPECT_EQ(r.q, std::vector<int>{0});
  EXPECT_TRUE(r.tie_set.empty());
}

TEST(AssignModes, TieGoesToSmallestIndex) {
  // errors 3, 1, 1: modes 2 and 3 tie for the minimum
  const auto r = assign_modes(points_1d({{1, 0}}), models_1d({3, 1, -1}), kSquared);
  EXPECT_EQ(r.q, std::vector<int>{1});
  EXPECT_EQ(r.tie_set, std::vector<int>{0});
}

TEST(AssignModes, MinimizesCostOverAllLabelings) {
  Rng rng(5);
  const Tolerances tol;
  for (int trial = 0; trial < 100; ++trial) {
    const int count = 1 + static_cast<int>(rng.below(8));
    const int d = 1 + static_cast<int>(rng.below(2));
    const int n = 2 + static_cast<int>(rng.below(2));
    const Dataset data(oracle::random_points(rng, count, d), oracle::random_points(rng, count, 1).col(0));
    const ModelSet models(oracle::random_points(rng, n, d));
    const LossModel loss = trial % 2 ? kSquared : kAbsolute;
    const double assigned = empirical_cost(data, models, assign_modes(data, models, loss, tol), loss);
    double best = INFINITY;
    for_each_labeling(count, n, [&](const std::vector<int>& q) {
      best = std::min(best, empirical_cost(data, models, q, loss));
    });
    EXPECT_LE(assigned, best + tol.zero_tol);
  }
}

TEST(PairwiseClassifiers, Examples) {
  auto cs = pairwise_classifiers_from_models(models_1d({2, 0}));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].w_bar(0), 1.0);
  EXPECT_EQ(cs[0].w_tilde(0), 2.0);

  cs = pairwise_classifiers_from_models(ModelSet(Matrix::Constant(2, 3, 0.7)));
  EXPECT_TRUE(cs[0].w_tilde.isZero());
  Vector x(3);
  x << 0.3, -1.0, 2.0;
  EXPECT_EQ(cs[0].value(x, 5.0, 1e-12), 0);

  cs = pairwise_classifiers_from_models(models_1d({1, 2, 3}));
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(std::make_pair(cs[0].j, cs[0].k), std::make_pair(0, 1));
  EXPECT_EQ(std::make_pair(cs[1].j, cs[1].k), std::make_pair(0, 2));
  EXPECT_EQ(std::make_pair(cs[2].j, cs[2].k), std::make_pair(1, 2));

  EXPECT_THROW(pairwise_classifiers_from_models(models_1d({1})), std::invalid_argument);
}

TEST(MajorityVote, Examples) {
  const Vector one = Vector::Ones(1);
  auto cs = pairwise_classifiers_from_models(models_1d({2, 0}));
  EXPECT_EQ(cs[0].lifted_sign(one, 1.5, 1e-12), 1);
  EXPECT_EQ(cs[0].regressor_sign(one, 1e-12), 1);
  auto v = majority_vote_label(one, 1.5, cs);
  EXPECT_TRUE(v.decided());
  EXPECT_EQ(v.mode, 0);

  cs = pairwise_classifiers_from_models(models_1d({2, 0, -2}));
  v = majority_vote_label(one, 1.7, cs);
  EXPECT_TRUE(v.decided());
  EXPECT_EQ(v.mode, 0);
  EXPECT_EQ(v.mode, assign_modes(points_1d({{1, 1.7}}), models_1d({2, 0, -2}), kSquared).q[0]);

  cs = pairwise_classifiers_from_models(models_1d({1, -1}));
  v = majority_vote_label(one, 0.0, cs);
  EXPECT_EQ(v.tied, (std::vector<int>{0, 1}));
}

TEST(MajorityVote, VoteCountsFollowPairOutcomes) {
  // 1 beats 2, 1 beats 3, 2 beats 3 -> votes (2, 1, 0)
  auto v = vote_from_pair_signs(std::vector<int>{1, 1, 1}, 3);
  EXPECT_EQ(v.tied, std::vector<int>{0});
  // cyclic outcomes leave every mode with one vote
  v = vote_from_pair_signs(std::vector<int>{1, -1, 1}, 3);
  EXPECT_EQ(v.tied, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(v.mode, 0);
}

TEST(MajorityVote, IncompleteListRejected) {
  auto cs = pairwise_classifiers_from_models(models_1d({1, 2, 3}));
  cs.pop_back();
  EXPECT_THROW(majority_vote_label(Vector::Ones(1), 0.0, cs), std::invalid_argument);
  EXPECT_THROW(vote_from_pair_signs(std::vector<int>{1}, 3), std::invalid_argument);
}

TEST(MajorityVote, AgreesWithMinimumErrorRule) {
  Rng rng(17);
  const Tolerances tol;
  int checked = 0;
  while (checked < 300) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const int n = 2 + static_cast<int>(rng.below(3));
    const ModelSet models(oracle::random_points(rng, n, d));
    const Vector x = oracle::random_points(rng, 1, d).row(0).transpose();
    const double y = rng.normal() * 2;
    const auto cs = pairwise_classifiers_from_models(models);
    bool clear = true;
    for (const auto& c : cs)
      clear = clear && c.value(x, y, tol.sign_tol) != 0;
    if (!clear) continue;
    const auto v = majority_vote_label(x, y, cs, tol);
    ASSERT_TRUE(v.decided());
    EXPECT_EQ(v.mode, assign_modes(Dataset(x.transpose(), Vector::Constant(1, y)), models, kSquared, tol).q[0]);
    ++checked;
  }
}

TEST(PairwiseClassifiers, Antisymmetry) {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const ModelSet models(oracle::random_points(rng, 2, d));
    const auto c = pairwise_classifiers_from_models(models)[0];
    const PairwiseClassifier swapped{1, 0, c.w_bar, -c.w_tilde};
    const Vector x = oracle::random_points(rng, 1, d).row(0).transpose();
    const double y = rng.normal();
    if (c.lifted_sign(x, y, 1e-12) == 0 || c.regressor_sign(x, 1e-12) == 0) continue;
    EXPECT_EQ(c.value(x, y, 1e-12), -swapped.value(x, y, 1e-12));
  }
}

TEST(TieSet, PlantedExactTiesRespectBound) {
  Rng rng(31);
  for (int d = 1; d <= 3; ++d)
    for (int n = 2; n <= 3; ++n) {
      const auto built = construct_exact_ties(rng, d, n, 6);
      const auto labeling = assign_modes(built.data, built.models, kSquared);
      const std::size_t bound = static_cast<std::size_t>((2 * d + 1) * n * (n - 1) / 2);
      EXPECT_GE(labeling.tie_set.size(), built.planted) << "d=" << d << " n=" << n;
      EXPECT_LE(labeling.tie_set.size(), bound) << "d=" << d << " n=" << n;
    }
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize_labels({{1, 1, 0}, {}}, 2).q, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(canonicalize_labels({{0, 1, 2}, {}}, 3).q, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(canonicalize_labels({{2, 2, 2}, {}}, 3).q, (std::vector<int>{0, 0, 0}));
}

TEST(Canonicalize, IdempotentAndCostPreserving) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const int count = 1 + static_cast<int>(rng.below(9));
    std::vector<int> q(static_cast<std::size_t>(count));
    for (auto& v : q) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const Labeling once = canonicalize_labels({q, {}}, n);
    EXPECT_EQ(canonicalize_labels(once, n), once);
    EXPECT_TRUE(is_canonical(once.q));

    const Dataset data(oracle::random_points(rng, count, 2), oracle::random_points(rng, count, 1).col(0));
    const ModelSet models(oracle::random_points(rng, n, 2));
    const ModelSet permuted = permute_models(models, canonical_permutation(q, n));
    EXPECT_NEAR(empirical_cost(data, models, q, kSquared), empirical_cost(data, permuted, once, kSquared),
                1e-9);
  }
}

TEST(Tolerances, MustBePositive) {
  EXPECT_NO_THROW(Tolerances{}.validate());
  EXPECT_THROW((Tolerances{0.0, 1e-9, 1e-12}.validate()), std::invalid_argument);
  EXPECT_THROW((Tolerances{1e-9, 1e-9, -1.0}.validate()), std::invalid_argument);
}
