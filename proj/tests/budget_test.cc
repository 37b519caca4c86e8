//
// Copyright 2026 The NodeLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "nodeldp/budget.h"

#include <cmath>

#include "gtest/gtest.h"
#include "nodeldp/loss.h"
#include "nodeldp/rng.h"

namespace nodeldp {
namespace {

TEST(SplitBudget, SplitsPublishingShareAndHalvesRemainder) {
  BudgetSplit s = split_budget(2.0, 0.9, 50);
  EXPECT_DOUBLE_EQ(s.eps3, 1.8);
  EXPECT_DOUBLE_EQ(s.eps1, 0.1);
  EXPECT_DOUBLE_EQ(s.eps2, 0.1);
  EXPECT_EQ(s.K, 50);
  EXPECT_NEAR(s.eps1 + s.eps2 + s.eps3, 2.0, 1e-12);
}

TEST(SplitBudget, ValidatesArguments) {
  EXPECT_THROW(split_budget(0.0, 0.5, 10), std::invalid_argument);
  EXPECT_THROW(split_budget(-1.0, 0.5, 10), std::invalid_argument);
  EXPECT_THROW(split_budget(1.0, 0.0, 10), std::invalid_argument);
  EXPECT_THROW(split_budget(1.0, 1.0, 10), std::invalid_argument);
  EXPECT_THROW(split_budget(1.0, 0.5, 0), std::invalid_argument);
}

TEST(AccountPrivacy, ReportsAmortizedAndComposedTotals) {
  BudgetSplit s;
  s.eps1 = 0.5;
  s.eps2 = 0.3;
  s.eps3 = 1.0;
  s.K = 50;
  PrivacyAccount acc = account_privacy(s);
  EXPECT_NEAR(acc.amortized_total, 1.31, 1e-12);
  EXPECT_NEAR(acc.composed_total, 1.8, 1e-12);
}

TEST(AccountPrivacy, AmortizedNeverExceedsComposed) {
  for (double eps : {0.5, 1.0, 2.0, 4.0}) {
    for (double alpha : {0.3, 0.7, 0.94}) {
      for (int K : {1, 5, 50}) {
        PrivacyAccount acc = account_privacy(split_budget(eps, alpha, K));
        EXPECT_LE(acc.amortized_total, acc.composed_total + 1e-15);
        EXPECT_NEAR(acc.composed_total, eps, 1e-12);
      }
    }
  }
}

TEST(PublishingScale, MatchesTwoThetaOverEps) {
  EXPECT_DOUBLE_EQ(publishing_scale(4, 2.0), 4.0);
  EXPECT_DOUBLE_EQ(publishing_scale(1, 0.5), 4.0);
  EXPECT_THROW(publishing_scale(0, 1.0), std::invalid_argument);
  EXPECT_THROW(publishing_scale(3, 0.0), std::invalid_argument);
}

TEST(PublishingLoss, MatchesClosedForm) {
  // 8 * n * k^2 / eps3^2 with n = 3, k = 1, eps3 = 2 -> 6; k = 2 -> 24.
  EXPECT_DOUBLE_EQ(publishing_loss(3, 1, 2.0), 6.0);
  EXPECT_DOUBLE_EQ(publishing_loss(3, 2, 2.0), 24.0);
  EXPECT_DOUBLE_EQ(publishing_loss(1000, 5, 0.94), 8 * 1000 * 25 / (0.94 * 0.94));
}

TEST(ProjectionLoss, SumsExcessOverThreshold) {
  const std::vector<int> ds{3, 1, 2};
  EXPECT_EQ(projection_loss(ds, 1), 3);  // (2 + 0 + 1)
  EXPECT_EQ(projection_loss(ds, 2), 1);
  EXPECT_EQ(projection_loss(ds, 3), 0);
  EXPECT_THROW(projection_loss(ds, 0), std::invalid_argument);
}

TEST(SelectionNoiseScale, MatchesSensitivityTimesRoundsOverBudget) {
  // (n - 1 - k) * K / eps1 with n = 100, k = 10, K = 50, eps1 = 1.
  EXPECT_DOUBLE_EQ(selection_noise_scale(100, 10, 1.0, 50), 4450.0);
  EXPECT_THROW(selection_noise_scale(100, 99, 1.0, 50), std::invalid_argument);
}

TEST(LaplaceSample, HasDocumentedVariance) {
  // Var(Laplace(b)) = 2 b^2; empirical check at one million draws.
  std::mt19937_64 rng(12345);
  const double scale = 3.0;
  const int trials = 1000000;
  double sum = 0, sq = 0;
  for (int i = 0; i < trials; ++i) {
    const double x = laplace_sample(scale, rng);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / trials;
  const double var = sq / trials - mean * mean;
  EXPECT_NEAR(mean, 0.0, 0.02);
  EXPECT_NEAR(var, 2 * scale * scale, 0.03 * 2 * scale * scale);
  EXPECT_THROW(laplace_sample(0.0, rng), std::invalid_argument);
}

TEST(Substreams, DeriveIsStableAndKeyed) {
  Substreams subs(42);
  const uint64_t a = subs.derive(StreamPurpose::kPublishNoise, 3);
  EXPECT_EQ(a, subs.derive(StreamPurpose::kPublishNoise, 3));
  EXPECT_NE(a, subs.derive(StreamPurpose::kPublishNoise, 4));
  EXPECT_NE(a, subs.derive(StreamPurpose::kSelectionNoise, 3));
  EXPECT_NE(a, Substreams(43).derive(StreamPurpose::kPublishNoise, 3));

  auto s1 = subs.stream(StreamPurpose::kPublishNoise, 3);
  auto s2 = subs.stream(StreamPurpose::kPublishNoise, 3);
  for (int i = 0; i < 16; ++i) EXPECT_EQ(s1(), s2());
}

TEST(BoundedUint64, StaysInRangeAndCoversSupport) {
  std::mt19937_64 rng(9);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const uint64_t v = bounded_uint64(rng, 7);
    ASSERT_LT(v, 7u);
    ++hits[static_cast<int>(v)];
  }
  for (int h : hits) EXPECT_GT(h, 800);  // roughly uniform
}

}  // namespace
}  // namespace nodeldp
