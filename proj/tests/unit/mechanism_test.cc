// Copyright 2026 The ltransfer Authors
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

#include "ltransfer/mechanism.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ltransfer/errors.h"
#include "ltransfer/generator.h"
#include "test_util.h"

namespace ltransfer {
namespace {

using testing::LoadInstance;

TEST(TieBreakTest, StayRanksHighest) {
  Instance inst = LoadInstance("fig1.json");
  TieBreakOrder order(inst);
  EXPECT_LT(order.Rank(Destination::ToDeficit(0)),
            order.Rank(Destination::ToDeficit(1)));
  EXPECT_GT(order.Rank(Destination::Stay()),
            order.Rank(Destination::ToDeficit(2)));
  Transfer stay = Transfer::AllStay(inst);
  Transfer moved = stay;
  moved.assignment[0] = Destination::ToDeficit(1);
  EXPECT_TRUE(order.Greater(stay, moved));
  EXPECT_FALSE(order.Greater(moved, stay));
  EXPECT_FALSE(order.Greater(stay, stay));
}

TEST(LdtTest, PicksMaximumOfDominantSet) {
  Instance inst = LoadInstance("fig1.json");
  TieBreakOrder order(inst);
  auto profile = oracle::TruthfulProfile(inst);
  std::vector<Transfer> dominant = LorenzDominantSet(inst, profile);
  ASSERT_EQ(dominant.size(), 3u);
  Transfer chosen = Ldt(inst, profile, order);
  // t1 moves in every member; t2 staying ranks highest, then t3 to d3.
  EXPECT_EQ(PostTransferDeficits(inst, chosen), (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_TRUE(chosen.assignment[1].is_stay());
  for (const Transfer& t : dominant) EXPECT_FALSE(order.Greater(t, chosen));
}

TEST(LdtTest, EmptyReportMeansStay) {
  Instance inst = LoadInstance("fig1.json");
  auto profile = oracle::TruthfulProfile(inst);
  profile[2] = {};
  for (const Transfer& t : LorenzDominantSet(inst, profile)) {
    EXPECT_TRUE(t.assignment[2].is_stay());
  }
}

TEST(LdtTest, SingletonDominantSetIgnoresOrder) {
  Instance inst = Instance::Validate({{{"s", 1}}, {{"d", 1}}, {{"t", "s", {"d"}}}});
  auto profile = oracle::TruthfulProfile(inst);
  ASSERT_EQ(LorenzDominantSet(inst, profile).size(), 1u);
  EXPECT_EQ(Ldt(inst, profile, TieBreakOrder(inst)).assignment[0],
            Destination::ToDeficit(0));
}

TEST(LdtTest, CapIsEnforced) {
  Instance inst = LoadInstance("fig2.json");
  EXPECT_THROW(LorenzDominantSet(inst, oracle::TruthfulProfile(inst)),
               CapExceededError);
}

TEST(TieBreakTest, MaxIsContractionConsistent) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst =
        Instance::Validate(GenerateBoundedInstance(seed, 3, 4, 5, 3, 3));
    TieBreakOrder order(inst);
    std::vector<Transfer> y;
    oracle::EnumerateTransfers(
        inst, [&](const Transfer& t, const auto&) { y.push_back(t); });
    const Transfer best = order.Max(y);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Transfer> x = {best};
      for (const Transfer& t : y) {
        if (rng() % 2) x.push_back(t);
      }
      std::shuffle(x.begin(), x.end(), rng);
      EXPECT_EQ(order.Max(x), best);
    }
  }
}

TEST(AuditTest, ThreeSchoolExampleHasNoViolations) {
  Instance inst = LoadInstance("fig1.json");
  AuditReport r = AuditStrategyProofness(inst, TieBreakOrder(inst),
                                         AuditBudget::All());
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.total_tested(), 0);
}

TEST(AuditTest, RandomInstancesHaveNoViolations) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst =
        Instance::Validate(GenerateBoundedInstance(seed, 3, 4, 5, 3, 3));
    AuditReport r = AuditStrategyProofness(inst, TieBreakOrder(inst),
                                           AuditBudget::All());
    EXPECT_TRUE(r.ok()) << seed;
  }
}

TEST(AuditTest, ScrambledSelectorIsCaught) {
  Instance inst = LoadInstance("fig1.json");
  AuditReport r = AuditStrategyProofness(inst, TieBreakOrder(inst),
                                         AuditBudget::All(), {},
                                         ScrambledSelector(0));
  EXPECT_FALSE(r.ok());
}

TEST(AuditTest, SampledBudgetIsDeterministic) {
  Instance inst = LoadInstance("fig1.json");
  TieBreakOrder order(inst);
  AuditReport a = AuditStrategyProofness(inst, order, AuditBudget::Sampled(5, 7));
  AuditReport b = AuditStrategyProofness(inst, order, AuditBudget::Sampled(5, 7));
  EXPECT_EQ(a.total_tested(), b.total_tested());
  EXPECT_TRUE(a.ok());
}

}  // namespace
}  // namespace ltransfer
