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

#include "ltransfer/rounding.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "ltransfer/generator.h"
#include "ltransfer/maxflow.h"
#include "ltransfer/oracle.h"
#include "test_util.h"

namespace ltransfer {
namespace {

using testing::LoadInstance;

std::vector<std::int64_t> Sorted(std::vector<std::int64_t> v) {
  return oracle::SortedDescending(std::move(v));
}

TEST(AugmentedNetworkTest, SevenSchoolBlocksAndBounds) {
  FlowNetwork g = BuildBaseNetwork(LoadInstance("fig2.json"));
  CharacteristicFunction w(g);
  AugmentedNetwork aug = BuildAugmentedNetwork(g, RunMdr(w));
  EXPECT_EQ(aug.block_capacity, (std::vector<std::int64_t>{3, 2}));
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(aug.sink_bounds[k], (std::pair<std::int64_t, std::int64_t>{0, 1}));
  }
  EXPECT_EQ(aug.sink_bounds[5], (std::pair<std::int64_t, std::int64_t>{1, 1}));
  EXPECT_EQ(aug.network.num_sinks(), 2);
  EXPECT_EQ(MaxFlowWithLowerBounds(aug.network)->value, 5);
}

TEST(AugmentedNetworkTest, MatchesAugmentedFixture) {
  io::Json expected =
      io::ReadJsonFile(testing::FixturePath("fig3_augmented.json"));
  FlowNetwork g = BuildBaseNetwork(
      LoadInstance(expected["instance"].get<std::string>()));
  AugmentedNetwork aug =
      BuildAugmentedNetwork(g, RunMdr(CharacteristicFunction(g)));
  EXPECT_EQ(aug.block_capacity,
            expected["block_capacity"].get<std::vector<std::int64_t>>());
  EXPECT_EQ(aug.network.SinkLabels(),
            expected["block_sinks"].get<std::vector<std::string>>());
  for (int k = 0; k < g.num_sinks(); ++k) {
    auto bounds = expected["sink_bounds"][g.sinks()[k].label];
    EXPECT_EQ(aug.sink_bounds[k].first, bounds[0].get<std::int64_t>());
    EXPECT_EQ(aug.sink_bounds[k].second, bounds[1].get<std::int64_t>());
  }
  EXPECT_EQ(MaxFlowWithLowerBounds(aug.network)->value,
            expected["max_flow"].get<std::int64_t>());
}

TEST(AugmentedNetworkTest, ThreeSchoolBlockCapacities) {
  FlowNetwork g = BuildBaseNetwork(LoadInstance("fig1.json"));
  AugmentedNetwork aug = BuildAugmentedNetwork(g, RunMdr(CharacteristicFunction(g)));
  EXPECT_EQ(aug.block_capacity, (std::vector<std::int64_t>{2, 0}));
}

TEST(AugmentedNetworkTest, IntegralTargetsGiveTightBounds) {
  FlowNetwork g = BuildBaseNetwork(LoadInstance("fig4_base.json"));
  AugmentedNetwork aug = BuildAugmentedNetwork(g, RunMdr(CharacteristicFunction(g)));
  for (auto [lo, hi] : aug.sink_bounds) EXPECT_EQ(lo, hi);
}

TEST(RoundTest, SevenSchoolRounding) {
  FlowNetwork g = BuildBaseNetwork(LoadInstance("fig2.json"));
  CharacteristicFunction w(g);
  MdrResult mdr = RunMdr(w);
  RoundedSolution r = Round(g, mdr, w);
  EXPECT_EQ(Sorted(r.h_hat), (std::vector<std::int64_t>{5, 5, 4, 4, 4, 4, 4}));
  EXPECT_EQ(r.block_sums, (std::vector<std::int64_t>{22, 8}));
  EXPECT_EQ(r.flow_value, 5);
  EXPECT_TRUE(IsAchievable(r.h_hat, w));
}

TEST(RoundTest, IntegralTargetIsKept) {
  FlowNetwork g = BuildBaseNetwork(LoadInstance("fig4_base.json"));
  CharacteristicFunction w(g);
  MdrResult mdr = RunMdr(w);
  RoundedSolution r = Round(g, mdr, w);
  for (std::size_t k = 0; k < r.h_hat.size(); ++k) {
    EXPECT_EQ(r.h_hat[k], mdr.h_star[k]);
  }
}

TEST(SolveTest, ThreeSchoolExample) {
  SolveResult r = Solve(LoadInstance("fig1.json"), Variant::kBase);
  EXPECT_EQ(Sorted(r.solution.h_hat), (std::vector<std::int64_t>{2, 1, 1}));
  EXPECT_EQ(r.solution.max_flow, 2);
  EXPECT_EQ(r.solution.NumMoved(), 2);
}

TEST(SolveTest, BaseVariantOnSurplusExample) {
  SolveResult r = Solve(LoadInstance("fig4_base.json"), Variant::kBase);
  EXPECT_EQ(r.solution.h_hat, (std::vector<std::int64_t>{4, 1}));
  SolveResult same = Solve(LoadInstance("fig4.json"), Variant::kBase);
  EXPECT_EQ(same.solution.h_hat, (std::vector<std::int64_t>{4, 1}));
}

TEST(SolveTest, ExtendedVariantUsesSurplusMoves) {
  Instance inst = LoadInstance("fig4.json");
  SolveResult r = Solve(inst, Variant::kExtended);
  // t4 is the only teacher who accepts d1, so d1 keeps at least 4.
  EXPECT_EQ(r.solution.h_hat, (std::vector<std::int64_t>{4, 0}));
  EXPECT_TRUE(IsFeasible(inst, r.transfer));
  EXPECT_EQ(r.transfer.assignment[2], Destination::ToSurplus(0));

  oracle::EnumerationOptions opts;
  opts.surplus_moves = true;
  EXPECT_EQ(oracle::BruteForceLorenzDominant(inst, opts).sorted,
            (std::vector<std::int64_t>{4, 0}));
}

TEST(SolveTest, QuotedSurplusTransferLeavesFourAndZero) {
  Instance inst = LoadInstance("fig4.json");
  Transfer t = Transfer::AllStay(inst);
  t.assignment[0] = Destination::ToDeficit(1);
  t.assignment[1] = Destination::ToDeficit(1);
  t.assignment[2] = Destination::ToSurplus(0);
  t.assignment[3] = Destination::ToDeficit(0);
  ASSERT_TRUE(IsFeasible(inst, t));
  EXPECT_EQ(PostTransferDeficits(inst, t), (std::vector<std::int64_t>{4, 0}));
}

TEST(SolveTest, NothingTransferableLeavesDeficits) {
  Instance inst = Instance::Validate(
      {{{"s1", 1}, {"s2", 1}}, {{"d1", 2}}, {{"t1", "s1", {"s2"}}}});
  SolveResult r = Solve(inst, Variant::kBase);
  EXPECT_EQ(r.solution.h_hat, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(r.solution.NumMoved(), 0);
}

TEST(SolveTest, SpecializationNeedsTypedInstance) {
  EXPECT_THROW(Solve(LoadInstance("fig1.json"), Variant::kSpecialization),
               std::invalid_argument);
}

TEST(SolveTest, RandomSolutionsAreConsistent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst =
        Instance::Validate(GenerateBoundedInstance(seed, 3, 5, 6, 4, 4));
    SolveResult r = Solve(inst, Variant::kBase);
    EXPECT_TRUE(IsFeasible(inst, r.transfer));
    EXPECT_EQ(PostTransferDeficits(inst, r.transfer), r.solution.h_hat);
    Transfer back = TransferFromSolution(inst, r.solution);
    EXPECT_EQ(back, r.transfer);
  }
}

TEST(VariantTest, ParsesNames) {
  for (Variant v : {Variant::kBase, Variant::kExtended, Variant::kSpecialization}) {
    EXPECT_EQ(ParseVariant(ToString(v)), v);
  }
  EXPECT_THROW(ParseVariant("bogus"), std::invalid_argument);
}

}  // namespace
}  // namespace ltransfer
