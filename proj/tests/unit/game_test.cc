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

#include "ltransfer/game.h"

#include <gtest/gtest.h>

#include "ltransfer/errors.h"
#include "ltransfer/generator.h"
#include "test_util.h"

namespace ltransfer {
namespace {

using testing::LoadInstance;

CharacteristicFunction GameOf(const std::string& fixture) {
  return CharacteristicFunction(BuildBaseNetwork(LoadInstance(fixture)));
}

TEST(GameTest, WorthOfCoalitions) {
  CharacteristicFunction w = GameOf("fig2.json");
  EXPECT_EQ(w(w.MaskOf({"d1", "d2", "d3", "d4", "d5"})), 22);
  EXPECT_EQ(w(w.MaskOf({"d3", "d4", "d5"})), 13);
  EXPECT_EQ(w(0), 0);
  EXPECT_EQ(w.Beta(w.universe()), 35);
  EXPECT_EQ(w.SinkFlow(w.universe()), 5);
}

TEST(GameTest, PlayerCapIsEnforced) {
  FlowNetwork net = BuildBaseNetwork(LoadInstance("fig2.json"));
  EXPECT_THROW(CharacteristicFunction(net, {.max_players = 6}),
               CapExceededError);
}

TEST(GameTest, UnknownLabelThrows) {
  CharacteristicFunction w = GameOf("fig1.json");
  EXPECT_FALSE(w.Find("d9").has_value());
  EXPECT_THROW(w.MaskOf({"d9"}), std::invalid_argument);
}

TEST(AchievabilityTest, ArbitraryRoundingFailsWithMinimalWitness) {
  CharacteristicFunction w = GameOf("fig2.json");
  AchievabilityResult r =
      CheckAchievable(ToRational({5, 5, 4, 4, 4, 4, 4}), w);
  EXPECT_FALSE(r.achievable);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, w.MaskOf({"d3", "d4", "d5"}));
  EXPECT_EQ(r.witness_worth, 13);
  EXPECT_EQ(r.witness_sum, 12);
}

TEST(AchievabilityTest, FractionalOptimumIsAchievable) {
  CharacteristicFunction w = GameOf("fig2.json");
  std::vector<Rational> h(5, Rational(22, 5));
  h.push_back(4);
  h.push_back(4);
  EXPECT_TRUE(IsAchievable(h, w));
}

TEST(AchievabilityTest, InitialDeficitsAreAchievable) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = Instance::Validate(GenerateInstance({.seed = seed}));
    CharacteristicFunction w(BuildBaseNetwork(inst));
    EXPECT_TRUE(IsAchievable(inst.Betas(), w));
  }
}

TEST(AchievabilityTest, DimensionMismatchThrows) {
  CharacteristicFunction w = GameOf("fig1.json");
  EXPECT_THROW(IsAchievable(std::vector<std::int64_t>{1, 2}, w),
               std::invalid_argument);
}

TEST(SupermodularityTest, FlowGamesAreSupermodular) {
  EXPECT_TRUE(CheckSupermodular(GameOf("fig1.json")).supermodular);
  EXPECT_TRUE(CheckSupermodular(GameOf("fig2.json")).supermodular);
}

TEST(SupermodularityTest, DetectsHandBuiltViolation) {
  // Concave in |B|: marginal gains shrink.
  CharacteristicFunction w({"a", "b", "c"}, [](SinkMask b) {
    int n = Cardinality(b);
    return std::int64_t{n == 0 ? 0 : (n == 1 ? 3 : (n == 2 ? 5 : 6))};
  });
  SupermodularityResult r = CheckSupermodular(w);
  EXPECT_FALSE(r.supermodular);
  ASSERT_TRUE(r.counterexample.has_value());
  const MarginalViolation& v = *r.counterexample;
  EXPECT_EQ(v.a & v.b, v.a);
  EXPECT_FALSE(Contains(v.b, v.k));
  EXPECT_GT(v.gain_a, v.gain_b);
}

TEST(SupermodularityTest, SinkFlowIsMonotoneAndSubmodular) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst =
        Instance::Validate(GenerateBoundedInstance(seed, 3, 5, 6, 4, 4));
    CharacteristicFunction w(BuildBaseNetwork(inst));
    auto v = [&](SinkMask b) { return w.SinkFlow(b); };
    EXPECT_FALSE(FindSubmodularViolation(w.num_players(), v)) << seed;
    EXPECT_FALSE(FindMonotoneViolation(w.num_players(), v)) << seed;
  }
}

TEST(SupermodularityTest, CheckersFlagOppositeCurvature) {
  auto square = [](SinkMask b) {
    std::int64_t n = Cardinality(b);
    return n * n;
  };
  EXPECT_FALSE(FindSupermodularViolation(3, square));
  EXPECT_TRUE(FindSubmodularViolation(3, square));
  auto decreasing = [](SinkMask b) { return -std::int64_t{Cardinality(b)}; };
  EXPECT_TRUE(FindMonotoneViolation(3, decreasing));
}

}  // namespace
}  // namespace ltransfer
