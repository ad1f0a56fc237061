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

#include "ltransfer/mdr.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "ltransfer/errors.h"
#include "ltransfer/generator.h"
#include "test_util.h"

namespace ltransfer {
namespace {

using testing::LoadInstance;

CharacteristicFunction GameOf(const std::string& fixture) {
  return CharacteristicFunction(BuildBaseNetwork(LoadInstance(fixture)));
}

TEST(ArgmaxTest, FirstBlockOfSevenSchoolExample) {
  CharacteristicFunction w = GameOf("fig2.json");
  EXPECT_EQ(ArgmaxAverageMarginal(w, 0),
            w.MaskOf({"d1", "d2", "d3", "d4", "d5"}));
}

TEST(ArgmaxTest, TieResolvesToLargestMaximizer) {
  CharacteristicFunction w = GameOf("fig2.json");
  SinkMask base = w.MaskOf({"d1", "d2", "d3", "d4", "d5"});
  SinkMask d6 = w.MaskOf({"d6"});
  SinkMask d7 = w.MaskOf({"d7"});
  EXPECT_EQ(w(base | d6) - w(base), 3);
  EXPECT_EQ(w(base | d7) - w(base), 4);
  EXPECT_EQ(w(base | d6 | d7) - w(base), 8);
  EXPECT_EQ(ArgmaxAverageMarginal(w, base), d6 | d7);
  EXPECT_EQ(ArgmaxAverageMarginal(w, base, TieBreak::kSmallest), d7);
}

TEST(ArgmaxTest, SingleSchool) {
  Instance inst = Instance::Validate({{{"s", 1}}, {{"d", 3}}, {{"t", "s", {"d"}}}});
  CharacteristicFunction w(BuildBaseNetwork(inst));
  EXPECT_EQ(ArgmaxAverageMarginal(w, 0), SinkMask{1});
  EXPECT_THROW(ArgmaxAverageMarginal(w, 1), std::invalid_argument);
}

TEST(MdrTest, SevenSchoolBlocks) {
  CharacteristicFunction w = GameOf("fig2.json");
  MdrResult r = RunMdr(w);
  ASSERT_EQ(r.blocks.size(), 2u);
  EXPECT_EQ(r.blocks[0], w.MaskOf({"d1", "d2", "d3", "d4", "d5"}));
  EXPECT_EQ(r.blocks[1], w.MaskOf({"d6", "d7"}));
  for (int k = 0; k < 5; ++k) EXPECT_EQ(r.h_star[k], Rational(22, 5));
  EXPECT_EQ(r.h_star[5], 4);
  EXPECT_EQ(r.h_star[6], 4);
  EXPECT_EQ(r.cumulative_worth, (std::vector<std::int64_t>{22, 30}));
}

TEST(MdrTest, ThreeSchoolFractionalVector) {
  MdrResult r = RunMdr(GameOf("fig1.json"));
  EXPECT_EQ(r.h_star, (std::vector<Rational>{1, Rational(3, 2), Rational(3, 2)}));
  EXPECT_EQ(r.BlockOf(), (std::vector<int>{1, 0, 0}));
}

TEST(MdrTest, SingleSchoolSingleTeacher) {
  Instance inst = Instance::Validate({{{"s", 1}}, {{"d", 3}}, {{"t", "s", {"d"}}}});
  MdrResult r = RunMdr(CharacteristicFunction(BuildBaseNetwork(inst)));
  EXPECT_EQ(r.h_star, (std::vector<Rational>{2}));
  EXPECT_EQ(r.blocks.size(), 1u);
}

TEST(MdrTest, TieBreakRulesAgreeOnMultiset) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst =
        Instance::Validate(GenerateBoundedInstance(seed, 3, 5, 6, 4, 4));
    CharacteristicFunction w(BuildBaseNetwork(inst));
    MdrResult a = RunMdr(w, TieBreak::kLargest);
    MdrResult b = RunMdr(w, TieBreak::kSmallest);
    EXPECT_EQ(a.h_star, b.h_star) << seed;
    EXPECT_GE(b.blocks.size(), a.blocks.size());
  }
}

TEST(MdrTest, BlockAverageEqualsMeanOfMembers) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst =
        Instance::Validate(GenerateBoundedInstance(seed, 3, 5, 6, 4, 4));
    CharacteristicFunction w(BuildBaseNetwork(inst));
    MdrResult r = RunMdr(w);
    SinkMask prev = 0;
    for (std::size_t j = 0; j < r.blocks.size(); ++j) {
      Rational sum = 0;
      for (int k : Members(r.blocks[j])) sum += r.h_star[k];
      EXPECT_EQ(sum, w(prev | r.blocks[j]) - w(prev));
      prev |= r.blocks[j];
    }
    EXPECT_EQ(prev, w.universe());
  }
}

TEST(MdrTest, InvariantCheckerRejectsTamperedResult) {
  CharacteristicFunction w = GameOf("fig2.json");
  MdrResult r = RunMdr(w);
  r.h_star[0] = 5;
  EXPECT_THROW(CheckMdrInvariants(w, r), DefectError);
}

TEST(MdrTest, NoSchoolsGivesEmptyResult) {
  CharacteristicFunction w({}, [](SinkMask) { return std::int64_t{0}; });
  MdrResult r = RunMdr(w);
  EXPECT_TRUE(r.blocks.empty());
  EXPECT_TRUE(r.h_star.empty());
}

}  // namespace
}  // namespace ltransfer
