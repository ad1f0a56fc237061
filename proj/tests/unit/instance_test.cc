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

#include "ltransfer/instance.h"

#include <gtest/gtest.h>

#include "ltransfer/errors.h"
#include "test_util.h"

namespace ltransfer {
namespace {

using testing::LoadInstance;

Transfer Assign(const Instance& inst,
                std::initializer_list<std::pair<const char*, const char*>> m) {
  Transfer t = Transfer::AllStay(inst);
  for (auto [teacher, school] : m) {
    int i = *inst.FindTeacher(teacher);
    if (auto k = inst.FindDeficit(school)) {
      t.assignment[i] = Destination::ToDeficit(*k);
    } else {
      t.assignment[i] = Destination::ToSurplus(*inst.FindSurplus(school));
    }
  }
  return t;
}

std::vector<std::string> ProblemsOf(const RawInstance& raw) {
  try {
    Instance::Validate(raw);
  } catch (const ValidationError& e) {
    return e.problems();
  }
  return {};
}

bool Mentions(const std::vector<std::string>& problems, const std::string& s) {
  for (const auto& p : problems) {
    if (p.find(s) != std::string::npos) return true;
  }
  return false;
}

RawInstance Tiny() {
  return {{{"s1", 1}}, {{"d1", 1}}, {{"t1", "s1", {"d1"}}}};
}

TEST(InstanceTest, LoadsFixtureShape) {
  Instance inst = LoadInstance("fig1.json");
  EXPECT_EQ(inst.num_surplus(), 2);
  EXPECT_EQ(inst.num_deficit(), 3);
  EXPECT_EQ(inst.num_teachers(), 3);
  EXPECT_EQ(inst.Betas(), (std::vector<std::int64_t>{1, 3, 2}));
}

TEST(InstanceTest, RejectsEmptyAcceptableSet) {
  RawInstance raw = Tiny();
  raw.teachers[0].acceptable.clear();
  EXPECT_TRUE(Mentions(ProblemsOf(raw), "empty acceptable set"));
}

TEST(InstanceTest, RejectsNonpositiveDeficitAndSurplus) {
  RawInstance raw = Tiny();
  raw.deficit_schools[0].beta = 0;
  raw.surplus_schools[0].alpha = -1;
  auto problems = ProblemsOf(raw);
  EXPECT_TRUE(Mentions(problems, "nonpositive deficit"));
  EXPECT_TRUE(Mentions(problems, "nonpositive surplus"));
}

TEST(InstanceTest, ReportsEveryProblem) {
  RawInstance raw = Tiny();
  raw.teachers.push_back({"t1", "s9", {"d7", "d7"}});
  auto problems = ProblemsOf(raw);
  EXPECT_TRUE(Mentions(problems, "duplicate"));
  EXPECT_TRUE(Mentions(problems, "s9"));
  EXPECT_TRUE(Mentions(problems, "d7"));
  EXPECT_GE(problems.size(), 3u);
}

TEST(InstanceTest, RejectsOwnOriginAsAcceptable) {
  RawInstance raw = Tiny();
  raw.teachers[0].acceptable = {"s1"};
  EXPECT_FALSE(ProblemsOf(raw).empty());
}

TEST(InstanceTest, RestrictionDropsSurplusAcceptables) {
  Instance inst = LoadInstance("fig4.json");
  EXPECT_TRUE(inst.HasSurplusAcceptables());
  Instance base = inst.RestrictToDeficitAcceptables();
  EXPECT_FALSE(base.HasSurplusAcceptables());
  // t3 only accepted a surplus school, so it leaves the pool.
  EXPECT_EQ(base.num_teachers(), inst.num_teachers() - 1);
  EXPECT_FALSE(base.FindTeacher("t3").has_value());
}

TEST(FeasibilityTest, AcceptsTwoMovesIntoOneSchool) {
  Instance inst = LoadInstance("fig1.json");
  EXPECT_TRUE(IsFeasible(inst, Assign(inst, {{"t1", "d2"}, {"t2", "d2"}})));
}

TEST(FeasibilityTest, RejectsExceedingSurplus) {
  Instance inst = LoadInstance("fig1.json");
  Transfer t = Assign(inst, {{"t1", "d2"}, {"t2", "d2"}, {"t3", "d3"}});
  EXPECT_FALSE(IsFeasible(inst, t));
  EXPECT_NE(FeasibilityProblem(inst, t)->find("s2"), std::string::npos);
}

TEST(FeasibilityTest, AllStayIsFeasible) {
  Instance inst = LoadInstance("fig2.json");
  EXPECT_TRUE(IsFeasible(inst, Transfer::AllStay(inst)));
}

TEST(FeasibilityTest, RejectsUnacceptableDestination) {
  Instance inst = LoadInstance("fig1.json");
  EXPECT_FALSE(IsFeasible(inst, Assign(inst, {{"t1", "d3"}})));
}

TEST(FeasibilityTest, RejectsOvershootingDeficit) {
  Instance inst = LoadInstance("fig1.json");
  EXPECT_FALSE(IsFeasible(inst, Assign(inst, {{"t1", "d1"}, {"t2", "d1"}})));
}

TEST(FeasibilityTest, SurplusArrivalsOffsetDepartures) {
  Instance inst = LoadInstance("fig4.json");
  EXPECT_FALSE(IsFeasible(inst, Assign(inst, {{"t1", "d2"}, {"t2", "d2"}})));
  EXPECT_TRUE(IsFeasible(
      inst, Assign(inst, {{"t1", "d2"}, {"t2", "d2"}, {"t3", "s1"}})));
}

TEST(FeasibilityTest, ShapeMismatchThrows) {
  Instance inst = LoadInstance("fig1.json");
  Transfer t;
  EXPECT_THROW(FeasibilityProblem(inst, t), std::invalid_argument);
}

TEST(PostTransferTest, ComputesRemainingDeficits) {
  Instance inst = LoadInstance("fig1.json");
  EXPECT_EQ(PostTransferDeficits(inst, Assign(inst, {{"t1", "d2"}, {"t2", "d2"}})),
            (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(PostTransferDeficits(inst, Assign(inst, {{"t1", "d1"}, {"t2", "d2"}})),
            (std::vector<std::int64_t>{0, 2, 2}));
  EXPECT_EQ(PostTransferDeficits(inst, Transfer::AllStay(inst)),
            (std::vector<std::int64_t>{1, 3, 2}));
}

}  // namespace
}  // namespace ltransfer
