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

#include "ltransfer/io.h"

#include <gtest/gtest.h>

#include "ltransfer/errors.h"
#include "ltransfer/generator.h"
#include "ltransfer/rounding.h"
#include "test_util.h"

namespace ltransfer {
namespace {

using testing::LoadInstance;

TEST(IoTest, InstanceRoundTrip) {
  Instance inst = LoadInstance("fig1.json");
  EXPECT_EQ(io::ParseInstance(io::ToJson(inst)), inst);
}

TEST(IoTest, RandomInstancesRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RawInstance raw = GenerateInstance({.seed = seed});
    EXPECT_EQ(io::ParseRawInstance(io::ToJson(raw)), raw) << seed;
  }
}

TEST(IoTest, SerializationIsByteStable) {
  Instance inst = LoadInstance("fig2.json");
  EXPECT_EQ(io::Dump(io::ToJson(inst)), io::Dump(io::ToJson(inst)));
  EXPECT_EQ(io::Dump(io::ToJson(io::ParseInstance(io::ToJson(inst)))),
            io::Dump(io::ToJson(inst)));
}

TEST(IoTest, MissingFieldIsParseError) {
  io::Json doc = io::ToJson(LoadInstance("fig1.json"));
  doc.erase("deficit_schools");
  EXPECT_THROW(io::ParseInstance(doc), ParseError);
}

TEST(IoTest, WrongTypeIsParseError) {
  io::Json doc = io::ToJson(LoadInstance("fig1.json"));
  doc["surplus_schools"][0]["alpha"] = "one";
  EXPECT_THROW(io::ParseInstance(doc), ParseError);
}

TEST(IoTest, UnreadableFileIsParseError) {
  EXPECT_THROW(io::ReadJsonFile("/nonexistent/x.json"), ParseError);
}

TEST(IoTest, TransferRoundTrip) {
  Instance inst = LoadInstance("fig4.json");
  Transfer t = Transfer::AllStay(inst);
  t.assignment[2] = Destination::ToSurplus(0);
  t.assignment[3] = Destination::ToDeficit(0);
  EXPECT_EQ(io::ParseTransfer(inst, io::ToJson(inst, t)), t);
}

TEST(IoTest, TransferMustNameEveryTeacher) {
  Instance inst = LoadInstance("fig1.json");
  io::Json doc = {{"assignment", {{"t1", "d1"}}}};
  EXPECT_THROW(io::ParseTransfer(inst, doc), ParseError);
}

TEST(IoTest, SolutionRoundTrip) {
  Solution sol = Solve(LoadInstance("fig2.json"), Variant::kBase).solution;
  Solution back = io::ParseSolution(io::ToJson(sol));
  EXPECT_EQ(back.sinks, sol.sinks);
  EXPECT_EQ(back.beta, sol.beta);
  EXPECT_EQ(back.partition, sol.partition);
  EXPECT_EQ(back.h_star, sol.h_star);
  EXPECT_EQ(back.h_hat, sol.h_hat);
  EXPECT_EQ(back.max_flow, sol.max_flow);
  EXPECT_EQ(back.assignment, sol.assignment);
}

TEST(IoTest, TypedRoundTrip) {
  TypedInstance typed = testing::LoadTyped("specialization.json");
  RawTypedInstance raw = typed.ToRaw();
  EXPECT_EQ(io::ParseRawTypedInstance(io::ToJson(raw)), raw);
  EXPECT_TRUE(io::IsTypedDocument(io::ToJson(raw)));
  EXPECT_FALSE(io::IsTypedDocument(io::ToJson(LoadInstance("fig1.json"))));
}

}  // namespace
}  // namespace ltransfer
