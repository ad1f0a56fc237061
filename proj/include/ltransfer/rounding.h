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

#ifndef LTRANSFER_ROUNDING_H_
#define LTRANSFER_ROUNDING_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ltransfer/game.h"
#include "ltransfer/instance.h"
#include "ltransfer/mdr.h"
#include "ltransfer/network.h"
#include "ltransfer/specialization.h"

namespace ltransfer {

// G plus one aggregator per MDR block. The aggregator for block j is a
// capacitated node (capacity beta(D_j) - h*(D_j)) fed by every sink of the
// block through an edge bounded by floor/ceil of beta_i - h*_i. Aggregators
// are the only sinks; the edges of G keep their indices as a prefix.
struct AugmentedNetwork {
  FlowNetwork network;
  int base_edge_count = 0;
  std::vector<std::int64_t> block_capacity;
  // Per original sink: (lower, upper) of its edge into the aggregator.
  std::vector<std::pair<std::int64_t, std::int64_t>> sink_bounds;
};

// Throws DefectError if a block capacity is not integral.
AugmentedNetwork BuildAugmentedNetwork(const FlowNetwork& g,
                                       const MdrResult& mdr);

// Integral rounding of h* that keeps every prefix constraint binding.
struct RoundedSolution {
  std::vector<std::int64_t> h_hat;
  std::vector<std::int64_t> block_sums;
  Flow flow;  // on G
  std::int64_t flow_value = 0;
};

// Max flow with lower bounds on the augmented network, restricted back to G.
// Checks floor/ceil membership, prefix sums, block sums, and that the flow is
// valid in G. Violations and infeasibility throw DefectError.
RoundedSolution Round(const FlowNetwork& g, const MdrResult& mdr,
                      const CharacteristicFunction& w);

enum class Variant { kBase, kExtended, kSpecialization };

std::string ToString(Variant v);
// Throws std::invalid_argument for an unknown name.
Variant ParseVariant(const std::string& name);

struct StageTimings {
  double network_ms = 0;
  double mdr_ms = 0;
  double rounding_ms = 0;
};

// Everything the pipeline produces, keyed by sink labels in sink order.
struct Solution {
  Variant variant = Variant::kBase;
  std::vector<std::string> sinks;
  std::vector<std::int64_t> beta;
  std::vector<std::vector<std::string>> partition;
  std::vector<Rational> h_star;
  std::vector<std::int64_t> h_hat;
  std::int64_t max_flow = 0;
  // (teacher id, destination label or "STAY") in teacher order.
  std::vector<std::pair<std::string, std::string>> assignment;
  StageTimings timings;

  int NumMoved() const;
};

inline constexpr const char* kStay = "STAY";

// Network -> game -> MDR -> rounding for a base or extended instance. The
// base variant ignores surplus-school acceptables.
struct SolveResult {
  Solution solution;
  Transfer transfer;
  MdrResult mdr;
};
SolveResult Solve(const Instance& instance, Variant variant,
                  GameOptions options = {});

struct TypedSolveResult {
  Solution solution;
  TypedTransfer transfer;
  MdrResult mdr;
};
TypedSolveResult Solve(const TypedInstance& instance,
                       GameOptions options = {});

// Rebuilds a Transfer from a solution's assignment labels. Throws
// std::invalid_argument on unknown ids.
Transfer TransferFromSolution(const Instance& instance,
                              const Solution& solution);

}  // namespace ltransfer

#endif  // LTRANSFER_ROUNDING_H_
