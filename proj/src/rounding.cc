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

#include <chrono>
#include <stdexcept>

#include "ltransfer/errors.h"
#include "ltransfer/maxflow.h"

namespace ltransfer {

AugmentedNetwork BuildAugmentedNetwork(const FlowNetwork& g,
                                       const MdrResult& mdr) {
  AugmentedNetwork aug{g, g.num_edges(), {}, {}};
  FlowNetwork& net = aug.network;
  const auto old_sinks = g.sinks();
  net.DemoteSinks();

  aug.sink_bounds.assign(old_sinks.size(), {0, 0});
  for (std::size_t j = 0; j < mdr.blocks.size(); ++j) {
    Rational capacity = 0;
    for (int k : Members(mdr.blocks[j])) {
      capacity += Rational(old_sinks[k].capacity) - mdr.h_star[k];
    }
    if (!IsIntegral(capacity)) {
      throw DefectError("block " + std::to_string(j + 1) +
                        " has non-integral capacity " + ToString(capacity));
    }
    aug.block_capacity.push_back(capacity.numerator());
    int block_sink = net.AddSink("D" + std::to_string(j + 1),
                                 capacity.numerator());
    int block_in = net.sinks()[block_sink].in_node;
    for (int k : Members(mdr.blocks[j])) {
      Rational slack = Rational(old_sinks[k].capacity) - mdr.h_star[k];
      aug.sink_bounds[k] = {Floor(slack), Ceil(slack)};
      net.AddEdge(old_sinks[k].node, block_in, Floor(slack), Ceil(slack));
    }
  }
  return aug;
}

RoundedSolution Round(const FlowNetwork& g, const MdrResult& mdr,
                      const CharacteristicFunction& w) {
  AugmentedNetwork aug = BuildAugmentedNetwork(g, mdr);
  auto result = MaxFlowWithLowerBounds(aug.network);
  if (!result) {
    throw DefectError("augmented network admits no flow meeting its bounds");
  }
  std::int64_t target = 0;
  for (std::int64_t c : aug.block_capacity) target += c;
  if (result->value != target) {
    throw DefectError("augmented max flow " + std::to_string(result->value) +
                      " differs from total block capacity " +
                      std::to_string(target));
  }

  RoundedSolution out;
  out.flow.values.assign(result->flow.values.begin(),
                         result->flow.values.begin() + aug.base_edge_count);
  if (auto problem = FlowProblem(g, out.flow)) {
    throw DefectError("rounded flow is invalid in G: " + *problem);
  }
  const auto inflow = SinkInflows(g, out.flow);
  out.flow_value = FlowValue(g, out.flow);
  for (int k = 0; k < g.num_sinks(); ++k) {
    out.h_hat.push_back(g.sinks()[k].capacity - inflow[k]);
  }

  for (int k = 0; k < g.num_sinks(); ++k) {
    if (out.h_hat[k] != Floor(mdr.h_star[k]) &&
        out.h_hat[k] != Ceil(mdr.h_star[k])) {
      throw DefectError("rounded value of " + g.sinks()[k].label +
                        " is neither floor nor ceiling of h*");
    }
  }
  for (std::size_t j = 0; j < mdr.blocks.size(); ++j) {
    std::int64_t block_sum = 0;
    Rational star_sum = 0;
    for (int k : Members(mdr.blocks[j])) {
      block_sum += out.h_hat[k];
      star_sum += mdr.h_star[k];
    }
    if (star_sum != block_sum) {
      throw DefectError("block sum changed by rounding");
    }
    out.block_sums.push_back(block_sum);
    std::int64_t prefix = 0;
    for (int k : Members(mdr.Prefix(static_cast<int>(j)))) {
      prefix += out.h_hat[k];
    }
    if (prefix != w(mdr.Prefix(static_cast<int>(j)))) {
      throw DefectError("rounded prefix constraint not binding");
    }
  }
  return out;
}

std::string ToString(Variant v) {
  switch (v) {
    case Variant::kBase: return "base";
    case Variant::kExtended: return "extended";
    case Variant::kSpecialization: return "specialization";
  }
  return "base";
}

Variant ParseVariant(const std::string& name) {
  if (name == "base") return Variant::kBase;
  if (name == "extended") return Variant::kExtended;
  if (name == "specialization") return Variant::kSpecialization;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

int Solution::NumMoved() const {
  int moved = 0;
  for (const auto& [teacher, dest] : assignment) moved += dest != kStay;
  return moved;
}

namespace {

using Clock = std::chrono::steady_clock;

double Millis(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

// Shared tail of every variant: game, MDR, rounding on a built network.
struct NetworkStages {
  MdrResult mdr;
  RoundedSolution rounded;
  std::int64_t max_flow;
};

NetworkStages RunStages(const FlowNetwork& net, GameOptions options,
                        Solution& sol) {
  auto t0 = Clock::now();
  CharacteristicFunction w(net, options);
  MdrResult mdr = RunMdr(w);
  auto t1 = Clock::now();
  RoundedSolution rounded = Round(net, mdr, w);
  std::int64_t max_flow = MaxFlow(net).value;
  if (rounded.flow_value != max_flow) {
    throw DefectError("rounded transfer does not move the maximum number");
  }
  auto t2 = Clock::now();

  sol.sinks = net.SinkLabels();
  sol.beta = net.SinkCapacities();
  for (SinkMask block : mdr.blocks) {
    std::vector<std::string> members;
    for (int k : Members(block)) members.push_back(sol.sinks[k]);
    sol.partition.push_back(std::move(members));
  }
  sol.h_star = mdr.h_star;
  sol.h_hat = rounded.h_hat;
  sol.max_flow = max_flow;
  sol.timings.mdr_ms = Millis(t0, t1);
  sol.timings.rounding_ms = Millis(t1, t2);
  return {std::move(mdr), std::move(rounded), max_flow};
}

}  // namespace

SolveResult Solve(const Instance& instance, Variant variant,
                  GameOptions options) {
  if (variant == Variant::kSpecialization) {
    throw std::invalid_argument(
        "the specialization variant needs a typed instance");
  }
  Solution sol;
  sol.variant = variant;
  auto t0 = Clock::now();
  FlowNetwork net = variant == Variant::kExtended
                        ? BuildExtendedNetwork(instance)
                        : BuildBaseNetwork(instance);
  sol.timings.network_ms = Millis(t0, Clock::now());
  NetworkStages stages = RunStages(net, options, sol);

  Transfer transfer = FlowToTransfer(net, instance, stages.rounded.flow);
  if (auto problem = FeasibilityProblem(instance, transfer)) {
    throw DefectError("solver produced an infeasible transfer: " + *problem);
  }
  if (PostTransferDeficits(instance, transfer) != sol.h_hat) {
    throw DefectError("transfer does not realize the rounded deficits");
  }
  for (int i = 0; i < instance.num_teachers(); ++i) {
    const Destination& d = transfer.assignment[i];
    std::string label = kStay;
    if (d.kind == Destination::Kind::kDeficit) {
      label = instance.deficit_schools()[d.index].id;
    } else if (d.kind == Destination::Kind::kSurplus) {
      label = instance.surplus_schools()[d.index].id;
    }
    sol.assignment.emplace_back(instance.teachers()[i].id, label);
  }
  return {std::move(sol), std::move(transfer), std::move(stages.mdr)};
}

TypedSolveResult Solve(const TypedInstance& instance, GameOptions options) {
  Solution sol;
  sol.variant = Variant::kSpecialization;
  auto t0 = Clock::now();
  FlowNetwork net = BuildSpecializationNetwork(instance);
  sol.timings.network_ms = Millis(t0, Clock::now());
  NetworkStages stages = RunStages(net, options, sol);

  TypedTransfer transfer =
      FlowToTypedTransfer(net, instance, stages.rounded.flow);
  std::vector<std::int64_t> remaining = sol.beta;
  for (const auto& dest : transfer.assignment) {
    if (dest) --remaining[*dest];
  }
  if (remaining != sol.h_hat) {
    throw DefectError("typed transfer does not realize the rounded deficits");
  }
  for (int i = 0; i < instance.num_teachers(); ++i) {
    const auto& dest = transfer.assignment[i];
    sol.assignment.emplace_back(instance.teachers()[i].id,
                                dest ? sol.sinks[*dest] : kStay);
  }
  return {std::move(sol), std::move(transfer), std::move(stages.mdr)};
}

Transfer TransferFromSolution(const Instance& instance,
                              const Solution& solution) {
  Transfer transfer = Transfer::AllStay(instance);
  for (const auto& [teacher, dest] : solution.assignment) {
    auto i = instance.FindTeacher(teacher);
    if (!i) throw std::invalid_argument("unknown teacher '" + teacher + "'");
    if (dest == kStay) continue;
    if (auto k = instance.FindDeficit(dest)) {
      transfer.assignment[*i] = Destination::ToDeficit(*k);
    } else if (auto j = instance.FindSurplus(dest)) {
      transfer.assignment[*i] = Destination::ToSurplus(*j);
    } else {
      throw std::invalid_argument("unknown school '" + dest + "'");
    }
  }
  return transfer;
}

}  // namespace ltransfer
