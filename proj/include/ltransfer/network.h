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

#ifndef LTRANSFER_NETWORK_H_
#define LTRANSFER_NETWORK_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ltransfer/instance.h"

namespace ltransfer {

enum class NodeKind { kSource, kSchool, kTeacher, kSink, kAux };

struct Node {
  NodeKind kind;
  std::string label;
  // Index of the entity this node stands for: surplus-school index for
  // kSchool, teacher index for kTeacher, sink index for kSink. -1 otherwise.
  int ref = -1;
};

struct Edge {
  int tail;
  int head;
  std::int64_t lower;
  std::int64_t upper;
};

// A capacitated sink compiled to an edge: flow enters `in_node`, crosses
// `capacity_edge`, and terminates at `node`.
struct Sink {
  std::string label;
  int in_node;
  int node;
  int capacity_edge;
  std::int64_t capacity;
};

// Single-source multi-sink network with integer lower/upper edge bounds.
// Node capacities are always split into an edge, so algorithms only ever see
// edge bounds. Edges keep insertion order, which the builders make ascending
// in tail index.
class FlowNetwork {
 public:
  FlowNetwork();

  int AddNode(NodeKind kind, std::string label, int ref = -1);
  int AddEdge(int tail, int head, std::int64_t lower, std::int64_t upper);
  // Adds an in-node (kSink), its terminal copy (kAux) and the capacity edge
  // between them. Returns the sink index.
  int AddSink(std::string label, std::int64_t capacity);
  // Turns every current sink into an ordinary pass-through pair. Used when a
  // network is extended with new terminal nodes downstream of the old sinks.
  void DemoteSinks();

  int source() const { return source_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Sink>& sinks() const { return sinks_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_sinks() const { return static_cast<int>(sinks_.size()); }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  std::optional<int> FindNode(NodeKind kind, int ref) const;
  std::optional<int> FindEdge(int tail, int head) const;

  std::vector<std::string> SinkLabels() const;
  std::vector<std::int64_t> SinkCapacities() const;

  // Graphviz rendering for debugging.
  std::string ToDot() const;

 private:
  int source_ = 0;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<Sink> sinks_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::map<std::pair<NodeKind, int>, int> by_ref_;
  std::map<std::pair<int, int>, int> by_endpoints_;
};

// Integral flow, one value per edge.
struct Flow {
  std::vector<std::int64_t> values;

  static Flow Zero(const FlowNetwork& network);
  bool operator==(const Flow&) const = default;
};

// Flow arriving at each sink, in sink order.
std::vector<std::int64_t> SinkInflows(const FlowNetwork& network,
                                      const Flow& flow);
std::int64_t FlowValue(const FlowNetwork& network, const Flow& flow);

// Bounds on every edge and conservation everywhere except the source and the
// sink terminals. Returns a description of the first problem found.
std::optional<std::string> FlowProblem(const FlowNetwork& network,
                                       const Flow& flow);

// Network G: source -> surplus school (alpha), surplus school -> its teachers
// (1), teacher -> acceptable deficit school (1), deficit school node capacity
// beta. Surplus-school acceptables are ignored and teachers with no
// acceptable deficit school are left out.
FlowNetwork BuildBaseNetwork(const Instance& instance);

// Network G': G plus teacher -> acceptable surplus school edges (1). Teachers
// whose only acceptables are surplus schools are included. May contain
// directed cycles.
FlowNetwork BuildExtendedNetwork(const Instance& instance);

// Cancels flow around directed cycles. Sink inflows are unchanged.
Flow CancelCycles(const FlowNetwork& network, Flow flow);

// For each teacher node (by teacher ref, 0..num_teachers-1), the head of its
// unique unit-flow outgoing edge, or nullopt. Cycles are cancelled first.
// Throws std::invalid_argument when a teacher carries flow other than 0/1 or
// leaves on more than one edge.
std::vector<std::optional<int>> TeacherHeads(const FlowNetwork& network,
                                             const Flow& flow,
                                             int num_teachers);

// Reads a transfer off an integral flow in G or G'.
Transfer FlowToTransfer(const FlowNetwork& network, const Instance& instance,
                        const Flow& flow);

// Inverse of FlowToTransfer. Throws std::invalid_argument if the transfer
// uses an edge the network lacks.
Flow TransferToFlow(const FlowNetwork& network, const Instance& instance,
                    const Transfer& transfer);

}  // namespace ltransfer

#endif  // LTRANSFER_NETWORK_H_
