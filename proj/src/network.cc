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

#include "ltransfer/network.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ltransfer {

FlowNetwork::FlowNetwork() { source_ = AddNode(NodeKind::kSource, "N0"); }

int FlowNetwork::AddNode(NodeKind kind, std::string label, int ref) {
  int id = num_nodes();
  nodes_.push_back({kind, std::move(label), ref});
  out_.emplace_back();
  in_.emplace_back();
  if (ref >= 0) by_ref_.emplace(std::make_pair(kind, ref), id);
  return id;
}

int FlowNetwork::AddEdge(int tail, int head, std::int64_t lower,
                         std::int64_t upper) {
  if (tail < 0 || tail >= num_nodes() || head < 0 || head >= num_nodes()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (lower < 0 || lower > upper) {
    throw std::invalid_argument("edge bounds must satisfy 0 <= lower <= upper");
  }
  int id = num_edges();
  edges_.push_back({tail, head, lower, upper});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  by_endpoints_.emplace(std::make_pair(tail, head), id);
  return id;
}

int FlowNetwork::AddSink(std::string label, std::int64_t capacity) {
  int index = num_sinks();
  int in = AddNode(NodeKind::kSink, label, index);
  int copy = AddNode(NodeKind::kAux, label + "'");
  int edge = AddEdge(in, copy, 0, capacity);
  sinks_.push_back({std::move(label), in, copy, edge, capacity});
  return index;
}

void FlowNetwork::DemoteSinks() { sinks_.clear(); }

std::optional<int> FlowNetwork::FindNode(NodeKind kind, int ref) const {
  auto it = by_ref_.find({kind, ref});
  if (it == by_ref_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FlowNetwork::FindEdge(int tail, int head) const {
  auto it = by_endpoints_.find({tail, head});
  if (it == by_endpoints_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> FlowNetwork::SinkLabels() const {
  std::vector<std::string> out;
  for (const Sink& s : sinks_) out.push_back(s.label);
  return out;
}

std::vector<std::int64_t> FlowNetwork::SinkCapacities() const {
  std::vector<std::int64_t> out;
  for (const Sink& s : sinks_) out.push_back(s.capacity);
  return out;
}

std::string FlowNetwork::ToDot() const {
  std::ostringstream os;
  os << "digraph G {\n  rankdir=LR;\n";
  for (int v = 0; v < num_nodes(); ++v) {
    const char* shape = "ellipse";
    switch (nodes_[v].kind) {
      case NodeKind::kSource: shape = "doublecircle"; break;
      case NodeKind::kSchool: shape = "box"; break;
      case NodeKind::kSink: shape = "box3d"; break;
      case NodeKind::kAux: shape = "point"; break;
      case NodeKind::kTeacher: break;
    }
    os << "  n" << v << " [label=\"" << nodes_[v].label << "\", shape=" << shape
       << "];\n";
  }
  for (const Edge& e : edges_) {
    os << "  n" << e.tail << " -> n" << e.head << " [label=\"";
    if (e.lower > 0) os << "[" << e.lower << "," << e.upper << "]";
    else os << e.upper;
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Flow Flow::Zero(const FlowNetwork& network) {
  return Flow{std::vector<std::int64_t>(network.num_edges(), 0)};
}

std::vector<std::int64_t> SinkInflows(const FlowNetwork& network,
                                      const Flow& flow) {
  std::vector<std::int64_t> out;
  out.reserve(network.num_sinks());
  for (const Sink& s : network.sinks()) {
    out.push_back(flow.values.at(s.capacity_edge));
  }
  return out;
}

std::int64_t FlowValue(const FlowNetwork& network, const Flow& flow) {
  std::int64_t total = 0;
  for (std::int64_t v : SinkInflows(network, flow)) total += v;
  return total;
}

std::optional<std::string> FlowProblem(const FlowNetwork& network,
                                       const Flow& flow) {
  if (static_cast<int>(flow.values.size()) != network.num_edges()) {
    return "flow has wrong edge count";
  }
  for (int e = 0; e < network.num_edges(); ++e) {
    const Edge& edge = network.edges()[e];
    if (flow.values[e] < edge.lower || flow.values[e] > edge.upper) {
      return "edge " + network.nodes()[edge.tail].label + "->" +
             network.nodes()[edge.head].label + " carries " +
             std::to_string(flow.values[e]) + " outside [" +
             std::to_string(edge.lower) + "," + std::to_string(edge.upper) +
             "]";
    }
  }
  std::vector<bool> terminal(network.num_nodes(), false);
  terminal[network.source()] = true;
  for (const Sink& s : network.sinks()) terminal[s.node] = true;
  for (int v = 0; v < network.num_nodes(); ++v) {
    if (terminal[v]) continue;
    std::int64_t balance = 0;
    for (int e : network.in_edges(v)) balance += flow.values[e];
    for (int e : network.out_edges(v)) balance -= flow.values[e];
    if (balance != 0) {
      return "conservation fails at " + network.nodes()[v].label;
    }
  }
  return std::nullopt;
}

namespace {

FlowNetwork BuildNetwork(const Instance& instance, bool with_surplus_edges) {
  FlowNetwork net;
  std::vector<int> school_node(instance.num_surplus());
  for (int j = 0; j < instance.num_surplus(); ++j) {
    school_node[j] = net.AddNode(NodeKind::kSchool,
                                 instance.surplus_schools()[j].id, j);
  }
  std::vector<int> teacher_node(instance.num_teachers(), -1);
  for (int i = 0; i < instance.num_teachers(); ++i) {
    const Teacher& t = instance.teachers()[i];
    bool has_edge = !t.acceptable_deficit.empty() ||
                    (with_surplus_edges && !t.acceptable_surplus.empty());
    if (has_edge) teacher_node[i] = net.AddNode(NodeKind::kTeacher, t.id, i);
  }
  std::vector<int> sink_in(instance.num_deficit());
  for (int k = 0; k < instance.num_deficit(); ++k) {
    const DeficitSchool& d = instance.deficit_schools()[k];
    int sink = net.AddSink(d.id, d.beta);
    sink_in[k] = net.sinks()[sink].in_node;
  }

  for (int j = 0; j < instance.num_surplus(); ++j) {
    net.AddEdge(net.source(), school_node[j], 0,
                instance.surplus_schools()[j].alpha);
  }
  // School -> teacher edges, grouped by school so tails ascend.
  for (int j = 0; j < instance.num_surplus(); ++j) {
    for (int i = 0; i < instance.num_teachers(); ++i) {
      if (teacher_node[i] >= 0 && instance.teachers()[i].origin == j) {
        net.AddEdge(school_node[j], teacher_node[i], 0, 1);
      }
    }
  }
  for (int i = 0; i < instance.num_teachers(); ++i) {
    if (teacher_node[i] < 0) continue;
    const Teacher& t = instance.teachers()[i];
    for (int k : t.acceptable_deficit) {
      net.AddEdge(teacher_node[i], sink_in[k], 0, 1);
    }
    if (with_surplus_edges) {
      for (int j : t.acceptable_surplus) {
        net.AddEdge(teacher_node[i], school_node[j], 0, 1);
      }
    }
  }
  return net;
}

// Finds one directed cycle among edges with positive flow, as a list of edge
// ids, or an empty vector.
std::vector<int> FindPositiveCycle(const FlowNetwork& net, const Flow& flow) {
  const int n = net.num_nodes();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent_edge(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    // Iterative DFS with explicit edge cursors.
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      const auto& outs = net.out_edges(v);
      if (cursor == outs.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      int e = outs[cursor++];
      if (flow.values[e] <= 0) continue;
      int w = net.edges()[e].head;
      if (state[w] == 1) {
        std::vector<int> cycle{e};
        for (int u = v; u != w; u = net.edges()[parent_edge[u]].tail) {
          cycle.push_back(parent_edge[u]);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent_edge[w] = e;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

FlowNetwork BuildBaseNetwork(const Instance& instance) {
  return BuildNetwork(instance, /*with_surplus_edges=*/false);
}

FlowNetwork BuildExtendedNetwork(const Instance& instance) {
  return BuildNetwork(instance, /*with_surplus_edges=*/true);
}

Flow CancelCycles(const FlowNetwork& network, Flow flow) {
  for (auto cycle = FindPositiveCycle(network, flow); !cycle.empty();
       cycle = FindPositiveCycle(network, flow)) {
    std::int64_t amount = flow.values[cycle.front()];
    for (int e : cycle) amount = std::min(amount, flow.values[e]);
    for (int e : cycle) flow.values[e] -= amount;
  }
  return flow;
}

std::vector<std::optional<int>> TeacherHeads(const FlowNetwork& network,
                                             const Flow& flow,
                                             int num_teachers) {
  Flow canonical = CancelCycles(network, flow);
  std::vector<std::optional<int>> heads(num_teachers);
  for (int i = 0; i < num_teachers; ++i) {
    auto node = network.FindNode(NodeKind::kTeacher, i);
    if (!node) continue;
    for (int e : network.out_edges(*node)) {
      std::int64_t f = canonical.values[e];
      if (f == 0) continue;
      if (f != 1) {
        throw std::invalid_argument("teacher edge carries non-unit flow");
      }
      if (heads[i]) {
        throw std::invalid_argument("teacher " + network.nodes()[*node].label +
                                    " leaves on more than one edge");
      }
      heads[i] = network.edges()[e].head;
    }
  }
  return heads;
}

Transfer FlowToTransfer(const FlowNetwork& network, const Instance& instance,
                        const Flow& flow) {
  Transfer transfer = Transfer::AllStay(instance);
  auto heads = TeacherHeads(network, flow, instance.num_teachers());
  for (int i = 0; i < instance.num_teachers(); ++i) {
    if (!heads[i]) continue;
    const Node& node = network.nodes()[*heads[i]];
    switch (node.kind) {
      case NodeKind::kSink:
        transfer.assignment[i] = Destination::ToDeficit(node.ref);
        break;
      case NodeKind::kSchool:
        transfer.assignment[i] = Destination::ToSurplus(node.ref);
        break;
      default:
        throw std::invalid_argument("teacher edge leads to unexpected node " +
                                    node.label);
    }
  }
  return transfer;
}

Flow TransferToFlow(const FlowNetwork& network, const Instance& instance,
                    const Transfer& transfer) {
  Flow flow = Flow::Zero(network);
  auto need_edge = [&](int tail, int head) {
    auto e = network.FindEdge(tail, head);
    if (!e) {
      throw std::invalid_argument("transfer uses an edge absent from network");
    }
    return *e;
  };
  auto school = [&](int j) {
    return *network.FindNode(NodeKind::kSchool, j);
  };
  std::vector<std::int64_t> net_out(instance.num_surplus(), 0);
  for (int i = 0; i < instance.num_teachers(); ++i) {
    const Destination& d = transfer.assignment.at(i);
    if (d.is_stay()) continue;
    auto t = network.FindNode(NodeKind::kTeacher, i);
    if (!t) throw std::invalid_argument("moved teacher absent from network");
    int origin = instance.teachers()[i].origin;
    flow.values[need_edge(school(origin), *t)] += 1;
    ++net_out[origin];
    if (d.kind == Destination::Kind::kDeficit) {
      const Sink& s = network.sinks().at(d.index);
      flow.values[need_edge(*t, s.in_node)] += 1;
      flow.values[s.capacity_edge] += 1;
    } else {
      flow.values[need_edge(*t, school(d.index))] += 1;
      --net_out[d.index];
    }
  }
  for (int j = 0; j < instance.num_surplus(); ++j) {
    flow.values[need_edge(network.source(), school(j))] = net_out[j];
  }
  return flow;
}

}  // namespace ltransfer
