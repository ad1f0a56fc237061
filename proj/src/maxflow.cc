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

#include "ltransfer/maxflow.h"

#include <limits>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ltransfer {
namespace {

// Residual graph with paired arcs: arc a and a^1 are mutual reverses.
class Residual {
 public:
  explicit Residual(int n) : adj_(n), blocked_(n, false) {}

  int AddNode() {
    adj_.emplace_back();
    blocked_.push_back(false);
    return static_cast<int>(adj_.size()) - 1;
  }

  int AddArc(int u, int v, std::int64_t cap) {
    int a = static_cast<int>(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    to_.push_back(u);
    cap_.push_back(0);
    adj_[u].push_back(a);
    adj_[v].push_back(a + 1);
    return a;
  }

  void Block(int v) { blocked_[v] = true; }
  void Remove(int a) { cap_[a] = cap_[a ^ 1] = 0; }
  std::int64_t residual(int a) const { return cap_[a]; }
  // Flow pushed along forward arc a.
  std::int64_t pushed(int a) const { return cap_[a ^ 1]; }

  std::int64_t Augment(int s, int t) {
    std::int64_t total = 0;
    std::vector<int> via(adj_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int u = q.front();
        q.pop();
        for (int a : adj_[u]) {
          int v = to_[a];
          if (cap_[a] > 0 && via[v] == -1 && !blocked_[v]) {
            via[v] = a;
            q.push(v);
          }
        }
      }
      if (via[t] == -1) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        push = std::min(push, cap_[via[v]]);
      }
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= push;
        cap_[via[v] ^ 1] += push;
      }
      total += push;
    }
  }

 private:
  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> blocked_;
};

std::int64_t Uncapped(const FlowNetwork& net) {
  std::int64_t total = 1;
  for (int e : net.out_edges(net.source())) total += net.edges()[e].upper;
  for (const Sink& s : net.sinks()) total += s.capacity;
  return total;
}

void CheckMask(const FlowNetwork& net, SinkMask sinks) {
  if ((sinks & ~FullMask(net.num_sinks())) != 0) {
    throw std::invalid_argument("sink subset names a non-sink index");
  }
}

std::optional<MaxFlowResult> Solve(const FlowNetwork& net, SinkMask open) {
  const int n = net.num_nodes();
  const std::int64_t inf = Uncapped(net);
  Residual res(n);

  std::vector<int> arc_of(net.num_edges());
  std::vector<std::int64_t> excess(n, 0);
  for (int e = 0; e < net.num_edges(); ++e) {
    const Edge& edge = net.edges()[e];
    arc_of[e] = res.AddArc(edge.tail, edge.head, edge.upper - edge.lower);
    excess[edge.head] += edge.lower;
    excess[edge.tail] -= edge.lower;
  }
  const int terminal = res.AddNode();
  for (int k = 0; k < net.num_sinks(); ++k) {
    if (Contains(open, k)) res.AddArc(net.sinks()[k].node, terminal, inf);
  }
  const int back_arc = res.AddArc(terminal, net.source(), inf);
  const int super_source = res.AddNode();
  const int super_sink = res.AddNode();
  std::int64_t required = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      res.AddArc(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      res.AddArc(v, super_sink, -excess[v]);
    }
  }
  if (required > 0 && res.Augment(super_source, super_sink) != required) {
    return std::nullopt;
  }

  res.Remove(back_arc);
  res.Block(super_source);
  res.Block(super_sink);
  res.Augment(net.source(), terminal);

  MaxFlowResult out{0, Flow::Zero(net)};
  for (int e = 0; e < net.num_edges(); ++e) {
    out.flow.values[e] = net.edges()[e].lower + res.pushed(arc_of[e]);
  }
  for (int k = 0; k < net.num_sinks(); ++k) {
    if (Contains(open, k)) {
      out.value += out.flow.values[net.sinks()[k].capacity_edge];
    }
  }
  return out;
}

}  // namespace

MaxFlowResult MaxFlow(const FlowNetwork& network) {
  for (const Edge& e : network.edges()) {
    if (e.lower != 0) {
      throw std::invalid_argument(
          "MaxFlow requires zero lower bounds; use MaxFlowWithLowerBounds");
    }
  }
  return *Solve(network, FullMask(network.num_sinks()));
}

std::optional<MaxFlowResult> MaxFlowWithLowerBounds(
    const FlowNetwork& network) {
  return Solve(network, FullMask(network.num_sinks()));
}

std::int64_t BMaxFlow(const FlowNetwork& network, SinkMask sinks) {
  CheckMask(network, sinks);
  if (sinks == 0) return 0;
  for (const Edge& e : network.edges()) {
    if (e.lower != 0) {
      throw std::invalid_argument("BMaxFlow requires zero lower bounds");
    }
  }
  return Solve(network, sinks)->value;
}

SinkFlowMemo::SinkFlowMemo(FlowNetwork network)
    : network_(std::move(network)) {}

std::int64_t SinkFlowMemo::Value(SinkMask sinks) const {
  {
    std::shared_lock lock(mu_);
    if (auto it = memo_.find(sinks); it != memo_.end()) return it->second;
  }
  std::int64_t v = BMaxFlow(network_, sinks);
  std::unique_lock lock(mu_);
  memo_.emplace(sinks, v);
  return v;
}

std::size_t SinkFlowMemo::size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

}  // namespace ltransfer
