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

#ifndef LTRANSFER_MAXFLOW_H_
#define LTRANSFER_MAXFLOW_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "ltransfer/network.h"
#include "ltransfer/subset.h"

namespace ltransfer {

struct MaxFlowResult {
  std::int64_t value;
  Flow flow;
};

// Maximum total sink inflow by shortest augmenting paths (Edmonds-Karp).
// Adjacency is scanned in edge insertion order, so equal inputs give equal
// flows. Requires every lower bound to be zero (std::invalid_argument
// otherwise).
MaxFlowResult MaxFlow(const FlowNetwork& network);

// Maximum flow honouring lower bounds. Lower bounds are moved into node
// excesses that a super-source/super-sink pair must route, with an uncapped
// return arc from the terminal back to the source. nullopt means no flow
// meets every bound.
std::optional<MaxFlowResult> MaxFlowWithLowerBounds(const FlowNetwork& network);

// v(B): maximum total inflow into the sinks in `sinks`, with every other sink
// shut. Throws std::invalid_argument if the mask names a sink index beyond the
// network's sinks.
std::int64_t BMaxFlow(const FlowNetwork& network, SinkMask sinks);

// Memoized v(B) over one network. Concurrent readers, serialized inserts.
class SinkFlowMemo {
 public:
  explicit SinkFlowMemo(FlowNetwork network);

  std::int64_t Value(SinkMask sinks) const;
  const FlowNetwork& network() const { return network_; }
  std::size_t size() const;

 private:
  FlowNetwork network_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<SinkMask, std::int64_t> memo_;
};

}  // namespace ltransfer

#endif  // LTRANSFER_MAXFLOW_H_
