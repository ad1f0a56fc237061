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

#ifndef LTRANSFER_MDR_H_
#define LTRANSFER_MDR_H_

#include <cstdint>
#include <vector>

#include "ltransfer/game.h"
#include "ltransfer/rational.h"
#include "ltransfer/subset.h"

namespace ltransfer {

// How to choose among coalitions with equal best average.
enum class TieBreak {
  kLargest,   // the union of all maximizers
  kSmallest,  // fewest members, then lowest mask
};

// Output of the average-worth peeling: an ordered partition of the players
// and the fractional Lorenz-dominant deficit vector it induces.
struct MdrResult {
  std::vector<SinkMask> blocks;
  std::vector<Rational> h_star;
  // w of the union of the first j+1 blocks.
  std::vector<std::int64_t> cumulative_worth;

  // Block index of every player.
  std::vector<int> BlockOf() const;
  SinkMask Prefix(int j) const;  // union of blocks 0..j
};

// Among nonempty B disjoint from `base`, a coalition maximizing
// (w(base + B) - w(base)) / |B|. Also checks that the maximizers are closed
// under union and throws DefectError with the offending pair if not. Throws
// std::invalid_argument when `base` already covers every player.
SinkMask ArgmaxAverageMarginal(const CharacteristicFunction& w, SinkMask base,
                               TieBreak tie_break = TieBreak::kLargest);

// Repeats ArgmaxAverageMarginal until every player is placed and assigns each
// member of block j the value (w(prefix_j) - w(prefix_{j-1})) / |block_j|.
// Verifies the result with CheckMdrInvariants before returning.
MdrResult RunMdr(const CharacteristicFunction& w,
                 TieBreak tie_break = TieBreak::kLargest);

// Throws DefectError unless: blocks partition the players; h* matches the
// block averages; h*(prefix_j) = w(prefix_j) for every j; block values weakly
// decrease; and h* passes the relaxed-core test.
void CheckMdrInvariants(const CharacteristicFunction& w,
                        const MdrResult& result);

}  // namespace ltransfer

#endif  // LTRANSFER_MDR_H_
