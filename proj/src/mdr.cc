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

#include <stdexcept>

#include "ltransfer/errors.h"

namespace ltransfer {

std::vector<int> MdrResult::BlockOf() const {
  std::vector<int> out(h_star.size(), -1);
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    for (int k : Members(blocks[j])) out[k] = j;
  }
  return out;
}

SinkMask MdrResult::Prefix(int j) const {
  SinkMask m = 0;
  for (int i = 0; i <= j; ++i) m |= blocks[i];
  return m;
}

namespace {

// Pairwise union checks get quadratic; past this many maximizers only the
// union of all of them is checked.
constexpr std::size_t kPairwiseClosureLimit = 2048;

Rational Average(const CharacteristicFunction& w, SinkMask base,
                 std::int64_t base_worth, SinkMask b) {
  return Rational(w(base | b) - base_worth, Cardinality(b));
}

}  // namespace

SinkMask ArgmaxAverageMarginal(const CharacteristicFunction& w, SinkMask base,
                               TieBreak tie_break) {
  const SinkMask rest = w.universe() & ~base;
  if (rest == 0) {
    throw std::invalid_argument("every player is already placed");
  }
  const std::int64_t base_worth = w(base);

  std::vector<SinkMask> maximizers;
  Rational best = 0;
  for (SinkMask b = rest; b != 0; b = (b - 1) & rest) {
    Rational avg = Average(w, base, base_worth, b);
    if (maximizers.empty() || avg > best) {
      best = avg;
      maximizers.assign(1, b);
    } else if (avg == best) {
      maximizers.push_back(b);
    }
  }

  SinkMask all = 0;
  for (SinkMask m : maximizers) all |= m;
  if (Average(w, base, base_worth, all) != best) {
    throw DefectError("union of average maximizers " +
                      FormatSubset(all, w.labels()) +
                      " is not itself a maximizer");
  }
  if (maximizers.size() <= kPairwiseClosureLimit) {
    for (std::size_t i = 0; i < maximizers.size(); ++i) {
      for (std::size_t j = i + 1; j < maximizers.size(); ++j) {
        SinkMask u = maximizers[i] | maximizers[j];
        if (Average(w, base, base_worth, u) != best) {
          throw DefectError("maximizers " +
                            FormatSubset(maximizers[i], w.labels()) + " and " +
                            FormatSubset(maximizers[j], w.labels()) +
                            " have a non-maximizing union");
        }
      }
    }
  }

  if (tie_break == TieBreak::kLargest) return all;
  SinkMask pick = maximizers.front();
  for (SinkMask m : maximizers) {
    if (Cardinality(m) < Cardinality(pick) ||
        (Cardinality(m) == Cardinality(pick) && m < pick)) {
      pick = m;
    }
  }
  return pick;
}

MdrResult RunMdr(const CharacteristicFunction& w, TieBreak tie_break) {
  MdrResult result;
  result.h_star.assign(w.num_players(), Rational(0));
  SinkMask placed = 0;
  std::int64_t placed_worth = 0;
  while (placed != w.universe()) {
    SinkMask block = ArgmaxAverageMarginal(w, placed, tie_break);
    placed |= block;
    std::int64_t worth = w(placed);
    Rational value(worth - placed_worth, Cardinality(block));
    for (int k : Members(block)) result.h_star[k] = value;
    result.blocks.push_back(block);
    result.cumulative_worth.push_back(worth);
    placed_worth = worth;
  }
  CheckMdrInvariants(w, result);
  return result;
}

void CheckMdrInvariants(const CharacteristicFunction& w,
                        const MdrResult& result) {
  const int n = w.num_players();
  if (static_cast<int>(result.h_star.size()) != n ||
      result.cumulative_worth.size() != result.blocks.size()) {
    throw DefectError("MDR result has inconsistent dimensions");
  }
  SinkMask seen = 0;
  std::int64_t previous_worth = 0;
  std::optional<Rational> previous_value;
  for (std::size_t j = 0; j < result.blocks.size(); ++j) {
    const SinkMask block = result.blocks[j];
    if (block == 0 || (block & seen) != 0) {
      throw DefectError("MDR blocks are empty or overlap");
    }
    seen |= block;
    const std::int64_t worth = w(seen);
    if (worth != result.cumulative_worth[j]) {
      throw DefectError("recorded cumulative worth is stale");
    }
    const Rational value(worth - previous_worth, Cardinality(block));
    Rational prefix_sum = 0;
    for (int k : Members(seen)) prefix_sum += result.h_star[k];
    for (int k : Members(block)) {
      if (result.h_star[k] != value) {
        throw DefectError("h* of " + w.labels()[k] +
                          " differs from its block average");
      }
    }
    if (prefix_sum != worth) {
      throw DefectError("core constraint not binding on prefix " +
                        FormatSubset(seen, w.labels()));
    }
    if (previous_value && value > *previous_value) {
      throw DefectError("block values increase at block " + std::to_string(j));
    }
    previous_value = value;
    previous_worth = worth;
  }
  if (seen != w.universe()) {
    throw DefectError("MDR blocks do not cover every player");
  }
  auto ach = CheckAchievable(result.h_star, w);
  if (!ach.achievable) {
    throw DefectError("h* violates the relaxed core at " +
                      FormatSubset(*ach.witness, w.labels()));
  }
}

}  // namespace ltransfer
