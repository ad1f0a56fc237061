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

#ifndef LTRANSFER_GAME_H_
#define LTRANSFER_GAME_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltransfer/maxflow.h"
#include "ltransfer/network.h"
#include "ltransfer/rational.h"
#include "ltransfer/subset.h"

namespace ltransfer {

struct GameOptions {
  // Exhaustive subset routines refuse games with more players than this.
  int max_players = 24;
};

// The reduced-form game over deficit schools: w(B) = beta(B) - v(B), where
// v(B) is the maximum flow into the sinks of B. Copies share one memo table.
class CharacteristicFunction {
 public:
  // Game induced by the sinks of `network`. Throws CapExceededError when the
  // network has more sinks than `options.max_players`.
  explicit CharacteristicFunction(const FlowNetwork& network,
                                  GameOptions options = {});

  // An arbitrary set function, for negative controls. Not flow-backed.
  CharacteristicFunction(std::vector<std::string> labels,
                         std::function<std::int64_t(SinkMask)> worth,
                         GameOptions options = {});

  int num_players() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  SinkMask universe() const { return FullMask(num_players()); }
  bool flow_backed() const { return flows_ != nullptr; }

  // w(B). Throws std::invalid_argument if B leaves the universe.
  std::int64_t operator()(SinkMask b) const;
  // beta(B). Flow-backed games only.
  std::int64_t Beta(SinkMask b) const;
  // v(B). Flow-backed games only.
  std::int64_t SinkFlow(SinkMask b) const;

  // Index of a player by label.
  std::optional<int> Find(const std::string& label) const;
  SinkMask MaskOf(const std::vector<std::string>& labels) const;

 private:
  void CheckSubset(SinkMask b) const;

  std::vector<std::string> labels_;
  std::vector<std::int64_t> beta_;
  std::shared_ptr<const SinkFlowMemo> flows_;
  std::function<std::int64_t(SinkMask)> custom_;
};

struct AchievabilityResult {
  bool achievable = true;
  // Smallest violated coalition (fewest members, then lowest mask).
  std::optional<SinkMask> witness;
  std::int64_t witness_worth = 0;
  Rational witness_sum = 0;
};

// Relaxed-core test: h(B) >= w(B) for every coalition B, exhaustively and in
// exact arithmetic. Throws std::invalid_argument on a dimension mismatch.
AchievabilityResult CheckAchievable(const std::vector<Rational>& h,
                                    const CharacteristicFunction& w);
bool IsAchievable(const std::vector<Rational>& h,
                  const CharacteristicFunction& w);
bool IsAchievable(const std::vector<std::int64_t>& h,
                  const CharacteristicFunction& w);

// A triple (A, B, k) with A strictly inside B and k outside B.
struct MarginalViolation {
  SinkMask a;
  SinkMask b;
  int k;
  std::int64_t gain_a;  // f(A + k) - f(A)
  std::int64_t gain_b;  // f(B + k) - f(B)
};

// Supermodularity: f(B+k) - f(B) >= f(A+k) - f(A) for all A strictly inside
// B and k outside B. Returns the first violation in mask order.
std::optional<MarginalViolation> FindSupermodularViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f);
// Submodularity: the reverse inequality.
std::optional<MarginalViolation> FindSubmodularViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f);
// Monotonicity: f(A) <= f(B) whenever A is inside B. Returns (A, B).
std::optional<std::pair<SinkMask, SinkMask>> FindMonotoneViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f);

struct SupermodularityResult {
  bool supermodular = true;
  std::optional<MarginalViolation> counterexample;
};
SupermodularityResult CheckSupermodular(const CharacteristicFunction& w);

}  // namespace ltransfer

#endif  // LTRANSFER_GAME_H_
