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

#include "ltransfer/game.h"

#include <stdexcept>

#include "ltransfer/errors.h"

namespace ltransfer {

CharacteristicFunction::CharacteristicFunction(const FlowNetwork& network,
                                               GameOptions options)
    : labels_(network.SinkLabels()), beta_(network.SinkCapacities()) {
  if (num_players() > options.max_players || num_players() > kMaxMaskBits) {
    throw CapExceededError(
        "game has " + std::to_string(num_players()) +
        " deficit schools; exhaustive coalition routines are capped at " +
        std::to_string(options.max_players));
  }
  flows_ = std::make_shared<const SinkFlowMemo>(network);
}

CharacteristicFunction::CharacteristicFunction(
    std::vector<std::string> labels,
    std::function<std::int64_t(SinkMask)> worth, GameOptions options)
    : labels_(std::move(labels)), custom_(std::move(worth)) {
  if (num_players() > options.max_players || num_players() > kMaxMaskBits) {
    throw CapExceededError("game exceeds the coalition cap");
  }
}

void CharacteristicFunction::CheckSubset(SinkMask b) const {
  if ((b & ~universe()) != 0) {
    throw std::invalid_argument("coalition contains an unknown player");
  }
}

std::int64_t CharacteristicFunction::operator()(SinkMask b) const {
  CheckSubset(b);
  if (custom_) return custom_(b);
  return Beta(b) - SinkFlow(b);
}

std::int64_t CharacteristicFunction::Beta(SinkMask b) const {
  CheckSubset(b);
  if (!flows_) throw std::logic_error("Beta() needs a flow-backed game");
  std::int64_t total = 0;
  for (int k : Members(b)) total += beta_[k];
  return total;
}

std::int64_t CharacteristicFunction::SinkFlow(SinkMask b) const {
  CheckSubset(b);
  if (!flows_) throw std::logic_error("SinkFlow() needs a flow-backed game");
  return flows_->Value(b);
}

std::optional<int> CharacteristicFunction::Find(
    const std::string& label) const {
  for (int i = 0; i < num_players(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

SinkMask CharacteristicFunction::MaskOf(
    const std::vector<std::string>& labels) const {
  SinkMask m = 0;
  for (const auto& l : labels) {
    auto i = Find(l);
    if (!i) throw std::invalid_argument("unknown player '" + l + "'");
    m |= Bit(*i);
  }
  return m;
}

namespace {

// Next mask with the same popcount (Gosper).
SinkMask NextSameSize(SinkMask m) {
  SinkMask c = m & -m;
  SinkMask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

}  // namespace

AchievabilityResult CheckAchievable(const std::vector<Rational>& h,
                                    const CharacteristicFunction& w) {
  const int n = w.num_players();
  if (static_cast<int>(h.size()) != n) {
    throw std::invalid_argument("deficit vector has wrong dimension");
  }
  for (int size = 1; size <= n; ++size) {
    const SinkMask limit = FullMask(n);
    for (SinkMask b = FullMask(size); b <= limit && b != 0;
         b = NextSameSize(b)) {
      Rational sum = 0;
      for (int k : Members(b)) sum += h[k];
      std::int64_t worth = w(b);
      if (sum < worth) return {false, b, worth, sum};
      if (b == limit) break;
    }
  }
  return {};
}

bool IsAchievable(const std::vector<Rational>& h,
                  const CharacteristicFunction& w) {
  return CheckAchievable(h, w).achievable;
}

bool IsAchievable(const std::vector<std::int64_t>& h,
                  const CharacteristicFunction& w) {
  return IsAchievable(ToRational(h), w);
}

namespace {

std::vector<std::int64_t> Tabulate(
    int n, const std::function<std::int64_t(SinkMask)>& f) {
  if (n > 24) throw CapExceededError("set function too large to tabulate");
  std::vector<std::int64_t> table(std::size_t{1} << n);
  for (SinkMask m = 0; m < table.size(); ++m) table[m] = f(m);
  return table;
}

// Finds (A, B, k) with sign * ((f(B+k)-f(B)) - (f(A+k)-f(A))) < 0.
std::optional<MarginalViolation> FindMarginalViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f, int sign) {
  auto table = Tabulate(n, f);
  const SinkMask full = FullMask(n);
  for (SinkMask b = 0; b <= full; ++b) {
    for (int k = 0; k < n; ++k) {
      if (Contains(b, k)) continue;
      std::int64_t gain_b = table[b | Bit(k)] - table[b];
      // Proper submasks of b, including the empty set.
      for (SinkMask a = (b - 1) & b;; a = (a - 1) & b) {
        if (a == b) break;
        std::int64_t gain_a = table[a | Bit(k)] - table[a];
        if (sign * (gain_b - gain_a) < 0) {
          return MarginalViolation{a, b, k, gain_a, gain_b};
        }
        if (a == 0) break;
      }
    }
    if (b == full) break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<MarginalViolation> FindSupermodularViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f) {
  return FindMarginalViolation(n, f, +1);
}

std::optional<MarginalViolation> FindSubmodularViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f) {
  return FindMarginalViolation(n, f, -1);
}

std::optional<std::pair<SinkMask, SinkMask>> FindMonotoneViolation(
    int n, const std::function<std::int64_t(SinkMask)>& f) {
  auto table = Tabulate(n, f);
  // Checking single-element extensions suffices.
  for (SinkMask b = 0; b < table.size(); ++b) {
    for (int k = 0; k < n; ++k) {
      if (!Contains(b, k) && table[b] > table[b | Bit(k)]) {
        return std::make_pair(b, b | Bit(k));
      }
    }
  }
  return std::nullopt;
}

SupermodularityResult CheckSupermodular(const CharacteristicFunction& w) {
  auto v = FindSupermodularViolation(
      w.num_players(), [&w](SinkMask m) { return w(m); });
  return {!v.has_value(), v};
}

}  // namespace ltransfer
