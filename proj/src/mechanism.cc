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

#include "ltransfer/mechanism.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ltransfer/errors.h"
#include "ltransfer/subset.h"

namespace ltransfer {

int TieBreakOrder::Rank(const Destination& d) const {
  switch (d.kind) {
    case Destination::Kind::kDeficit: return d.index;
    case Destination::Kind::kSurplus: return num_deficit_ + d.index;
    case Destination::Kind::kStay: return num_deficit_ + num_surplus_;
  }
  return num_deficit_ + num_surplus_;
}

bool TieBreakOrder::Greater(const Transfer& a, const Transfer& b) const {
  if (a.assignment.size() != b.assignment.size()) {
    throw std::invalid_argument("comparing transfers of different sizes");
  }
  for (std::size_t i = 0; i < a.assignment.size(); ++i) {
    int ra = Rank(a.assignment[i]);
    int rb = Rank(b.assignment[i]);
    if (ra != rb) return ra > rb;
  }
  return false;
}

const Transfer& TieBreakOrder::Max(
    const std::vector<Transfer>& transfers) const {
  if (transfers.empty()) {
    throw std::invalid_argument("maximum of an empty transfer set");
  }
  const Transfer* best = &transfers.front();
  for (const Transfer& t : transfers) {
    if (Greater(t, *best)) best = &t;
  }
  return *best;
}

Selector MaxSelector(const TieBreakOrder& order) {
  return [order](const std::vector<Transfer>& dominant, const Profile&) {
    return order.Max(dominant);
  };
}

Selector ScrambledSelector(std::uint64_t seed) {
  return [seed](const std::vector<Transfer>& dominant,
                const Profile& profile) {
    // FNV-1a over the profile, finished with a splitmix step.
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (const auto& report : profile) {
      for (int k : report) {
        h ^= static_cast<std::uint64_t>(k + 1);
        h *= 1099511628211ULL;
      }
      h ^= 0xFF;
      h *= 1099511628211ULL;
    }
    h += 0x9E3779B97F4A7C15ULL;
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ULL;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBULL;
    h ^= h >> 31;
    return dominant.at(h % dominant.size());
  };
}

namespace {

void CheckCaps(const Instance& instance, const MechanismOptions& options) {
  if (instance.num_teachers() > options.max_teachers ||
      instance.num_deficit() > options.max_deficit) {
    throw CapExceededError(
        "instance exceeds the brute-force mechanism cap (" +
        std::to_string(options.max_teachers) + " teachers, " +
        std::to_string(options.max_deficit) +
        " deficit schools); use solve for a Lorenz-dominant transfer");
  }
}

}  // namespace

std::vector<Transfer> LorenzDominantSet(const Instance& instance,
                                        const Profile& profile,
                                        const MechanismOptions& options) {
  CheckCaps(instance, options);
  return oracle::BruteForceLorenzDominant(instance, profile).witnesses;
}

Transfer Ldt(const Instance& instance, const Profile& profile,
             const TieBreakOrder& order, const MechanismOptions& options) {
  return order.Max(LorenzDominantSet(instance, profile, options));
}

int AuditReport::total_tested() const {
  int total = 0;
  for (const auto& t : teachers) total += t.misreports_tested;
  return total;
}

AuditReport AuditStrategyProofness(const Instance& instance,
                                   const TieBreakOrder& order,
                                   const AuditBudget& budget,
                                   const MechanismOptions& options,
                                   Selector selector) {
  CheckCaps(instance, options);
  if (!selector) selector = MaxSelector(order);
  const Profile truthful = oracle::TruthfulProfile(instance);
  const Transfer outcome =
      selector(LorenzDominantSet(instance, truthful, options), truthful);
  const int num_deficit = instance.num_deficit();
  std::mt19937_64 rng(budget.seed);

  AuditReport report;
  for (int j = 0; j < instance.num_teachers(); ++j) {
    const Teacher& teacher = instance.teachers()[j];
    TeacherAudit audit{teacher.id, outcome.assignment[j].is_stay(), 0, 0};
    if (audit.stays_when_truthful) {
      std::vector<SinkMask> misreports;
      if (budget.exhaustive) {
        for (SinkMask b = 0; b <= FullMask(num_deficit); ++b) {
          misreports.push_back(b);
        }
      } else {
        for (int s = 0; s < budget.samples; ++s) {
          misreports.push_back(rng() & FullMask(num_deficit));
        }
      }
      for (SinkMask b : misreports) {
        Profile profile = truthful;
        profile[j] = Members(b);
        Transfer manipulated =
            selector(LorenzDominantSet(instance, profile, options), profile);
        ++audit.misreports_tested;
        const Destination& d = manipulated.assignment[j];
        if (d.kind == Destination::Kind::kDeficit &&
            std::binary_search(teacher.acceptable_deficit.begin(),
                               teacher.acceptable_deficit.end(), d.index)) {
          ++audit.violations;
          AuditViolation v{teacher.id, {},
                           instance.deficit_schools()[d.index].id};
          for (int k : Members(b)) {
            v.misreport.push_back(instance.deficit_schools()[k].id);
          }
          report.violations.push_back(std::move(v));
        }
      }
    }
    report.teachers.push_back(audit);
  }
  return report;
}

}  // namespace ltransfer
