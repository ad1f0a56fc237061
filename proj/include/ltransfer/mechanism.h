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

#ifndef LTRANSFER_MECHANISM_H_
#define LTRANSFER_MECHANISM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ltransfer/instance.h"
#include "ltransfer/oracle.h"

namespace ltransfer {

using oracle::Profile;

// Fixed strict order over transfers: lexicographic over teachers in index
// order, destinations ranked by deficit-school index, then surplus-school
// index, with staying greatest.
class TieBreakOrder {
 public:
  explicit TieBreakOrder(const Instance& instance)
      : num_deficit_(instance.num_deficit()),
        num_surplus_(instance.num_surplus()) {}

  int Rank(const Destination& d) const;
  // a strictly above b.
  bool Greater(const Transfer& a, const Transfer& b) const;
  // Greatest element; the input must be nonempty.
  const Transfer& Max(const std::vector<Transfer>& transfers) const;

 private:
  int num_deficit_;
  int num_surplus_;
};

struct MechanismOptions {
  int max_teachers = 7;
  int max_deficit = 5;
};

// Picks one transfer from the Lorenz-dominant set at a profile.
using Selector = std::function<Transfer(const std::vector<Transfer>& dominant,
                                        const Profile& profile)>;

// The fixed-order selection max over the tie-break order.
Selector MaxSelector(const TieBreakOrder& order);
// Negative control: a pseudo-random member of the set, drawn from a hash of
// the profile and `seed`.
Selector ScrambledSelector(std::uint64_t seed);

// Sigma(A): every feasible transfer under `profile` whose deficit vector
// Lorenz-dominates all others. Throws CapExceededError past the options.
std::vector<Transfer> LorenzDominantSet(const Instance& instance,
                                        const Profile& profile,
                                        const MechanismOptions& options = {});

// LDT: the greatest member of Sigma(A) under `order`.
Transfer Ldt(const Instance& instance, const Profile& profile,
             const TieBreakOrder& order, const MechanismOptions& options = {});

struct AuditBudget {
  bool exhaustive = true;
  int samples = 0;  // misreports per teacher when not exhaustive
  std::uint64_t seed = 0;

  static AuditBudget All() { return {}; }
  static AuditBudget Sampled(int n, std::uint64_t seed = 0) {
    return {false, n, seed};
  }
};

struct AuditViolation {
  std::string teacher;
  std::vector<std::string> misreport;
  std::string obtained;  // acceptable school reached by misreporting
};

struct TeacherAudit {
  std::string teacher;
  bool stays_when_truthful = false;
  int misreports_tested = 0;
  int violations = 0;
};

struct AuditReport {
  std::vector<TeacherAudit> teachers;
  std::vector<AuditViolation> violations;

  int total_tested() const;
  bool ok() const { return violations.empty(); }
};

// For every teacher the mechanism leaves at its origin under the truthful
// profile, tries misreports B of deficit schools and records any B that gets
// the teacher into a truly acceptable school. `selector` defaults to
// MaxSelector.
AuditReport AuditStrategyProofness(const Instance& instance,
                                   const TieBreakOrder& order,
                                   const AuditBudget& budget,
                                   const MechanismOptions& options = {},
                                   Selector selector = nullptr);

}  // namespace ltransfer

#endif  // LTRANSFER_MECHANISM_H_
