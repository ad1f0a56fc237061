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

#include "ltransfer/oracle.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ltransfer/errors.h"

namespace ltransfer::oracle {
namespace {

template <typename T>
bool Dominates(std::vector<T> g, std::vector<T> g_prime) {
  if (g.size() != g_prime.size()) {
    throw std::invalid_argument("Lorenz comparison of unequal dimensions");
  }
  std::sort(g.begin(), g.end(), std::greater<>());
  std::sort(g_prime.begin(), g_prime.end(), std::greater<>());
  T lhs = 0;
  T rhs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    lhs += g[i];
    rhs += g_prime[i];
    if (lhs > rhs) return false;
  }
  return true;
}

// Depth-first odometer over per-teacher options with constraint pruning.
class Enumerator {
 public:
  Enumerator(const Instance& instance,
             std::vector<std::vector<Destination>> options, bool surplus_moves,
             const TransferVisitor& visit)
      : instance_(instance),
        options_(std::move(options)),
        surplus_moves_(surplus_moves),
        visit_(visit),
        current_(Transfer::AllStay(instance)),
        departures_(instance.num_surplus(), 0),
        arrivals_(instance.num_surplus(), 0),
        received_(instance.num_deficit(), 0) {}

  void Run() { Recurse(0); }

 private:
  void Recurse(int i) {
    if (i == instance_.num_teachers()) {
      for (int j = 0; j < instance_.num_surplus(); ++j) {
        std::int64_t net = departures_[j] - arrivals_[j];
        if (net < 0 || net > instance_.surplus_schools()[j].alpha) return;
      }
      std::vector<std::int64_t> deficits(instance_.num_deficit());
      for (int k = 0; k < instance_.num_deficit(); ++k) {
        deficits[k] = instance_.deficit_schools()[k].beta - received_[k];
      }
      visit_(current_, deficits);
      return;
    }
    const int origin = instance_.teachers()[i].origin;
    for (const Destination& d : options_[i]) {
      if (d.kind == Destination::Kind::kStay) {
        current_.assignment[i] = d;
        Recurse(i + 1);
        continue;
      }
      // Without surplus moves departures only grow, so prune early.
      if (!surplus_moves_ &&
          departures_[origin] + 1 > instance_.surplus_schools()[origin].alpha) {
        continue;
      }
      if (d.kind == Destination::Kind::kDeficit &&
          received_[d.index] + 1 > instance_.deficit_schools()[d.index].beta) {
        continue;
      }
      ++departures_[origin];
      if (d.kind == Destination::Kind::kDeficit) ++received_[d.index];
      else ++arrivals_[d.index];
      current_.assignment[i] = d;
      Recurse(i + 1);
      --departures_[origin];
      if (d.kind == Destination::Kind::kDeficit) --received_[d.index];
      else --arrivals_[d.index];
    }
    current_.assignment[i] = Destination::Stay();
  }

  const Instance& instance_;
  std::vector<std::vector<Destination>> options_;
  bool surplus_moves_;
  const TransferVisitor& visit_;
  Transfer current_;
  std::vector<std::int64_t> departures_;
  std::vector<std::int64_t> arrivals_;
  std::vector<std::int64_t> received_;
};

std::vector<std::vector<Destination>> Options(
    const Instance& instance, const Profile& profile,
    const EnumerationOptions& options) {
  if (static_cast<int>(profile.size()) != instance.num_teachers()) {
    throw std::invalid_argument("profile does not cover every teacher");
  }
  std::vector<std::vector<Destination>> out(instance.num_teachers());
  std::uint64_t product = 1;
  for (int i = 0; i < instance.num_teachers(); ++i) {
    std::vector<int> reported = profile[i];
    std::sort(reported.begin(), reported.end());
    reported.erase(std::unique(reported.begin(), reported.end()),
                   reported.end());
    for (int k : reported) {
      if (k < 0 || k >= instance.num_deficit()) {
        throw std::invalid_argument("profile names an unknown deficit school");
      }
      out[i].push_back(Destination::ToDeficit(k));
    }
    if (options.surplus_moves) {
      for (int j : instance.teachers()[i].acceptable_surplus) {
        out[i].push_back(Destination::ToSurplus(j));
      }
    }
    out[i].push_back(Destination::Stay());
    product *= out[i].size();
    if (product > options.max_product) {
      throw CapExceededError("transfer space exceeds the enumeration cap of " +
                             std::to_string(options.max_product));
    }
  }
  return out;
}

}  // namespace

bool LorenzDominates(const std::vector<Rational>& g,
                     const std::vector<Rational>& g_prime) {
  return Dominates(g, g_prime);
}

bool LorenzDominates(const std::vector<std::int64_t>& g,
                     const std::vector<std::int64_t>& g_prime) {
  return Dominates(g, g_prime);
}

std::vector<std::int64_t> SortedDescending(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Profile TruthfulProfile(const Instance& instance) {
  Profile p;
  for (const Teacher& t : instance.teachers()) {
    p.push_back(t.acceptable_deficit);
  }
  return p;
}

void EnumerateTransfers(const Instance& instance, const Profile& profile,
                        const TransferVisitor& visit,
                        const EnumerationOptions& options) {
  Enumerator(instance, Options(instance, profile, options),
             options.surplus_moves, visit)
      .Run();
}

void EnumerateTransfers(const Instance& instance, const TransferVisitor& visit,
                        const EnumerationOptions& options) {
  EnumerateTransfers(instance, TruthfulProfile(instance), visit, options);
}

std::uint64_t CountTransfers(const Instance& instance,
                             const EnumerationOptions& options) {
  std::uint64_t count = 0;
  EnumerateTransfers(
      instance, [&](const Transfer&, const auto&) { ++count; }, options);
  return count;
}

DominantSet BruteForceLorenzDominant(const Instance& instance,
                                     const Profile& profile,
                                     const EnumerationOptions& options) {
  std::set<std::vector<std::int64_t>> distinct_sorted;
  DominantSet out;
  EnumerateTransfers(
      instance, profile,
      [&](const Transfer&, const std::vector<std::int64_t>& deficits) {
        distinct_sorted.insert(SortedDescending(deficits));
        ++out.num_feasible;
      },
      options);

  std::optional<std::vector<std::int64_t>> dominant;
  for (const auto& candidate : distinct_sorted) {
    bool dominates_all = std::all_of(
        distinct_sorted.begin(), distinct_sorted.end(),
        [&](const auto& other) { return LorenzDominates(candidate, other); });
    if (dominates_all) {
      dominant = candidate;
      break;
    }
  }
  if (!dominant) {
    throw DefectError("no Lorenz-dominant transfer exists");
  }
  out.sorted = *dominant;
  EnumerateTransfers(
      instance, profile,
      [&](const Transfer& t, const std::vector<std::int64_t>& deficits) {
        if (SortedDescending(deficits) == out.sorted) {
          out.witnesses.push_back(t);
          out.witness_deficits.push_back(deficits);
        }
      },
      options);
  return out;
}

DominantSet BruteForceLorenzDominant(const Instance& instance,
                                     const EnumerationOptions& options) {
  return BruteForceLorenzDominant(instance, TruthfulProfile(instance),
                                  options);
}

std::int64_t BruteForceV(const Instance& instance, SinkMask sinks,
                         const EnumerationOptions& options) {
  if ((sinks & ~FullMask(instance.num_deficit())) != 0) {
    throw std::invalid_argument("subset names an unknown deficit school");
  }
  const auto beta = instance.Betas();
  std::int64_t best = 0;
  EnumerateTransfers(
      instance,
      [&](const Transfer&, const std::vector<std::int64_t>& deficits) {
        std::int64_t into = 0;
        for (int k : Members(sinks)) into += beta[k] - deficits[k];
        best = std::max(best, into);
      },
      options);
  return best;
}

std::vector<std::vector<std::int64_t>> AchievableDeficitVectors(
    const Instance& instance, const EnumerationOptions& options) {
  std::set<std::vector<std::int64_t>> seen;
  EnumerateTransfers(
      instance,
      [&](const Transfer&, const std::vector<std::int64_t>& deficits) {
        seen.insert(deficits);
      },
      options);
  return {seen.begin(), seen.end()};
}

std::vector<std::int64_t> BruteForceTypedLorenzDominant(
    const TypedInstance& instance, std::uint64_t max_product) {
  const auto& schools = instance.schools();
  const auto slots = instance.SinkSlots();
  const int n = instance.num_teachers();

  // Reachable slots per teacher, straight from the deployment rules.
  std::vector<std::vector<int>> reach(n);
  std::uint64_t product = 1;
  for (int i = 0; i < n; ++i) {
    const TypedTeacher& t = instance.teachers()[i];
    const SchoolKind home = schools[t.school].kind;
    bool movable = home == SchoolKind::kPureSurplus ||
                   (home == SchoolKind::kMixed &&
                    std::count(t.qualified.begin(), t.qualified.end(), true) ==
                        1 &&
                    schools[t.school].surplus[t.teaches] > 0);
    if (movable) {
      for (int k = 0; k < static_cast<int>(slots.size()); ++k) {
        auto [school, subject] = slots[k];
        bool accepted = std::binary_search(t.acceptable.begin(),
                                           t.acceptable.end(), school);
        bool able = home == SchoolKind::kMixed ? subject == t.teaches
                                               : t.qualified[subject];
        if (accepted && able) reach[i].push_back(k);
      }
    }
    product *= reach[i].size() + 1;
    if (product > max_product) {
      throw CapExceededError("typed transfer space exceeds the cap");
    }
  }

  std::vector<std::int64_t> received(slots.size(), 0);
  std::map<std::pair<int, int>, std::int64_t> released;
  std::set<std::vector<std::int64_t>> distinct;
  std::function<void(int)> recurse = [&](int i) {
    if (i == n) {
      std::vector<std::int64_t> deficits(slots.size());
      for (std::size_t k = 0; k < slots.size(); ++k) {
        deficits[k] =
            schools[slots[k].first].deficit[slots[k].second] - received[k];
      }
      distinct.insert(SortedDescending(deficits));
      return;
    }
    recurse(i + 1);
    const TypedTeacher& t = instance.teachers()[i];
    auto from = std::make_pair(t.school, t.teaches);
    for (int k : reach[i]) {
      if (released[from] + 1 > schools[t.school].surplus[t.teaches]) break;
      if (received[k] + 1 >
          schools[slots[k].first].deficit[slots[k].second]) {
        continue;
      }
      ++released[from];
      ++received[k];
      recurse(i + 1);
      --released[from];
      --received[k];
    }
  };
  recurse(0);

  for (const auto& candidate : distinct) {
    if (std::all_of(distinct.begin(), distinct.end(), [&](const auto& other) {
          return LorenzDominates(candidate, other);
        })) {
      return candidate;
    }
  }
  throw DefectError("no Lorenz-dominant typed transfer exists");
}

}  // namespace ltransfer::oracle
