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

#include "ltransfer/instance.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ltransfer/errors.h"

namespace ltransfer {

Instance Instance::Validate(const RawInstance& raw) {
  std::vector<std::string> problems;
  Instance out;

  std::set<std::string> school_ids;
  for (const auto& s : raw.surplus_schools) {
    if (!school_ids.insert(s.id).second) {
      problems.push_back("duplicate school id '" + s.id + "'");
    }
    if (s.alpha <= 0) {
      problems.push_back("nonpositive surplus at '" + s.id + "'");
    }
    out.surplus_index_.emplace(s.id, static_cast<int>(out.surplus_.size()));
    out.surplus_.push_back({s.id, s.alpha});
  }
  for (const auto& d : raw.deficit_schools) {
    if (!school_ids.insert(d.id).second) {
      problems.push_back("duplicate school id '" + d.id + "'");
    }
    if (d.beta <= 0) {
      problems.push_back("nonpositive deficit at '" + d.id + "'");
    }
    out.deficit_index_.emplace(d.id, static_cast<int>(out.deficit_.size()));
    out.deficit_.push_back({d.id, d.beta});
  }

  for (const auto& t : raw.teachers) {
    if (out.teacher_index_.contains(t.id)) {
      problems.push_back("duplicate teacher id '" + t.id + "'");
    } else {
      out.teacher_index_.emplace(t.id, static_cast<int>(out.teachers_.size()));
    }
    Teacher teacher{t.id, -1, {}, {}};
    if (auto it = out.surplus_index_.find(t.origin);
        it != out.surplus_index_.end()) {
      teacher.origin = it->second;
    } else {
      problems.push_back("teacher '" + t.id + "' has unknown origin '" +
                         t.origin + "'");
    }
    if (t.acceptable.empty()) {
      problems.push_back("empty acceptable set for teacher '" + t.id + "'");
    }
    std::set<std::string> seen;
    for (const auto& a : t.acceptable) {
      if (!seen.insert(a).second) {
        problems.push_back("teacher '" + t.id + "' lists '" + a + "' twice");
        continue;
      }
      if (auto d = out.deficit_index_.find(a); d != out.deficit_index_.end()) {
        teacher.acceptable_deficit.push_back(d->second);
      } else if (auto s = out.surplus_index_.find(a);
                 s != out.surplus_index_.end()) {
        if (a == t.origin) {
          problems.push_back("teacher '" + t.id +
                             "' lists its own origin as acceptable");
        } else {
          teacher.acceptable_surplus.push_back(s->second);
        }
      } else {
        problems.push_back("teacher '" + t.id +
                           "' lists unknown school '" + a + "'");
      }
    }
    std::sort(teacher.acceptable_deficit.begin(),
              teacher.acceptable_deficit.end());
    std::sort(teacher.acceptable_surplus.begin(),
              teacher.acceptable_surplus.end());
    out.teachers_.push_back(std::move(teacher));
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return out;
}

std::optional<int> Instance::FindTeacher(const std::string& id) const {
  auto it = teacher_index_.find(id);
  if (it == teacher_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::FindSurplus(const std::string& id) const {
  auto it = surplus_index_.find(id);
  if (it == surplus_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::FindDeficit(const std::string& id) const {
  auto it = deficit_index_.find(id);
  if (it == deficit_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> Instance::Betas() const {
  std::vector<std::int64_t> out;
  out.reserve(deficit_.size());
  for (const auto& d : deficit_) out.push_back(d.beta);
  return out;
}

bool Instance::HasSurplusAcceptables() const {
  return std::any_of(teachers_.begin(), teachers_.end(), [](const Teacher& t) {
    return !t.acceptable_surplus.empty();
  });
}

Instance Instance::RestrictToDeficitAcceptables() const {
  RawInstance raw = ToRaw();
  std::erase_if(raw.teachers, [this](RawInstance::Teacher& t) {
    std::erase_if(t.acceptable, [this](const std::string& a) {
      return !deficit_index_.contains(a);
    });
    return t.acceptable.empty();
  });
  return Validate(raw);
}

RawInstance Instance::ToRaw() const {
  RawInstance raw;
  for (const auto& s : surplus_) raw.surplus_schools.push_back({s.id, s.alpha});
  for (const auto& d : deficit_) raw.deficit_schools.push_back({d.id, d.beta});
  for (const auto& t : teachers_) {
    RawInstance::Teacher rt{t.id, surplus_[t.origin].id, {}};
    for (int k : t.acceptable_deficit) rt.acceptable.push_back(deficit_[k].id);
    for (int j : t.acceptable_surplus) rt.acceptable.push_back(surplus_[j].id);
    raw.teachers.push_back(std::move(rt));
  }
  return raw;
}

Transfer Transfer::AllStay(const Instance& instance) {
  return Transfer{std::vector<Destination>(instance.num_teachers())};
}

int Transfer::NumMoved() const {
  return static_cast<int>(std::count_if(
      assignment.begin(), assignment.end(),
      [](const Destination& d) { return !d.is_stay(); }));
}

std::optional<std::string> FeasibilityProblem(const Instance& instance,
                                              const Transfer& transfer) {
  if (static_cast<int>(transfer.assignment.size()) != instance.num_teachers()) {
    throw std::invalid_argument("transfer does not cover every teacher");
  }
  std::vector<std::int64_t> net_out(instance.num_surplus(), 0);
  std::vector<std::int64_t> inflow(instance.num_deficit(), 0);
  for (int i = 0; i < instance.num_teachers(); ++i) {
    const Teacher& t = instance.teachers()[i];
    const Destination& d = transfer.assignment[i];
    switch (d.kind) {
      case Destination::Kind::kStay:
        continue;
      case Destination::Kind::kDeficit:
        if (d.index < 0 || d.index >= instance.num_deficit()) {
          throw std::invalid_argument("unknown deficit school index");
        }
        if (!std::binary_search(t.acceptable_deficit.begin(),
                                t.acceptable_deficit.end(), d.index)) {
          return "teacher '" + t.id + "' sent to unacceptable school '" +
                 instance.deficit_schools()[d.index].id + "'";
        }
        ++inflow[d.index];
        break;
      case Destination::Kind::kSurplus:
        if (d.index < 0 || d.index >= instance.num_surplus()) {
          throw std::invalid_argument("unknown surplus school index");
        }
        if (!std::binary_search(t.acceptable_surplus.begin(),
                                t.acceptable_surplus.end(), d.index)) {
          return "teacher '" + t.id + "' sent to unacceptable school '" +
                 instance.surplus_schools()[d.index].id + "'";
        }
        --net_out[d.index];
        break;
    }
    ++net_out[t.origin];
  }
  for (int j = 0; j < instance.num_surplus(); ++j) {
    const auto& s = instance.surplus_schools()[j];
    if (net_out[j] > s.alpha) {
      return "surplus school '" + s.id + "' releases more than its surplus";
    }
    if (net_out[j] < 0) {
      return "surplus school '" + s.id + "' gains teachers on net";
    }
  }
  for (int k = 0; k < instance.num_deficit(); ++k) {
    const auto& d = instance.deficit_schools()[k];
    if (inflow[k] > d.beta) {
      return "deficit school '" + d.id + "' receives more than its deficit";
    }
  }
  return std::nullopt;
}

bool IsFeasible(const Instance& instance, const Transfer& transfer) {
  return !FeasibilityProblem(instance, transfer).has_value();
}

std::vector<std::int64_t> PostTransferDeficits(const Instance& instance,
                                               const Transfer& transfer) {
  if (auto problem = FeasibilityProblem(instance, transfer)) {
    throw std::invalid_argument("infeasible transfer: " + *problem);
  }
  std::vector<std::int64_t> out = instance.Betas();
  for (const Destination& d : transfer.assignment) {
    if (d.kind == Destination::Kind::kDeficit) --out[d.index];
  }
  return out;
}

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid instance:";
        for (const auto& p : problems) msg += "\n  - " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

}  // namespace ltransfer
