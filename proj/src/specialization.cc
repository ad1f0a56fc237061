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

#include "ltransfer/specialization.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ltransfer/errors.h"

namespace ltransfer {

TypedInstance TypedInstance::Validate(const RawTypedInstance& raw) {
  std::vector<std::string> problems;
  TypedInstance out;

  std::map<std::string, int> subject_index;
  for (const auto& s : raw.subjects) {
    if (!subject_index.emplace(s, static_cast<int>(out.subjects_.size()))
             .second) {
      problems.push_back("duplicate subject '" + s + "'");
      continue;
    }
    out.subjects_.push_back(s);
  }
  if (out.subjects_.empty()) problems.push_back("no subjects declared");
  const int num_subjects = out.num_subjects();

  std::map<std::string, int> school_index;
  for (const auto& s : raw.schools) {
    if (!school_index.emplace(s.id, static_cast<int>(out.schools_.size()))
             .second) {
      problems.push_back("duplicate school id '" + s.id + "'");
    }
    TypedSchool school{s.id, SchoolKind::kPureSurplus,
                       std::vector<std::int64_t>(num_subjects, 0),
                       std::vector<std::int64_t>(num_subjects, 0)};
    auto fill = [&](const std::map<std::string, std::int64_t>& amounts,
                    std::vector<std::int64_t>& into, const char* what) {
      for (const auto& [subject, amount] : amounts) {
        auto it = subject_index.find(subject);
        if (it == subject_index.end()) {
          problems.push_back("school '" + s.id + "' uses unknown subject '" +
                             subject + "'");
          continue;
        }
        if (amount <= 0) {
          problems.push_back(std::string("nonpositive ") + what + " at '" +
                             s.id + "' in '" + subject + "'");
        }
        into[it->second] = amount;
      }
    };
    fill(s.surplus, school.surplus, "surplus");
    fill(s.deficit, school.deficit, "deficit");

    auto covers_all = [&](const std::map<std::string, std::int64_t>& m) {
      return static_cast<int>(m.size()) == num_subjects;
    };
    if (s.kind == "surplus") {
      school.kind = SchoolKind::kPureSurplus;
      if (!s.deficit.empty() || !covers_all(s.surplus)) {
        problems.push_back("pure surplus school '" + s.id +
                           "' needs a surplus in every subject and no deficit");
      }
    } else if (s.kind == "deficit") {
      school.kind = SchoolKind::kPureDeficit;
      if (!s.surplus.empty() || !covers_all(s.deficit)) {
        problems.push_back("pure deficit school '" + s.id +
                           "' needs a deficit in every subject and no surplus");
      }
    } else if (s.kind == "mixed") {
      school.kind = SchoolKind::kMixed;
      if (s.surplus.empty() || s.deficit.empty()) {
        problems.push_back("mixed school '" + s.id +
                           "' needs both a surplus and a deficit subject");
      }
      for (const auto& [subject, amount] : s.surplus) {
        if (s.deficit.contains(subject)) {
          problems.push_back("mixed school '" + s.id +
                             "' has surplus and deficit in '" + subject + "'");
        }
      }
    } else {
      problems.push_back("school '" + s.id + "' has unknown kind '" + s.kind +
                         "'");
    }
    out.schools_.push_back(std::move(school));
  }

  std::set<std::string> teacher_ids;
  for (const auto& t : raw.teachers) {
    if (!teacher_ids.insert(t.id).second) {
      problems.push_back("duplicate teacher id '" + t.id + "'");
    }
    TypedTeacher teacher{t.id, -1, std::vector<bool>(num_subjects, false), -1,
                         {}};
    if (auto it = school_index.find(t.school); it != school_index.end()) {
      teacher.school = it->second;
    } else {
      problems.push_back("teacher '" + t.id + "' at unknown school '" +
                         t.school + "'");
    }
    for (const auto& q : t.qualified) {
      if (auto it = subject_index.find(q); it != subject_index.end()) {
        teacher.qualified[it->second] = true;
      } else {
        problems.push_back("teacher '" + t.id + "' has unknown subject '" + q +
                           "'");
      }
    }
    if (t.qualified.empty()) {
      problems.push_back("teacher '" + t.id + "' is qualified for nothing");
    }
    if (auto it = subject_index.find(t.teaches);
        it != subject_index.end() && teacher.qualified[it->second]) {
      teacher.teaches = it->second;
    } else {
      problems.push_back("teacher '" + t.id +
                         "' teaches a subject outside its qualifications");
    }
    for (const auto& a : t.acceptable) {
      auto it = school_index.find(a);
      if (it == school_index.end()) {
        problems.push_back("teacher '" + t.id + "' lists unknown school '" +
                           a + "'");
        continue;
      }
      if (it->second == teacher.school) {
        problems.push_back("teacher '" + t.id + "' lists its own school");
        continue;
      }
      const TypedSchool& target = out.schools_[it->second];
      if (target.kind == SchoolKind::kPureSurplus) {
        problems.push_back("teacher '" + t.id + "' lists surplus school '" +
                           a + "'");
        continue;
      }
      teacher.acceptable.push_back(it->second);
    }
    std::sort(teacher.acceptable.begin(), teacher.acceptable.end());
    teacher.acceptable.erase(
        std::unique(teacher.acceptable.begin(), teacher.acceptable.end()),
        teacher.acceptable.end());

    // Deployment of multi-subject teachers at deficit and mixed schools.
    if (teacher.school >= 0 && teacher.teaches >= 0 &&
        std::count(teacher.qualified.begin(), teacher.qualified.end(), true) >
            1) {
      const TypedSchool& home = out.schools_[teacher.school];
      if (home.kind == SchoolKind::kMixed &&
          home.deficit[teacher.teaches] == 0) {
        problems.push_back("teacher '" + t.id +
                           "' at a mixed school must teach its deficit subject");
      }
      if (home.kind == SchoolKind::kPureDeficit) {
        auto top = *std::max_element(home.deficit.begin(), home.deficit.end());
        if (home.deficit[teacher.teaches] != top) {
          problems.push_back("teacher '" + t.id +
                             "' must teach the higher-deficit subject");
        }
      }
    }
    out.teachers_.push_back(std::move(teacher));
  }

  if (!problems.empty()) throw ValidationError(std::move(problems));
  return out;
}

bool TypedInstance::IsTransferable(int teacher) const {
  const TypedTeacher& t = teachers_.at(teacher);
  const TypedSchool& home = schools_[t.school];
  switch (home.kind) {
    case SchoolKind::kPureSurplus:
      return true;
    case SchoolKind::kPureDeficit:
      return false;
    case SchoolKind::kMixed: {
      int qualified = 0;
      for (bool q : t.qualified) qualified += q ? 1 : 0;
      return qualified == 1 && home.surplus[t.teaches] > 0;
    }
  }
  return false;
}

std::vector<std::pair<int, int>> TypedInstance::SinkSlots() const {
  std::vector<std::pair<int, int>> slots;
  for (int s = 0; s < static_cast<int>(schools_.size()); ++s) {
    if (schools_[s].kind == SchoolKind::kPureSurplus) continue;
    for (int x = 0; x < num_subjects(); ++x) {
      if (schools_[s].deficit[x] > 0) slots.emplace_back(s, x);
    }
  }
  return slots;
}

std::string TypedInstance::SlotLabel(int school, int subject) const {
  return schools_.at(school).id + "/" + subjects_.at(subject);
}

RawTypedInstance TypedInstance::ToRaw() const {
  RawTypedInstance raw;
  raw.subjects = subjects_;
  for (const auto& s : schools_) {
    RawTypedInstance::School rs;
    rs.id = s.id;
    rs.kind = s.kind == SchoolKind::kPureSurplus   ? "surplus"
              : s.kind == SchoolKind::kPureDeficit ? "deficit"
                                                   : "mixed";
    for (int x = 0; x < num_subjects(); ++x) {
      if (s.surplus[x] > 0) rs.surplus[subjects_[x]] = s.surplus[x];
      if (s.deficit[x] > 0) rs.deficit[subjects_[x]] = s.deficit[x];
    }
    raw.schools.push_back(std::move(rs));
  }
  for (const auto& t : teachers_) {
    RawTypedInstance::Teacher rt;
    rt.id = t.id;
    rt.school = schools_[t.school].id;
    for (int x = 0; x < num_subjects(); ++x) {
      if (t.qualified[x]) rt.qualified.push_back(subjects_[x]);
    }
    rt.teaches = subjects_[t.teaches];
    for (int a : t.acceptable) rt.acceptable.push_back(schools_[a].id);
    raw.teachers.push_back(std::move(rt));
  }
  return raw;
}

FlowNetwork BuildSpecializationNetwork(const TypedInstance& instance) {
  const int num_subjects = instance.num_subjects();
  const auto& schools = instance.schools();
  FlowNetwork net;

  // Surplus slots: every subject of a pure-surplus school, surplus subjects
  // of a mixed school.
  std::map<std::pair<int, int>, int> surplus_node;
  int slot_ref = 0;
  for (int s = 0; s < static_cast<int>(schools.size()); ++s) {
    if (schools[s].kind == SchoolKind::kPureDeficit) continue;
    for (int x = 0; x < num_subjects; ++x) {
      if (schools[s].surplus[x] > 0) {
        surplus_node[{s, x}] = net.AddNode(
            NodeKind::kSchool, instance.SlotLabel(s, x), slot_ref++);
      }
    }
  }

  const auto slots = instance.SinkSlots();
  std::map<std::pair<int, int>, int> sink_of;
  for (int k = 0; k < static_cast<int>(slots.size()); ++k) {
    sink_of[slots[k]] = k;
  }

  // Outgoing sink indices per transferable teacher.
  std::vector<std::vector<int>> targets(instance.num_teachers());
  for (int i = 0; i < instance.num_teachers(); ++i) {
    if (!instance.IsTransferable(i)) continue;
    const TypedTeacher& t = instance.teachers()[i];
    const bool from_mixed = schools[t.school].kind == SchoolKind::kMixed;
    for (int g : t.acceptable) {
      for (int x = 0; x < num_subjects; ++x) {
        bool usable = from_mixed ? x == t.teaches : t.qualified[x];
        auto it = sink_of.find({g, x});
        if (usable && it != sink_of.end()) targets[i].push_back(it->second);
      }
    }
  }

  std::vector<int> teacher_node(instance.num_teachers(), -1);
  for (int i = 0; i < instance.num_teachers(); ++i) {
    if (!targets[i].empty()) {
      teacher_node[i] =
          net.AddNode(NodeKind::kTeacher, instance.teachers()[i].id, i);
    }
  }
  for (const auto& [s, x] : slots) {
    net.AddSink(instance.SlotLabel(s, x), schools[s].deficit[x]);
  }

  for (const auto& [slot, node] : surplus_node) {
    net.AddEdge(net.source(), node, 0, schools[slot.first].surplus[slot.second]);
  }
  for (const auto& [slot, node] : surplus_node) {
    for (int i = 0; i < instance.num_teachers(); ++i) {
      const TypedTeacher& t = instance.teachers()[i];
      if (teacher_node[i] >= 0 && t.school == slot.first &&
          t.teaches == slot.second) {
        net.AddEdge(node, teacher_node[i], 0, 1);
      }
    }
  }
  for (int i = 0; i < instance.num_teachers(); ++i) {
    for (int k : targets[i]) {
      net.AddEdge(teacher_node[i], net.sinks()[k].in_node, 0, 1);
    }
  }
  return net;
}

TypedTransfer FlowToTypedTransfer(const FlowNetwork& network,
                                  const TypedInstance& instance,
                                  const Flow& flow) {
  TypedTransfer out{
      std::vector<std::optional<int>>(instance.num_teachers())};
  auto heads = TeacherHeads(network, flow, instance.num_teachers());
  for (int i = 0; i < instance.num_teachers(); ++i) {
    if (!heads[i]) continue;
    const Node& node = network.nodes()[*heads[i]];
    if (node.kind != NodeKind::kSink) {
      throw std::invalid_argument("teacher edge leads to a non-sink node");
    }
    out.assignment[i] = node.ref;
  }
  return out;
}

}  // namespace ltransfer
