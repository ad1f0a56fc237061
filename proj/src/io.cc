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

#include "ltransfer/io.h"

#include <fstream>
#include <sstream>

#include "ltransfer/errors.h"

namespace ltransfer::io {
namespace {

const Json& Field(const Json& obj, const char* key, const char* where) {
  if (!obj.is_object()) {
    throw ParseError(std::string(where) + " is not an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string(where) + " is missing \"" + key + "\"");
  }
  return *it;
}

std::string String(const Json& obj, const char* key, const char* where) {
  const Json& v = Field(obj, key, where);
  if (!v.is_string()) {
    throw ParseError(std::string(where) + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

std::int64_t Integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw ParseError(where + " must be an integer");
  }
  return v.get<std::int64_t>();
}

const Json& Array(const Json& obj, const char* key, const char* where) {
  const Json& v = Field(obj, key, where);
  if (!v.is_array()) {
    throw ParseError(std::string(where) + "." + key + " must be an array");
  }
  return v;
}

std::vector<std::string> Strings(const Json& obj, const char* key,
                                 const char* where) {
  std::vector<std::string> out;
  for (const Json& v : Array(obj, key, where)) {
    if (!v.is_string()) {
      throw ParseError(std::string(where) + "." + key +
                       " must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::map<std::string, std::int64_t> Amounts(const Json& obj, const char* key) {
  std::map<std::string, std::int64_t> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_object()) {
    throw ParseError(std::string("school.") + key + " must be an object");
  }
  for (const auto& [subject, amount] : it->items()) {
    out[subject] = Integer(amount, std::string("school.") + key + "." + subject);
  }
  return out;
}

}  // namespace

Json ToJson(const RawInstance& raw) {
  Json doc;
  doc["surplus_schools"] = Json::array();
  for (const auto& s : raw.surplus_schools) {
    doc["surplus_schools"].push_back({{"id", s.id}, {"alpha", s.alpha}});
  }
  doc["deficit_schools"] = Json::array();
  for (const auto& d : raw.deficit_schools) {
    doc["deficit_schools"].push_back({{"id", d.id}, {"beta", d.beta}});
  }
  doc["teachers"] = Json::array();
  for (const auto& t : raw.teachers) {
    doc["teachers"].push_back(
        {{"id", t.id}, {"origin", t.origin}, {"acceptable", t.acceptable}});
  }
  return doc;
}

Json ToJson(const Instance& instance) { return ToJson(instance.ToRaw()); }

RawInstance ParseRawInstance(const Json& doc) {
  RawInstance raw;
  for (const Json& s : Array(doc, "surplus_schools", "instance")) {
    raw.surplus_schools.push_back(
        {String(s, "id", "surplus school"),
         Integer(Field(s, "alpha", "surplus school"), "alpha")});
  }
  for (const Json& d : Array(doc, "deficit_schools", "instance")) {
    raw.deficit_schools.push_back(
        {String(d, "id", "deficit school"),
         Integer(Field(d, "beta", "deficit school"), "beta")});
  }
  for (const Json& t : Array(doc, "teachers", "instance")) {
    raw.teachers.push_back({String(t, "id", "teacher"),
                            String(t, "origin", "teacher"),
                            Strings(t, "acceptable", "teacher")});
  }
  return raw;
}

Instance ParseInstance(const Json& doc) {
  return Instance::Validate(ParseRawInstance(doc));
}

Json ToJson(const Instance& instance, const Transfer& transfer) {
  Json assignment = Json::object();
  for (int i = 0; i < instance.num_teachers(); ++i) {
    const Destination& d = transfer.assignment.at(i);
    std::string label = kStay;
    if (d.kind == Destination::Kind::kDeficit) {
      label = instance.deficit_schools().at(d.index).id;
    } else if (d.kind == Destination::Kind::kSurplus) {
      label = instance.surplus_schools().at(d.index).id;
    }
    assignment[instance.teachers()[i].id] = label;
  }
  return {{"assignment", assignment}};
}

Transfer ParseTransfer(const Instance& instance, const Json& doc) {
  const Json& assignment = Field(doc, "assignment", "transfer");
  if (!assignment.is_object()) {
    throw ParseError("transfer.assignment must be an object");
  }
  Transfer transfer = Transfer::AllStay(instance);
  std::vector<bool> seen(instance.num_teachers(), false);
  for (const auto& [teacher, dest] : assignment.items()) {
    auto i = instance.FindTeacher(teacher);
    if (!i) throw ParseError("transfer names unknown teacher '" + teacher + "'");
    if (!dest.is_string()) throw ParseError("destination must be a string");
    seen[*i] = true;
    const std::string label = dest.get<std::string>();
    if (label == kStay) continue;
    if (auto k = instance.FindDeficit(label)) {
      transfer.assignment[*i] = Destination::ToDeficit(*k);
    } else if (auto j = instance.FindSurplus(label)) {
      transfer.assignment[*i] = Destination::ToSurplus(*j);
    } else {
      throw ParseError("transfer names unknown school '" + label + "'");
    }
  }
  for (int i = 0; i < instance.num_teachers(); ++i) {
    if (!seen[i]) {
      throw ParseError("transfer omits teacher '" + instance.teachers()[i].id +
                       "'; use \"STAY\" explicitly");
    }
  }
  return transfer;
}

Json ToJson(const RawTypedInstance& raw) {
  Json doc;
  doc["subjects"] = raw.subjects;
  doc["schools"] = Json::array();
  for (const auto& s : raw.schools) {
    Json school = {{"id", s.id}, {"kind", s.kind}};
    if (!s.surplus.empty()) school["surplus"] = s.surplus;
    if (!s.deficit.empty()) school["deficit"] = s.deficit;
    doc["schools"].push_back(std::move(school));
  }
  doc["teachers"] = Json::array();
  for (const auto& t : raw.teachers) {
    doc["teachers"].push_back({{"id", t.id},
                               {"school", t.school},
                               {"qualified", t.qualified},
                               {"teaches", t.teaches},
                               {"acceptable", t.acceptable}});
  }
  return doc;
}

RawTypedInstance ParseRawTypedInstance(const Json& doc) {
  RawTypedInstance raw;
  raw.subjects = Strings(doc, "subjects", "instance");
  for (const Json& s : Array(doc, "schools", "instance")) {
    raw.schools.push_back({String(s, "id", "school"),
                           String(s, "kind", "school"), Amounts(s, "surplus"),
                           Amounts(s, "deficit")});
  }
  for (const Json& t : Array(doc, "teachers", "instance")) {
    RawTypedInstance::Teacher teacher{
        String(t, "id", "teacher"), String(t, "school", "teacher"),
        Strings(t, "qualified", "teacher"), String(t, "teaches", "teacher"),
        {}};
    if (t.contains("acceptable")) {
      teacher.acceptable = Strings(t, "acceptable", "teacher");
    }
    raw.teachers.push_back(std::move(teacher));
  }
  return raw;
}

TypedInstance ParseTypedInstance(const Json& doc) {
  return TypedInstance::Validate(ParseRawTypedInstance(doc));
}

bool IsTypedDocument(const Json& doc) {
  return doc.is_object() && doc.contains("subjects");
}

Json ToJson(const Solution& solution, const std::string& instance_ref,
            bool with_timings) {
  Json doc;
  if (!instance_ref.empty()) doc["instance"] = instance_ref;
  doc["variant"] = ToString(solution.variant);
  doc["schools"] = solution.sinks;
  doc["beta"] = solution.beta;
  doc["partition"] = solution.partition;
  Json h_star = Json::array();
  for (const Rational& r : solution.h_star) h_star.push_back(ToString(r));
  doc["h_star"] = h_star;
  doc["h_hat"] = solution.h_hat;
  doc["max_flow"] = solution.max_flow;
  doc["moved"] = solution.NumMoved();
  Json assignment = Json::object();
  for (const auto& [teacher, dest] : solution.assignment) {
    assignment[teacher] = dest;
  }
  doc["transfer"] = {{"assignment", assignment},
                     {"order", [&] {
                        Json order = Json::array();
                        for (const auto& [teacher, dest] : solution.assignment) {
                          order.push_back(teacher);
                        }
                        return order;
                      }()}};
  if (with_timings) {
    doc["timings_ms"] = {{"network", solution.timings.network_ms},
                         {"mdr", solution.timings.mdr_ms},
                         {"rounding", solution.timings.rounding_ms}};
  }
  return doc;
}

Solution ParseSolution(const Json& doc) {
  Solution sol;
  try {
    sol.variant = ParseVariant(String(doc, "variant", "solution"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  sol.sinks = Strings(doc, "schools", "solution");
  for (const Json& b : Array(doc, "beta", "solution")) {
    sol.beta.push_back(Integer(b, "beta"));
  }
  for (const Json& block : Array(doc, "partition", "solution")) {
    if (!block.is_array()) throw ParseError("partition blocks must be arrays");
    std::vector<std::string> members;
    for (const Json& m : block) {
      if (!m.is_string()) throw ParseError("partition members must be strings");
      members.push_back(m.get<std::string>());
    }
    sol.partition.push_back(std::move(members));
  }
  for (const Json& r : Array(doc, "h_star", "solution")) {
    if (!r.is_string()) throw ParseError("h_star entries must be strings");
    sol.h_star.push_back(ParseRational(r.get<std::string>()));
  }
  for (const Json& h : Array(doc, "h_hat", "solution")) {
    sol.h_hat.push_back(Integer(h, "h_hat"));
  }
  if (sol.beta.size() != sol.sinks.size() ||
      sol.h_hat.size() != sol.sinks.size() ||
      sol.h_star.size() != sol.sinks.size()) {
    throw ParseError("solution vectors disagree in length");
  }
  sol.max_flow = Integer(Field(doc, "max_flow", "solution"), "max_flow");
  const Json& transfer = Field(doc, "transfer", "solution");
  const Json& assignment = Field(transfer, "assignment", "solution.transfer");
  std::vector<std::string> order;
  if (transfer.contains("order")) {
    order = Strings(transfer, "order", "solution.transfer");
  } else {
    for (const auto& [teacher, dest] : assignment.items()) {
      order.push_back(teacher);
    }
  }
  for (const auto& teacher : order) {
    sol.assignment.emplace_back(
        teacher, String(assignment, teacher.c_str(), "solution.transfer"));
  }
  if (doc.contains("timings_ms")) {
    const Json& t = doc["timings_ms"];
    sol.timings.network_ms = t.value("network", 0.0);
    sol.timings.mdr_ms = t.value("mdr", 0.0);
    sol.timings.rounding_ms = t.value("rounding", 0.0);
  }
  return sol;
}

Json ToJson(const AuditReport& report) {
  Json doc;
  doc["teachers"] = Json::array();
  for (const auto& t : report.teachers) {
    doc["teachers"].push_back({{"teacher", t.teacher},
                               {"stays_when_truthful", t.stays_when_truthful},
                               {"misreports_tested", t.misreports_tested},
                               {"violations", t.violations}});
  }
  doc["violations"] = Json::array();
  for (const auto& v : report.violations) {
    doc["violations"].push_back({{"teacher", v.teacher},
                                 {"misreport", v.misreport},
                                 {"obtained", v.obtained}});
  }
  doc["total_tested"] = report.total_tested();
  doc["ok"] = report.ok();
  return doc;
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace ltransfer::io
