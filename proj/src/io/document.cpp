// Copyright 2026 The supvkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "io/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace supvkit {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParse, field + ": " + what);
}

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kValidation, field + ": " + what);
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) parse_error(where.empty() ? key : where + "." + key, "unknown field");
  }
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(key, "missing field");
  return *it;
}

std::size_t as_index(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) {
    parse_error(field, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) parse_error(field, "expected a string");
  return v.get<std::string>();
}

void check_annotations(const json& a) {
  if (a.is_null()) return;
  if (!a.is_object()) parse_error("annotations", "expected an object");
  check_keys(a, "annotations", {"cell_of", "flags"});
  if (a.contains("cell_of") && !a["cell_of"].is_array()) {
    parse_error("annotations.cell_of", "expected an array");
  }
  if (a.contains("flags") && !a["flags"].is_array()) {
    parse_error("annotations.flags", "expected an array");
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!j.is_object()) parse_error("document", "expected an object");
  check_keys(j, "", {"name", "events", "states", "initial", "marked",
                     "transitions", "annotations"});

  Document doc;
  doc.name = as_string(require(j, "name"), "name");

  const json& events = require(j, "events");
  if (!events.is_array()) parse_error("events", "expected an array");
  std::vector<Event> list;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string field = "events[" + std::to_string(i) + "]";
    const json& ev = events[i];
    if (!ev.is_object()) parse_error(field, "expected an object");
    check_keys(ev, field, {"label", "controllable"});
    const json& c = require(ev, "controllable");
    if (!c.is_boolean()) parse_error(field + ".controllable", "expected a boolean");
    list.push_back({as_string(require(ev, "label"), field + ".label"), c.get<bool>()});
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(std::move(list));
  } catch (const Error& e) {
    invalid("events", e.what());
  }

  const std::size_t n = as_index(require(j, "states"), "states");
  Automaton a(alphabet);
  for (std::size_t s = 0; s < n; ++s) a.add_state();

  const json& initial = require(j, "initial");
  if (n == 0) {
    if (!initial.is_null()) invalid("initial", "must be null when states is 0");
  } else {
    if (initial.is_null()) invalid("initial", "missing for a nonempty automaton");
    const std::size_t s = as_index(initial, "initial");
    if (s >= n) invalid("initial", "state " + std::to_string(s) + " out of range");
    a.set_initial(static_cast<StateId>(s));
  }

  const json& marked = require(j, "marked");
  if (!marked.is_array()) parse_error("marked", "expected an array");
  for (std::size_t i = 0; i < marked.size(); ++i) {
    const std::string field = "marked[" + std::to_string(i) + "]";
    const std::size_t s = as_index(marked[i], field);
    if (s >= n) invalid(field, "state " + std::to_string(s) + " out of range");
    if (a.is_marked(static_cast<StateId>(s))) invalid(field, "duplicate state");
    a.set_marked(static_cast<StateId>(s), true);
  }

  const json& transitions = require(j, "transitions");
  if (!transitions.is_array()) parse_error("transitions", "expected an array");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string field = "transitions[" + std::to_string(i) + "]";
    const json& t = transitions[i];
    if (!t.is_array() || t.size() != 3) {
      parse_error(field, "expected [source, label, target]");
    }
    const std::size_t src = as_index(t[0], field + "[0]");
    const std::string label = as_string(t[1], field + "[1]");
    const std::size_t dst = as_index(t[2], field + "[2]");
    if (src >= n || dst >= n) invalid(field, "state out of range");
    const auto e = alphabet.find(label);
    if (!e) invalid(field, "unknown label " + quoted(label));
    if (a.defined(static_cast<StateId>(src), *e)) {
      invalid(field, "duplicate transition from " + std::to_string(src) +
                         " on " + quoted(label));
    }
    a.add_transition(static_cast<StateId>(src), *e, static_cast<StateId>(dst));
  }

  if (auto it = j.find("annotations"); it != j.end()) {
    check_annotations(*it);
    doc.annotations = *it;
  }
  doc.automaton = std::move(a);
  return doc;
}

std::string serialize_document(const Document& doc) {
  const Automaton& a = doc.automaton;
  const Alphabet& alpha = a.alphabet();
  std::ostringstream out;
  out << "{\n  \"name\": " << quoted(doc.name) << ",\n  \"events\": [";
  for (EventId e = 0; e < alpha.size(); ++e) {
    out << (e ? ",\n" : "\n") << "    {\"label\": " << quoted(alpha[e].label)
        << ", \"controllable\": " << (alpha[e].controllable ? "true" : "false")
        << "}";
  }
  out << (alpha.size() ? "\n  ],\n" : "],\n");
  out << "  \"states\": " << a.state_count() << ",\n  \"initial\": ";
  if (a.initial()) {
    out << *a.initial();
  } else {
    out << "null";
  }
  out << ",\n  \"marked\": [";
  const auto marked = a.marked_states();
  for (std::size_t i = 0; i < marked.size(); ++i) {
    out << (i ? ", " : "") << marked[i];
  }
  out << "],\n  \"transitions\": [";
  bool first = true;
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (EventId e = 0; e < alpha.size(); ++e) {
      const StateId t = a.next(s, e);
      if (t == kNoState) continue;
      out << (first ? "\n" : ",\n") << "    [" << s << ", "
          << quoted(alpha[e].label) << ", " << t << "]";
      first = false;
    }
  }
  out << (first ? "]" : "\n  ]");
  if (!doc.annotations.is_null()) {
    out << ",\n  \"annotations\": {";
    bool first_key = true;
    for (const char* key : {"cell_of", "flags"}) {
      auto it = doc.annotations.find(key);
      if (it == doc.annotations.end()) continue;
      out << (first_key ? "\n" : ",\n") << "    " << quoted(key) << ": "
          << it->dump();
      first_key = false;
    }
    out << (first_key ? "}" : "\n  }");
  }
  out << "\n}\n";
  return out.str();
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void save_document(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << serialize_document(doc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

nlohmann::json flags_annotation(const Supervisor& sup) {
  const Alphabet& alpha = sup.automaton.alphabet();
  json out = json::array();
  for (const auto& f : sup.flags) {
    json enabled = json::array();
    json disabled = json::array();
    for (auto e : f.enabled.to_vector()) enabled.push_back(alpha[e].label);
    for (auto e : f.disabled.to_vector()) disabled.push_back(alpha[e].label);
    json entry = json::object();
    entry["disabled"] = std::move(disabled);
    entry["enabled"] = std::move(enabled);
    entry["marked_in_plant"] = f.marked_in_plant;
    entry["marked_in_sup"] = f.marked_in_sup;
    out.push_back(std::move(entry));
  }
  return out;
}

nlohmann::json cell_of_annotation(const std::vector<StateId>& cell_of) {
  json out = json::array();
  for (auto c : cell_of) {
    if (c == kNoState) {
      out.push_back(nullptr);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string to_dot(const Automaton& a, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=LR;\n"
      << "  node [shape=circle];\n";
  if (a.initial()) {
    out << "  __init [shape=point];\n  __init -> " << *a.initial() << ";\n";
  }
  for (StateId s = 0; s < a.state_count(); ++s) {
    out << "  " << s
        << (a.is_marked(s) ? " [shape=doublecircle];\n" : ";\n");
  }
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId t = a.next(s, e);
      if (t == kNoState) continue;
      out << "  " << s << " -> " << t << " [label=" << quoted(a.alphabet()[e].label)
          << (a.alphabet().controllable(e) ? "" : ", style=dashed") << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace supvkit
