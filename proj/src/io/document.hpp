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

// JSON automaton documents and DOT rendering.
//
//   {
//     "name": "m1",
//     "events": [{"label": "1", "controllable": true}, ...],
//     "states": 2,
//     "initial": 0,            (null iff states == 0)
//     "marked": [0],
//     "transitions": [[0, "1", 1], ...],
//     "annotations": {...}     (optional: "cell_of", "flags")
//   }

#ifndef SUPVKIT_IO_DOCUMENT_HPP_
#define SUPVKIT_IO_DOCUMENT_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

#include "core/automaton.hpp"
#include "synthesis/synthesis.hpp"

namespace supvkit {

struct Document {
  std::string name;
  Automaton automaton;
  // Object with optional "cell_of" and "flags" members, or null.
  nlohmann::json annotations;
};

// Throws Error(kParse) for malformed JSON, missing, mistyped or unknown
// fields, and Error(kValidation) for unknown labels, out-of-range states and
// duplicate transitions.
Document parse_document(std::string_view text);

// Canonical form: fixed field order, marked states ascending, transitions by
// source then event order, one transition per line.
std::string serialize_document(const Document& doc);

// Throw Error(kIo) when the file cannot be read or written.
Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);

nlohmann::json flags_annotation(const Supervisor& sup);
nlohmann::json cell_of_annotation(const std::vector<StateId>& cell_of);

// Marked states double-circled, initial state arrowed, uncontrollable edges
// dashed.
std::string to_dot(const Automaton& a, const std::string& name);

}  // namespace supvkit

#endif  // SUPVKIT_IO_DOCUMENT_HPP_
