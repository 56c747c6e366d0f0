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

// Bundled example models: a transfer line (two machines, a test unit and two
// buffers) and a two-vehicle guideway.
//
// Transfer line, odd events controllable:
//   M1: 0 -1-> 1 -2-> 0          M2: 0 -3-> 1 -4-> 0
//   TU: 0 -5-> 1, 1 -6-> 0 (accept), 1 -8-> 0 (reject, back to B1)
//   B1 counts 2 and 8 up, 3 down, capacity 3; B2 counts 4 up, 5 down,
//   capacity 1. Components are marked at their initial state.
//
// Guideway: each vehicle runs 0 (at A) through sections 1..4 to 5 (at B),
// V1 by 11, 13, 10, 15, 12 and V2 by 21, 23, 20, 25, 22; only state 5 is
// marked. The spec forbids both vehicles in the same section.

#ifndef SUPVKIT_IO_MODELS_HPP_
#define SUPVKIT_IO_MODELS_HPP_

#include <string>
#include <vector>

#include "core/automaton.hpp"

namespace supvkit {

struct TransferLine {
  Automaton m1, m2, tu, b1, b2;
  Automaton plant;    // sync(M1, M2, TU)
  Automaton buffers;  // sync(B1, B2), over the buffer events only
  Automaton spec;     // buffers lifted to the plant alphabet
};

struct Guideway {
  Automaton v1, v2;
  Automaton plant;  // sync(V1, V2)
  Automaton spec;   // plant without states where both share a section
};

TransferLine transfer_line();
Guideway guideway();

// Ambient recognizers: L(sup) extended by the look-alike strings the
// examples reason about. Added states are unmarked, so the marked language
// stays Lm(sup).
Automaton transfer_line_ambient(const Automaton& sup1);
Automaton guideway_ambient(const Automaton& sup3);

// Extends `a` so that every prefix of `word` is in its closed language.
// Existing runs are reused; new states are unmarked.
Automaton extend_with_word(const Automaton& a, const Word& word);

struct NamedModel {
  std::string name;  // e.g. "transfer_line/plant"
  Automaton automaton;
};

// Every bundled document, including the synthesized supervisors and ambients,
// in a fixed order.
std::vector<NamedModel> bundled_models();

// Throws Error(kInvalidArgument) for unknown names.
Automaton bundled_model(const std::string& name);

}  // namespace supvkit

#endif  // SUPVKIT_IO_MODELS_HPP_
