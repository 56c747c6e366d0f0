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

#include "io/models.hpp"

#include "core/error.hpp"
#include "core/ops.hpp"
#include "observation/observation.hpp"
#include "synthesis/synthesis.hpp"

namespace supvkit {
namespace {

Alphabet numbered(std::initializer_list<const char*> labels) {
  std::vector<Event> events;
  for (const char* l : labels) events.push_back({l, std::stoi(l) % 2 == 1});
  return Alphabet(std::move(events));
}

Automaton counter(std::initializer_list<const char*> labels,
                  std::initializer_list<const char*> up,
                  std::initializer_list<const char*> down, StateId capacity) {
  std::vector<LabelledTransition> t;
  for (StateId k = 0; k < capacity; ++k) {
    for (const char* u : up) t.push_back({k, u, k + 1});
    for (const char* d : down) t.push_back({k + 1, d, k});
  }
  return make_automaton(numbered(labels), capacity + 1, 0, {0}, t);
}

Automaton vehicle(int base) {
  const int order[] = {1, 3, 0, 5, 2};
  std::vector<std::string> labels;
  for (int k : order) labels.push_back(std::to_string(base + k));
  std::vector<Event> events;
  for (const auto& l : labels) events.push_back({l, std::stoi(l) % 2 == 1});
  std::vector<LabelledTransition> t;
  for (StateId s = 0; s < 5; ++s) t.push_back({s, labels[s], s + 1});
  return make_automaton(Alphabet(std::move(events)), 6, 0, {5}, t);
}

// Component state of every plant state, via the product with the lifted
// component.
std::vector<StateId> component_state(const Automaton& plant,
                                     const Automaton& component) {
  std::vector<StateId> out(plant.state_count(), kNoState);
  const auto product =
      meet_with_provenance(plant, inverse_project(component, plant.alphabet()));
  for (const auto& [q, c] : product.provenance) out[q] = c;
  return out;
}

// Longest prefix of `word` in L(a).
Word closed_prefix(const Automaton& a, const Word& word) {
  Word prefix;
  StateId s = a.initial() ? *a.initial() : kNoState;
  for (auto e : word) {
    if (s == kNoState) break;
    s = a.next(s, e);
    if (s == kNoState) break;
    prefix.push_back(e);
  }
  return prefix;
}

}  // namespace

TransferLine transfer_line() {
  TransferLine tl;
  tl.m1 = make_automaton(numbered({"1", "2"}), 2, 0, {0},
                         {{0, "1", 1}, {1, "2", 0}});
  tl.m2 = make_automaton(numbered({"3", "4"}), 2, 0, {0},
                         {{0, "3", 1}, {1, "4", 0}});
  tl.tu = make_automaton(numbered({"5", "6", "8"}), 2, 0, {0},
                         {{0, "5", 1}, {1, "6", 0}, {1, "8", 0}});
  tl.b1 = counter({"2", "3", "8"}, {"2", "8"}, {"3"}, 3);
  tl.b2 = counter({"4", "5"}, {"4"}, {"5"}, 1);
  tl.plant = sync(sync(tl.m1, tl.m2), tl.tu);
  tl.buffers = sync(tl.b1, tl.b2);
  tl.spec = inverse_project(tl.buffers, tl.plant.alphabet());
  return tl;
}

Guideway guideway() {
  Guideway gw;
  gw.v1 = vehicle(10);
  gw.v2 = vehicle(20);
  gw.plant = sync(gw.v1, gw.v2);
  const auto s1 = component_state(gw.plant, gw.v1);
  const auto s2 = component_state(gw.plant, gw.v2);
  gw.spec = forbid_states(gw.plant, [&](StateId q) {
    return s1[q] == s2[q] && s1[q] >= 1 && s1[q] <= 4;
  });
  return gw;
}

Automaton extend_with_word(const Automaton& a, const Word& word) {
  Automaton out = a;
  if (out.empty()) out.set_initial(out.add_state());
  StateId s = *out.initial();
  for (auto e : word) {
    StateId t = out.next(s, e);
    if (t == kNoState) {
      t = out.add_state();
      out.add_transition(s, e, t);
    }
    s = t;
  }
  return out;
}

Automaton transfer_line_ambient(const Automaton& sup1) {
  const TransferLine tl = transfer_line();
  const Alphabet& alpha = sup1.alphabet();
  return extend_with_word(
      sup1, closed_prefix(tl.plant, word_of(alpha, {"1", "2", "3", "4", "5", "1"})));
}

Automaton guideway_ambient(const Automaton& sup3) {
  const Guideway gw = guideway();
  const Alphabet& alpha = sup3.alphabet();
  const auto plant = with_alphabet(gw.plant, alpha);
  Automaton c = extend_with_word(
      sup3, closed_prefix(plant, word_of(alpha, {"11", "13", "10", "15", "21",
                                                 "23", "12"})));
  return extend_with_word(
      c, closed_prefix(plant, word_of(alpha, {"11", "13", "10", "15", "21", "23",
                                              "12", "20", "23", "22"})));
}

std::vector<NamedModel> bundled_models() {
  const TransferLine tl = transfer_line();
  const Supervisor sup1 = supcon(tl.plant, tl.spec);
  const Supervisor sup2 = supconrobs(
      tl.plant, tl.spec, ObservationMask::hiding(tl.plant.alphabet(), {"1", "3", "5"}));
  const Guideway gw = guideway();
  const Supervisor sup3 = supconrobs(
      gw.plant, gw.spec, ObservationMask::hiding(gw.plant.alphabet(), {"13", "23"}));
  return {
      {"transfer_line/m1", tl.m1},
      {"transfer_line/m2", tl.m2},
      {"transfer_line/tu", tl.tu},
      {"transfer_line/b1", tl.b1},
      {"transfer_line/b2", tl.b2},
      {"transfer_line/plant", tl.plant},
      {"transfer_line/buffers", tl.buffers},
      {"transfer_line/spec", tl.spec},
      {"transfer_line/sup1", sup1.automaton},
      {"transfer_line/ambient_c1", transfer_line_ambient(sup1.automaton)},
      {"transfer_line/sup2", sup2.automaton},
      {"guideway/v1", gw.v1},
      {"guideway/v2", gw.v2},
      {"guideway/plant", gw.plant},
      {"guideway/spec", gw.spec},
      {"guideway/sup3", sup3.automaton},
      {"guideway/ambient_c3", guideway_ambient(sup3.automaton)},
  };
}

Automaton bundled_model(const std::string& name) {
  for (auto& m : bundled_models()) {
    if (m.name == name) return std::move(m.automaton);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model " + name);
}

}  // namespace supvkit
