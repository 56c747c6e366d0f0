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

// Supremal controllable sublanguage synthesis and the per-state control data
// (enabled/disabled events, marking flags) that supervisor reduction needs.

#ifndef SUPVKIT_SYNTHESIS_SYNTHESIS_HPP_
#define SUPVKIT_SYNTHESIS_SYNTHESIS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/automaton.hpp"

namespace supvkit {

// Control data of one supervisor state x.
struct StateFlags {
  EventSet enabled;   // E(x): events defined at x
  EventSet disabled;  // D(x): undefined at x, defined at some paired plant state
  bool marked_in_sup = false;    // M(x)
  bool marked_in_plant = false;  // T(x): some paired plant state is marked
  std::vector<StateId> plant_states;
};

struct Supervisor {
  Automaton automaton;
  std::vector<StateFlags> flags;

  bool empty() const { return automaton.empty(); }
};

// Flags of `sup` against `plant`, pairing states through the reachable
// product. Both D(x) and T(x) are existential over the paired plant states.
// Throws Error(kNotSubbehavior) unless L(sup) ⊆ L(plant).
std::vector<StateFlags> compute_flags(const Automaton& sup,
                                      const Automaton& plant);

// Wraps an externally supplied recognizer; `sup` is re-indexed to the
// plant's event order.
Supervisor make_supervisor(const Automaton& sup, const Automaton& plant);

// Recognizer of supC(Lm(plant) ∩ Lm(spec)). `spec` must already range over
// the plant's events (see inverse_project for lifting). Violating states are
// removed a whole pass at a time and the survivors re-trimmed, until nothing
// changes. Every result state pairs with exactly one plant state.
Supervisor supcon(const Automaton& plant, const Automaton& spec);

// Controllability/nonblocking fixpoint on an arbitrary candidate whose states
// are refinements of plant states: `plant_state[x]` names the plant state of
// candidate state x. Returns the trimmed surviving candidate.
Automaton controllable_core(const Automaton& candidate,
                            const std::vector<StateId>& plant_state,
                            const Automaton& plant);

struct Verdict {
  bool holds = false;
  std::optional<Word> witness;
  std::string detail;
};

// Lm(G) ∩ Lm(cand) = Lm(SUP) and L(G) ∩ L(cand) = L(SUP).
Verdict control_equivalent(const Automaton& cand, const Automaton& sup,
                           const Automaton& plant);

// The same equalities after replacing cand and sup by P^-1(P(.)).
Verdict projected_control_equivalent(const Automaton& cand,
                                     const Automaton& sup,
                                     const Automaton& plant,
                                     const ObservationMask& mask);

// Deletes the states where `bad` holds, then trims.
Automaton forbid_states(const Automaton& plant,
                        const std::function<bool(StateId)>& bad);

}  // namespace supvkit

#endif  // SUPVKIT_SYNTHESIS_SYNTHESIS_HPP_
