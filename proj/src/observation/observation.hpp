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

// Natural projection and the three observation properties of a supervisor
// language K: observability, relative observability and normality.
//
// Relative observability of K w.r.t. an ambient C̄, plant G and projection P
// quantifies over all look-alike pairs (s, s') with s ∈ K̄ and s' ∈ C̄. The
// checker explores a finite look-alike pair structure instead: each node
// holds the K-state reached by s and the (C-state, G-state, K-state or none)
// reached by s'. Observable events advance both sides; unobservable events
// advance exactly one side. Its reachable nodes are exactly the states of
// such pairs.

#ifndef SUPVKIT_OBSERVATION_OBSERVATION_HPP_
#define SUPVKIT_OBSERVATION_OBSERVATION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/automaton.hpp"
#include "synthesis/synthesis.hpp"

namespace supvkit {

// Deterministic recognizer of P(L(a)) and P(Lm(a)) over the observable
// events, by subset construction with unobservable closure. Subset states are
// sorted state sets; a subset is marked iff it contains a marked state.
Automaton project(const Automaton& a, const ObservationMask& mask);

// Variant that also returns the subset of `a`-states behind each result
// state.
struct Projection {
  Automaton automaton;
  std::vector<std::vector<StateId>> subsets;
};
Projection project_with_subsets(const Automaton& a,
                                const ObservationMask& mask);

// Self-loops every event of `full` absent from a's alphabet at every state,
// recognizing P^-1 of a's languages. a's alphabet must be a subset of `full`.
Automaton inverse_project(const Automaton& a, const Alphabet& full);

struct UncertaintyReport {
  // Uncertainty sets in discovery order, each sorted.
  std::vector<std::vector<StateId>> sets;
  // Unordered pairs x < x' co-resident in some set, sorted.
  std::vector<std::pair<StateId, StateId>> pairs;
};

UncertaintyReport uncertainty_sets(const Automaton& sup,
                                   const ObservationMask& mask);

struct ObservationVerdict {
  enum class Violation { kNone, kEnablement, kMarking };

  bool holds = false;
  Violation violation = Violation::kNone;
  // s ∈ K̄ and its look-alike s' ∈ C̄.
  Word s;
  Word s_prime;
  // Event σ with sσ ∈ K̄, s'σ ∈ L(G), s'σ ∉ K̄ (enablement violations only).
  std::optional<EventId> event;
};

// K = Lm(supK) relatively observable w.r.t. C̄ = L(ambient), G and P.
// Condition (enablement): sσ ∈ K̄, s' ∈ C̄, s'σ ∈ L(G) ⇒ s'σ ∈ K̄.
// Condition (marking): s ∈ K, s' ∈ C̄ ∩ Lm(G) ⇒ s' ∈ K.
// Requires L(supK) ⊆ L(ambient) ⊆ L(plant) and Lm(supK) ⊆ Lm(ambient) ⊆
// Lm(plant); throws Error(kContainmentViolated) otherwise. Witness words use
// the event order of `supK`.
ObservationVerdict is_relatively_observable(const Automaton& supK,
                                            const Automaton& ambient,
                                            const Automaton& plant,
                                            const ObservationMask& mask);

// Observability: relative observability with C = K. Throws
// Error(kNotSubbehavior) unless L(supK) ⊆ L(plant).
ObservationVerdict is_observable(const Automaton& supK, const Automaton& plant,
                                 const ObservationMask& mask);

// P^-1 P(K̄) ∩ L(G) = K̄. Throws Error(kNotSubbehavior) unless
// L(supK) ⊆ L(plant). The witness lies in the left side but not in K̄.
Verdict is_normal(const Automaton& supK, const Automaton& plant,
                  const ObservationMask& mask);

enum class AmbientPolicy {
  // C̄ is the closure of the current candidate in every round; the result is
  // relatively observable w.r.t. its own closure.
  kCurrent,
  // C̄ stays the closure of the first supcon result; the result is the
  // supremal sublanguage relatively observable w.r.t. that ambient.
  kFixed,
};

// Controllable and relatively observable sublanguage of
// Lm(plant) ∩ Lm(spec). Starts from supcon; each round refines the current
// supervisor by its look-alike set, removes the transitions (and markings)
// whose retention violates relative observability w.r.t. the ambient chosen
// by `policy`, and re-runs the controllability fixpoint, until a round finds
// no violation.
Supervisor supconrobs(const Automaton& plant, const Automaton& spec,
                      const ObservationMask& mask,
                      AmbientPolicy policy = AmbientPolicy::kCurrent);

// Moore partition refinement that only merges states with equal `label`.
// Keeps the language; with plant states as labels, the result still pairs
// each state with a single plant state.
Automaton minimize_labelled(const Automaton& a,
                            const std::vector<StateId>& label);

}  // namespace supvkit

#endif  // SUPVKIT_OBSERVATION_OBSERVATION_HPP_
