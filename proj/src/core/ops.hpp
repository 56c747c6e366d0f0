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

// Language-level primitives on deterministic automata.

#ifndef SUPVKIT_CORE_OPS_HPP_
#define SUPVKIT_CORE_OPS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "core/automaton.hpp"

namespace supvkit {

// Restriction to the states reachable from the initial state. Surviving
// states keep their relative order.
Automaton reachable(const Automaton& a);

// Restriction to states that are both reachable and co-reachable. The marked
// language is unchanged and the closed language becomes its prefix closure.
Automaton reachable_trim(const Automaton& a);

// Keeps the states flagged in `keep` (and the transitions among them), then
// trims. Used by the synthesis fixpoints.
Automaton restrict_and_trim(const Automaton& a, const std::vector<bool>& keep);

// States of `a` inside `allowed` that are reachable and co-reachable using
// only allowed states.
std::vector<bool> trim_mask(const Automaton& a,
                            const std::vector<bool>& allowed);

// Same automaton with every state marked, so that its marked language is its
// closed language.
Automaton closure(const Automaton& a);

// Same automaton with its events re-indexed in the order of `alphabet`, which
// must hold the same events.
Automaton with_alphabet(const Automaton& a, const Alphabet& alphabet);

// Synchronous product: shared events move both components, private events
// move one. The result alphabet is a's events followed by b's new events.
Automaton sync(const Automaton& a, const Automaton& b);

struct Product {
  Automaton automaton;
  // (state of a, state of b) for every result state.
  std::vector<std::pair<StateId, StateId>> provenance;
};

// Reachable product over one alphabet: L = L(a) ∩ L(b), Lm = Lm(a) ∩ Lm(b).
// States are numbered in breadth-first order. The result uses a's event
// order; b may list the same events in another order.
Product meet_with_provenance(const Automaton& a, const Automaton& b);
Automaton meet(const Automaton& a, const Automaton& b);

struct IsomorphismResult {
  bool isomorphic = false;
  // theta[state of a] = state of b, when isomorphic.
  std::vector<StateId> theta;
  // String leading to the first structural disagreement otherwise.
  std::optional<Word> witness;
};

// Decides DES-isomorphism of two reachable deterministic automata by parallel
// traversal from the initial states; theta is forced by determinism.
IsomorphismResult des_isomorphic(const Automaton& a, const Automaton& b);

struct LanguageComparison {
  bool equal = false;
  // Witness in L(a) xor L(b) (or in Lm(a) xor Lm(b)), shortest, ties broken
  // by event order.
  std::optional<Word> witness;
};

// L(a) = L(b) and Lm(a) = Lm(b).
LanguageComparison language_equal(const Automaton& a, const Automaton& b);

struct ContainmentResult {
  bool contained = false;
  std::optional<Word> witness;
  // True when the witness breaks marked (not closed) containment.
  bool marked_violation = false;
};

// L(a) ⊆ L(b), and additionally Lm(a) ⊆ Lm(b) when `check_marked`.
ContainmentResult contained_in(const Automaton& a, const Automaton& b,
                               bool check_marked);

struct StringMembership {
  Word word;
  bool in_closed = false;
  bool in_marked = false;
};

// Search budget: SUPVKIT_BUDGET when set, otherwise `fallback`.
std::size_t search_budget(std::size_t fallback);

inline constexpr std::size_t kDefaultEnumerationBudget = 1u << 22;

// Membership of every string of length <= max_len, in length-lexicographic
// order. Throws Error(kBudgetExceeded) if more than `budget` strings would be
// produced.
std::vector<StringMembership> enumerate_strings(
    const Automaton& a, std::size_t max_len,
    std::size_t budget = search_budget(kDefaultEnumerationBudget));

}  // namespace supvkit

#endif  // SUPVKIT_CORE_OPS_HPP_
