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

// Supervisor reduction by control congruence.
//
// Two supervisor states x, x' are control consistent when neither enables an
// event the other disables, and when equal plant-marking flags imply equal
// supervisor-marking flags. A control cover groups pairwise consistent states
// into cells such that each event maps every cell into a single cell; a
// congruence is a cover with disjoint cells. The induced automaton over the
// cells, pruned to the part exercised by the original supervisor, is the
// reduced supervisor.

#ifndef SUPVKIT_REDUCTION_REDUCTION_HPP_
#define SUPVKIT_REDUCTION_REDUCTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "core/automaton.hpp"
#include "synthesis/synthesis.hpp"

namespace supvkit {

class ConsistencyRelation {
 public:
  ConsistencyRelation() = default;
  explicit ConsistencyRelation(std::size_t states)
      : states_(states), table_(states * states, false) {}

  std::size_t states() const { return states_; }
  bool operator()(StateId x, StateId y) const {
    return table_[static_cast<std::size_t>(x) * states_ + y];
  }
  void set(StateId x, StateId y, bool value) {
    table_[static_cast<std::size_t>(x) * states_ + y] = value;
    table_[static_cast<std::size_t>(y) * states_ + x] = value;
  }

 private:
  std::size_t states_ = 0;
  std::vector<bool> table_;
};

// Single-pair test on precomputed flags.
bool control_consistent(const StateFlags& a, const StateFlags& b);

ConsistencyRelation consistency_relation(const Supervisor& sup);

struct ControlCover {
  std::vector<std::vector<StateId>> cells;  // each sorted
  bool congruence = true;
};

// Greedy congruence: state pairs are tried in lexicographic order; a merge
// propagates the successor-cell merges it forces and is rolled back if any
// merged cell would hold an inconsistent pair. Cells are numbered in the
// order the induced automaton first reaches them.
ControlCover build_congruence(const Supervisor& sup,
                              const ConsistencyRelation& rel);

// Same, with pairs taken lexicographically over `order`, a permutation of
// the states. The default order is breadth-first, first-reached.
ControlCover build_congruence(const Supervisor& sup,
                              const ConsistencyRelation& rel,
                              const std::vector<StateId>& order);
std::vector<StateId> first_reached_order(const Automaton& a);

// Post-hoc check of the cover conditions (nonempty consistent cells, single
// successor cell per event). `detail` names the first failure.
Verdict check_cover(const Supervisor& sup, const ConsistencyRelation& rel,
                    const ControlCover& cover);

// Induced automaton over the cells. Throws Error(kNonCongruenceCover) if
// cells overlap or miss a state.
Automaton induce(const Supervisor& sup, const ControlCover& cover);

// Deletes induced transitions that no supervisor string exercises, unmarks
// states no marked supervisor string reaches, deletes unreached states, then
// trims.
Automaton enforce_normality(const Automaton& j, const Supervisor& sup);

struct NormalityVerdict {
  bool holds = false;
  // 1, 2 or 3 for the failing clause: unreached state, unexercised
  // transition, or marked state reached by no marked supervisor string.
  int clause = 0;
  StateId state = kNoState;
  std::optional<EventId> event;
};

NormalityVerdict check_rsup_normality(const Automaton& r,
                                      const Supervisor& sup);

struct ReducedSupervisor {
  Automaton automaton;
  ControlCover cover;
  // Reduced state of every supervisor state (kNoState if pruned away).
  std::vector<StateId> cell_of;
};

inline constexpr std::size_t kDefaultRestarts = 256;

// Reduces with the first-reached merge order, then with `restarts` further
// pseudo-random orders (fixed seed), keeping the result with the fewest
// states and, among those, the most events that occur only as self-loops.
// restarts = 0 gives the plain greedy reduction.
ReducedSupervisor supreduce(const Supervisor& sup,
                            std::size_t restarts = kDefaultRestarts);

}  // namespace supvkit

#endif  // SUPVKIT_REDUCTION_REDUCTION_HPP_
