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

// Deterministic finite recognizers over a labelled event alphabet.
//
// States are dense indices 0..n-1 and the transition function is partial:
// no dump state is ever materialized. The empty automaton has zero states
// and no initial state.

#ifndef SUPVKIT_CORE_AUTOMATON_HPP_
#define SUPVKIT_CORE_AUTOMATON_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/event_set.hpp"

namespace supvkit {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// A string over an alphabet, as event indices.
using Word = std::vector<EventId>;

struct Event {
  std::string label;
  bool controllable = false;

  friend bool operator==(const Event&, const Event&) = default;
};

// Ordered event set. The order is the tie-break order used by every
// traversal and every witness search.
class Alphabet {
 public:
  Alphabet() = default;
  // Throws Error(kValidation) on duplicate or empty labels.
  explicit Alphabet(std::vector<Event> events);

  std::size_t size() const { return events_.size(); }
  const Event& operator[](EventId e) const { return events_[e]; }
  const std::vector<Event>& events() const { return events_; }

  std::optional<EventId> find(std::string_view label) const;
  // Throws Error(kValidation) for unknown labels.
  EventId id(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  bool controllable(EventId e) const { return events_[e].controllable; }

  // Same labels with the same attributes, ignoring order.
  bool same_events(const Alphabet& other) const;
  // Every label of *this occurs in `other` with the same attribute.
  bool subset_of(const Alphabet& other) const;

  std::string format(std::span<const EventId> word) const;
  std::vector<std::string> labels(std::span<const EventId> word) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.events_ == b.events_;
  }

 private:
  std::vector<Event> events_;
  std::unordered_map<std::string, EventId> index_;
};

// Throws kAlphabetMismatch when the label sets differ and
// kConflictingAttributes when a shared label has different controllability.
void require_same_events(const Alphabet& a, const Alphabet& b);

// Maps every event of `from` to the index of the same label in `to`
// (kNoEvent when absent).
inline constexpr EventId kNoEvent = std::numeric_limits<EventId>::max();
std::vector<EventId> event_map(const Alphabet& from, const Alphabet& to);

// Observable subset of an alphabet, defining a natural projection.
class ObservationMask {
 public:
  ObservationMask() = default;

  static ObservationMask full(const Alphabet& alphabet);
  // Throws Error(kValidation) when a label is not in `alphabet`.
  static ObservationMask hiding(const Alphabet& alphabet,
                                const std::vector<std::string>& unobservable);
  static ObservationMask observing(const Alphabet& alphabet,
                                   const std::vector<std::string>& observable);

  const Alphabet& alphabet() const { return alphabet_; }
  bool observable(EventId e) const { return observable_[e]; }
  bool observable(std::string_view label) const;
  bool is_full() const;

  std::vector<std::string> unobservable_labels() const;
  std::vector<std::string> observable_labels() const;
  // The observable events as an alphabet, in the original order.
  Alphabet observable_alphabet() const;
  // Observability flags re-indexed onto `other`, which must contain the same
  // events (kAlphabetMismatch otherwise).
  std::vector<bool> over(const Alphabet& other) const;

  friend bool operator==(const ObservationMask&,
                         const ObservationMask&) = default;

 private:
  Alphabet alphabet_;
  std::vector<bool> observable_;
};

class Automaton {
 public:
  Automaton() = default;
  // Empty automaton (no states) over `alphabet`.
  explicit Automaton(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return marked_.size(); }
  bool empty() const { return marked_.empty(); }
  std::optional<StateId> initial() const {
    if (initial_ == kNoState) return std::nullopt;
    return initial_;
  }

  bool is_marked(StateId s) const { return marked_[s]; }
  std::vector<StateId> marked_states() const;

  // Successor or kNoState.
  StateId next(StateId s, EventId e) const {
    return table_[static_cast<std::size_t>(s) * alphabet_.size() + e];
  }
  bool defined(StateId s, EventId e) const { return next(s, e) != kNoState; }
  EventSet enabled(StateId s) const;
  std::size_t transition_count() const;

  // Final state of the run of `word` from the initial state, or kNoState.
  StateId run(std::span<const EventId> word) const;
  bool accepts_closed(std::span<const EventId> word) const {
    return run(word) != kNoState;
  }
  bool accepts_marked(std::span<const EventId> word) const {
    const StateId s = run(word);
    return s != kNoState && marked_[s];
  }

  StateId add_state(bool marked = false);
  void set_initial(StateId s);
  void set_marked(StateId s, bool marked);
  // Throws Error(kValidation) if (s, e) already has a different successor.
  void add_transition(StateId s, EventId e, StateId t);
  void remove_transition(StateId s, EventId e);

  // Structural equality: same alphabet order, numbering and transitions.
  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  Alphabet alphabet_;
  StateId initial_ = kNoState;
  std::vector<bool> marked_;
  std::vector<StateId> table_;
};

// Builds an automaton from labelled transitions; convenient for tests and
// bundled models.
struct LabelledTransition {
  StateId source;
  std::string event;
  StateId target;
};
Automaton make_automaton(const Alphabet& alphabet, std::size_t states,
                         StateId initial, const std::vector<StateId>& marked,
                         const std::vector<LabelledTransition>& transitions);

// Parses labels into event indices; throws Error(kValidation) for unknown
// labels.
Word word_of(const Alphabet& alphabet, const std::vector<std::string>& labels);

}  // namespace supvkit

#endif  // SUPVKIT_CORE_AUTOMATON_HPP_
