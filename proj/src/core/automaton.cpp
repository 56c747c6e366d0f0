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

#include "core/automaton.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace supvkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kConflictingAttributes: return "ConflictingAttributes";
    case ErrorCode::kNotSubbehavior: return "NotSubbehavior";
    case ErrorCode::kContainmentViolated: return "ContainmentViolated";
    case ErrorCode::kNonCongruenceCover: return "NonCongruenceCover";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

Alphabet::Alphabet(std::vector<Event> events) : events_(std::move(events)) {
  for (EventId e = 0; e < events_.size(); ++e) {
    if (events_[e].label.empty()) {
      throw Error(ErrorCode::kValidation, "empty event label");
    }
    if (!index_.emplace(events_[e].label, e).second) {
      throw Error(ErrorCode::kValidation,
                  "duplicate event label '" + events_[e].label + "'");
    }
  }
}

std::optional<EventId> Alphabet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EventId Alphabet::id(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::kValidation,
              "unknown event label '" + std::string(label) + "'");
}

bool Alphabet::same_events(const Alphabet& other) const {
  return size() == other.size() && subset_of(other);
}

bool Alphabet::subset_of(const Alphabet& other) const {
  for (const auto& ev : events_) {
    auto e = other.find(ev.label);
    if (!e || other[*e].controllable != ev.controllable) return false;
  }
  return true;
}

std::string Alphabet::format(std::span<const EventId> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ',';
    out += events_[word[i]].label;
  }
  return out;
}

std::vector<std::string> Alphabet::labels(std::span<const EventId> word) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (auto e : word) out.push_back(events_[e].label);
  return out;
}

void require_same_events(const Alphabet& a, const Alphabet& b) {
  bool labels_match = a.size() == b.size();
  for (const auto& ev : a.events()) {
    auto e = b.find(ev.label);
    if (!e) {
      labels_match = false;
      continue;
    }
    if (b[*e].controllable != ev.controllable) {
      throw Error(ErrorCode::kConflictingAttributes,
                  "event '" + ev.label + "' has conflicting controllability");
    }
  }
  if (!labels_match) {
    throw Error(ErrorCode::kAlphabetMismatch, "alphabets differ");
  }
}

std::vector<EventId> event_map(const Alphabet& from, const Alphabet& to) {
  std::vector<EventId> out(from.size(), kNoEvent);
  for (EventId e = 0; e < from.size(); ++e) {
    if (auto t = to.find(from[e].label)) out[e] = *t;
  }
  return out;
}

ObservationMask ObservationMask::full(const Alphabet& alphabet) {
  ObservationMask m;
  m.alphabet_ = alphabet;
  m.observable_.assign(alphabet.size(), true);
  return m;
}

ObservationMask ObservationMask::hiding(
    const Alphabet& alphabet, const std::vector<std::string>& unobservable) {
  ObservationMask m = full(alphabet);
  for (const auto& label : unobservable) m.observable_[alphabet.id(label)] = false;
  return m;
}

ObservationMask ObservationMask::observing(
    const Alphabet& alphabet, const std::vector<std::string>& observable) {
  ObservationMask m = full(alphabet);
  m.observable_.assign(alphabet.size(), false);
  for (const auto& label : observable) m.observable_[alphabet.id(label)] = true;
  return m;
}

bool ObservationMask::observable(std::string_view label) const {
  return observable_[alphabet_.id(label)];
}

bool ObservationMask::is_full() const {
  return std::all_of(observable_.begin(), observable_.end(),
                     [](bool b) { return b; });
}

std::vector<std::string> ObservationMask::unobservable_labels() const {
  std::vector<std::string> out;
  for (EventId e = 0; e < alphabet_.size(); ++e) {
    if (!observable_[e]) out.push_back(alphabet_[e].label);
  }
  return out;
}

std::vector<std::string> ObservationMask::observable_labels() const {
  std::vector<std::string> out;
  for (EventId e = 0; e < alphabet_.size(); ++e) {
    if (observable_[e]) out.push_back(alphabet_[e].label);
  }
  return out;
}

Alphabet ObservationMask::observable_alphabet() const {
  std::vector<Event> events;
  for (EventId e = 0; e < alphabet_.size(); ++e) {
    if (observable_[e]) events.push_back(alphabet_[e]);
  }
  return Alphabet(std::move(events));
}

std::vector<bool> ObservationMask::over(const Alphabet& other) const {
  if (!other.same_events(alphabet_)) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "observation mask does not match the automaton alphabet");
  }
  std::vector<bool> out(other.size());
  for (EventId e = 0; e < other.size(); ++e) {
    out[e] = observable_[alphabet_.id(other[e].label)];
  }
  return out;
}

Automaton::Automaton(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

std::vector<StateId> Automaton::marked_states() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < state_count(); ++s) {
    if (marked_[s]) out.push_back(s);
  }
  return out;
}

EventSet Automaton::enabled(StateId s) const {
  EventSet out(alphabet_.size());
  for (EventId e = 0; e < alphabet_.size(); ++e) {
    if (defined(s, e)) out.insert(e);
  }
  return out;
}

std::size_t Automaton::transition_count() const {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(),
                    [](StateId t) { return t != kNoState; }));
}

StateId Automaton::run(std::span<const EventId> word) const {
  if (initial_ == kNoState) return kNoState;
  StateId s = initial_;
  for (auto e : word) {
    s = next(s, e);
    if (s == kNoState) return kNoState;
  }
  return s;
}

StateId Automaton::add_state(bool marked) {
  const auto s = static_cast<StateId>(marked_.size());
  marked_.push_back(marked);
  table_.resize(table_.size() + alphabet_.size(), kNoState);
  return s;
}

void Automaton::set_initial(StateId s) {
  if (s >= state_count()) {
    throw Error(ErrorCode::kValidation, "initial state out of range");
  }
  initial_ = s;
}

void Automaton::set_marked(StateId s, bool marked) {
  if (s >= state_count()) {
    throw Error(ErrorCode::kValidation, "marked state out of range");
  }
  marked_[s] = marked;
}

void Automaton::add_transition(StateId s, EventId e, StateId t) {
  if (s >= state_count() || t >= state_count() || e >= alphabet_.size()) {
    throw Error(ErrorCode::kValidation, "transition endpoint out of range");
  }
  StateId& slot = table_[static_cast<std::size_t>(s) * alphabet_.size() + e];
  if (slot != kNoState && slot != t) {
    throw Error(ErrorCode::kValidation,
                "nondeterministic transition on event '" + alphabet_[e].label +
                    "' from state " + std::to_string(s));
  }
  slot = t;
}

void Automaton::remove_transition(StateId s, EventId e) {
  table_[static_cast<std::size_t>(s) * alphabet_.size() + e] = kNoState;
}

Automaton make_automaton(const Alphabet& alphabet, std::size_t states,
                         StateId initial, const std::vector<StateId>& marked,
                         const std::vector<LabelledTransition>& transitions) {
  Automaton a(alphabet);
  for (std::size_t i = 0; i < states; ++i) a.add_state();
  if (states == 0) return a;
  a.set_initial(initial);
  for (auto s : marked) a.set_marked(s, true);
  for (const auto& t : transitions) {
    a.add_transition(t.source, alphabet.id(t.event), t.target);
  }
  return a;
}

Word word_of(const Alphabet& alphabet, const std::vector<std::string>& labels) {
  Word w;
  w.reserve(labels.size());
  for (const auto& l : labels) w.push_back(alphabet.id(l));
  return w;
}

}  // namespace supvkit
