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

// Self-loop analysis of reduced supervisors, tolerable projection search and
// the randomized property harness.

#ifndef SUPVKIT_ANALYSIS_ANALYSIS_HPP_
#define SUPVKIT_ANALYSIS_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/automaton.hpp"
#include "observation/observation.hpp"
#include "synthesis/synthesis.hpp"

namespace supvkit {

enum class SelfLoopClass {
  kAbsent,
  kSelfLoopOnly,       // occurs, always as a self-loop, not at every state
  kUniversalSelfLoop,  // self-looped at every state
  kMixed,              // at least one occurrence changes state
};

const char* to_string(SelfLoopClass c);

struct EventSelfLoops {
  SelfLoopClass kind = SelfLoopClass::kAbsent;
  std::vector<StateId> loop_states;
  std::vector<std::pair<StateId, StateId>> crossings;
};

struct SelfLoopReport {
  Alphabet alphabet;
  std::vector<EventSelfLoops> events;  // by event id of `alphabet`

  // Self-loop-only in the broad sense: kSelfLoopOnly or kUniversalSelfLoop.
  bool self_loop_only(EventId e) const {
    return events[e].kind == SelfLoopClass::kSelfLoopOnly ||
           events[e].kind == SelfLoopClass::kUniversalSelfLoop;
  }
  std::vector<std::string> labels(SelfLoopClass c) const;
  std::vector<std::string> self_loop_only_labels() const;
};

SelfLoopReport classify_selfloops(const Automaton& r);

struct ProjectionVerdict {
  enum class Origin { kFull, kSelfLoopOnly, kUniversal, kSubset };

  Origin origin = Origin::kFull;
  ObservationMask mask;
  bool rel_obs = false;
  bool normal = false;
  // First failing check's witness: s and s' for relative observability, the
  // offending string for normality.
  std::optional<Word> witness_s;
  std::optional<Word> witness_s_prime;
  std::optional<Word> normality_witness;
};

const char* to_string(ProjectionVerdict::Origin o);

inline constexpr std::size_t kDefaultMaskBudget = 1u << 12;

// Candidate masks: full observation; Σ minus the self-loop-only events of
// supreduce(sup); Σ minus its universally self-looped events; with
// `exhaustive`, Σ minus every subset of the events that are self-looped
// somewhere. Every candidate is confirmed by the relative observability and
// normality checkers. Throws Error(kBudgetExceeded) when the subset count
// exceeds `budget`.
std::vector<ProjectionVerdict> find_tolerable_projections(
    const Supervisor& sup, const Automaton& plant, const Automaton& ambient,
    bool exhaustive = false,
    std::size_t budget = kDefaultMaskBudget);

enum class Outcome { kHolds, kViolated, kSkipped };

const char* to_string(Outcome o);

struct PropertyCheck {
  Outcome outcome = Outcome::kSkipped;
  std::string detail;
  // Offending supervisor state pair, or the source and target of an offending
  // reduced transition.
  std::optional<std::pair<StateId, StateId>> pair;
  std::optional<EventId> event;
};

// Every look-alike state pair of a relatively observable supervisor is
// control consistent. Skipped unless the supervisor is relatively observable
// w.r.t. `ambient`.
PropertyCheck verify_proposition1(const Supervisor& sup, const Automaton& plant,
                                  const Automaton& ambient,
                                  const ObservationMask& mask);

// Same conclusion for a normal, Lm(G)-closed supervisor. Skipped otherwise.
PropertyCheck verify_proposition2(const Supervisor& sup, const Automaton& plant,
                                  const ObservationMask& mask);

struct TheoremCheck {
  PropertyCheck check;
  // Unobservable supervisor transitions whose endpoints share a cell, and
  // those whose endpoints lie in different cells.
  std::size_t same_cell = 0;
  std::size_t cross_cell = 0;
};

// Unobservable events occur in supreduce(supconrobs(plant, spec, mask)) only
// as self-loops. Skipped when the synthesized supervisor is empty.
TheoremCheck verify_theorem1(const Automaton& plant, const Automaton& spec,
                             const ObservationMask& mask);

struct InstanceLimits {
  std::size_t max_states = 6;
  std::size_t max_events = 4;
};

struct Instance {
  Automaton plant;
  Automaton spec;
  ObservationMask mask;
};

// Reproducible trim plant, state-forbidding spec and random attributes.
Instance random_instance(std::uint64_t seed, InstanceLimits limits = {});

struct SeedResult {
  std::uint64_t seed = 0;
  std::size_t plant_states = 0;
  std::size_t events = 0;
  std::size_t sup_states = 0;
  std::size_t robs_states = 0;
  std::size_t rsup_states = 0;
  // Control equivalence and normality of both reductions, and cover
  // validity.
  bool structural_ok = true;
  std::string structural_detail;
  PropertyCheck prop1;
  PropertyCheck prop2;
  TheoremCheck theorem1;
  // Smallest limits under which the same seed still fails, when it fails.
  std::optional<InstanceLimits> shrunk;
};

SeedResult run_seed(std::uint64_t seed, InstanceLimits limits = {});

struct Tally {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t skipped = 0;
  void add(Outcome o);
};

struct HarnessReport {
  std::vector<SeedResult> seeds;
  std::size_t structural_failures = 0;
  Tally prop1;
  Tally prop2;
  Tally theorem1;
  std::size_t same_cell = 0;
  std::size_t cross_cell = 0;
};

HarnessReport run_harness(std::uint64_t first_seed, std::size_t count,
                          InstanceLimits limits = {});

// Line-oriented report: one line per seed, then totals.
std::string format_report(const HarnessReport& report);

struct ConsistentNonLookAlike {
  std::uint64_t seed = 0;
  Instance instance;
  Supervisor sup;
  StateId x = kNoState;
  StateId y = kNoState;
};

// First seed whose supconrobs supervisor has a control-consistent state pair
// that no look-alike strings reach.
std::optional<ConsistentNonLookAlike> find_consistent_non_lookalike(
    std::uint64_t first_seed, std::size_t count, InstanceLimits limits = {});

}  // namespace supvkit

#endif  // SUPVKIT_ANALYSIS_ANALYSIS_HPP_
