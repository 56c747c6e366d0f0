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

#include "analysis/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "core/error.hpp"
#include "core/ops.hpp"
#include "reduction/reduction.hpp"

namespace supvkit {
namespace {

std::string pair_text(StateId x, StateId y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

PropertyCheck look_alike_pairs_consistent(const Supervisor& sup,
                                          const ObservationMask& mask) {
  PropertyCheck out;
  const auto rel = consistency_relation(sup);
  for (const auto& [x, y] : uncertainty_sets(sup.automaton, mask).pairs) {
    if (!rel(x, y)) {
      out.outcome = Outcome::kViolated;
      out.pair = {x, y};
      out.detail = "look-alike states " + pair_text(x, y) +
                   " are not control consistent";
      return out;
    }
  }
  out.outcome = Outcome::kHolds;
  return out;
}

bool fails(const SeedResult& r) {
  return !r.structural_ok || r.prop1.outcome == Outcome::kViolated ||
         r.prop2.outcome == Outcome::kViolated ||
         r.theorem1.check.outcome == Outcome::kViolated;
}

SeedResult evaluate(std::uint64_t seed, InstanceLimits limits) {
  const Instance inst = random_instance(seed, limits);
  SeedResult r;
  r.seed = seed;
  r.plant_states = inst.plant.state_count();
  r.events = inst.plant.alphabet().size();

  const Supervisor sup = supcon(inst.plant, inst.spec);
  const Supervisor robs = supconrobs(inst.plant, inst.spec, inst.mask);
  r.sup_states = sup.automaton.state_count();
  r.robs_states = robs.automaton.state_count();

  for (const Supervisor* s : {&sup, &robs}) {
    if (s->empty()) continue;
    const auto rel = consistency_relation(*s);
    const auto reduced = supreduce(*s);
    if (s == &sup) r.rsup_states = reduced.automaton.state_count();
    std::string problem;
    if (const auto cover = check_cover(*s, rel, reduced.cover); !cover.holds) {
      problem = "cover: " + cover.detail;
    } else if (const auto eq = control_equivalent(reduced.automaton,
                                                  s->automaton, inst.plant);
               !eq.holds) {
      problem = "control equivalence: " + eq.detail;
    } else if (const auto nv = check_rsup_normality(reduced.automaton, *s);
               !nv.holds) {
      problem = "normality clause " + std::to_string(nv.clause) +
                " at state " + std::to_string(nv.state);
    } else if (reduced.automaton.state_count() > s->automaton.state_count()) {
      problem = "reduction grew the supervisor";
    }
    if (!problem.empty() && r.structural_ok) {
      r.structural_ok = false;
      r.structural_detail = (s == &sup ? "supcon " : "supconrobs ") + problem;
    }
  }

  if (robs.empty()) {
    r.prop1.detail = "empty supervisor";
  } else {
    r.prop1 = verify_proposition1(robs, inst.plant, robs.automaton, inst.mask);
  }
  if (sup.empty()) {
    r.prop2.detail = "empty supervisor";
  } else {
    r.prop2 = verify_proposition2(sup, inst.plant, inst.mask);
  }
  r.theorem1 = verify_theorem1(inst.plant, inst.spec, inst.mask);
  return r;
}

std::string outcome_text(const PropertyCheck& c) {
  std::string s = to_string(c.outcome);
  if (c.outcome == Outcome::kViolated) s += "[" + c.detail + "]";
  return s;
}

}  // namespace

const char* to_string(SelfLoopClass c) {
  switch (c) {
    case SelfLoopClass::kAbsent: return "absent";
    case SelfLoopClass::kSelfLoopOnly: return "self_loop_only";
    case SelfLoopClass::kUniversalSelfLoop: return "universal_self_loop";
    case SelfLoopClass::kMixed: return "mixed";
  }
  return "?";
}

const char* to_string(ProjectionVerdict::Origin o) {
  switch (o) {
    case ProjectionVerdict::Origin::kFull: return "full";
    case ProjectionVerdict::Origin::kSelfLoopOnly: return "self_loop_only";
    case ProjectionVerdict::Origin::kUniversal: return "universal_self_loop";
    case ProjectionVerdict::Origin::kSubset: return "subset";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kHolds: return "holds";
    case Outcome::kViolated: return "violated";
    case Outcome::kSkipped: return "skipped";
  }
  return "?";
}

std::vector<std::string> SelfLoopReport::labels(SelfLoopClass c) const {
  std::vector<std::string> out;
  for (EventId e = 0; e < events.size(); ++e) {
    if (events[e].kind == c) out.push_back(alphabet[e].label);
  }
  return out;
}

std::vector<std::string> SelfLoopReport::self_loop_only_labels() const {
  std::vector<std::string> out;
  for (EventId e = 0; e < events.size(); ++e) {
    if (self_loop_only(e)) out.push_back(alphabet[e].label);
  }
  return out;
}

SelfLoopReport classify_selfloops(const Automaton& r) {
  SelfLoopReport report;
  report.alphabet = r.alphabet();
  report.events.resize(r.alphabet().size());
  for (EventId e = 0; e < r.alphabet().size(); ++e) {
    auto& ev = report.events[e];
    for (StateId s = 0; s < r.state_count(); ++s) {
      const StateId t = r.next(s, e);
      if (t == kNoState) continue;
      if (t == s) {
        ev.loop_states.push_back(s);
      } else {
        ev.crossings.emplace_back(s, t);
      }
    }
    if (!ev.crossings.empty()) {
      ev.kind = SelfLoopClass::kMixed;
    } else if (ev.loop_states.empty()) {
      ev.kind = SelfLoopClass::kAbsent;
    } else if (ev.loop_states.size() == r.state_count()) {
      ev.kind = SelfLoopClass::kUniversalSelfLoop;
    } else {
      ev.kind = SelfLoopClass::kSelfLoopOnly;
    }
  }
  return report;
}

std::vector<ProjectionVerdict> find_tolerable_projections(
    const Supervisor& sup, const Automaton& plant, const Automaton& ambient,
    bool exhaustive, std::size_t budget) {
  const auto reduced = supreduce(sup);
  const auto report = classify_selfloops(reduced.automaton);

  std::vector<std::pair<ProjectionVerdict::Origin, std::vector<std::string>>>
      candidates;
  candidates.emplace_back(ProjectionVerdict::Origin::kFull,
                          std::vector<std::string>{});
  candidates.emplace_back(ProjectionVerdict::Origin::kSelfLoopOnly,
                          report.self_loop_only_labels());
  candidates.emplace_back(ProjectionVerdict::Origin::kUniversal,
                          report.labels(SelfLoopClass::kUniversalSelfLoop));
  if (exhaustive) {
    std::vector<std::string> looped;
    for (EventId e = 0; e < report.events.size(); ++e) {
      if (!report.events[e].loop_states.empty()) {
        looped.push_back(report.alphabet[e].label);
      }
    }
    if (looped.size() >= 64 || (std::uint64_t{1} << looped.size()) > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "mask search over " + std::to_string(looped.size()) +
                      " events exceeds the budget of " +
                      std::to_string(budget) + " masks");
    }
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << looped.size());
         ++bits) {
      subsets.push_back(bits);
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](std::uint64_t a, std::uint64_t b) {
                       return std::popcount(a) < std::popcount(b);
                     });
    for (auto bits : subsets) {
      std::vector<std::string> hidden;
      for (std::size_t i = 0; i < looped.size(); ++i) {
        if (bits & (std::uint64_t{1} << i)) hidden.push_back(looped[i]);
      }
      candidates.emplace_back(ProjectionVerdict::Origin::kSubset,
                              std::move(hidden));
    }
  }

  std::vector<ProjectionVerdict> out;
  std::set<std::vector<bool>> seen;
  for (const auto& [origin, hidden] : candidates) {
    ProjectionVerdict v;
    v.origin = origin;
    v.mask = ObservationMask::hiding(plant.alphabet(), hidden);
    if (!seen.insert(v.mask.over(plant.alphabet())).second) continue;
    const auto robs =
        is_relatively_observable(sup.automaton, ambient, plant, v.mask);
    v.rel_obs = robs.holds;
    if (!robs.holds) {
      v.witness_s = robs.s;
      v.witness_s_prime = robs.s_prime;
    }
    const auto normal = is_normal(sup.automaton, plant, v.mask);
    v.normal = normal.holds;
    v.normality_witness = normal.witness;
    out.push_back(std::move(v));
  }
  return out;
}

PropertyCheck verify_proposition1(const Supervisor& sup, const Automaton& plant,
                                  const Automaton& ambient,
                                  const ObservationMask& mask) {
  if (!is_relatively_observable(sup.automaton, ambient, plant, mask).holds) {
    return {Outcome::kSkipped, "not relatively observable", {}, {}};
  }
  return look_alike_pairs_consistent(sup, mask);
}

PropertyCheck verify_proposition2(const Supervisor& sup, const Automaton& plant,
                                  const ObservationMask& mask) {
  // Look-alike pairs are all trivial.
  if (mask.is_full()) return {Outcome::kHolds, "full observation", {}, {}};
  if (!is_normal(sup.automaton, plant, mask).holds) {
    return {Outcome::kSkipped, "not normal", {}, {}};
  }
  // K = K̄ ∩ Lm(G).
  if (!language_equal(meet(closure(sup.automaton), plant), sup.automaton).equal) {
    return {Outcome::kSkipped, "not Lm(G)-closed", {}, {}};
  }
  return look_alike_pairs_consistent(sup, mask);
}

TheoremCheck verify_theorem1(const Automaton& plant, const Automaton& spec,
                             const ObservationMask& mask) {
  TheoremCheck out;
  const Supervisor sup = supconrobs(plant, spec, mask);
  if (sup.empty()) {
    out.check.detail = "empty supervisor";
    return out;
  }
  const auto reduced = supreduce(sup);
  const Automaton& k = sup.automaton;
  const auto observable = mask.over(k.alphabet());
  std::vector<std::size_t> cell(k.state_count());
  for (std::size_t i = 0; i < reduced.cover.cells.size(); ++i) {
    for (auto x : reduced.cover.cells[i]) cell[x] = i;
  }
  for (StateId x = 0; x < k.state_count(); ++x) {
    for (EventId e = 0; e < k.alphabet().size(); ++e) {
      const StateId t = k.next(x, e);
      if (t == kNoState || observable[e]) continue;
      if (cell[x] == cell[t]) {
        ++out.same_cell;
      } else {
        ++out.cross_cell;
      }
    }
  }

  const auto report = classify_selfloops(reduced.automaton);
  out.check.outcome = Outcome::kHolds;
  for (EventId e = 0; e < report.events.size(); ++e) {
    if (observable[e] || report.events[e].kind != SelfLoopClass::kMixed) {
      continue;
    }
    const auto [src, dst] = report.events[e].crossings.front();
    out.check.outcome = Outcome::kViolated;
    out.check.pair = {src, dst};
    out.check.event = e;
    out.check.detail = "unobservable " + report.alphabet[e].label +
                       " changes reduced state " + pair_text(src, dst);
    break;
  }
  return out;
}

Instance random_instance(std::uint64_t seed, InstanceLimits limits) {
  if (limits.max_states == 0 || limits.max_events == 0) {
    throw Error(ErrorCode::kInvalidArgument, "instance limits must be positive");
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t n) { return rng() % n; };

  const std::size_t n = 1 + pick(limits.max_states);
  const std::size_t m = 1 + pick(limits.max_events);
  std::vector<Event> events;
  for (std::size_t i = 0; i < m; ++i) {
    std::string label = i < 26 ? std::string(1, static_cast<char>('a' + i))
                               : "e" + std::to_string(i);
    events.push_back({std::move(label), pick(2) == 0});
  }
  Automaton g{Alphabet(std::move(events))};
  for (std::size_t s = 0; s < n; ++s) g.add_state(pick(5) < 2);
  g.set_initial(0);
  for (StateId s = 0; s < n; ++s) {
    for (EventId e = 0; e < m; ++e) {
      if (pick(2) == 0) g.add_transition(s, e, static_cast<StateId>(pick(n)));
    }
  }
  Automaton plant = reachable_trim(g);
  if (plant.empty()) {
    g.set_marked(0, true);
    plant = reachable_trim(g);
  }

  std::vector<bool> bad(plant.state_count());
  for (StateId s = 1; s < plant.state_count(); ++s) bad[s] = pick(4) == 0;
  Automaton spec = forbid_states(plant, [&](StateId s) { return bad[s]; });

  std::vector<std::string> hidden;
  for (const auto& ev : plant.alphabet().events()) {
    if (pick(3) == 0) hidden.push_back(ev.label);
  }
  ObservationMask mask = ObservationMask::hiding(plant.alphabet(), hidden);
  return {std::move(plant), std::move(spec), std::move(mask)};
}

void Tally::add(Outcome o) {
  switch (o) {
    case Outcome::kHolds: ++holds; break;
    case Outcome::kViolated: ++violated; break;
    case Outcome::kSkipped: ++skipped; break;
  }
}

SeedResult run_seed(std::uint64_t seed, InstanceLimits limits) {
  SeedResult r = evaluate(seed, limits);
  if (!fails(r)) return r;
  // Shrink: the first limits, in (states, events) order, that still fail.
  for (std::size_t s = 1; s <= limits.max_states; ++s) {
    for (std::size_t e = 1; e <= limits.max_events; ++e) {
      const InstanceLimits smaller{s, e};
      if (fails(evaluate(seed, smaller))) {
        r.shrunk = smaller;
        return r;
      }
    }
  }
  return r;
}

HarnessReport run_harness(std::uint64_t first_seed, std::size_t count,
                          InstanceLimits limits) {
  // Seeds are independent; workers fill a slot each, the tally stays in
  // seed order.
  std::vector<SeedResult> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = run_seed(first_seed + i, limits);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  HarnessReport report;
  for (auto& r : results) {
    if (!r.structural_ok) ++report.structural_failures;
    report.prop1.add(r.prop1.outcome);
    report.prop2.add(r.prop2.outcome);
    report.theorem1.add(r.theorem1.check.outcome);
    report.same_cell += r.theorem1.same_cell;
    report.cross_cell += r.theorem1.cross_cell;
    report.seeds.push_back(std::move(r));
  }
  return report;
}

std::string format_report(const HarnessReport& report) {
  std::ostringstream out;
  for (const auto& r : report.seeds) {
    out << "seed=" << r.seed << " plant=" << r.plant_states
        << " events=" << r.events << " sup=" << r.sup_states
        << " robs=" << r.robs_states << " rsup=" << r.rsup_states
        << " structural="
        << (r.structural_ok ? "ok" : "FAIL[" + r.structural_detail + "]")
        << " prop1=" << outcome_text(r.prop1)
        << " prop2=" << outcome_text(r.prop2)
        << " thm1=" << outcome_text(r.theorem1.check);
    if (r.shrunk) {
      out << " shrunk=" << r.shrunk->max_states << "x" << r.shrunk->max_events;
    }
    out << '\n';
  }
  auto tally = [&](const char* name, const Tally& t) {
    out << name << ": holds=" << t.holds << " violated=" << t.violated
        << " skipped=" << t.skipped << '\n';
  };
  out << "seeds: " << report.seeds.size() << '\n';
  out << "structural failures: " << report.structural_failures << '\n';
  tally("proposition1", report.prop1);
  tally("proposition2", report.prop2);
  tally("theorem1", report.theorem1);
  out << "theorem1 unobservable transitions: same_cell=" << report.same_cell
      << " cross_cell=" << report.cross_cell << '\n';
  return out.str();
}

std::optional<ConsistentNonLookAlike> find_consistent_non_lookalike(
    std::uint64_t first_seed, std::size_t count, InstanceLimits limits) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + i;
    Instance inst = random_instance(seed, limits);
    if (inst.mask.is_full()) continue;
    Supervisor sup = supconrobs(inst.plant, inst.spec, inst.mask);
    if (sup.automaton.state_count() < 2) continue;
    const auto rel = consistency_relation(sup);
    const auto pairs = uncertainty_sets(sup.automaton, inst.mask).pairs;
    const std::set<std::pair<StateId, StateId>> look_alike(pairs.begin(),
                                                           pairs.end());
    for (StateId x = 0; x < sup.automaton.state_count(); ++x) {
      for (StateId y = x + 1; y < sup.automaton.state_count(); ++y) {
        if (rel(x, y) && !look_alike.contains({x, y})) {
          return ConsistentNonLookAlike{seed, std::move(inst), std::move(sup),
                                        x, y};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace supvkit
