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

#include "observation/observation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "core/error.hpp"
#include "core/ops.hpp"

namespace supvkit {
namespace {

constexpr std::size_t kMaxRobsRounds = 10000;

std::vector<StateId> unobservable_closure(const Automaton& a,
                                          const std::vector<bool>& observable,
                                          std::vector<StateId> seed) {
  std::set<StateId> seen(seed.begin(), seed.end());
  std::deque<StateId> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      if (observable[e]) continue;
      const StateId t = a.next(s, e);
      if (t != kNoState && seen.insert(t).second) queue.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

// Plant state of every state of a supervisor whose states each pair with a
// single plant state.
std::vector<StateId> paired_plant_state(const Automaton& sup,
                                        const Automaton& plant) {
  std::vector<StateId> out(sup.state_count(), kNoState);
  for (const auto& [x, q] : meet_with_provenance(sup, plant).provenance) {
    out[x] = q;
  }
  return out;
}

// s'-side of a look-alike pair: ambient state, plant state and supervisor
// state (kNoState when s' has left K̄).
using Shadow = std::tuple<StateId, StateId, StateId>;

struct LookAlikeNode {
  StateId x;
  Shadow shadow;
  auto operator<=>(const LookAlikeNode&) const = default;
};

enum class Move : std::uint8_t { kStart, kBoth, kFirst, kSecond };

struct LookAlikeLink {
  std::size_t parent;
  EventId event;
  Move move;
};

// Events of `from` re-indexed for the automaton `to` over the same events.
struct Views {
  std::vector<EventId> to_ambient;
  std::vector<EventId> to_plant;
};

ObservationVerdict explore_pairs(const Automaton& k, const Automaton& ambient,
                                 const Automaton& plant,
                                 const std::vector<bool>& observable) {
  ObservationVerdict verdict;
  verdict.holds = true;
  if (k.empty()) return verdict;
  const Views views{event_map(k.alphabet(), ambient.alphabet()),
                    event_map(k.alphabet(), plant.alphabet())};
  const std::size_t m = k.alphabet().size();

  std::map<LookAlikeNode, std::size_t> index;
  std::vector<LookAlikeNode> nodes;
  std::vector<LookAlikeLink> links;
  auto visit = [&](const LookAlikeNode& n, LookAlikeLink link) {
    if (index.emplace(n, nodes.size()).second) {
      nodes.push_back(n);
      links.push_back(link);
    }
  };
  visit({*k.initial(), {*ambient.initial(), *plant.initial(), *k.initial()}},
        {0, kNoEvent, Move::kStart});

  auto report = [&](std::size_t i, ObservationVerdict::Violation kind,
                    std::optional<EventId> event) {
    verdict.holds = false;
    verdict.violation = kind;
    verdict.event = event;
    Word s, sp;
    for (std::size_t n = i; links[n].move != Move::kStart; n = links[n].parent) {
      const auto& l = links[n];
      if (l.move != Move::kSecond) s.push_back(l.event);
      if (l.move != Move::kFirst) sp.push_back(l.event);
    }
    std::reverse(s.begin(), s.end());
    std::reverse(sp.begin(), sp.end());
    verdict.s = std::move(s);
    verdict.s_prime = std::move(sp);
    return verdict;
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const LookAlikeNode node = nodes[i];
    const auto [c, q, xh] = node.shadow;
    for (EventId e = 0; e < m; ++e) {
      if (k.defined(node.x, e) && plant.defined(q, views.to_plant[e]) &&
          (xh == kNoState || !k.defined(xh, e))) {
        return report(i, ObservationVerdict::Violation::kEnablement, e);
      }
    }
    if (k.is_marked(node.x) && plant.is_marked(q) &&
        !(xh != kNoState && k.is_marked(xh))) {
      return report(i, ObservationVerdict::Violation::kMarking, std::nullopt);
    }
    for (EventId e = 0; e < m; ++e) {
      const StateId xn = k.next(node.x, e);
      const StateId cn = ambient.next(c, views.to_ambient[e]);
      auto shadow_step = [&]() -> std::optional<Shadow> {
        if (cn == kNoState) return std::nullopt;
        const StateId qn = plant.next(q, views.to_plant[e]);
        if (qn == kNoState) return std::nullopt;
        return Shadow{cn, qn, xh == kNoState ? kNoState : k.next(xh, e)};
      };
      if (observable[e]) {
        if (xn == kNoState) continue;
        if (auto sh = shadow_step()) visit({xn, *sh}, {i, e, Move::kBoth});
      } else {
        if (xn != kNoState) visit({xn, node.shadow}, {i, e, Move::kFirst});
        if (auto sh = shadow_step()) visit({node.x, *sh}, {i, e, Move::kSecond});
      }
    }
  }
  return verdict;
}

void require_contained(const Automaton& a, const Automaton& b,
                       const char* what) {
  const auto r = contained_in(a, b, /*check_marked=*/true);
  if (!r.contained) {
    throw Error(ErrorCode::kContainmentViolated,
                std::string(what) + " fails on " +
                    a.alphabet().format(*r.witness) +
                    (r.marked_violation ? " (marked)" : ""));
  }
}

void require_subbehavior(const Automaton& sup, const Automaton& plant) {
  const auto r = contained_in(sup, plant, /*check_marked=*/false);
  if (!r.contained) {
    throw Error(ErrorCode::kNotSubbehavior,
                "supervisor string " + sup.alphabet().format(*r.witness) +
                    " is not in L(plant)");
  }
}

}  // namespace

Projection project_with_subsets(const Automaton& a,
                                const ObservationMask& mask) {
  const auto observable = mask.over(a.alphabet());
  std::vector<Event> kept;
  std::vector<EventId> source_event;
  for (EventId e = 0; e < a.alphabet().size(); ++e) {
    if (observable[e]) {
      kept.push_back(a.alphabet()[e]);
      source_event.push_back(e);
    }
  }
  Projection p{Automaton(Alphabet(std::move(kept))), {}};
  if (a.empty()) return p;

  std::map<std::vector<StateId>, StateId> index;
  auto intern = [&](std::vector<StateId> subset) {
    auto it = index.find(subset);
    if (it != index.end()) return it->second;
    const bool marked = std::any_of(subset.begin(), subset.end(),
                                    [&](StateId s) { return a.is_marked(s); });
    const StateId id = p.automaton.add_state(marked);
    index.emplace(subset, id);
    p.subsets.push_back(std::move(subset));
    return id;
  };
  p.automaton.set_initial(
      intern(unobservable_closure(a, observable, {*a.initial()})));
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    for (EventId oe = 0; oe < source_event.size(); ++oe) {
      std::vector<StateId> step;
      for (auto s : p.subsets[i]) {
        const StateId t = a.next(s, source_event[oe]);
        if (t != kNoState) step.push_back(t);
      }
      if (step.empty()) continue;
      const StateId t = intern(unobservable_closure(a, observable, step));
      p.automaton.add_transition(static_cast<StateId>(i), oe, t);
    }
  }
  return p;
}

Automaton project(const Automaton& a, const ObservationMask& mask) {
  return project_with_subsets(a, mask).automaton;
}

Automaton inverse_project(const Automaton& a, const Alphabet& full) {
  if (!a.alphabet().subset_of(full)) {
    for (const auto& ev : a.alphabet().events()) {
      if (auto e = full.find(ev.label);
          e && full[*e].controllable != ev.controllable) {
        throw Error(ErrorCode::kConflictingAttributes,
                    "event '" + ev.label + "' has conflicting controllability");
      }
    }
    throw Error(ErrorCode::kAlphabetMismatch,
                "automaton alphabet is not a subset of the target alphabet");
  }
  Automaton out(full);
  for (StateId s = 0; s < a.state_count(); ++s) out.add_state(a.is_marked(s));
  if (a.empty()) return out;
  out.set_initial(*a.initial());
  const auto to_a = event_map(full, a.alphabet());
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (EventId e = 0; e < full.size(); ++e) {
      if (to_a[e] == kNoEvent) {
        out.add_transition(s, e, s);
      } else if (const StateId t = a.next(s, to_a[e]); t != kNoState) {
        out.add_transition(s, e, t);
      }
    }
  }
  return out;
}

UncertaintyReport uncertainty_sets(const Automaton& sup,
                                   const ObservationMask& mask) {
  UncertaintyReport r;
  r.sets = project_with_subsets(sup, mask).subsets;
  std::set<std::pair<StateId, StateId>> pairs;
  for (const auto& set : r.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        pairs.emplace(set[i], set[j]);
      }
    }
  }
  r.pairs.assign(pairs.begin(), pairs.end());
  return r;
}

ObservationVerdict is_relatively_observable(const Automaton& supK,
                                            const Automaton& ambient,
                                            const Automaton& plant,
                                            const ObservationMask& mask) {
  require_same_events(supK.alphabet(), plant.alphabet());
  require_same_events(ambient.alphabet(), plant.alphabet());
  require_contained(supK, ambient, "K ⊆ C");
  require_contained(ambient, plant, "C ⊆ Lm(G)");
  return explore_pairs(supK, ambient, plant, mask.over(supK.alphabet()));
}

ObservationVerdict is_observable(const Automaton& supK, const Automaton& plant,
                                 const ObservationMask& mask) {
  require_same_events(supK.alphabet(), plant.alphabet());
  require_subbehavior(supK, plant);
  return explore_pairs(supK, supK, plant, mask.over(supK.alphabet()));
}

Verdict is_normal(const Automaton& supK, const Automaton& plant,
                  const ObservationMask& mask) {
  require_same_events(supK.alphabet(), plant.alphabet());
  require_subbehavior(supK, plant);
  const Automaton k_closed = closure(supK);
  const Automaton lhs = meet(
      closure(plant), inverse_project(project(k_closed, mask), plant.alphabet()));
  const auto cmp = language_equal(lhs, k_closed);
  Verdict v;
  v.holds = cmp.equal;
  if (!cmp.equal) {
    v.witness = cmp.witness;
    v.detail = "P^-1 P(K̄) ∩ L(G) contains " +
               plant.alphabet().format(*cmp.witness) + " outside K̄";
  }
  return v;
}

Automaton minimize_labelled(const Automaton& a,
                            const std::vector<StateId>& label) {
  if (a.empty()) return a;
  const std::size_t n = a.state_count();
  const std::size_t m = a.alphabet().size();
  std::vector<std::size_t> block(n);
  {
    std::map<std::pair<StateId, bool>, std::size_t> ids;
    for (StateId s = 0; s < n; ++s) {
      block[s] = ids.emplace(std::make_pair(label[s], a.is_marked(s)), ids.size())
                     .first->second;
    }
  }
  std::size_t block_count = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (EventId e = 0; e < m; ++e) {
        const StateId t = a.next(s, e);
        sig.push_back(t == kNoState ? SIZE_MAX : block[t]);
      }
      next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    const bool stable = ids.size() == block_count;
    block_count = ids.size();
    block = std::move(next);
    if (stable) break;
  }
  Automaton out(a.alphabet());
  for (std::size_t b = 0; b < block_count; ++b) out.add_state();
  for (StateId s = 0; s < n; ++s) {
    out.set_marked(static_cast<StateId>(block[s]), a.is_marked(s));
    for (EventId e = 0; e < m; ++e) {
      const StateId t = a.next(s, e);
      if (t != kNoState) {
        out.add_transition(static_cast<StateId>(block[s]), e,
                           static_cast<StateId>(block[t]));
      }
    }
  }
  out.set_initial(static_cast<StateId>(block[*a.initial()]));
  return reachable(out);
}

Supervisor supconrobs(const Automaton& plant, const Automaton& spec,
                      const ObservationMask& mask, AmbientPolicy policy) {
  Supervisor initial = supcon(plant, spec);
  if (initial.empty()) return initial;
  Automaton ambient = initial.automaton;
  const auto observable = mask.over(plant.alphabet());
  const std::size_t m = plant.alphabet().size();

  Automaton k = ambient;
  for (std::size_t round = 0; round < kMaxRobsRounds; ++round) {
    if (policy == AmbientPolicy::kCurrent) ambient = k;
    const auto k_plant = paired_plant_state(k, plant);

    // Refine k by the look-alike shadow set: node = (x, all s'-shadows).
    using ShadowSet = std::vector<Shadow>;
    auto close = [&](std::set<Shadow> seed) {
      std::deque<Shadow> queue(seed.begin(), seed.end());
      while (!queue.empty()) {
        const auto [c, q, xh] = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < m; ++e) {
          if (observable[e]) continue;
          const StateId cn = ambient.next(c, e);
          if (cn == kNoState) continue;
          const Shadow sh{cn, plant.next(q, e),
                          xh == kNoState ? kNoState : k.next(xh, e)};
          if (seed.insert(sh).second) queue.push_back(sh);
        }
      }
      return ShadowSet(seed.begin(), seed.end());
    };

    Automaton refined(plant.alphabet());
    std::vector<StateId> refined_plant;
    std::map<std::pair<StateId, ShadowSet>, StateId> index;
    std::vector<std::pair<StateId, ShadowSet>> nodes;
    auto intern = [&](StateId x, ShadowSet shadows) {
      auto key = std::make_pair(x, std::move(shadows));
      auto it = index.find(key);
      if (it != index.end()) return it->second;
      const StateId id = refined.add_state(k.is_marked(x));
      refined_plant.push_back(k_plant[x]);
      index.emplace(key, id);
      nodes.push_back(std::move(key));
      return id;
    };
    refined.set_initial(intern(
        *k.initial(),
        close({Shadow{*ambient.initial(), *plant.initial(), *k.initial()}})));

    std::size_t violations = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const StateId x = nodes[i].first;
      const ShadowSet shadows = nodes[i].second;
      const auto id = static_cast<StateId>(i);
      if (k.is_marked(x)) {
        for (const auto& [c, q, xh] : shadows) {
          if (plant.is_marked(q) && !(xh != kNoState && k.is_marked(xh))) {
            refined.set_marked(id, false);
            ++violations;
            break;
          }
        }
      }
      for (EventId e = 0; e < m; ++e) {
        const StateId xn = k.next(x, e);
        if (xn == kNoState) continue;
        const bool violates = std::any_of(
            shadows.begin(), shadows.end(), [&](const Shadow& sh) {
              const auto [c, q, xh] = sh;
              return plant.defined(q, e) &&
                     (xh == kNoState || !k.defined(xh, e));
            });
        if (violates) {
          ++violations;
          continue;
        }
        ShadowSet next_shadows = shadows;
        if (observable[e]) {
          std::set<Shadow> step;
          for (const auto& [c, q, xh] : shadows) {
            const StateId cn = ambient.next(c, e);
            if (cn == kNoState) continue;
            step.emplace(cn, plant.next(q, e),
                         xh == kNoState ? kNoState : k.next(xh, e));
          }
          next_shadows = close(std::move(step));
        }
        refined.add_transition(id, e, intern(xn, std::move(next_shadows)));
      }
    }
    if (violations == 0) return make_supervisor(k, plant);

    const Automaton core = controllable_core(refined, refined_plant, plant);
    if (core.empty()) return make_supervisor(core, plant);
    k = minimize_labelled(core, paired_plant_state(core, plant));
  }
  throw Error(ErrorCode::kBudgetExceeded,
              "relative observability pruning did not converge");
}

}  // namespace supvkit
