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

#include "synthesis/synthesis.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/ops.hpp"
#include "observation/observation.hpp"

namespace supvkit {

std::vector<StateFlags> compute_flags(const Automaton& sup,
                                      const Automaton& plant) {
  require_same_events(sup.alphabet(), plant.alphabet());
  const auto containment = contained_in(sup, plant, /*check_marked=*/false);
  if (!containment.contained) {
    throw Error(ErrorCode::kNotSubbehavior,
                "supervisor string " +
                    sup.alphabet().format(*containment.witness) +
                    " is not in L(plant)");
  }
  const std::size_t m = sup.alphabet().size();
  std::vector<StateFlags> flags(sup.state_count());
  for (StateId x = 0; x < sup.state_count(); ++x) {
    flags[x].enabled = sup.enabled(x);
    flags[x].disabled = EventSet(m);
    flags[x].marked_in_sup = sup.is_marked(x);
  }
  if (sup.empty()) return flags;

  const auto product = meet_with_provenance(sup, plant);
  const auto to_plant = event_map(sup.alphabet(), plant.alphabet());
  for (const auto& [x, q] : product.provenance) {
    auto& f = flags[x];
    f.plant_states.push_back(q);
    if (plant.is_marked(q)) f.marked_in_plant = true;
    for (EventId e = 0; e < m; ++e) {
      if (!sup.defined(x, e) && plant.defined(q, to_plant[e])) {
        f.disabled.insert(e);
      }
    }
  }
  for (auto& f : flags) std::sort(f.plant_states.begin(), f.plant_states.end());
  return flags;
}

Supervisor make_supervisor(const Automaton& sup, const Automaton& plant) {
  Supervisor out;
  out.automaton = with_alphabet(sup, plant.alphabet());
  out.flags = compute_flags(out.automaton, plant);
  return out;
}

Automaton controllable_core(const Automaton& candidate,
                            const std::vector<StateId>& plant_state,
                            const Automaton& plant) {
  require_same_events(candidate.alphabet(), plant.alphabet());
  const auto to_plant = event_map(candidate.alphabet(), plant.alphabet());
  const std::size_t n = candidate.state_count();
  std::vector<EventId> uncontrollable;
  for (EventId e = 0; e < candidate.alphabet().size(); ++e) {
    if (!candidate.alphabet().controllable(e)) uncontrollable.push_back(e);
  }

  auto alive = trim_mask(candidate, std::vector<bool>(n, true));
  while (true) {
    std::vector<bool> next = alive;
    bool removed = false;
    for (StateId x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      const StateId q = plant_state[x];
      for (auto e : uncontrollable) {
        if (!plant.defined(q, to_plant[e])) continue;
        const StateId t = candidate.next(x, e);
        if (t == kNoState || !alive[t]) {
          next[x] = false;
          removed = true;
          break;
        }
      }
    }
    if (!removed) break;
    alive = trim_mask(candidate, next);
  }
  return restrict_and_trim(candidate, alive);
}

Supervisor supcon(const Automaton& plant, const Automaton& spec) {
  const auto product = meet_with_provenance(plant, spec);
  std::vector<StateId> plant_state;
  plant_state.reserve(product.provenance.size());
  for (const auto& [q, e] : product.provenance) plant_state.push_back(q);
  return make_supervisor(controllable_core(product.automaton, plant_state, plant),
                         plant);
}

Verdict control_equivalent(const Automaton& cand, const Automaton& sup,
                           const Automaton& plant) {
  require_same_events(cand.alphabet(), plant.alphabet());
  require_same_events(sup.alphabet(), plant.alphabet());
  const auto cmp = language_equal(meet(plant, cand), sup);
  Verdict v;
  v.holds = cmp.equal;
  if (!cmp.equal) {
    v.witness = cmp.witness;
    v.detail = "G ∩ candidate and SUP disagree on " +
               plant.alphabet().format(*cmp.witness);
  }
  return v;
}

Verdict projected_control_equivalent(const Automaton& cand,
                                     const Automaton& sup,
                                     const Automaton& plant,
                                     const ObservationMask& mask) {
  require_same_events(cand.alphabet(), plant.alphabet());
  require_same_events(sup.alphabet(), plant.alphabet());
  const auto lifted = [&](const Automaton& a) {
    return meet(plant, inverse_project(project(a, mask), plant.alphabet()));
  };
  const auto cmp = language_equal(lifted(cand), lifted(sup));
  Verdict v;
  v.holds = cmp.equal;
  if (!cmp.equal) {
    v.witness = cmp.witness;
    v.detail = "projected behaviours disagree on " +
               plant.alphabet().format(*cmp.witness);
  }
  return v;
}

Automaton forbid_states(const Automaton& plant,
                        const std::function<bool(StateId)>& bad) {
  std::vector<bool> keep(plant.state_count());
  for (StateId s = 0; s < plant.state_count(); ++s) keep[s] = !bad(s);
  return restrict_and_trim(plant, keep);
}

}  // namespace supvkit
