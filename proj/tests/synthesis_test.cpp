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

#include <doctest.h>

#include <map>
#include <set>

#include "analysis/analysis.hpp"
#include "core/ops.hpp"
#include "io/models.hpp"
#include "oracle.hpp"
#include "synthesis/synthesis.hpp"
#include "test_util.hpp"

using namespace supvkit;

TEST_CASE("supcon with every event controllable and spec = plant is trim(plant)") {
  const Alphabet alpha({{"a", true}, {"b", true}});
  const Automaton g = make_automaton(alpha, 4, 0, {1},
                                     {{0, "a", 1}, {1, "b", 0}, {0, "b", 2}, {2, "a", 3}});
  const Supervisor sup = supcon(g, g);
  CHECK(des_isomorphic(sup.automaton, reachable_trim(g)).isomorphic);
}

TEST_CASE("an uncontrollable step into forbidden behavior empties the supervisor") {
  const Alphabet alpha({{"a", false}});
  const Automaton g = make_automaton(alpha, 2, 0, {0, 1}, {{0, "a", 1}});
  const Automaton e = make_automaton(alpha, 1, 0, {0}, {});
  CHECK(supcon(g, e).empty());
}

TEST_CASE("a controllable step is simply disabled") {
  const Alphabet alpha({{"a", true}, {"u", false}});
  // 0 -u-> 1 -a-> 2, spec forbids reaching 2.
  const Automaton g =
      make_automaton(alpha, 3, 0, {0, 1, 2}, {{0, "u", 1}, {1, "a", 2}});
  const Automaton e = forbid_states(g, [](StateId q) { return q == 2; });
  const Supervisor sup = supcon(g, e);
  CHECK(sup.automaton.state_count() == 2);
  const auto& flags = sup.flags[sup.automaton.run(word_of(alpha, {"u"}))];
  CHECK(flags.disabled.contains(alpha.id("a")));
  CHECK(flags.enabled.empty());
}

TEST_CASE("supcon output is controllable, nonblocking, within spec, idempotent") {
  std::size_t nonempty = 0;
  for (std::uint64_t seed = 1000; seed < 1150; ++seed) {
    const Instance inst = random_instance(seed);
    const Supervisor sup = supcon(inst.plant, inst.spec);
    if (sup.empty()) continue;
    ++nonempty;
    const Automaton& k = sup.automaton;
    CHECK_FALSE(oracle::controllability_violation(k, inst.plant, 7));
    CHECK_FALSE(oracle::blocking_string(k, 7));
    for (const Word& s : oracle::closed_strings(k, 7)) {
      if (!oracle::in_marked(k, s)) continue;
      CHECK(oracle::in_marked(inst.plant, s));
      CHECK(oracle::in_marked(inst.spec, s));
    }
    CHECK(language_equal(supcon(inst.plant, k).automaton, k).equal);
    CHECK(control_equivalent(k, k, inst.plant).holds);
  }
  CHECK(nonempty > 50);
}

TEST_CASE("compute_flags") {
  SUBCASE("sup = plant: nothing disabled, both markings agree") {
    const Instance inst = random_instance(17);
    const auto flags = compute_flags(inst.plant, inst.plant);
    for (StateId x = 0; x < inst.plant.state_count(); ++x) {
      CHECK(flags[x].disabled.empty());
      CHECK(flags[x].marked_in_sup == inst.plant.is_marked(x));
      CHECK(flags[x].marked_in_plant == inst.plant.is_marked(x));
    }
  }
  SUBCASE("transfer line: 3 disabled after 1,2,3,4,5,1, enabled once 8 follows") {
    const TransferLine tl = transfer_line();
    const Supervisor sup = supcon(tl.plant, tl.spec);
    const Alphabet& alpha = sup.automaton.alphabet();
    const StateId x = sup.automaton.run(word_of(alpha, {"1", "2", "3", "4", "5", "1"}));
    const StateId y =
        sup.automaton.run(word_of(alpha, {"1", "2", "3", "4", "5", "1", "8"}));
    REQUIRE(x != kNoState);
    REQUIRE(y != kNoState);
    CHECK(sup.flags[x].disabled.contains(alpha.id("3")));
    CHECK(sup.flags[y].enabled.contains(alpha.id("3")));
  }
  SUBCASE("flags agree with a string oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Instance inst = random_instance(seed, {5, 3});
      const Supervisor sup = supcon(inst.plant, inst.spec);
      const Automaton& k = sup.automaton;
      std::map<StateId, std::set<EventId>> disabled;
      std::map<StateId, bool> plant_marked;
      for (const Word& s : oracle::closed_strings(k, 8)) {
        const StateId x = oracle::walk(k, s);
        disabled[x];
        plant_marked[x] = plant_marked[x] || oracle::in_marked(inst.plant, s);
        for (EventId e = 0; e < k.alphabet().size(); ++e) {
          Word t = s;
          t.push_back(e);
          if (oracle::in_closed(inst.plant, t) && !oracle::in_closed(k, t)) {
            disabled[x].insert(e);
          }
        }
      }
      for (const auto& [x, events] : disabled) {
        const auto v = sup.flags[x].disabled.to_vector();
        CHECK(std::set<EventId>(v.begin(), v.end()) == events);
        CHECK(sup.flags[x].marked_in_plant == plant_marked[x]);
        CHECK(sup.flags[x].marked_in_sup == k.is_marked(x));
      }
    }
  }
}

TEST_CASE("control_equivalent") {
  const TransferLine tl = transfer_line();
  const Supervisor sup = supcon(tl.plant, tl.spec);
  CHECK(control_equivalent(sup.automaton, sup.automaton, tl.plant).holds);

  // Dropping a transition on a live path changes the controlled behavior.
  Automaton cut = sup.automaton;
  const Alphabet& alpha = cut.alphabet();
  const StateId x = cut.run(word_of(alpha, {"1", "2"}));
  cut.remove_transition(x, alpha.id("3"));
  const auto v = control_equivalent(cut, sup.automaton, tl.plant);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  const Automaton controlled = meet(sup.automaton, tl.plant);
  const Automaton controlled_cut = meet(cut, tl.plant);
  CHECK(oracle::in_closed(controlled, *v.witness) !=
        oracle::in_closed(controlled_cut, *v.witness));
}

TEST_CASE("projected_control_equivalent") {
  const TransferLine tl = transfer_line();
  const Supervisor sup = supcon(tl.plant, tl.spec);
  const auto full = ObservationMask::full(tl.plant.alphabet());
  CHECK(projected_control_equivalent(sup.automaton, sup.automaton, tl.plant, full).holds);
  const Automaton empty(sup.automaton.alphabet());
  CHECK_FALSE(projected_control_equivalent(empty, sup.automaton, tl.plant, full).holds);
}

TEST_CASE("forbid_states") {
  const Guideway gw = guideway();
  CHECK(des_isomorphic(forbid_states(gw.plant, [](StateId) { return false; }),
                       reachable_trim(gw.plant))
            .isomorphic);
  CHECK(forbid_states(gw.plant, [](StateId) { return true; }).empty());
  // Mutual exclusion: no legal string puts both vehicles in one section.
  const Alphabet& alpha = gw.spec.alphabet();
  CHECK(gw.spec.run(word_of(alpha, {"11", "21"})) == kNoState);
  CHECK(gw.spec.run(word_of(alpha, {"11", "13", "21"})) != kNoState);
}

TEST_CASE("supcon rejects mismatched alphabets") {
  const TransferLine tl = transfer_line();
  CHECK(code_of([&] { supcon(tl.plant, tl.buffers); }) ==
        ErrorCode::kAlphabetMismatch);
}
