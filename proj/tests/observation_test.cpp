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

#include "analysis/analysis.hpp"
#include "core/ops.hpp"
#include "generators.hpp"
#include "io/models.hpp"
#include "observation/observation.hpp"
#include "oracle.hpp"
#include "reduction/reduction.hpp"
#include "synthesis/synthesis.hpp"
#include "test_util.hpp"

using namespace supvkit;

namespace {

std::vector<bool> observable(const ObservationMask& m) {
  std::vector<bool> out;
  for (EventId e = 0; e < m.alphabet().size(); ++e) out.push_back(m.observable(e));
  return out;
}

// Checks an observation witness against the definitions.
bool replays(const Automaton& k, const Automaton& ambient, const Automaton& g,
             const ObservationMask& m, const ObservationVerdict& v) {
  const auto obs = observable(m);
  if (oracle::project(v.s, obs) != oracle::project(v.s_prime, obs)) return false;
  if (!oracle::in_closed(k, v.s)) return false;
  if (v.violation == ObservationVerdict::Violation::kEnablement) {
    if (!v.event) return false;
    Word a = v.s, b = v.s_prime;
    a.push_back(*v.event);
    b.push_back(*v.event);
    return oracle::walk_labels(ambient, k, v.s_prime) != kNoState &&
           oracle::in_closed(k, a) && oracle::in_closed(g, b) &&
           !oracle::in_closed(k, b);
  }
  return oracle::in_marked(k, v.s) && oracle::in_marked(g, v.s_prime) &&
         !oracle::in_marked(k, v.s_prime);
}

Alphabet ab() { return Alphabet({{"a", true}, {"b", false}}); }

}  // namespace

TEST_CASE("project") {
  SUBCASE("full observation reproduces a trim automaton") {
    gen::Rng rng(4);
    for (int i = 0; i < 30; ++i) {
      const Automaton t = reachable_trim(gen::automaton(rng, ab(), 6));
      if (t.empty()) continue;
      CHECK(des_isomorphic(project(t, ObservationMask::full(ab())), t).isomorphic);
    }
  }
  SUBCASE("erasing the only event of a chain") {
    const Automaton a = make_automaton(ab(), 2, 0, {1}, {{0, "a", 1}});
    const Automaton p = project(a, ObservationMask::hiding(ab(), {"a"}));
    CHECK(p.state_count() == 1);
    CHECK(p.is_marked(0));
    CHECK(p.transition_count() == 0);
  }
  SUBCASE("subsets are the silent-move observer states") {
    gen::Rng rng(8);
    for (int i = 0; i < 30; ++i) {
      const Automaton a = gen::automaton(rng, ab(), 5);
      const auto mask = ObservationMask::hiding(ab(), {"b"});
      const auto proj = project_with_subsets(a, mask);
      const auto obs = observable(mask);
      for (const Word& t : oracle::closed_strings(proj.automaton, 4)) {
        Word full;
        for (EventId e : t) full.push_back(ab().id(proj.automaton.alphabet()[e].label));
        const auto states = oracle::observer_states(a, obs, full);
        const auto& subset = proj.subsets[oracle::walk(proj.automaton, t)];
        CHECK(std::set<StateId>(subset.begin(), subset.end()) == states);
      }
    }
  }
}

TEST_CASE("inverse_project") {
  const TransferLine tl = transfer_line();
  CHECK(des_isomorphic(inverse_project(tl.b1, tl.b1.alphabet()), tl.b1).isomorphic);
  const Automaton lifted = inverse_project(tl.b1, tl.plant.alphabet());
  CHECK(lifted.state_count() == tl.b1.state_count());
  const EventId one = lifted.alphabet().id("1");
  for (StateId x = 0; x < lifted.state_count(); ++x) CHECK(lifted.next(x, one) == x);
  // P(P^-1(L)) = L.
  const auto mask = ObservationMask::observing(tl.plant.alphabet(), {"2", "3", "8"});
  CHECK(language_equal(with_alphabet(project(lifted, mask), tl.b1.alphabet()), tl.b1)
            .equal);
}

TEST_CASE("uncertainty_sets") {
  const Alphabet alpha({{"a", true}, {"b", true}});
  const Automaton chain =
      make_automaton(alpha, 3, 0, {2}, {{0, "a", 1}, {1, "b", 2}});
  SUBCASE("full observation gives singletons") {
    const auto u = uncertainty_sets(chain, ObservationMask::full(alpha));
    for (const auto& s : u.sets) CHECK(s.size() == 1);
    CHECK(u.pairs.empty());
  }
  SUBCASE("hiding the middle event merges its endpoints") {
    const auto u = uncertainty_sets(chain, ObservationMask::hiding(alpha, {"b"}));
    std::size_t two = 0;
    for (const auto& s : u.sets) two += s.size() == 2;
    CHECK(two == 1);
    REQUIRE(u.pairs.size() == 1);
    CHECK(u.pairs[0] == std::make_pair(StateId{1}, StateId{2}));
  }
  SUBCASE("transfer line look-alike pairs are control consistent") {
    const TransferLine tl = transfer_line();
    const Supervisor sup = supcon(tl.plant, tl.spec);
    const auto u = uncertainty_sets(
        sup.automaton, ObservationMask::hiding(tl.plant.alphabet(), {"1", "3"}));
    CHECK_FALSE(u.pairs.empty());
    for (const auto& [x, y] : u.pairs) {
      CHECK(control_consistent(sup.flags[x], sup.flags[y]));
    }
  }
}

TEST_CASE("observability checks on the bundled models") {
  const TransferLine tl = transfer_line();
  const Supervisor sup1 = supcon(tl.plant, tl.spec);
  const Alphabet& alpha = tl.plant.alphabet();
  CHECK(is_observable(sup1.automaton, tl.plant, ObservationMask::full(alpha)).holds);
  CHECK(is_relatively_observable(sup1.automaton, sup1.automaton, tl.plant,
                                 ObservationMask::full(alpha))
            .holds);

  const auto hide8 = ObservationMask::hiding(alpha, {"8"});
  const auto v = is_observable(sup1.automaton, tl.plant, hide8);
  CHECK_FALSE(v.holds);
  CHECK(replays(sup1.automaton, sup1.automaton, tl.plant, hide8, v));

  const Automaton c1 = transfer_line_ambient(sup1.automaton);
  const auto r = is_relatively_observable(sup1.automaton, c1, tl.plant, hide8);
  CHECK_FALSE(r.holds);
  CHECK(replays(sup1.automaton, c1, tl.plant, hide8, r));

  const Guideway gw = guideway();
  const auto hide1323 = ObservationMask::hiding(gw.plant.alphabet(), {"13", "23"});
  const Supervisor sup3 = supconrobs(gw.plant, gw.spec, hide1323);
  CHECK(is_observable(sup3.automaton, gw.plant, hide1323).holds);
  CHECK(is_relatively_observable(sup3.automaton, guideway_ambient(sup3.automaton),
                                 gw.plant, hide1323)
            .holds);
  CHECK(oracle::in_marked(sup3.automaton,
                          word_of(sup3.automaton.alphabet(),
                                  {"11", "13", "10", "15", "21", "12", "23", "20",
                                   "25", "22"})));
}

TEST_CASE("SUP2 under a hidden 1 keeps 1,2,3,1,4") {
  const TransferLine tl = transfer_line();
  const Alphabet& alpha = tl.plant.alphabet();
  const Supervisor sup2 =
      supconrobs(tl.plant, tl.spec, ObservationMask::hiding(alpha, {"1", "3", "5"}));
  CHECK(oracle::in_closed(sup2.automaton,
                          word_of(alpha, {"1", "2", "3", "1", "4"})));
  CHECK(is_relatively_observable(sup2.automaton, sup2.automaton, tl.plant,
                                 ObservationMask::hiding(alpha, {"1"}))
            .holds);
}

TEST_CASE("the ambient must contain the candidate") {
  const TransferLine tl = transfer_line();
  const Supervisor sup1 = supcon(tl.plant, tl.spec);
  const Automaton small =
      make_automaton(tl.plant.alphabet(), 1, 0, {0}, {});
  CHECK(code_of([&] {
          is_relatively_observable(sup1.automaton, small, tl.plant,
                                   ObservationMask::full(tl.plant.alphabet()));
        }) == ErrorCode::kContainmentViolated);
}

TEST_CASE("normal implies relatively observable implies observable") {
  std::size_t normal = 0, relobs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = random_instance(seed);
    const Supervisor sup = supcon(inst.plant, inst.spec);
    if (sup.empty()) continue;
    const Automaton& k = sup.automaton;
    const auto n = is_normal(k, inst.plant, inst.mask);
    const auto r = is_relatively_observable(k, k, inst.plant, inst.mask);
    const auto o = is_observable(k, inst.plant, inst.mask);
    if (n.holds) {
      ++normal;
      CHECK(r.holds);
    }
    if (r.holds) {
      ++relobs;
      CHECK(o.holds);
    }
    if (!r.holds) CHECK(replays(k, k, inst.plant, inst.mask, r));
    if (!o.holds) CHECK(replays(k, k, inst.plant, inst.mask, o));
    if (!n.holds) {
      // The witness is a string of L(G) that looks like some string of K
      // but is not in K.
      REQUIRE(n.witness);
      CHECK(oracle::in_closed(inst.plant, *n.witness));
      CHECK_FALSE(oracle::in_closed(k, *n.witness));
      const auto obs = observable(inst.mask);
      const auto look = oracle::observer_states(k, obs, oracle::project(*n.witness, obs));
      CHECK_FALSE(look.empty());
    }
  }
  CHECK(normal > 20);
  CHECK(relobs > normal / 2);
}

TEST_CASE("supconrobs") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst = random_instance(seed);
    const Supervisor sup = supcon(inst.plant, inst.spec);
    const Supervisor robs = supconrobs(inst.plant, inst.spec, inst.mask);
    const auto full = ObservationMask::full(inst.plant.alphabet());
    CHECK(language_equal(supconrobs(inst.plant, inst.spec, full).automaton,
                         sup.automaton)
              .equal);
    if (robs.empty()) continue;
    ++checked;
    CHECK(contained_in(robs.automaton, sup.automaton, true).contained);
    CHECK_FALSE(oracle::controllability_violation(robs.automaton, inst.plant, 6));
    CHECK_FALSE(oracle::blocking_string(robs.automaton, 6));
    CHECK(is_relatively_observable(robs.automaton, robs.automaton, inst.plant,
                                   inst.mask)
              .holds);
    const Supervisor fixed =
        supconrobs(inst.plant, inst.spec, inst.mask, AmbientPolicy::kFixed);
    if (!fixed.empty()) {
      CHECK(is_relatively_observable(fixed.automaton, sup.automaton, inst.plant,
                                     inst.mask)
                .holds);
    }
  }
  CHECK(checked > 50);
}
