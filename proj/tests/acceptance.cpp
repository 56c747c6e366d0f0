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

// Acceptance suite. Prints one PASS/FAIL line per criterion; with a numeric
// argument, runs only that criterion. Exit status is 0 iff all selected
// criteria pass.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "analysis/analysis.hpp"
#include "core/error.hpp"
#include "core/ops.hpp"
#include "io/models.hpp"
#include "observation/observation.hpp"
#include "oracle.hpp"
#include "reduction/reduction.hpp"
#include "synthesis/synthesis.hpp"

namespace {

using namespace supvkit;

struct Result {
  bool pass = true;
  std::string detail;

  // Records one sub-check; the criterion passes only if every one does.
  void expect(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "NOT ") + what;
    pass = pass && ok;
  }
};

ObservationMask hide(const Automaton& a, std::vector<std::string> labels) {
  return ObservationMask::hiding(a.alphabet(), labels);
}

bool contains_all(const std::vector<std::string>& have,
                  const std::vector<std::string>& want) {
  for (const auto& w : want) {
    if (std::find(have.begin(), have.end(), w) == have.end()) return false;
  }
  return true;
}

bool contains(const std::vector<std::string>& have, const std::string& x) {
  return contains_all(have, {x});
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

Word w(const Automaton& a, std::vector<std::string> labels) {
  return word_of(a.alphabet(), labels);
}

// Replays an observability witness against the definitions: both strings
// in L(K), equal projections, and the event separates them.
bool replay(const Automaton& k, const Automaton& g, const ObservationMask& m,
            const ObservationVerdict& v) {
  std::vector<bool> obs;
  for (EventId e = 0; e < k.alphabet().size(); ++e) obs.push_back(m.observable(e));
  if (!oracle::in_closed(k, v.s) || !oracle::in_closed(k, v.s_prime)) return false;
  if (oracle::project(v.s, obs) != oracle::project(v.s_prime, obs)) return false;
  if (v.violation == ObservationVerdict::Violation::kEnablement) {
    if (!v.event) return false;
    Word a = v.s, b = v.s_prime;
    a.push_back(*v.event);
    b.push_back(*v.event);
    return oracle::in_closed(k, a) && oracle::in_closed(g, b) &&
           !oracle::in_closed(k, b);
  }
  return oracle::in_marked(k, v.s) && oracle::in_marked(g, v.s_prime) &&
         !oracle::in_marked(k, v.s_prime);
}

Result criterion1() {
  Result o;
  const TransferLine tl = transfer_line();
  const Supervisor sup1 = supcon(tl.plant, tl.spec);
  o.expect(!sup1.empty(), "SUP1 nonempty (" +
                              std::to_string(sup1.automaton.state_count()) +
                              " states)");
  const Supervisor robs = supconrobs(tl.plant, tl.spec, hide(tl.plant, {"1", "3"}));
  o.expect(language_equal(robs.automaton, sup1.automaton).equal,
           "supconrobs(hide 1,3) language-equal to SUP1");
  return o;
}

Result criterion2() {
  Result o;
  const TransferLine tl = transfer_line();
  const Supervisor sup1 = supcon(tl.plant, tl.spec);
  const auto rsup1 = supreduce(sup1);
  const auto loops = classify_selfloops(rsup1.automaton);
  const auto slo = loops.self_loop_only_labels();
  o.expect(contains_all(slo, {"1", "3"}) && !contains(slo, "8"),
           "RSUP1 (" + std::to_string(rsup1.automaton.state_count()) +
               " states) self-loop-only " + join(slo) + " has 1,3 and not 8");
  const auto mask = hide(tl.plant, {"8"});
  const auto v = is_observable(sup1.automaton, tl.plant, mask);
  o.expect(!v.holds && replay(sup1.automaton, tl.plant, mask, v),
           "SUP1 not observable hiding 8, witness s=" +
               sup1.automaton.alphabet().format(v.s) +
               " s'=" + sup1.automaton.alphabet().format(v.s_prime) + " replays");
  const Automaton& k = sup1.automaton;
  o.expect(oracle::in_closed(k, w(k, {"1", "2", "3", "4", "5", "1", "8", "3"})),
           "1,2,3,4,5,1,8,3 in L(SUP1)");
  o.expect(!oracle::in_closed(k, w(k, {"1", "2", "3", "4", "5", "1", "3"})),
           "1,2,3,4,5,1,3 not in L(SUP1)");
  return o;
}

Result criterion3() {
  Result o;
  const TransferLine tl = transfer_line();
  const Supervisor sup2 =
      supconrobs(tl.plant, tl.spec, hide(tl.plant, {"1", "3", "5"}));
  o.expect(!sup2.empty(), "SUP2 nonempty (" +
                              std::to_string(sup2.automaton.state_count()) +
                              " states)");
  if (sup2.empty()) return o;
  const auto rsup2 = supreduce(sup2);
  const auto slo = classify_selfloops(rsup2.automaton).self_loop_only_labels();
  o.expect(contains_all(slo, {"1", "3", "5"}),
           "RSUP2 (" + std::to_string(rsup2.automaton.state_count()) +
               " states) self-loop-only " + join(slo) + " has 1,3,5");
  const Automaton& k = sup2.automaton;
  o.expect(oracle::in_closed(k, w(k, {"1", "2", "3", "1", "4"})),
           "1,2,3,1,4 in L(SUP2)");
  o.expect(!oracle::in_marked(tl.plant,
                              w(tl.plant, {"1", "2", "3", "4", "5", "1", "6"})),
           "1,2,3,4,5,1,6 not in Lm(G)");
  return o;
}

Result criterion4() {
  Result o;
  const Guideway gw = guideway();
  const auto mask = hide(gw.plant, {"13", "23"});
  const Supervisor sup3 = supconrobs(gw.plant, gw.spec, mask);
  o.expect(!sup3.empty(), "SUP3 nonempty (" +
                              std::to_string(sup3.automaton.state_count()) +
                              " states)");
  if (sup3.empty()) return o;
  const Automaton ambient = guideway_ambient(sup3.automaton);
  o.expect(is_relatively_observable(sup3.automaton, ambient, gw.plant, mask).holds,
           "SUP3 relatively observable w.r.t. the bundled ambient");
  const auto rsup3 = supreduce(sup3);
  const auto loops = classify_selfloops(rsup3.automaton);
  const auto slo = loops.self_loop_only_labels();
  const auto universal = loops.labels(SelfLoopClass::kUniversalSelfLoop);
  o.expect(contains_all(slo, {"13", "23"}),
           "RSUP3 (" + std::to_string(rsup3.automaton.state_count()) +
               " states) self-loop-only " + join(slo) + " has 13,23");
  o.expect(contains_all(universal, {"15", "25"}),
           "RSUP3 universal self-loops " + join(universal) + " has 15,25");
  const auto normal = is_normal(sup3.automaton, gw.plant, hide(gw.plant, {"15", "25"}));
  std::string witness;
  if (normal.witness) witness = " (witness " + gw.plant.alphabet().format(*normal.witness) + ")";
  o.expect(normal.holds, "SUP3 normal hiding 15,25" + witness);
  const auto rmask = ObservationMask::hiding(rsup3.automaton.alphabet(), {"13", "23"});
  o.expect(des_isomorphic(project(rsup3.automaton, rmask),
                          project(sup3.automaton, mask))
               .isomorphic,
           "P(RSUP3) isomorphic to P(SUP3)");
  o.expect(projected_control_equivalent(rsup3.automaton, sup3.automaton, gw.plant,
                                        mask)
               .holds,
           "projected control equivalence");
  return o;
}

const HarnessReport& harness() {
  static const HarnessReport report = run_harness(0, 500);
  return report;
}

Result criterion5() {
  Result o;
  const TransferLine tl = transfer_line();
  const Guideway gw = guideway();
  struct Case {
    const char* name;
    Supervisor sup;
    const Automaton* plant;
  };
  std::vector<Case> cases;
  cases.push_back({"SUP1", supcon(tl.plant, tl.spec), &tl.plant});
  cases.push_back(
      {"SUP2", supconrobs(tl.plant, tl.spec, hide(tl.plant, {"1", "3", "5"})),
       &tl.plant});
  cases.push_back({"guideway supcon", supcon(gw.plant, gw.spec), &gw.plant});
  cases.push_back(
      {"SUP3", supconrobs(gw.plant, gw.spec, hide(gw.plant, {"13", "23"})),
       &gw.plant});
  for (const auto& c : cases) {
    const auto r = supreduce(c.sup);
    const bool eq = control_equivalent(r.automaton, c.sup.automaton, *c.plant).holds;
    const bool nm = check_rsup_normality(r.automaton, c.sup).holds;
    o.expect(eq && nm, std::string(c.name) + " reduction control-equivalent and normal");
  }
  const auto& h = harness();
  o.expect(h.structural_failures == 0,
           std::to_string(h.structural_failures) + " structural failures in " +
               std::to_string(h.seeds.size()) + " seeds");
  return o;
}

Result criterion6() {
  Result o;
  const auto& h = harness();
  auto tally = [&](const char* name, const Tally& t) {
    const std::size_t checked = t.holds + t.violated;
    o.expect(t.violated == 0 && checked >= 50,
             std::string(name) + " violated=" + std::to_string(t.violated) + "/" +
                 std::to_string(checked) + " skipped=" + std::to_string(t.skipped));
  };
  tally("proposition1", h.prop1);
  tally("proposition2", h.prop2);
  tally("theorem1", h.theorem1);
  for (const auto& r : h.seeds) {
    if (r.theorem1.check.outcome == supvkit::Outcome::kViolated) {
      o.detail += "; theorem1 counterexample seed " + std::to_string(r.seed) +
                  ": " + r.theorem1.check.detail;
    }
  }
  return o;
}

Result criterion7() {
  Result o;
  std::size_t control_failures = 0, blocking_failures = 0, spec_failures = 0;
  std::size_t galois_failures = 0, nonempty = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = random_instance(seed);
    const Automaton& g = inst.plant;
    const Supervisor sup = supcon(g, inst.spec);
    const Automaton& k = sup.automaton;
    if (!sup.empty()) ++nonempty;
    if (!sup.empty()) {
      if (!(k.alphabet() == g.alphabet())) ++spec_failures;
      if (oracle::controllability_violation(k, g, 8)) ++control_failures;
      if (oracle::blocking_string(k, 8)) ++blocking_failures;
      for (const auto& s : oracle::closed_strings(k, 8)) {
        if (oracle::in_marked(k, s) &&
            !(oracle::in_marked(g, s) && oracle::in_marked(inst.spec, s))) {
          ++spec_failures;
          break;
        }
      }
    }

    // P(L(G)) via silent-move simulation, and the inverse image.
    std::vector<bool> obs;
    for (EventId e = 0; e < g.alphabet().size(); ++e) {
      obs.push_back(inst.mask.observable(e));
    }
    std::vector<EventId> observed;
    for (EventId e = 0; e < g.alphabet().size(); ++e) {
      if (obs[e]) observed.push_back(e);
    }
    const Automaton pg = project(g, inst.mask);
    const Automaton ipg = inverse_project(pg, g.alphabet());
    bool ok = true;
    oracle::for_each_string(observed, 6, [&](const Word& t) {
      const auto states = oracle::observer_states(g, obs, t);
      bool marked = false;
      for (auto x : states) marked = marked || g.is_marked(x);
      const StateId p = oracle::walk_labels(pg, g, t);
      ok = ok && ((p != kNoState) == !states.empty());
      ok = ok && ((p != kNoState && pg.is_marked(p)) == marked);
    });
    oracle::for_each_string(oracle::all_events(g), 6, [&](const Word& s) {
      const Word t = oracle::project(s, obs);
      const StateId p = oracle::walk_labels(pg, g, t);
      const StateId q = oracle::walk_labels(ipg, g, s);
      ok = ok && ((q != kNoState) == (p != kNoState));
      ok = ok && ((q != kNoState && ipg.is_marked(q)) ==
                  (p != kNoState && pg.is_marked(p)));
      // L(G) is contained in the inverse image of its projection.
      if (oracle::in_closed(g, s)) ok = ok && q != kNoState;
    });
    ok = ok && language_equal(project(ipg, inst.mask), pg).equal;
    if (!ok) ++galois_failures;
  }
  o.expect(control_failures == 0,
           std::to_string(control_failures) + " controllability failures");
  o.expect(blocking_failures == 0,
           std::to_string(blocking_failures) + " blocking failures");
  o.expect(spec_failures == 0,
           std::to_string(spec_failures) + " specification failures");
  o.expect(galois_failures == 0,
           std::to_string(galois_failures) + " projection identity failures");
  o.detail += "; " + std::to_string(nonempty) + "/100 nonempty supervisors";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"transfer line supervisor and relative observability", criterion1},
      {"transfer line reduced supervisor structure", criterion2},
      {"transfer line with events 1, 3, 5 unobservable", criterion3},
      {"guideway", criterion4},
      {"structural checks on reductions", criterion5},
      {"propositions and theorem over random instances", criterion6},
      {"oracle suite", criterion7},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "usage: acceptance [criterion 1-" << criteria.size() << "]\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << ", " << ms << " ms): " << o.detail << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
