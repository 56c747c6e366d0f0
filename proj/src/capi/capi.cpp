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

#include "supvkit/supvkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "analysis/analysis.hpp"
#include "core/error.hpp"
#include "core/ops.hpp"
#include "io/document.hpp"
#include "io/models.hpp"
#include "observation/observation.hpp"
#include "reduction/reduction.hpp"
#include "synthesis/synthesis.hpp"

struct supvkit_automaton {
  supvkit::Document doc;
};

namespace {

using nlohmann::json;
using supvkit::Automaton;
using supvkit::Error;
using supvkit::ErrorCode;

thread_local std::string last_error;

struct Failure {
  int status;
  std::string message;
};

template <typename F>
int guard(F&& body) {
  last_error.clear();
  try {
    body();
    return SUPVKIT_OK;
  } catch (const Failure& f) {
    last_error = f.message;
    return f.status;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SUPVKIT_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SUPVKIT_E_INTERNAL;
  }
}

template <typename T>
T* need(T* p, const char* what) {
  if (p == nullptr) {
    throw Failure{SUPVKIT_E_INVALID_ARGUMENT, std::string(what) + " is null"};
  }
  return p;
}

const Automaton& automaton(const supvkit_automaton* a, const char* what) {
  return need(a, what)->doc.automaton;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out != nullptr) *out = copy_string(s);
}

void emit(supvkit_automaton** out, const std::string& name, Automaton a,
          json annotations = nullptr) {
  need(out, "out");
  *out = new supvkit_automaton{{name, std::move(a), std::move(annotations)}};
}

std::vector<std::string> labels_of(const char* const* labels, size_t count) {
  if (count > 0) need(labels, "labels");
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i) out.emplace_back(need(labels[i], "label"));
  return out;
}

supvkit::ObservationMask mask_of(const Automaton& a,
                                 const char* const* unobservable,
                                 size_t count) {
  return supvkit::ObservationMask::hiding(a.alphabet(),
                                          labels_of(unobservable, count));
}

json word_json(const supvkit::Alphabet& alpha, const supvkit::Word& w) {
  return alpha.labels(w);
}

std::string name_of(const supvkit_automaton* a) { return a->doc.name; }

void report_check(int* holds, char** report, bool ok, json body) {
  *need(holds, "holds") = ok ? 1 : 0;
  body["holds"] = ok;
  emit(report, body.dump(2));
}

json observation_report(const Automaton& k,
                        const supvkit::ObservationVerdict& v) {
  json body = json::object();
  if (v.holds) return body;
  using V = supvkit::ObservationVerdict::Violation;
  body["violation"] = v.violation == V::kEnablement ? "enablement" : "marking";
  body["s"] = word_json(k.alphabet(), v.s);
  body["s_prime"] = word_json(k.alphabet(), v.s_prime);
  if (v.event) body["event"] = k.alphabet()[*v.event].label;
  return body;
}

json verdict_report(const Automaton& reference, const supvkit::Verdict& v) {
  json body = json::object();
  if (v.witness) body["witness"] = word_json(reference.alphabet(), *v.witness);
  if (!v.detail.empty()) body["detail"] = v.detail;
  return body;
}

}  // namespace

extern "C" {

const char* supvkit_version(void) { return "1.0.0"; }

const char* supvkit_status_name(int status) {
  switch (status) {
    case SUPVKIT_OK: return "OK";
    case SUPVKIT_E_INTERNAL: return "InternalError";
    default:
      if (status >= SUPVKIT_E_PARSE && status <= SUPVKIT_E_IO) {
        return supvkit::to_string(static_cast<ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* supvkit_last_error(void) { return last_error.c_str(); }

void supvkit_string_free(char* s) { std::free(s); }

int supvkit_automaton_parse(const char* text, supvkit_automaton** out) {
  return guard([&] {
    need(out, "out");
    *out = new supvkit_automaton{supvkit::parse_document(need(text, "json"))};
  });
}

int supvkit_automaton_load(const char* path, supvkit_automaton** out) {
  return guard([&] {
    need(out, "out");
    *out = new supvkit_automaton{supvkit::load_document(need(path, "path"))};
  });
}

int supvkit_automaton_save(const supvkit_automaton* a, const char* path) {
  return guard([&] {
    supvkit::save_document(need(a, "automaton")->doc, need(path, "path"));
  });
}

int supvkit_automaton_to_json(const supvkit_automaton* a, char** out) {
  return guard([&] {
    *need(out, "out") =
        copy_string(supvkit::serialize_document(need(a, "automaton")->doc));
  });
}

int supvkit_automaton_to_dot(const supvkit_automaton* a, char** out) {
  return guard([&] {
    need(a, "automaton");
    *need(out, "out") = copy_string(supvkit::to_dot(a->doc.automaton, a->doc.name));
  });
}

void supvkit_automaton_free(supvkit_automaton* a) { delete a; }

int supvkit_automaton_set_name(supvkit_automaton* a, const char* name) {
  return guard([&] { need(a, "automaton")->doc.name = need(name, "name"); });
}

size_t supvkit_automaton_state_count(const supvkit_automaton* a) {
  return a == nullptr ? 0 : a->doc.automaton.state_count();
}

size_t supvkit_automaton_transition_count(const supvkit_automaton* a) {
  return a == nullptr ? 0 : a->doc.automaton.transition_count();
}

size_t supvkit_automaton_event_count(const supvkit_automaton* a) {
  return a == nullptr ? 0 : a->doc.automaton.alphabet().size();
}

int supvkit_automaton_event_label(const supvkit_automaton* a, size_t index,
                                  const char** label) {
  return guard([&] {
    const auto& alpha = automaton(a, "automaton").alphabet();
    if (index >= alpha.size()) {
      throw Failure{SUPVKIT_E_INVALID_ARGUMENT, "event index out of range"};
    }
    *need(label, "label") = alpha[static_cast<supvkit::EventId>(index)].label.c_str();
  });
}

int supvkit_automaton_accepts(const supvkit_automaton* a,
                              const char* const* labels, size_t count,
                              int* in_closed, int* in_marked) {
  return guard([&] {
    const Automaton& x = automaton(a, "automaton");
    const auto word = supvkit::word_of(x.alphabet(), labels_of(labels, count));
    if (in_closed != nullptr) *in_closed = x.accepts_closed(word) ? 1 : 0;
    if (in_marked != nullptr) *in_marked = x.accepts_marked(word) ? 1 : 0;
  });
}

int supvkit_sync(const supvkit_automaton* a, const supvkit_automaton* b,
                 supvkit_automaton** out) {
  return guard([&] {
    const Automaton& x = automaton(a, "a");
    const Automaton& y = automaton(b, "b");
    emit(out, "sync(" + name_of(a) + "," + name_of(b) + ")", supvkit::sync(x, y));
  });
}

int supvkit_meet(const supvkit_automaton* a, const supvkit_automaton* b,
                 supvkit_automaton** out) {
  return guard([&] {
    const Automaton& x = automaton(a, "a");
    const Automaton& y = automaton(b, "b");
    emit(out, "meet(" + name_of(a) + "," + name_of(b) + ")", supvkit::meet(x, y));
  });
}

int supvkit_trim(const supvkit_automaton* a, supvkit_automaton** out) {
  return guard([&] {
    const Automaton& x = automaton(a, "a");
    emit(out, "trim(" + name_of(a) + ")", supvkit::reachable_trim(x));
  });
}

int supvkit_lift(const supvkit_automaton* a, const supvkit_automaton* reference,
                 supvkit_automaton** out) {
  return guard([&] {
    const Automaton& x = automaton(a, "a");
    const Automaton& ref = automaton(reference, "reference");
    emit(out, name_of(a), supvkit::inverse_project(x, ref.alphabet()));
  });
}

int supvkit_supcon(const supvkit_automaton* plant, const supvkit_automaton* spec,
                   supvkit_automaton** out) {
  return guard([&] {
    const auto sup =
        supvkit::supcon(automaton(plant, "plant"), automaton(spec, "spec"));
    json notes = json::object();
    notes["flags"] = supvkit::flags_annotation(sup);
    emit(out, "supcon(" + name_of(plant) + "," + name_of(spec) + ")",
         sup.automaton, std::move(notes));
  });
}

int supvkit_supconrobs(const supvkit_automaton* plant,
                       const supvkit_automaton* spec,
                       const char* const* unobservable, size_t count,
                       int ambient_policy, supvkit_automaton** out) {
  return guard([&] {
    const Automaton& g = automaton(plant, "plant");
    if (ambient_policy != SUPVKIT_AMBIENT_CURRENT &&
        ambient_policy != SUPVKIT_AMBIENT_FIXED) {
      throw Failure{SUPVKIT_E_INVALID_ARGUMENT, "unknown ambient policy"};
    }
    const auto sup = supvkit::supconrobs(
        g, automaton(spec, "spec"), mask_of(g, unobservable, count),
        ambient_policy == SUPVKIT_AMBIENT_FIXED ? supvkit::AmbientPolicy::kFixed
                                                : supvkit::AmbientPolicy::kCurrent);
    json notes = json::object();
    notes["flags"] = supvkit::flags_annotation(sup);
    emit(out, "supconrobs(" + name_of(plant) + "," + name_of(spec) + ")",
         sup.automaton, std::move(notes));
  });
}

int supvkit_supreduce(const supvkit_automaton* plant, const supvkit_automaton* sup,
                      supvkit_automaton** out) {
  return guard([&] {
    const auto s = supvkit::make_supervisor(automaton(sup, "sup"),
                                            automaton(plant, "plant"));
    auto reduced = supvkit::supreduce(s);
    json notes = json::object();
    notes["cell_of"] = supvkit::cell_of_annotation(reduced.cell_of);
    emit(out, "supreduce(" + name_of(sup) + ")", std::move(reduced.automaton),
         std::move(notes));
  });
}

int supvkit_project(const supvkit_automaton* a, const char* const* unobservable,
                    size_t count, supvkit_automaton** out) {
  return guard([&] {
    const Automaton& x = automaton(a, "automaton");
    emit(out, "project(" + name_of(a) + ")",
         supvkit::project(x, mask_of(x, unobservable, count)));
  });
}

int supvkit_isomorphic(const supvkit_automaton* a, const supvkit_automaton* b,
                       int* holds, char** report) {
  return guard([&] {
    const Automaton& x = automaton(a, "a");
    const auto r = supvkit::des_isomorphic(x, automaton(b, "b"));
    json body = json::object();
    if (r.isomorphic) {
      body["theta"] = r.theta;
    } else if (r.witness) {
      body["witness"] = word_json(x.alphabet(), *r.witness);
    }
    report_check(holds, report, r.isomorphic, std::move(body));
  });
}

int supvkit_language_equal(const supvkit_automaton* a, const supvkit_automaton* b,
                           int* holds, char** report) {
  return guard([&] {
    const Automaton& x = automaton(a, "a");
    const auto r = supvkit::language_equal(x, automaton(b, "b"));
    json body = json::object();
    if (r.witness) body["witness"] = word_json(x.alphabet(), *r.witness);
    report_check(holds, report, r.equal, std::move(body));
  });
}

int supvkit_check_observable(const supvkit_automaton* sup,
                             const supvkit_automaton* plant,
                             const char* const* unobservable, size_t count,
                             int* holds, char** report) {
  return guard([&] {
    const Automaton& k = automaton(sup, "sup");
    const Automaton& g = automaton(plant, "plant");
    const auto v = supvkit::is_observable(k, g, mask_of(g, unobservable, count));
    report_check(holds, report, v.holds, observation_report(k, v));
  });
}

int supvkit_check_relatively_observable(const supvkit_automaton* sup,
                                        const supvkit_automaton* ambient,
                                        const supvkit_automaton* plant,
                                        const char* const* unobservable,
                                        size_t count, int* holds,
                                        char** report) {
  return guard([&] {
    const Automaton& k = automaton(sup, "sup");
    const Automaton& g = automaton(plant, "plant");
    const auto v = supvkit::is_relatively_observable(
        k, automaton(ambient, "ambient"), g, mask_of(g, unobservable, count));
    report_check(holds, report, v.holds, observation_report(k, v));
  });
}

int supvkit_check_normal(const supvkit_automaton* sup,
                         const supvkit_automaton* plant,
                         const char* const* unobservable, size_t count,
                         int* holds, char** report) {
  return guard([&] {
    const Automaton& k = automaton(sup, "sup");
    const Automaton& g = automaton(plant, "plant");
    const auto v = supvkit::is_normal(k, g, mask_of(g, unobservable, count));
    report_check(holds, report, v.holds, verdict_report(g, v));
  });
}

int supvkit_check_control_equivalent(const supvkit_automaton* candidate,
                                     const supvkit_automaton* sup,
                                     const supvkit_automaton* plant, int* holds,
                                     char** report) {
  return guard([&] {
    const Automaton& g = automaton(plant, "plant");
    const auto v = supvkit::control_equivalent(automaton(candidate, "candidate"),
                                               automaton(sup, "sup"), g);
    report_check(holds, report, v.holds, verdict_report(g, v));
  });
}

int supvkit_check_rsup_normality(const supvkit_automaton* rsup,
                                 const supvkit_automaton* sup,
                                 const supvkit_automaton* plant, int* holds,
                                 char** report) {
  return guard([&] {
    const Automaton& r = automaton(rsup, "rsup");
    const auto s =
        supvkit::make_supervisor(automaton(sup, "sup"), automaton(plant, "plant"));
    const auto v = supvkit::check_rsup_normality(r, s);
    json body = json::object();
    if (!v.holds) {
      body["clause"] = v.clause;
      body["state"] = v.state;
      if (v.event) body["event"] = r.alphabet()[*v.event].label;
    }
    report_check(holds, report, v.holds, std::move(body));
  });
}

int supvkit_classify_selfloops(const supvkit_automaton* a, char** report) {
  return guard([&] {
    const auto r = supvkit::classify_selfloops(automaton(a, "automaton"));
    json events = json::array();
    for (supvkit::EventId e = 0; e < r.events.size(); ++e) {
      const auto& ev = r.events[e];
      json crossings = json::array();
      for (const auto& [s, t] : ev.crossings) crossings.push_back({s, t});
      events.push_back({{"label", r.alphabet[e].label},
                        {"class", supvkit::to_string(ev.kind)},
                        {"self_loop_states", ev.loop_states},
                        {"crossings", std::move(crossings)}});
    }
    json body = {{"events", std::move(events)},
                 {"self_loop_only", r.self_loop_only_labels()},
                 {"universal_self_loop",
                  r.labels(supvkit::SelfLoopClass::kUniversalSelfLoop)},
                 {"mixed", r.labels(supvkit::SelfLoopClass::kMixed)}};
    *need(report, "report") = copy_string(body.dump(2));
  });
}

int supvkit_find_projections(const supvkit_automaton* sup,
                             const supvkit_automaton* plant,
                             const supvkit_automaton* ambient, int exhaustive,
                             char** report) {
  return guard([&] {
    const Automaton& g = automaton(plant, "plant");
    const auto s = supvkit::make_supervisor(automaton(sup, "sup"), g);
    const auto verdicts = supvkit::find_tolerable_projections(
        s, g, automaton(ambient, "ambient"), exhaustive != 0,
        supvkit::search_budget(supvkit::kDefaultMaskBudget));
    json list = json::array();
    for (const auto& v : verdicts) {
      json item = {{"origin", supvkit::to_string(v.origin)},
                   {"unobservable", v.mask.unobservable_labels()},
                   {"relatively_observable", v.rel_obs},
                   {"normal", v.normal}};
      if (v.witness_s) {
        item["s"] = word_json(g.alphabet(), *v.witness_s);
        item["s_prime"] = word_json(g.alphabet(), *v.witness_s_prime);
      }
      if (v.normality_witness) {
        item["normality_witness"] = word_json(g.alphabet(), *v.normality_witness);
      }
      list.push_back(std::move(item));
    }
    *need(report, "report") = copy_string(json{{"projections", list}}.dump(2));
  });
}

int supvkit_harness(uint64_t first_seed, size_t count, size_t max_states,
                    size_t max_events, char** report, size_t* failures) {
  return guard([&] {
    const auto r = supvkit::run_harness(first_seed, count,
                                        {max_states, max_events});
    if (failures != nullptr) {
      size_t n = 0;
      for (const auto& s : r.seeds) {
        const bool bad =
            !s.structural_ok ||
            s.prop1.outcome == supvkit::Outcome::kViolated ||
            s.prop2.outcome == supvkit::Outcome::kViolated ||
            s.theorem1.check.outcome == supvkit::Outcome::kViolated;
        if (bad) ++n;
      }
      *failures = n;
    }
    emit(report, supvkit::format_report(r));
  });
}

int supvkit_model_names(char** newline_separated) {
  return guard([&] {
    std::string names;
    for (const auto& m : supvkit::bundled_models()) names += m.name + "\n";
    *need(newline_separated, "out") = copy_string(names);
  });
}

int supvkit_model(const char* name, supvkit_automaton** out) {
  return guard([&] {
    const std::string n = need(name, "name");
    emit(out, n.substr(n.find('/') + 1), supvkit::bundled_model(n));
  });
}

}  // extern "C"
