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

// Exercises the shared library through its C header only.

#include <doctest.h>
#include <supvkit/supvkit.h>

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

namespace {

struct AutomatonDeleter {
  void operator()(supvkit_automaton* a) const { supvkit_automaton_free(a); }
};
using Handle = std::unique_ptr<supvkit_automaton, AutomatonDeleter>;

Handle model(const char* name) {
  supvkit_automaton* a = nullptr;
  REQUIRE(supvkit_model(name, &a) == SUPVKIT_OK);
  return Handle(a);
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  supvkit_string_free(s);
  return out;
}

const char* kTiny = R"({"name": "tiny", "states": 2, "initial": 0,
  "events": [{"label": "a", "controllable": true}, {"label": "b", "controllable": false}],
  "marked": [0], "transitions": [[0, "a", 1], [1, "b", 0]]})";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(supvkit_version()) == "1.0.0");
  CHECK(std::string(supvkit_status_name(SUPVKIT_OK)) == "OK");
  CHECK(std::string(supvkit_status_name(SUPVKIT_E_PARSE)) == "ParseError");
  CHECK(std::string(supvkit_status_name(12345)) == "Unknown");
}

TEST_CASE("parse, inspect and serialize") {
  supvkit_automaton* raw = nullptr;
  REQUIRE(supvkit_automaton_parse(kTiny, &raw) == SUPVKIT_OK);
  Handle a(raw);
  CHECK(supvkit_automaton_state_count(a.get()) == 2);
  CHECK(supvkit_automaton_transition_count(a.get()) == 2);
  CHECK(supvkit_automaton_event_count(a.get()) == 2);
  const char* label = nullptr;
  REQUIRE(supvkit_automaton_event_label(a.get(), 1, &label) == SUPVKIT_OK);
  CHECK(std::string(label) == "b");
  CHECK(supvkit_automaton_event_label(a.get(), 2, &label) == SUPVKIT_E_INVALID_ARGUMENT);

  const char* word[] = {"a", "b"};
  int closed = -1, marked = -1;
  REQUIRE(supvkit_automaton_accepts(a.get(), word, 2, &closed, &marked) == SUPVKIT_OK);
  CHECK(closed == 1);
  CHECK(marked == 1);
  REQUIRE(supvkit_automaton_accepts(a.get(), word, 1, &closed, &marked) == SUPVKIT_OK);
  CHECK(closed == 1);
  CHECK(marked == 0);
  const char* unknown[] = {"z"};
  CHECK(supvkit_automaton_accepts(a.get(), unknown, 1, &closed, &marked) ==
        SUPVKIT_E_VALIDATION);

  REQUIRE(supvkit_automaton_set_name(a.get(), "renamed") == SUPVKIT_OK);
  char* json = nullptr;
  REQUIRE(supvkit_automaton_to_json(a.get(), &json) == SUPVKIT_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["name"] == "renamed");
  CHECK(doc["transitions"].size() == 2);

  char* dot = nullptr;
  REQUIRE(supvkit_automaton_to_dot(a.get(), &dot) == SUPVKIT_OK);
  CHECK(take(dot).find("digraph \"renamed\"") == 0);
}

TEST_CASE("errors set a code and a message") {
  supvkit_automaton* a = nullptr;
  CHECK(supvkit_automaton_parse("{", &a) == SUPVKIT_E_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(supvkit_last_error()).size() > 0);
  CHECK(supvkit_automaton_parse(nullptr, &a) == SUPVKIT_E_INVALID_ARGUMENT);
  CHECK(supvkit_automaton_parse(kTiny, nullptr) == SUPVKIT_E_INVALID_ARGUMENT);
  CHECK(supvkit_automaton_load("/nonexistent/x.json", &a) == SUPVKIT_E_IO);
  CHECK(supvkit_model("nope", &a) == SUPVKIT_E_INVALID_ARGUMENT);
  CHECK(supvkit_trim(nullptr, &a) == SUPVKIT_E_INVALID_ARGUMENT);
  CHECK(supvkit_automaton_state_count(nullptr) == 0);
  // Freeing null is a no-op.
  supvkit_automaton_free(nullptr);
  supvkit_string_free(nullptr);

  // A successful call clears the previous message.
  Handle m = model("transfer_line/m1");
  CHECK(std::string(supvkit_last_error()).empty());

  Handle plant = model("transfer_line/plant");
  Handle b1 = model("transfer_line/b1");
  CHECK(supvkit_supcon(plant.get(), b1.get(), &a) == SUPVKIT_E_ALPHABET_MISMATCH);
}

TEST_CASE("model names") {
  char* names = nullptr;
  REQUIRE(supvkit_model_names(&names) == SUPVKIT_OK);
  const std::string list = take(names);
  for (const char* n : {"transfer_line/plant", "transfer_line/sup1", "guideway/sup3"}) {
    CHECK(list.find(std::string(n) + "\n") != std::string::npos);
  }
  Handle sup1 = model("transfer_line/sup1");
  char* json = nullptr;
  REQUIRE(supvkit_automaton_to_json(sup1.get(), &json) == SUPVKIT_OK);
  CHECK(nlohmann::json::parse(take(json))["name"] == "sup1");
}

TEST_CASE("synthesis pipeline on the transfer line") {
  Handle plant = model("transfer_line/plant");
  Handle spec = model("transfer_line/spec");
  Handle sup1 = model("transfer_line/sup1");

  supvkit_automaton* raw = nullptr;
  REQUIRE(supvkit_supcon(plant.get(), spec.get(), &raw) == SUPVKIT_OK);
  Handle sup(raw);
  int holds = 0;
  char* report = nullptr;
  REQUIRE(supvkit_isomorphic(sup.get(), sup1.get(), &holds, &report) == SUPVKIT_OK);
  CHECK(holds == 1);
  CHECK(nlohmann::json::parse(take(report))["holds"] == true);

  char* json = nullptr;
  REQUIRE(supvkit_automaton_to_json(sup.get(), &json) == SUPVKIT_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["annotations"]["flags"].size() == supvkit_automaton_state_count(sup.get()));

  REQUIRE(supvkit_supreduce(plant.get(), sup.get(), &raw) == SUPVKIT_OK);
  Handle rsup(raw);
  CHECK(supvkit_automaton_state_count(rsup.get()) < supvkit_automaton_state_count(sup.get()));
  REQUIRE(supvkit_check_control_equivalent(rsup.get(), sup.get(), plant.get(), &holds,
                                           nullptr) == SUPVKIT_OK);
  CHECK(holds == 1);
  REQUIRE(supvkit_check_rsup_normality(rsup.get(), sup.get(), plant.get(), &holds,
                                       nullptr) == SUPVKIT_OK);
  CHECK(holds == 1);

  REQUIRE(supvkit_classify_selfloops(rsup.get(), &report) == SUPVKIT_OK);
  const auto loops = nlohmann::json::parse(take(report));
  CHECK(loops["self_loop_only"] == nlohmann::json({"1", "3"}));

  const char* hidden[] = {"1", "3", "5"};
  REQUIRE(supvkit_supconrobs(plant.get(), spec.get(), hidden, 3, SUPVKIT_AMBIENT_CURRENT,
                             &raw) == SUPVKIT_OK);
  Handle sup2(raw);
  Handle model2 = model("transfer_line/sup2");
  REQUIRE(supvkit_isomorphic(sup2.get(), model2.get(), &holds, nullptr) == SUPVKIT_OK);
  CHECK(holds == 1);
  CHECK(supvkit_supconrobs(plant.get(), spec.get(), hidden, 3, 7, &raw) ==
        SUPVKIT_E_INVALID_ARGUMENT);

  REQUIRE(supvkit_project(sup.get(), hidden, 3, &raw) == SUPVKIT_OK);
  Handle p(raw);
  CHECK(supvkit_automaton_event_count(p.get()) == supvkit_automaton_event_count(sup.get()) - 3);
}

TEST_CASE("observation checks") {
  Handle plant = model("transfer_line/plant");
  Handle sup1 = model("transfer_line/sup1");
  Handle c1 = model("transfer_line/ambient_c1");
  int holds = -1;
  char* report = nullptr;

  REQUIRE(supvkit_check_observable(sup1.get(), plant.get(), nullptr, 0, &holds, nullptr) ==
          SUPVKIT_OK);
  CHECK(holds == 1);

  const char* hide8[] = {"8"};
  REQUIRE(supvkit_check_relatively_observable(sup1.get(), c1.get(), plant.get(), hide8, 1,
                                              &holds, &report) == SUPVKIT_OK);
  CHECK(holds == 0);
  const auto r = nlohmann::json::parse(take(report));
  CHECK(r["holds"] == false);
  CHECK(r["s"].is_array());
  CHECK(r["s_prime"].is_array());

  const char* bogus[] = {"nope"};
  CHECK(supvkit_check_normal(sup1.get(), plant.get(), bogus, 1, &holds, nullptr) ==
        SUPVKIT_E_VALIDATION);
  CHECK(supvkit_check_normal(sup1.get(), plant.get(), nullptr, 1, &holds, nullptr) ==
        SUPVKIT_E_INVALID_ARGUMENT);
  CHECK(supvkit_check_relatively_observable(sup1.get(), model("transfer_line/m1").get(),
                                            plant.get(), nullptr, 0, &holds,
                                            nullptr) != SUPVKIT_OK);

  REQUIRE(supvkit_find_projections(sup1.get(), plant.get(), c1.get(), 0, &report) ==
          SUPVKIT_OK);
  const auto found = nlohmann::json::parse(take(report));
  REQUIRE(found["projections"].size() > 0);
  CHECK(found["projections"][0]["origin"] == "full");
}

TEST_CASE("harness through the C interface") {
  char* report = nullptr;
  size_t failures = 99;
  REQUIRE(supvkit_harness(0, 20, 6, 4, &report, &failures) == SUPVKIT_OK);
  CHECK(failures == 0);
  CHECK(take(report).find("seeds: 20") != std::string::npos);
}
