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

// Command-line front end over the C API.
//
// Exit codes: 0 success or property holds, 1 property fails (report on
// stdout), 2 usage, validation or any other error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supvkit/supvkit.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Failed {
  std::string message;
};

void check(int status, const std::string& what) {
  if (status != SUPVKIT_OK) {
    throw Failed{what + ": " + supvkit_status_name(status) + ": " +
                 supvkit_last_error()};
  }
}

struct AutomatonDeleter {
  void operator()(supvkit_automaton* a) const { supvkit_automaton_free(a); }
};
using Handle = std::unique_ptr<supvkit_automaton, AutomatonDeleter>;

struct StringDeleter {
  void operator()(char* s) const { supvkit_string_free(s); }
};
using Text = std::unique_ptr<char, StringDeleter>;

Handle load(const std::string& path) {
  supvkit_automaton* a = nullptr;
  check(supvkit_automaton_load(path.c_str(), &a), "loading " + path);
  return Handle(a);
}

template <typename F>
Handle make(F&& call, const std::string& what) {
  supvkit_automaton* a = nullptr;
  check(call(&a), what);
  return Handle(a);
}

std::vector<std::string> split(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> labels(const supvkit_automaton* a) {
  std::vector<std::string> out;
  for (size_t i = 0; i < supvkit_automaton_event_count(a); ++i) {
    const char* l = nullptr;
    check(supvkit_automaton_event_label(a, i, &l), "event label");
    out.emplace_back(l);
  }
  return out;
}

struct MaskOptions {
  std::string unobservable;
  std::string observable;
  bool has_unobservable = false;
  bool has_observable = false;

  void attach(CLI::App* cmd) {
    auto* u = cmd->add_option("--unobservable", unobservable,
                              "unobservable events, comma-separated");
    auto* o = cmd->add_option("--observable", observable,
                              "observable events, comma-separated");
    u->excludes(o);
    u->each([this](const std::string&) { has_unobservable = true; });
    o->each([this](const std::string&) { has_observable = true; });
  }

  // Unobservable labels over the alphabet of `reference`.
  std::vector<std::string> hidden(const supvkit_automaton* reference) const {
    if (has_unobservable) return split(unobservable);
    if (!has_observable) return {};
    const auto seen = split(observable);
    const std::set<std::string> keep(seen.begin(), seen.end());
    const auto all = labels(reference);
    for (const auto& l : keep) {
      bool known = false;
      for (const auto& a : all) known = known || a == l;
      if (!known) throw Failed{"unknown observable event " + l};
    }
    std::vector<std::string> out;
    for (const auto& l : all) {
      if (!keep.count(l)) out.push_back(l);
    }
    return out;
  }
};

struct Pointers {
  explicit Pointers(const std::vector<std::string>& v) {
    for (const auto& s : v) ptrs.push_back(s.c_str());
  }
  const char* const* data() const { return ptrs.empty() ? nullptr : ptrs.data(); }
  size_t size() const { return ptrs.size(); }
  std::vector<const char*> ptrs;
};

void write_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  FILE* f = std::fopen(out.c_str(), "wb");
  if (f == nullptr) throw Failed{"cannot write " + out};
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) throw Failed{"cannot write " + out};
}

void write_automaton(const supvkit_automaton* a, const std::string& out) {
  if (!out.empty()) {
    check(supvkit_automaton_save(a, out.c_str()), "saving " + out);
    return;
  }
  char* text = nullptr;
  check(supvkit_automaton_to_json(a, &text), "serializing");
  write_text(Text(text).get(), "");
}

int report(int status, int holds, char* text, const std::string& what) {
  Text owned(text);
  check(status, what);
  if (owned) std::cout << owned.get() << "\n";
  return holds ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supvkit: supervisory control of discrete-event systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", supvkit_version());

  std::string out;
  std::vector<std::string> files;
  MaskOptions mask;
  int result = kHolds;
  std::function<void()> action;

  auto with_files = [&](CLI::App* cmd, const std::string& names, size_t n) {
    cmd->add_option("files", files, names)->required()->expected(static_cast<int>(n));
    return cmd;
  };
  auto with_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out, "output file (default: stdout)");
    return cmd;
  };
  auto binary = [&](const char* name, const char* help,
                    int (*op)(const supvkit_automaton*, const supvkit_automaton*,
                              supvkit_automaton**)) {
    auto* cmd = with_output(with_files(app.add_subcommand(name, help), "A B", 2));
    cmd->callback([&, name, op] {
      action = [&, name, op] {
        auto a = load(files[0]);
        auto b = load(files[1]);
        auto r = make([&](auto** o) { return op(a.get(), b.get(), o); }, name);
        write_automaton(r.get(), out);
      };
    });
  };

  binary("sync", "synchronous product", supvkit_sync);
  binary("meet", "product over a shared alphabet", supvkit_meet);

  auto* trim = with_output(with_files(app.add_subcommand("trim", "reachable and coreachable part"), "A", 1));
  trim->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      auto r = make([&](auto** o) { return supvkit_trim(a.get(), o); }, "trim");
      write_automaton(r.get(), out);
    };
  });

  auto* supcon = with_output(with_files(
      app.add_subcommand("supcon", "supremal controllable supervisor; lifts the spec"),
      "PLANT SPEC", 2));
  supcon->callback([&] {
    action = [&] {
      auto g = load(files[0]);
      auto e = load(files[1]);
      auto lifted = make([&](auto** o) { return supvkit_lift(e.get(), g.get(), o); }, "lift");
      auto r = make([&](auto** o) { return supvkit_supcon(g.get(), lifted.get(), o); },
                    "supcon");
      write_automaton(r.get(), out);
    };
  });

  std::string ambient_policy = "current";
  auto* robs = with_output(with_files(
      app.add_subcommand("supconrobs",
                         "supremal controllable, relatively observable supervisor"),
      "PLANT SPEC", 2));
  mask.attach(robs);
  robs->add_option("--ambient", ambient_policy,
                   "ambient language: current candidate or the first supcon result")
      ->check(CLI::IsMember({"current", "fixed"}));
  robs->callback([&] {
    action = [&] {
      auto g = load(files[0]);
      auto e = load(files[1]);
      auto lifted = make([&](auto** o) { return supvkit_lift(e.get(), g.get(), o); }, "lift");
      const auto hidden = mask.hidden(g.get());
      const Pointers p(hidden);
      const int policy = ambient_policy == "fixed" ? SUPVKIT_AMBIENT_FIXED
                                                   : SUPVKIT_AMBIENT_CURRENT;
      auto r = make(
          [&](auto** o) {
            return supvkit_supconrobs(g.get(), lifted.get(), p.data(), p.size(),
                                      policy, o);
          },
          "supconrobs");
      write_automaton(r.get(), out);
    };
  });

  auto* reduce = with_output(
      with_files(app.add_subcommand("supreduce", "reduced supervisor"), "PLANT SUP", 2));
  reduce->callback([&] {
    action = [&] {
      auto g = load(files[0]);
      auto s = load(files[1]);
      auto r = make([&](auto** o) { return supvkit_supreduce(g.get(), s.get(), o); },
                    "supreduce");
      write_automaton(r.get(), out);
    };
  });

  auto* project = with_output(
      with_files(app.add_subcommand("project", "natural projection"), "A", 1));
  mask.attach(project);
  project->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      const auto hidden = mask.hidden(a.get());
      const Pointers p(hidden);
      auto r = make(
          [&](auto** o) { return supvkit_project(a.get(), p.data(), p.size(), o); },
          "project");
      write_automaton(r.get(), out);
    };
  });

  auto* obs = with_files(app.add_subcommand("check-obs", "observability"), "SUP PLANT", 2);
  mask.attach(obs);
  obs->callback([&] {
    action = [&] {
      auto s = load(files[0]);
      auto g = load(files[1]);
      const auto hidden = mask.hidden(g.get());
      const Pointers p(hidden);
      int holds = 0;
      char* text = nullptr;
      const int st = supvkit_check_observable(s.get(), g.get(), p.data(), p.size(),
                                              &holds, &text);
      result = report(st, holds, text, "check-obs");
    };
  });

  auto* cro = with_files(app.add_subcommand("check-robs", "relative observability"),
                         "SUP AMBIENT PLANT", 3);
  mask.attach(cro);
  cro->callback([&] {
    action = [&] {
      auto s = load(files[0]);
      auto c = load(files[1]);
      auto g = load(files[2]);
      const auto hidden = mask.hidden(g.get());
      const Pointers p(hidden);
      int holds = 0;
      char* text = nullptr;
      const int st = supvkit_check_relatively_observable(
          s.get(), c.get(), g.get(), p.data(), p.size(), &holds, &text);
      result = report(st, holds, text, "check-robs");
    };
  });

  auto* norm = with_files(app.add_subcommand("check-normal", "normality"), "SUP PLANT", 2);
  mask.attach(norm);
  norm->callback([&] {
    action = [&] {
      auto s = load(files[0]);
      auto g = load(files[1]);
      const auto hidden = mask.hidden(g.get());
      const Pointers p(hidden);
      int holds = 0;
      char* text = nullptr;
      const int st =
          supvkit_check_normal(s.get(), g.get(), p.data(), p.size(), &holds, &text);
      result = report(st, holds, text, "check-normal");
    };
  });

  auto* ceq = with_files(
      app.add_subcommand("check-control-equivalent",
                         "same controlled behavior against the plant"),
      "CANDIDATE SUP PLANT", 3);
  ceq->callback([&] {
    action = [&] {
      auto r = load(files[0]);
      auto s = load(files[1]);
      auto g = load(files[2]);
      int holds = 0;
      char* text = nullptr;
      const int st = supvkit_check_control_equivalent(r.get(), s.get(), g.get(),
                                                      &holds, &text);
      result = report(st, holds, text, "check-control-equivalent");
    };
  });

  auto* crn = with_files(
      app.add_subcommand("check-rsup-normality",
                         "reduced supervisor is normal w.r.t. the supervisor"),
      "RSUP SUP PLANT", 3);
  crn->callback([&] {
    action = [&] {
      auto r = load(files[0]);
      auto s = load(files[1]);
      auto g = load(files[2]);
      int holds = 0;
      char* text = nullptr;
      const int st =
          supvkit_check_rsup_normality(r.get(), s.get(), g.get(), &holds, &text);
      result = report(st, holds, text, "check-rsup-normality");
    };
  });

  auto* iso = with_files(app.add_subcommand("iso", "isomorphism"), "A B", 2);
  iso->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      auto b = load(files[1]);
      int holds = 0;
      char* text = nullptr;
      const int st = supvkit_isomorphic(a.get(), b.get(), &holds, &text);
      result = report(st, holds, text, "iso");
    };
  });

  auto* leq = with_files(app.add_subcommand("language-equal",
                                            "closed and marked language equality"),
                         "A B", 2);
  leq->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      auto b = load(files[1]);
      int holds = 0;
      char* text = nullptr;
      const int st = supvkit_language_equal(a.get(), b.get(), &holds, &text);
      result = report(st, holds, text, "language-equal");
    };
  });

  std::string word;
  bool marked = false;
  auto* acc = with_files(app.add_subcommand("accepts", "string membership"), "A", 1);
  acc->add_option("--word", word, "events, comma-separated (empty: the empty string)");
  acc->add_flag("--marked", marked, "test the marked language instead of the closed one");
  acc->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      const auto w = split(word);
      const Pointers p(w);
      int in_closed = 0;
      int in_marked = 0;
      check(supvkit_automaton_accepts(a.get(), p.data(), p.size(), &in_closed,
                                      &in_marked),
            "accepts");
      const bool holds = marked ? in_marked : in_closed;
      std::cout << "{\"closed\": " << (in_closed ? "true" : "false")
                << ", \"marked\": " << (in_marked ? "true" : "false") << "}\n";
      result = holds ? kHolds : kFails;
    };
  });

  auto* loops = with_files(app.add_subcommand("classify-selfloops",
                                              "per-event self-loop classes"),
                           "A", 1);
  loops->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      char* text = nullptr;
      check(supvkit_classify_selfloops(a.get(), &text), "classify-selfloops");
      std::cout << Text(text).get() << "\n";
    };
  });

  bool exhaustive = false;
  auto* fp = with_files(app.add_subcommand("find-projections",
                                           "candidate observation restrictions"),
                        "SUP PLANT AMBIENT", 3);
  fp->add_flag("--exhaustive", exhaustive, "also try subsets of self-looped events");
  fp->callback([&] {
    action = [&] {
      auto s = load(files[0]);
      auto g = load(files[1]);
      auto c = load(files[2]);
      char* text = nullptr;
      check(supvkit_find_projections(s.get(), g.get(), c.get(), exhaustive ? 1 : 0,
                                     &text),
            "find-projections");
      std::cout << Text(text).get() << "\n";
    };
  });

  auto* dot = with_output(with_files(app.add_subcommand("dot", "Graphviz export"), "A", 1));
  dot->callback([&] {
    action = [&] {
      auto a = load(files[0]);
      char* text = nullptr;
      check(supvkit_automaton_to_dot(a.get(), &text), "dot");
      write_text(Text(text).get(), out);
    };
  });

  uint64_t first_seed = 0;
  size_t seeds = 500;
  size_t max_states = 6;
  size_t max_events = 4;
  auto* harness = app.add_subcommand("harness", "randomized property checks");
  harness->add_option("--first-seed", first_seed, "first seed");
  harness->add_option("--seeds", seeds, "number of seeds");
  harness->add_option("--max-states", max_states, "plant state bound")
      ->check(CLI::PositiveNumber);
  harness->add_option("--max-events", max_events, "event bound")
      ->check(CLI::Range(1, 26));
  harness->callback([&] {
    action = [&] {
      char* text = nullptr;
      size_t failures = 0;
      check(supvkit_harness(first_seed, seeds, max_states, max_events, &text,
                            &failures),
            "harness");
      std::cout << Text(text).get();
      result = failures == 0 ? kHolds : kFails;
    };
  });

  std::string out_dir;
  auto* models = app.add_subcommand("models", "write the bundled models");
  models->add_option("--out", out_dir, "output directory")->required();
  models->callback([&] {
    action = [&] {
      char* text = nullptr;
      check(supvkit_model_names(&text), "models");
      std::stringstream names(Text(text).get());
      std::string name;
      while (std::getline(names, name)) {
        if (name.empty()) continue;
        auto m = make([&](auto** o) { return supvkit_model(name.c_str(), o); }, name);
        const auto path = std::filesystem::path(out_dir) / (name + ".json");
        std::filesystem::create_directories(path.parent_path());
        check(supvkit_automaton_save(m.get(), path.string().c_str()),
              "saving " + path.string());
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    action();
  } catch (const Failed& f) {
    std::cerr << "supvkit: " << f.message << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "supvkit: " << e.what() << "\n";
    return kError;
  }
  return result;
}
