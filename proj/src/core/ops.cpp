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

#include "core/ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

#include "core/error.hpp"

namespace supvkit {
namespace {

// Word leading to node `n` in a BFS forest given by (parent, event) links.
Word trace(const std::vector<std::pair<std::size_t, EventId>>& parents,
           std::size_t n) {
  Word w;
  while (parents[n].first != n) {
    w.push_back(parents[n].second);
    n = parents[n].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// Copies the states flagged in `keep`, preserving their relative order.
Automaton induced_subautomaton(const Automaton& a,
                               const std::vector<bool>& keep) {
  Automaton out(a.alphabet());
  const auto initial = a.initial();
  if (!initial || !keep[*initial]) return out;
  std::vector<StateId> renum(a.state_count(), kNoState);
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (keep[s]) renum[s] = out.add_state(a.is_marked(s));
  }
  out.set_initial(renum[*initial]);
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (!keep[s]) continue;
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId t = a.next(s, e);
      if (t != kNoState && keep[t]) out.add_transition(renum[s], e, renum[t]);
    }
  }
  return out;
}

std::vector<bool> reachable_within(const Automaton& a,
                                   const std::vector<bool>& allowed) {
  std::vector<bool> seen(a.state_count(), false);
  const auto initial = a.initial();
  if (!initial || !allowed[*initial]) return seen;
  std::deque<StateId> queue{*initial};
  seen[*initial] = true;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId t = a.next(s, e);
      if (t != kNoState && allowed[t] && !seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable_within(const Automaton& a,
                                     const std::vector<bool>& allowed) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    if (!allowed[s]) continue;
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId t = a.next(s, e);
      if (t != kNoState && allowed[t]) preds[t].push_back(s);
    }
  }
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue;
  for (StateId s = 0; s < n; ++s) {
    if (allowed[s] && a.is_marked(s)) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const StateId t = queue.front();
    queue.pop_front();
    for (auto s : preds[t]) {
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  return seen;
}

// Pair traversal shared by language_equal and contained_in. `visit` returns
// a witness suffix decision for a pair: nullopt to continue, otherwise
// {extra event or kNoEvent} appended to the path.
template <typename Visit>
std::optional<Word> pair_search(const Automaton& a, const Automaton& b,
                                const std::vector<EventId>& a_to_b,
                                Visit visit) {
  std::map<std::pair<StateId, StateId>, std::size_t> index;
  std::vector<std::pair<StateId, StateId>> nodes;
  std::vector<std::pair<std::size_t, EventId>> parents;
  const auto start = std::make_pair(*a.initial(), *b.initial());
  index.emplace(start, 0);
  nodes.push_back(start);
  parents.emplace_back(0, kNoEvent);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [x, y] = nodes[i];
    if (auto extra = visit(x, y)) {
      Word w = trace(parents, i);
      if (*extra != kNoEvent) w.push_back(*extra);
      return w;
    }
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId xn = a.next(x, e);
      if (xn == kNoState) continue;
      const StateId yn = b.next(y, a_to_b[e]);
      if (yn == kNoState) continue;
      const auto key = std::make_pair(xn, yn);
      if (index.emplace(key, nodes.size()).second) {
        nodes.push_back(key);
        parents.emplace_back(i, e);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Automaton reachable(const Automaton& a) {
  return induced_subautomaton(
      a, reachable_within(a, std::vector<bool>(a.state_count(), true)));
}

std::vector<bool> trim_mask(const Automaton& a,
                            const std::vector<bool>& allowed) {
  const auto reach = reachable_within(a, allowed);
  const auto coreach = coreachable_within(a, reach);
  std::vector<bool> both(a.state_count());
  for (StateId s = 0; s < a.state_count(); ++s) both[s] = reach[s] && coreach[s];
  return both;
}

Automaton restrict_and_trim(const Automaton& a, const std::vector<bool>& keep) {
  return induced_subautomaton(a, trim_mask(a, keep));
}

Automaton reachable_trim(const Automaton& a) {
  return restrict_and_trim(a, std::vector<bool>(a.state_count(), true));
}

Automaton closure(const Automaton& a) {
  Automaton out = a;
  for (StateId s = 0; s < out.state_count(); ++s) out.set_marked(s, true);
  return out;
}

Automaton with_alphabet(const Automaton& a, const Alphabet& alphabet) {
  if (!a.alphabet().same_events(alphabet)) {
    throw Error(ErrorCode::kAlphabetMismatch, "alphabets differ");
  }
  if (a.alphabet() == alphabet) return a;
  const auto map = event_map(a.alphabet(), alphabet);
  Automaton out(alphabet);
  for (StateId s = 0; s < a.state_count(); ++s) out.add_state(a.is_marked(s));
  if (auto i = a.initial()) out.set_initial(*i);
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId t = a.next(s, e);
      if (t != kNoState) out.add_transition(s, map[e], t);
    }
  }
  return out;
}

Automaton sync(const Automaton& a, const Automaton& b) {
  std::vector<Event> events = a.alphabet().events();
  for (const auto& ev : b.alphabet().events()) {
    if (auto e = a.alphabet().find(ev.label)) {
      if (a.alphabet()[*e].controllable != ev.controllable) {
        throw Error(ErrorCode::kConflictingAttributes,
                    "event '" + ev.label + "' has conflicting controllability");
      }
    } else {
      events.push_back(ev);
    }
  }
  Alphabet alphabet(std::move(events));
  Automaton out(alphabet);
  if (a.empty() || b.empty()) return out;

  const auto to_a = event_map(alphabet, a.alphabet());
  const auto to_b = event_map(alphabet, b.alphabet());
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::vector<std::pair<StateId, StateId>> nodes;
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = index.emplace(std::make_pair(x, y), 0);
    if (fresh) {
      it->second = out.add_state(a.is_marked(x) && b.is_marked(y));
      nodes.emplace_back(x, y);
    }
    return it->second;
  };
  out.set_initial(intern(*a.initial(), *b.initial()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [x, y] = nodes[i];
    for (EventId e = 0; e < alphabet.size(); ++e) {
      StateId xn = x;
      StateId yn = y;
      if (to_a[e] != kNoEvent) {
        xn = a.next(x, to_a[e]);
        if (xn == kNoState) continue;
      }
      if (to_b[e] != kNoEvent) {
        yn = b.next(y, to_b[e]);
        if (yn == kNoState) continue;
      }
      const StateId t = intern(xn, yn);
      out.add_transition(static_cast<StateId>(i), e, t);
    }
  }
  return out;
}

Product meet_with_provenance(const Automaton& a, const Automaton& b) {
  require_same_events(a.alphabet(), b.alphabet());
  Product p{Automaton(a.alphabet()), {}};
  if (a.empty() || b.empty()) return p;
  const auto a_to_b = event_map(a.alphabet(), b.alphabet());
  std::map<std::pair<StateId, StateId>, StateId> index;
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = index.emplace(std::make_pair(x, y), 0);
    if (fresh) {
      it->second = p.automaton.add_state(a.is_marked(x) && b.is_marked(y));
      p.provenance.emplace_back(x, y);
    }
    return it->second;
  };
  p.automaton.set_initial(intern(*a.initial(), *b.initial()));
  for (std::size_t i = 0; i < p.provenance.size(); ++i) {
    const auto [x, y] = p.provenance[i];
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId xn = a.next(x, e);
      if (xn == kNoState) continue;
      const StateId yn = b.next(y, a_to_b[e]);
      if (yn == kNoState) continue;
      p.automaton.add_transition(static_cast<StateId>(i), e, intern(xn, yn));
    }
  }
  return p;
}

Automaton meet(const Automaton& a, const Automaton& b) {
  return meet_with_provenance(a, b).automaton;
}

IsomorphismResult des_isomorphic(const Automaton& a, const Automaton& b) {
  IsomorphismResult r;
  if (!a.alphabet().same_events(b.alphabet())) return r;
  if (a.empty() || b.empty()) {
    r.isomorphic = a.empty() && b.empty();
    if (!r.isomorphic) r.witness = Word{};
    return r;
  }
  const auto a_to_b = event_map(a.alphabet(), b.alphabet());
  std::vector<StateId> theta(a.state_count(), kNoState);
  std::vector<StateId> inverse(b.state_count(), kNoState);
  std::vector<StateId> order;
  std::vector<std::pair<std::size_t, EventId>> parents;

  theta[*a.initial()] = *b.initial();
  inverse[*b.initial()] = *a.initial();
  order.push_back(*a.initial());
  parents.emplace_back(0, kNoEvent);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId x = order[i];
    const StateId y = theta[x];
    auto fail = [&](std::optional<EventId> extra) {
      r.witness = trace(parents, i);
      if (extra) r.witness->push_back(*extra);
      return r;
    };
    if (a.is_marked(x) != b.is_marked(y)) return fail(std::nullopt);
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      const StateId xn = a.next(x, e);
      const StateId yn = b.next(y, a_to_b[e]);
      if ((xn == kNoState) != (yn == kNoState)) return fail(e);
      if (xn == kNoState) continue;
      if (theta[xn] == kNoState && inverse[yn] == kNoState) {
        theta[xn] = yn;
        inverse[yn] = xn;
        order.push_back(xn);
        parents.emplace_back(i, e);
      } else if (theta[xn] != yn || inverse[yn] != xn) {
        return fail(e);
      }
    }
  }
  // theta covers the reachable parts; a bijection needs nothing else.
  if (order.size() != a.state_count() || order.size() != b.state_count()) {
    return r;
  }
  r.isomorphic = true;
  r.theta = std::move(theta);
  return r;
}

LanguageComparison language_equal(const Automaton& a, const Automaton& b) {
  require_same_events(a.alphabet(), b.alphabet());
  LanguageComparison r;
  if (a.empty() || b.empty()) {
    r.equal = a.empty() && b.empty();
    if (!r.equal) r.witness = Word{};
    return r;
  }
  const auto a_to_b = event_map(a.alphabet(), b.alphabet());
  r.witness = pair_search(
      a, b, a_to_b, [&](StateId x, StateId y) -> std::optional<EventId> {
        if (a.is_marked(x) != b.is_marked(y)) return kNoEvent;
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
          if (a.defined(x, e) != b.defined(y, a_to_b[e])) return e;
        }
        return std::nullopt;
      });
  r.equal = !r.witness.has_value();
  return r;
}

ContainmentResult contained_in(const Automaton& a, const Automaton& b,
                               bool check_marked) {
  require_same_events(a.alphabet(), b.alphabet());
  ContainmentResult r;
  if (a.empty()) {
    r.contained = true;
    return r;
  }
  if (b.empty()) {
    r.witness = Word{};
    return r;
  }
  const auto a_to_b = event_map(a.alphabet(), b.alphabet());
  r.witness = pair_search(
      a, b, a_to_b, [&](StateId x, StateId y) -> std::optional<EventId> {
        if (check_marked && a.is_marked(x) && !b.is_marked(y)) {
          r.marked_violation = true;
          return kNoEvent;
        }
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
          if (a.defined(x, e) && !b.defined(y, a_to_b[e])) return e;
        }
        return std::nullopt;
      });
  r.contained = !r.witness.has_value();
  return r;
}

std::size_t search_budget(std::size_t fallback) {
  if (const char* env = std::getenv("SUPVKIT_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("SUPVKIT_BUDGET is not a number: ") + env);
    }
  }
  return fallback;
}

std::vector<StringMembership> enumerate_strings(const Automaton& a,
                                                std::size_t max_len,
                                                std::size_t budget) {
  const std::size_t m = a.alphabet().size();
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t k = 0; k <= max_len; ++k) {
    total += layer;
    if (total > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "enumeration of " + std::to_string(max_len) +
                      "-bounded strings exceeds budget " +
                      std::to_string(budget));
    }
    if (m == 0) break;
    layer *= m;
  }
  std::vector<StringMembership> out;
  out.reserve(total);
  Word w;
  for (std::size_t k = 0; k <= max_len; ++k) {
    w.assign(k, 0);
    while (true) {
      const StateId s = a.run(w);
      out.push_back({w, s != kNoState, s != kNoState && a.is_marked(s)});
      std::size_t pos = k;
      while (pos > 0 && w[pos - 1] + 1 == m) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
    if (m == 0) break;
  }
  return out;
}

}  // namespace supvkit
