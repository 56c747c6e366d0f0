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

#include "reduction/reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <utility>

#include "core/error.hpp"
#include "core/ops.hpp"

namespace supvkit {
namespace {

// Tentative partition used while a merge attempt is in flight.
struct Partition {
  std::vector<std::size_t> cell;                 // state -> cell id
  std::vector<std::vector<StateId>> members;     // cell id -> states
};

bool try_merge(Partition& p, StateId first, StateId second,
               const Automaton& a, const ConsistencyRelation& rel) {
  std::deque<std::pair<StateId, StateId>> waiting{{first, second}};
  while (!waiting.empty()) {
    const auto [u, v] = waiting.front();
    waiting.pop_front();
    const std::size_t cu = p.cell[u];
    const std::size_t cv = p.cell[v];
    if (cu == cv) continue;
    for (auto x : p.members[cu]) {
      for (auto y : p.members[cv]) {
        if (!rel(x, y)) return false;
      }
    }
    for (auto y : p.members[cv]) p.cell[y] = cu;
    auto& merged = p.members[cu];
    merged.insert(merged.end(), p.members[cv].begin(), p.members[cv].end());
    p.members[cv].clear();

    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      StateId anchor = kNoState;
      for (auto x : merged) {
        const StateId t = a.next(x, e);
        if (t == kNoState) continue;
        if (anchor == kNoState) {
          anchor = t;
        } else if (p.cell[t] != p.cell[anchor]) {
          waiting.emplace_back(anchor, t);
        }
      }
    }
  }
  return true;
}

struct NormalPruning {
  Automaton automaton;
  std::vector<StateId> old_to_new;
};

NormalPruning prune_to_exercised(const Automaton& j, const Supervisor& sup) {
  const Automaton& s = sup.automaton;
  NormalPruning out{Automaton(j.alphabet()),
                    std::vector<StateId>(j.state_count(), kNoState)};
  if (j.empty() || s.empty()) return out;
  const auto s_to_j = event_map(s.alphabet(), j.alphabet());
  std::vector<bool> visited(j.state_count(), false);
  std::vector<bool> marked_reached(j.state_count(), false);
  std::vector<bool> used(j.state_count() * j.alphabet().size(), false);

  std::map<std::pair<StateId, StateId>, bool> seen;
  std::deque<std::pair<StateId, StateId>> queue{{*s.initial(), *j.initial()}};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    const auto [x, z] = queue.front();
    queue.pop_front();
    visited[z] = true;
    if (s.is_marked(x)) marked_reached[z] = true;
    for (EventId e = 0; e < s.alphabet().size(); ++e) {
      const StateId xn = s.next(x, e);
      if (xn == kNoState) continue;
      const StateId zn = j.next(z, s_to_j[e]);
      if (zn == kNoState) continue;
      used[static_cast<std::size_t>(z) * j.alphabet().size() + s_to_j[e]] = true;
      if (seen.emplace(std::make_pair(xn, zn), true).second) {
        queue.emplace_back(xn, zn);
      }
    }
  }

  Automaton pruned(j.alphabet());
  for (StateId z = 0; z < j.state_count(); ++z) {
    pruned.add_state(j.is_marked(z) && marked_reached[z]);
  }
  pruned.set_initial(*j.initial());
  for (StateId z = 0; z < j.state_count(); ++z) {
    for (EventId e = 0; e < j.alphabet().size(); ++e) {
      const StateId t = j.next(z, e);
      if (t != kNoState &&
          used[static_cast<std::size_t>(z) * j.alphabet().size() + e]) {
        pruned.add_transition(z, e, t);
      }
    }
  }
  const auto keep = trim_mask(pruned, visited);
  StateId next_id = 0;
  for (StateId z = 0; z < j.state_count(); ++z) {
    if (keep[z]) out.old_to_new[z] = next_id++;
  }
  out.automaton = restrict_and_trim(pruned, keep);
  return out;
}

}  // namespace

bool control_consistent(const StateFlags& a, const StateFlags& b) {
  if (a.enabled.intersects(b.disabled) || b.enabled.intersects(a.disabled)) {
    return false;
  }
  return a.marked_in_plant != b.marked_in_plant ||
         a.marked_in_sup == b.marked_in_sup;
}

ConsistencyRelation consistency_relation(const Supervisor& sup) {
  const std::size_t n = sup.automaton.state_count();
  ConsistencyRelation rel(n);
  for (StateId x = 0; x < n; ++x) {
    for (StateId y = x; y < n; ++y) {
      rel.set(x, y, control_consistent(sup.flags[x], sup.flags[y]));
    }
  }
  return rel;
}

namespace {

// Events that occur, and only as self-loops.
std::size_t self_loop_only_events(const Automaton& a) {
  std::size_t count = 0;
  for (EventId e = 0; e < a.alphabet().size(); ++e) {
    bool occurs = false;
    bool loops_only = true;
    for (StateId x = 0; x < a.state_count(); ++x) {
      const StateId t = a.next(x, e);
      if (t == kNoState) continue;
      occurs = true;
      loops_only = loops_only && t == x;
    }
    if (occurs && loops_only) ++count;
  }
  return count;
}

}  // namespace

std::vector<StateId> first_reached_order(const Automaton& a) {
  const std::size_t n = a.state_count();
  std::vector<StateId> by_rank;
  if (n == 0) return by_rank;
  {
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{*a.initial()};
    seen[*a.initial()] = true;
    while (!queue.empty()) {
      const StateId x = queue.front();
      queue.pop_front();
      by_rank.push_back(x);
      for (EventId e = 0; e < a.alphabet().size(); ++e) {
        const StateId t = a.next(x, e);
        if (t != kNoState && !seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    for (StateId x = 0; x < n; ++x) {
      if (!seen[x]) by_rank.push_back(x);
    }
  }
  return by_rank;
}

ControlCover build_congruence(const Supervisor& sup,
                              const ConsistencyRelation& rel) {
  return build_congruence(sup, rel, first_reached_order(sup.automaton));
}

ControlCover build_congruence(const Supervisor& sup,
                              const ConsistencyRelation& rel,
                              const std::vector<StateId>& by_rank) {
  const Automaton& a = sup.automaton;
  const std::size_t n = a.state_count();
  ControlCover cover;
  if (n == 0) return cover;
  if (by_rank.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "merge order must list every state");
  }

  Partition p;
  p.cell.resize(n);
  p.members.resize(n);
  for (StateId x = 0; x < n; ++x) {
    p.cell[x] = x;
    p.members[x] = {x};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const StateId x = by_rank[i];
      const StateId y = by_rank[j];
      if (p.cell[x] == p.cell[y]) continue;
      Partition trial = p;
      if (try_merge(trial, x, y, a, rel)) p = std::move(trial);
    }
  }

  // Number cells in the order the induced automaton reaches them.
  std::vector<std::size_t> order(n, SIZE_MAX);
  std::vector<std::size_t> sequence;
  std::deque<std::size_t> queue{p.cell[*a.initial()]};
  order[queue.front()] = 0;
  sequence.push_back(queue.front());
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      for (auto x : p.members[c]) {
        const StateId t = a.next(x, e);
        if (t == kNoState) continue;
        const std::size_t d = p.cell[t];
        if (order[d] == SIZE_MAX) {
          order[d] = sequence.size();
          sequence.push_back(d);
          queue.push_back(d);
        }
        break;
      }
    }
  }
  for (StateId x = 0; x < n; ++x) {
    const std::size_t c = p.cell[x];
    if (order[c] == SIZE_MAX) {
      order[c] = sequence.size();
      sequence.push_back(c);
    }
  }
  for (auto c : sequence) {
    auto cell = p.members[c];
    std::sort(cell.begin(), cell.end());
    cover.cells.push_back(std::move(cell));
  }
  cover.congruence = true;
  return cover;
}

Verdict check_cover(const Supervisor& sup, const ConsistencyRelation& rel,
                    const ControlCover& cover) {
  const Automaton& a = sup.automaton;
  Verdict v;
  std::vector<bool> covered(a.state_count(), false);
  for (std::size_t i = 0; i < cover.cells.size(); ++i) {
    const auto& cell = cover.cells[i];
    if (cell.empty()) {
      v.detail = "cell " + std::to_string(i) + " is empty";
      return v;
    }
    for (auto x : cell) {
      covered[x] = true;
      for (auto y : cell) {
        if (!rel(x, y)) {
          v.detail = "cell " + std::to_string(i) + " holds inconsistent states " +
                     std::to_string(x) + " and " + std::to_string(y);
          return v;
        }
      }
    }
    for (EventId e = 0; e < a.alphabet().size(); ++e) {
      std::vector<StateId> successors;
      for (auto x : cell) {
        if (const StateId t = a.next(x, e); t != kNoState) successors.push_back(t);
      }
      const bool closed = std::any_of(
          cover.cells.begin(), cover.cells.end(), [&](const auto& target) {
            return std::all_of(successors.begin(), successors.end(),
                               [&](StateId t) {
                                 return std::binary_search(target.begin(),
                                                           target.end(), t);
                               });
          });
      if (!closed) {
        v.detail = "cell " + std::to_string(i) + " has no single successor cell on " +
                   a.alphabet()[e].label;
        return v;
      }
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    v.detail = "cells do not cover every state";
    return v;
  }
  v.holds = true;
  return v;
}

Automaton induce(const Supervisor& sup, const ControlCover& cover) {
  const Automaton& a = sup.automaton;
  Automaton j(a.alphabet());
  if (a.empty()) return j;
  std::vector<StateId> cell_of(a.state_count(), kNoState);
  for (std::size_t i = 0; i < cover.cells.size(); ++i) {
    for (auto x : cover.cells[i]) {
      if (cell_of[x] != kNoState) {
        throw Error(ErrorCode::kNonCongruenceCover,
                    "state " + std::to_string(x) + " lies in two cells");
      }
      cell_of[x] = static_cast<StateId>(i);
    }
  }
  if (std::find(cell_of.begin(), cell_of.end(), kNoState) != cell_of.end()) {
    throw Error(ErrorCode::kNonCongruenceCover, "cells do not cover every state");
  }
  for (const auto& cell : cover.cells) {
    const bool marked = std::any_of(cell.begin(), cell.end(),
                                    [&](StateId x) { return a.is_marked(x); });
    j.add_state(marked);
  }
  j.set_initial(cell_of[*a.initial()]);
  for (std::size_t i = 0; i < cover.cells.size(); ++i) {
    for (auto x : cover.cells[i]) {
      for (EventId e = 0; e < a.alphabet().size(); ++e) {
        const StateId t = a.next(x, e);
        if (t == kNoState) continue;
        if (const StateId cur = j.next(static_cast<StateId>(i), e);
            cur != kNoState && cur != cell_of[t]) {
          throw Error(ErrorCode::kInvalidArgument,
                      "cover is not closed under event " + a.alphabet()[e].label);
        }
        j.add_transition(static_cast<StateId>(i), e, cell_of[t]);
      }
    }
  }
  return j;
}

Automaton enforce_normality(const Automaton& j, const Supervisor& sup) {
  return prune_to_exercised(j, sup).automaton;
}

NormalityVerdict check_rsup_normality(const Automaton& r,
                                      const Supervisor& sup) {
  const Automaton& s = sup.automaton;
  require_same_events(r.alphabet(), s.alphabet());
  NormalityVerdict v;
  if (r.empty()) {
    v.holds = true;
    return v;
  }
  if (s.empty()) {
    v.clause = 1;
    v.state = *r.initial();
    return v;
  }
  const auto s_to_r = event_map(s.alphabet(), r.alphabet());
  const std::size_t m = r.alphabet().size();
  std::vector<bool> visited(r.state_count(), false);
  std::vector<bool> marked_reached(r.state_count(), false);
  std::vector<bool> used(r.state_count() * m, false);
  std::map<std::pair<StateId, StateId>, bool> seen;
  std::deque<std::pair<StateId, StateId>> queue{{*s.initial(), *r.initial()}};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    const auto [x, z] = queue.front();
    queue.pop_front();
    visited[z] = true;
    if (s.is_marked(x)) marked_reached[z] = true;
    for (EventId e = 0; e < s.alphabet().size(); ++e) {
      const StateId xn = s.next(x, e);
      const StateId zn = r.next(z, s_to_r[e]);
      if (xn == kNoState || zn == kNoState) continue;
      used[static_cast<std::size_t>(z) * m + s_to_r[e]] = true;
      if (seen.emplace(std::make_pair(xn, zn), true).second) {
        queue.emplace_back(xn, zn);
      }
    }
  }
  for (StateId z = 0; z < r.state_count(); ++z) {
    if (!visited[z]) {
      v.clause = 1;
      v.state = z;
      return v;
    }
  }
  for (StateId z = 0; z < r.state_count(); ++z) {
    for (EventId e = 0; e < m; ++e) {
      if (r.defined(z, e) && !used[static_cast<std::size_t>(z) * m + e]) {
        v.clause = 2;
        v.state = z;
        v.event = e;
        return v;
      }
    }
  }
  for (StateId z = 0; z < r.state_count(); ++z) {
    if (r.is_marked(z) && !marked_reached[z]) {
      v.clause = 3;
      v.state = z;
      return v;
    }
  }
  v.holds = true;
  return v;
}

ReducedSupervisor supreduce(const Supervisor& sup, std::size_t restarts) {
  ReducedSupervisor out;
  out.automaton = Automaton(sup.automaton.alphabet());
  out.cell_of.assign(sup.automaton.state_count(), kNoState);
  if (sup.empty()) return out;
  const auto rel = consistency_relation(sup);

  auto reduce = [&](const std::vector<StateId>& order) {
    ReducedSupervisor r;
    r.cover = build_congruence(sup, rel, order);
    auto pruned = prune_to_exercised(induce(sup, r.cover), sup);
    r.automaton = std::move(pruned.automaton);
    r.cell_of.assign(sup.automaton.state_count(), kNoState);
    for (std::size_t i = 0; i < r.cover.cells.size(); ++i) {
      for (auto x : r.cover.cells[i]) r.cell_of[x] = pruned.old_to_new[i];
    }
    return r;
  };
  auto score = [](const Automaton& r) {
    return std::make_pair(r.state_count(),
                          r.alphabet().size() - self_loop_only_events(r));
  };

  std::vector<StateId> order = first_reached_order(sup.automaton);
  out = reduce(order);
  auto best = score(out.automaton);
  std::mt19937_64 rng(0x5eed);
  for (std::size_t k = 0; k < restarts && order.size() > 2; ++k) {
    // Fisher-Yates with a plain modulo keeps the sequence identical across
    // standard libraries.
    for (std::size_t i = order.size() - 1; i > 0; --i) {
      std::swap(order[i], order[rng() % (i + 1)]);
    }
    ReducedSupervisor r = reduce(order);
    const auto s = score(r.automaton);
    if (s < best) {
      best = s;
      out = std::move(r);
    }
  }
  return out;
}

}  // namespace supvkit
