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

#ifndef SUPVKIT_CORE_EVENT_SET_HPP_
#define SUPVKIT_CORE_EVENT_SET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace supvkit {

using EventId = std::uint32_t;

// Dense bitset over event indices of one alphabet.
class EventSet {
 public:
  EventSet() = default;
  explicit EventSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(EventId e) { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(EventId e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }
  bool contains(EventId e) const {
    return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }

  bool intersects(const EventSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const { return size() == 0; }

  std::vector<EventId> to_vector() const {
    std::vector<EventId> out;
    for (EventId e = 0; e < universe_; ++e) {
      if (contains(e)) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const EventSet&, const EventSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace supvkit

#endif  // SUPVKIT_CORE_EVENT_SET_HPP_
