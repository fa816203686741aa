#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/errors.hpp"

namespace fuzzdir::detail {

/// Breadth-first construction of the reachable part of a deterministic
/// machine over `input`'s alphabet.
template <class Key, class Hash, class Step, class IsFinal, class Name>
Dfr explore(const Signature& input, Key initial, Step step, IsFinal is_final, Name name,
            std::size_t cap) {
  const std::size_t m = input.letter_count();
  std::vector<Key> keys;
  std::unordered_map<Key, StateId, Hash> index;
  std::vector<StateId> delta;
  keys.push_back(initial);
  index.emplace(std::move(initial), 0);
  if (cap < 1) throw StateCapExceeded(cap);
  for (std::size_t cur = 0; cur < keys.size(); ++cur) {
    for (LetterId x = 0; x < m; ++x) {
      Key next = step(keys[cur], x);
      auto it = index.find(next);
      if (it == index.end()) {
        if (keys.size() >= cap) throw StateCapExceeded(cap);
        const auto id = static_cast<StateId>(keys.size());
        it = index.emplace(next, id).first;
        keys.push_back(std::move(next));
      }
      delta.push_back(it->second);
    }
  }
  std::vector<std::string> names;
  names.reserve(keys.size());
  StateSet finals(keys.size());
  for (std::size_t s = 0; s < keys.size(); ++s) {
    names.push_back(name(keys[s]));
    if (is_final(keys[s])) finals.insert(static_cast<StateId>(s));
  }
  Dfa dfa(Signature(std::move(names), input.alphabet()), std::move(delta));
  return Dfr(std::move(dfa), 0, std::move(finals));
}

}  // namespace fuzzdir::detail
