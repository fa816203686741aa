#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fuzzdir {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// A crisp subset of the states {0, ..., universe-1}, stored as a bitset.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  StateSet(std::size_t universe, std::initializer_list<StateId> members);

  static StateSet singleton(std::size_t universe, StateId s);
  static StateSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  void insert(StateId s) { words_[s / 64] |= std::uint64_t{1} << (s % 64); }
  void erase(StateId s) { words_[s / 64] &= ~(std::uint64_t{1} << (s % 64)); }
  bool contains(StateId s) const noexcept {
    return s < universe_ && ((words_[s / 64] >> (s % 64)) & 1u) != 0;
  }

  bool empty() const noexcept;
  std::size_t size() const noexcept;
  bool intersects(const StateSet& other) const noexcept;
  bool is_subset_of(const StateSet& other) const noexcept;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

  /// Members in increasing order.
  std::vector<StateId> members() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        fn(static_cast<StateId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
      }
    }
  }

  friend bool operator==(const StateSet&, const StateSet&) = default;
  /// Orders by universe, then by the sorted member list.
  friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b);

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fuzzdir

template <>
struct std::hash<fuzzdir::StateSet> {
  std::size_t operator()(const fuzzdir::StateSet& s) const noexcept { return s.hash(); }
};
