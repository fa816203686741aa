#include "fuzzdir/state_set.hpp"

#include <algorithm>
#include <bit>

namespace fuzzdir {

StateSet::StateSet(std::size_t universe, std::initializer_list<StateId> members) : StateSet(universe) {
  for (StateId s : members) insert(s);
}

StateSet StateSet::singleton(std::size_t universe, StateId s) {
  StateSet set(universe);
  set.insert(s);
  return set;
}

StateSet StateSet::full(std::size_t universe) {
  StateSet set(universe);
  for (std::size_t s = 0; s < universe; ++s) set.insert(static_cast<StateId>(s));
  return set;
}

bool StateSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t StateSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::intersects(const StateSet& other) const noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool StateSet::is_subset_of(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  out.reserve(size());
  for_each([&](StateId s) { out.push_back(s); });
  return out;
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::size_t StateSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ull;
  return h;
}

}  // namespace fuzzdir
