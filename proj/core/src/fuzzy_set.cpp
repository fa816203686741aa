#include "fuzzdir/fuzzy_set.hpp"

#include <algorithm>

#include "fuzzdir/errors.hpp"

namespace fuzzdir {

FuzzyStateSet::FuzzyStateSet(std::size_t ground, std::vector<Entry> entries) : ground_(ground) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [s, d] : entries) {
    if (s >= ground) throw InputError("fuzzy set member outside ground set");
    if (!entries_.empty() && entries_.back().first == s) {
      entries_.back().second = d;
    } else {
      entries_.emplace_back(s, d);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second.is_zero(); });
}

FuzzyStateSet FuzzyStateSet::from_dense(std::span<const Degree> degrees) {
  FuzzyStateSet set(degrees.size());
  for (std::size_t s = 0; s < degrees.size(); ++s) {
    if (degrees[s].is_positive()) set.entries_.emplace_back(static_cast<StateId>(s), degrees[s]);
  }
  return set;
}

FuzzyStateSet FuzzyStateSet::singleton(std::size_t ground, StateId s, Degree d) {
  return FuzzyStateSet(ground, {{s, d}});
}

Degree FuzzyStateSet::operator[](StateId s) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, StateId key) { return e.first < key; });
  return it != entries_.end() && it->first == s ? it->second : Degree::zero();
}

StateSet FuzzyStateSet::support() const {
  StateSet out(ground_);
  for (const auto& e : entries_) out.insert(e.first);
  return out;
}

Degree FuzzyStateSet::height() const noexcept {
  Degree h;
  for (const auto& e : entries_) h = join(h, e.second);
  return h;
}

bool FuzzyStateSet::is_normal() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_one(); });
}

FuzzyStateSet& FuzzyStateSet::operator|=(const FuzzyStateSet& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, join(a->second, b->second));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

StateSet support(const FuzzyStateSet& s) { return s.support(); }
bool is_normal_fuzzy_set(const FuzzyStateSet& s) { return s.is_normal(); }

}  // namespace fuzzdir
