#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fuzzdir/degree.hpp"
#include "fuzzdir/state_set.hpp"

namespace fuzzdir {

/// A fuzzy subset of a finite ground set of states {0, ..., ground-1}.
///
/// Only positive entries are stored, sorted by state, so two sets over the
/// same ground compare equal exactly when they agree on every state.
class FuzzyStateSet {
 public:
  using Entry = std::pair<StateId, Degree>;

  FuzzyStateSet() = default;
  explicit FuzzyStateSet(std::size_t ground) : ground_(ground) {}
  /// Drops zero entries; later entries for the same state win.
  FuzzyStateSet(std::size_t ground, std::vector<Entry> entries);
  static FuzzyStateSet from_dense(std::span<const Degree> degrees);
  static FuzzyStateSet singleton(std::size_t ground, StateId s, Degree d);

  std::size_t ground() const noexcept { return ground_; }
  /// Degree of membership of s (zero if absent).
  Degree operator[](StateId s) const noexcept;
  /// Positive entries in increasing state order.
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// States with positive degree.
  StateSet support() const;
  /// Largest degree (zero for the empty fuzzy set).
  Degree height() const noexcept;
  /// True iff some state has degree exactly 1.
  bool is_normal() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }

  /// Pointwise maximum.
  FuzzyStateSet& operator|=(const FuzzyStateSet& other);

  friend bool operator==(const FuzzyStateSet&, const FuzzyStateSet&) = default;

 private:
  std::size_t ground_ = 0;
  std::vector<Entry> entries_;
};

StateSet support(const FuzzyStateSet& s);
bool is_normal_fuzzy_set(const FuzzyStateSet& s);

}  // namespace fuzzdir
