#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/degree.hpp"
#include "fuzzdir/fuzzy_set.hpp"

namespace fuzzdir {

/// Square fuzzy matrix; rows and columns follow the declared state order.
/// Entry (i, j) of the matrix of word w is f*(a_i, w, a_j).
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  TransitionMatrix(std::size_t dim, std::vector<Degree> entries);
  static TransitionMatrix identity(std::size_t dim);

  std::size_t dimension() const noexcept { return dim_; }
  const Degree& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Degree& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  std::span<const Degree> row_span(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }
  FuzzyStateSet row(std::size_t i) const { return FuzzyStateSet::from_dense(row_span(i)); }
  std::span<const Degree> entries() const noexcept { return entries_; }

  /// "[r00,r01;r10,r11]" with canonical degree literals.
  std::string to_string() const;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t dim_ = 0;
  std::vector<Degree> entries_;
};

/// Max-min product; throws InputError on a dimension mismatch.
TransitionMatrix matrix_product(const TransitionMatrix& r, const TransitionMatrix& s);
inline TransitionMatrix operator*(const TransitionMatrix& r, const TransitionMatrix& s) {
  return matrix_product(r, s);
}

/// M_x for a single letter.
TransitionMatrix letter_matrix(const Ffa& f, LetterId x);
/// M_w = M_{x1} ... M_{xk}; the identity for the empty word.
TransitionMatrix transition_matrix(const Ffa& f, std::span<const LetterId> w);

}  // namespace fuzzdir

template <>
struct std::hash<fuzzdir::TransitionMatrix> {
  std::size_t operator()(const fuzzdir::TransitionMatrix& m) const noexcept { return m.hash(); }
};
