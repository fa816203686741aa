#include "fuzzdir/matrix.hpp"

#include "fuzzdir/errors.hpp"

namespace fuzzdir {

TransitionMatrix::TransitionMatrix(std::size_t dim, std::vector<Degree> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw InputError("matrix entry count does not match dimension");
}

TransitionMatrix TransitionMatrix::identity(std::size_t dim) {
  TransitionMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Degree::one();
  return m;
}

std::string TransitionMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j > 0) out += ',';
      out += (*this)(i, j).to_string();
    }
  }
  return out + "]";
}

std::size_t TransitionMatrix::hash() const noexcept {
  std::size_t h = dim_;
  for (const auto& d : entries_) h = (h ^ d.hash()) * 0x100000001b3ull;
  return h;
}

TransitionMatrix matrix_product(const TransitionMatrix& r, const TransitionMatrix& s) {
  if (r.dimension() != s.dimension()) {
    throw InputError("matrix dimension mismatch: " + std::to_string(r.dimension()) + " vs " +
                     std::to_string(s.dimension()));
  }
  const std::size_t n = r.dimension();
  TransitionMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Degree& rik = r(i, k);
      if (rik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) t(i, j) = join(t(i, j), meet(rik, s(k, j)));
    }
  }
  return t;
}

TransitionMatrix letter_matrix(const Ffa& f, LetterId x) {
  f.signature().check_word(std::span<const LetterId>(&x, 1));
  TransitionMatrix m(f.state_count());
  for (StateId a = 0; a < f.state_count(); ++a) {
    for (const auto& e : f.row(a, x)) m(a, e.target) = e.degree;
  }
  return m;
}

TransitionMatrix transition_matrix(const Ffa& f, std::span<const LetterId> w) {
  f.signature().check_word(w);
  auto m = TransitionMatrix::identity(f.state_count());
  for (LetterId x : w) m = m * letter_matrix(f, x);
  return m;
}

}  // namespace fuzzdir
