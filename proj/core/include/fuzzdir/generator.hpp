#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fuzzdir/automata.hpp"
#include "fuzzdir/degree.hpp"

namespace fuzzdir {

struct GeneratorConfig {
  std::size_t state_count = 2;
  std::size_t letter_count = 1;
  /// Degrees are drawn uniformly from this list; repeat a value to weight it.
  std::vector<Degree> degree_palette{Degree::zero(), Degree::one()};
  std::uint64_t seed = 0;
  bool complete = false;  ///< every row gets a positive entry
  bool normal = false;    ///< every row gets a 1 entry
  bool crisp = false;     ///< only 0 and 1 are drawn
  /// Probability that an entry is drawn from the palette at all; otherwise
  /// it is 0. Keeps large automata sparse.
  double density = 1.0;
};

/// Deterministic in the seed. States are named s0, s1, ...; letters x, y, z,
/// then a, b, ... Throws InputError for unsatisfiable configurations (no 1
/// in the palette with `normal` or `crisp`, no positive value with
/// `complete`, zero counts).
Ffa generate(const GeneratorConfig& config);

/// A uniformly random total DFA with the same naming scheme.
Dfa random_dfa(std::size_t state_count, std::size_t letter_count, std::uint64_t seed);

/// The default letter names used by the generators.
std::vector<std::string> default_alphabet(std::size_t letter_count);

}  // namespace fuzzdir
