#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzdir/automata.hpp"

namespace fuzzdir {

struct Fixture {
  std::string name;
  std::string description;
  std::string source;  ///< the automaton in text format
  Ffa automaton;
};

/// The reference automata, in a stable order.
const std::vector<Fixture>& fixtures();
/// Throws InputError for an unknown name.
const Fixture& find_fixture(std::string_view name);
inline const Ffa& fixture(std::string_view name) { return find_fixture(name).automaton; }

}  // namespace fuzzdir
