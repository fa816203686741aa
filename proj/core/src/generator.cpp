#include "fuzzdir/generator.hpp"

#include <algorithm>
#include <random>

#include "fuzzdir/errors.hpp"

namespace fuzzdir {

namespace {

std::vector<std::string> state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

}  // namespace

std::vector<std::string> default_alphabet(std::size_t letter_count) {
  static constexpr std::string_view kLetters = "xyzabcdefghijklmnopqrstuvw";
  std::vector<std::string> out;
  for (std::size_t i = 0; i < letter_count; ++i) {
    out.push_back(i < kLetters.size() ? std::string(1, kLetters[i]) : "l" + std::to_string(i));
  }
  return out;
}

Ffa generate(const GeneratorConfig& config) {
  if (config.state_count == 0 || config.letter_count == 0) {
    throw InputError("generator needs at least one state and one letter");
  }
  if (config.density < 0.0 || config.density > 1.0) throw InputError("density must lie in [0,1]");
  std::vector<Degree> palette = config.degree_palette;
  if (config.crisp) {
    std::erase_if(palette, [](const Degree& d) { return !d.is_zero() && !d.is_one(); });
    if (std::none_of(palette.begin(), palette.end(), [](const Degree& d) { return d.is_one(); })) {
      throw InputError("crisp generation needs 1 in the palette");
    }
  }
  if (palette.empty()) throw InputError("empty degree palette");
  std::vector<Degree> positive;
  std::copy_if(palette.begin(), palette.end(), std::back_inserter(positive),
               [](const Degree& d) { return d.is_positive(); });
  const bool has_one = std::any_of(palette.begin(), palette.end(), [](const Degree& d) { return d.is_one(); });
  if (config.normal && !has_one) throw InputError("normal generation needs 1 in the palette");
  if (config.complete && positive.empty()) throw InputError("complete generation needs a positive palette value");

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick_palette(0, palette.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_positive(0, positive.empty() ? 0 : positive.size() - 1);
  std::uniform_int_distribution<StateId> pick_state(0, static_cast<StateId>(config.state_count - 1));
  std::bernoulli_distribution keep(config.density);

  const std::size_t n = config.state_count;
  std::vector<std::vector<Ffa::Edge>> rows;
  rows.reserve(n * config.letter_count);
  for (std::size_t i = 0; i < n * config.letter_count; ++i) {
    std::vector<Degree> row(n);
    for (auto& d : row) {
      if (config.density >= 1.0 || keep(rng)) d = palette[pick_palette(rng)];
    }
    if (config.normal && std::none_of(row.begin(), row.end(), [](const Degree& d) { return d.is_one(); })) {
      row[pick_state(rng)] = Degree::one();
    }
    if (config.complete && std::none_of(row.begin(), row.end(), [](const Degree& d) { return d.is_positive(); })) {
      row[pick_state(rng)] = positive[pick_positive(rng)];
    }
    std::vector<Ffa::Edge> edges;
    for (StateId b = 0; b < n; ++b) {
      if (row[b].is_positive()) edges.push_back({b, row[b]});
    }
    rows.push_back(std::move(edges));
  }
  return Ffa(Signature(state_names(n), default_alphabet(config.letter_count)), std::move(rows));
}

Dfa random_dfa(std::size_t state_count, std::size_t letter_count, std::uint64_t seed) {
  if (state_count == 0 || letter_count == 0) throw InputError("DFA needs at least one state and one letter");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(state_count - 1));
  std::vector<StateId> delta(state_count * letter_count);
  for (auto& t : delta) t = pick(rng);
  return Dfa(Signature(state_names(state_count), default_alphabet(letter_count)), std::move(delta));
}

}  // namespace fuzzdir
