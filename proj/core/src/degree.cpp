#include "fuzzdir/degree.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "fuzzdir/errors.hpp"

namespace fuzzdir {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 18) {
    throw InputError("invalid degree literal '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InputError("invalid degree literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Degree::Degree(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("degree with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) {
    throw InputError("degree " + std::to_string(num) + "/" + std::to_string(den) +
                     " outside [0,1]");
  }
  const std::int64_t g = num == 0 ? den : std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Degree Degree::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty degree literal");
  if (text.front() == '-') {
    throw InputError("degree '" + std::string(text) + "' outside [0,1]");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_digits(text.substr(0, slash), text);
    const auto den = parse_digits(text.substr(slash + 1), text);
    return Degree(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    const auto value = parse_digits(text, text);
    if (value > 1) throw InputError("degree '" + std::string(text) + "' outside [0,1]");
    return Degree(value, 1);
  }
  const auto int_part = text.substr(0, dot);
  const auto frac_part = text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw InputError("invalid degree literal '" + std::string(text) + "'");
  }
  const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
  if (whole > 1) throw InputError("degree '" + std::string(text) + "' outside [0,1]");
  if (frac_part.empty()) return Degree(whole, 1);
  if (frac_part.size() > 17) {
    throw InputError("degree literal '" + std::string(text) + "' has too many digits");
  }
  const std::int64_t frac = parse_digits(frac_part, text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  return Degree(whole * scale + frac, scale);
}

std::string Degree::to_string() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fuzzdir
