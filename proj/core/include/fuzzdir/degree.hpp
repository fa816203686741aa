#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace fuzzdir {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// A membership degree: an exact rational in [0, 1], always kept in lowest
/// terms so that equality is plain field comparison.
class Degree {
 public:
  /// Zero.
  constexpr Degree() noexcept = default;

  /// Builds num/den reduced. Throws InputError when den == 0 or the value
  /// lies outside [0, 1].
  Degree(std::int64_t num, std::int64_t den);

  static constexpr Degree zero() noexcept { return Degree(); }
  static constexpr Degree one() noexcept { return Degree(Raw{}, 1, 1); }

  /// Accepts "0", "1", decimals ("0.25", ".5", "1.0") and fractions ("1/4").
  static Degree parse(std::string_view text);

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }

  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_one() const noexcept { return num_ == den_; }
  constexpr bool is_positive() const noexcept { return num_ > 0; }

  /// Canonical reduced fraction: "0", "1" or "p/q".
  std::string to_string() const;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr bool operator==(const Degree&, const Degree&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    const auto lhs = static_cast<detail::wide_int>(a.num_) * b.den_;
    const auto rhs = static_cast<detail::wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::size_t hash() const noexcept {
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
  }

 private:
  struct Raw {};
  constexpr Degree(Raw, std::int64_t num, std::int64_t den) noexcept : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Lattice meet (minimum).
constexpr Degree meet(const Degree& a, const Degree& b) noexcept { return b < a ? b : a; }
/// Lattice join (maximum).
constexpr Degree join(const Degree& a, const Degree& b) noexcept { return a < b ? b : a; }

}  // namespace fuzzdir

template <>
struct std::hash<fuzzdir::Degree> {
  std::size_t operator()(const fuzzdir::Degree& d) const noexcept { return d.hash(); }
};
