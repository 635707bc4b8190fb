#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace frobenius {

using Rational = boost::rational<std::int64_t>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

// Accepts "p", "p/q" (optionally signed, surrounding whitespace ignored).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

// Representative of value mod 1 in [0, 1).
Rational fractional_part(const Rational& value);

// A point of the circle R/2πZ. When `turns` is present the angle is known
// exactly as turns·2π; `radians` always mirrors it. Both are kept reduced to
// [0, 1) turns / [0, 2π) radians.
class Angle {
 public:
  Angle() = default;

  static Angle from_radians(double radians);
  static Angle from_turns(const Rational& turns);
  static Angle zero() { return from_turns(Rational(0)); }

  double radians() const noexcept { return radians_; }
  const std::optional<Rational>& turns() const noexcept { return turns_; }
  bool is_exact() const noexcept { return turns_.has_value(); }

  // True iff the angle is exactly on 2πZ. For inexact angles this is the
  // floating-point test radians() == 0 after reduction.
  bool is_identity() const noexcept;

  Angle operator+(const Angle& other) const;
  Angle operator-() const;
  Angle operator-(const Angle& other) const { return *this + (-other); }
  Angle scaled(std::int64_t factor) const;

  bool operator==(const Angle& other) const;

 private:
  double radians_ = 0.0;
  std::optional<Rational> turns_ = Rational(0);
};

double reduce_radians(double radians);

// Shortest arc length between two angles, in [0, π].
double circular_distance(const Angle& a, const Angle& b);

// Parses "p/q pi", "pi", "-pi", "2 pi", "p/q" (radians only if decimal) or a
// decimal number of radians. Forms mentioning pi are exact.
Angle parse_angle(std::string_view text);
std::vector<Angle> parse_angle_list(std::string_view text);

// Exact multiples of a full turn: "p/q" means p/q·2π.
Angle parse_turns(std::string_view text);

std::string to_string(const Angle& angle);

}  // namespace frobenius
