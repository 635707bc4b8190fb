#include "frobenius/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "frobenius/errors.hpp"
#include "frobenius/limits.hpp"

namespace frobenius {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, "not an integer in '" + std::string(whole) + "'");
  }
  return value;
}

bool looks_rational(std::string_view s) {
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+' ||
          std::isspace(static_cast<unsigned char>(c)))) {
      return false;
    }
  }
  return !s.empty();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  std::int64_t num = parse_int(s.substr(0, slash), text);
  std::int64_t den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Rational fractional_part(const Rational& value) {
  std::int64_t num = value.numerator();
  std::int64_t den = value.denominator();
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

double reduce_radians(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Angle Angle::from_radians(double radians) {
  Angle a;
  a.radians_ = reduce_radians(radians);
  a.turns_.reset();
  return a;
}

Angle Angle::from_turns(const Rational& turns) {
  Angle a;
  a.turns_ = fractional_part(turns);
  a.radians_ = kTwoPi * static_cast<double>(a.turns_->numerator()) /
               static_cast<double>(a.turns_->denominator());
  return a;
}

bool Angle::is_identity() const noexcept {
  if (turns_) return turns_->numerator() == 0;
  return radians_ == 0.0;
}

Angle Angle::operator+(const Angle& other) const {
  if (turns_ && other.turns_) return from_turns(*turns_ + *other.turns_);
  return from_radians(radians_ + other.radians_);
}

Angle Angle::operator-() const {
  if (turns_) return from_turns(-*turns_);
  return from_radians(-radians_);
}

Angle Angle::scaled(std::int64_t factor) const {
  if (turns_) return from_turns(*turns_ * factor);
  return from_radians(radians_ * static_cast<double>(factor));
}

bool Angle::operator==(const Angle& other) const {
  if (turns_ && other.turns_) return *turns_ == *other.turns_;
  return radians_ == other.radians_;
}

double circular_distance(const Angle& a, const Angle& b) {
  if (a.turns() && b.turns()) {
    Rational d = fractional_part(*a.turns() - *b.turns());
    if (d > Rational(1, 2)) d = Rational(1) - d;
    return kTwoPi * static_cast<double>(d.numerator()) / static_cast<double>(d.denominator());
  }
  double d = std::fabs(a.radians() - b.radians());
  return std::min(d, kTwoPi - d);
}

Angle parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty angle");
  auto pi = s.find("pi");
  if (pi != std::string_view::npos) {
    if (trim(s.substr(pi + 2)).size() != 0) {
      throw Error(ErrorKind::ParseError, "unexpected text after 'pi' in '" + std::string(text) + "'");
    }
    std::string_view coeff = trim(s.substr(0, pi));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
    Rational c(1);
    if (coeff == "-") {
      c = Rational(-1);
    } else if (coeff == "+" || coeff.empty()) {
      c = Rational(1);
    } else {
      c = parse_rational(coeff);
    }
    // c·π = (c/2) turns
    return Angle::from_turns(c / 2);
  }
  if (looks_rational(s) && s.find('/') != std::string_view::npos) {
    throw Error(ErrorKind::ParseError,
                "fraction without 'pi' is ambiguous, write '" + std::string(s) + " pi' or a decimal");
  }
  std::string owned(s);
  char* end = nullptr;
  double value = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::ParseError, "bad angle '" + owned + "'");
  }
  if (value == 0.0) return Angle::zero();
  return Angle::from_radians(value);
}

std::vector<Angle> parse_angle_list(std::string_view text) {
  std::vector<Angle> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!trim(piece).empty() || comma != std::string_view::npos) out.push_back(parse_angle(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty angle list");
  return out;
}

Angle parse_turns(std::string_view text) { return Angle::from_turns(parse_rational(text)); }

std::string to_string(const Angle& angle) {
  if (angle.turns()) {
    Rational half_turns = *angle.turns() * 2;
    if (half_turns.numerator() == 0) return "0";
    return to_string(half_turns) + " pi";
  }
  std::ostringstream os;
  os.precision(17);
  os << angle.radians();
  return os.str();
}

namespace {

template <class T>
void override_from_env(const char* name, T& field) {
  if (const char* raw = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) field = static_cast<T>(v);
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from_env("FROBENIUS_MAX_GROUP_ORDER", limits.max_group_order);
  override_from_env("FROBENIUS_MAX_PAIRS", limits.max_pair_evaluations);
  override_from_env("FROBENIUS_MAX_CLASSES", limits.max_classes);
  override_from_env("FROBENIUS_MAX_WEIGHTS", limits.max_weights);
  return limits;
}

}  // namespace frobenius
