#include "frobenius/torus.hpp"

#include <cmath>

#include "frobenius/errors.hpp"

namespace frobenius {

std::complex<double> torus_character(const TorusWeight& weight, std::span<const Angle> theta) {
  if (weight.m.size() != theta.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight of length " + std::to_string(weight.m.size()) + " against " +
                                                  std::to_string(theta.size()) + " angles");
  }
  double phase = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    // m·θ reduced exactly when θ is a rational turn
    phase += theta[j].scaled(weight.m[j]).radians();
  }
  return std::polar(1.0, phase);
}

std::vector<TorusWeight> enumerate_torus_weights(std::size_t k, std::int64_t n) {
  std::vector<TorusWeight> out;
  if (n < 0) return out;
  std::vector<std::int64_t> m(k, -n);
  while (true) {
    out.push_back({m});
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (m[j] < n) {
        ++m[j];
        for (std::size_t t = j + 1; t < k; ++t) m[t] = -n;
        break;
      }
      if (j == 0) return out;
    }
    if (k == 0) return out;
  }
}

double dirichlet_kernel(const Angle& theta, std::int64_t n) {
  const double width = static_cast<double>(2 * n + 1);
  if (theta.is_identity()) return width;
  const double t = theta.radians();
  const double half = std::sin(t / 2.0);
  if (std::abs(half) < 1e-6) {
    // Near the lattice the quotient loses digits; sum the cosines instead.
    double s = 1.0;
    for (std::int64_t m = 1; m <= n; ++m) s += 2.0 * std::cos(static_cast<double>(m) * t);
    return s;
  }
  if (const auto& turns = theta.turns()) {
    // sin((n+½)θ) = sin(π q) with q = (2n+1)·turns; reduce q mod 2 exactly.
    const Rational q = *turns * (2 * n + 1);
    const std::int64_t whole = boost::rational_cast<std::int64_t>(q - fractional_part(q));
    const Rational frac = fractional_part(q);
    const double s = std::sin(kPi * static_cast<double>(frac.numerator()) / static_cast<double>(frac.denominator()));
    return (whole % 2 == 0 ? s : -s) / half;
  }
  return std::sin((static_cast<double>(n) + 0.5) * t) / half;
}

TorusPartialSumReport torus_partial_sum(std::span<const Angle> theta, std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::ConstraintViolation, "depth must be non-negative");
  TorusPartialSumReport report;
  report.k = theta.size();
  report.n = n;
  report.theta.assign(theta.begin(), theta.end());
  const double width = static_cast<double>(2 * n + 1);
  double value = 1.0;
  double bound = 1.0;
  bool identity = true;
  report.count = 1;
  for (const auto& t : theta) {
    value *= dirichlet_kernel(t, n) / width;
    report.count *= static_cast<std::uint64_t>(2 * n + 1);
    if (!t.is_identity()) {
      identity = false;
      bound *= std::min(1.0, 1.0 / (width * std::abs(std::sin(t.radians() / 2.0))));
    }
  }
  report.value = {value, 0.0};
  report.bound = bound;
  report.limit = identity ? 1.0 : 0.0;
  return report;
}

int torus_limit(std::span<const Angle> theta) {
  bool identity = true;
  for (const auto& t : theta) {
    if (t.is_identity()) continue;
    if (!t.is_exact()) {
      const double off = std::min(t.radians(), kTwoPi - t.radians());
      if (off < 1e-12) {
        throw Error(ErrorKind::AmbiguousInput, "angle " + to_string(t) +
                                                   " is within 1e-12 of 2πZ; supply it in exact 'p/q pi' form");
      }
    }
    identity = false;
  }
  return identity ? 1 : 0;
}

}  // namespace frobenius
