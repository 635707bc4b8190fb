#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "frobenius/rational.hpp"

namespace frobenius {

// Weight (m_1, …, m_k) of the character ∏_j e^{i m_j θ_j} of T^k.
struct TorusWeight {
  std::vector<std::int64_t> m;
};

std::complex<double> torus_character(const TorusWeight& weight, std::span<const Angle> theta);

// All weights with |m_j| ≤ n, lexicographic.
std::vector<TorusWeight> enumerate_torus_weights(std::size_t k, std::int64_t n);

// Dirichlet kernel D_n(θ) = Σ_{|m|≤n} e^{imθ} = sin((n+½)θ)/sin(θ/2), and
// 2n+1 on the lattice.
double dirichlet_kernel(const Angle& theta, std::int64_t n);

struct TorusPartialSumReport {
  std::size_t k = 0;
  std::int64_t n = 0;
  std::vector<Angle> theta;
  std::complex<double> value;
  std::uint64_t count = 0;  // (2n+1)^k
  // Limit as n → ∞ (1 at the identity, 0 elsewhere) and the bound
  // ∏_{θ_j ∉ 2πZ} min(1, 1/((2n+1)|sin(θ_j/2)|)) on |value|.
  double limit = 0.0;
  double bound = 1.0;
};

// (1/(2n+1)^k) Σ_{|m_j|≤n} χ_m(θ) evaluated through the closed form
// ∏_j D_n(θ_j)/(2n+1).
TorusPartialSumReport torus_partial_sum(std::span<const Angle> theta, std::int64_t n);

// 1 if every θ_j ∈ 2πZ, else 0. Throws AmbiguousInput when an inexact angle is
// within 1e−12 of the lattice without lying on it.
int torus_limit(std::span<const Angle> theta);

}  // namespace frobenius
