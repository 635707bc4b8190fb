#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "frobenius/group_core.hpp"
#include "frobenius/limits.hpp"
#include "frobenius/rational.hpp"

namespace frobenius {

// Coefficients a_1, …, a_r ≥ 0 of a dominant weight of SU(r+1) on the
// fundamental weights.
struct DominantWeight {
  std::vector<std::int64_t> a;

  std::int64_t weight_sum() const;
  bool operator==(const DominantWeight&) const = default;
};

// Partition λ_i = Σ_{t≥i} a_t, i = 1..N (λ_N = 0).
std::vector<std::int64_t> partition_of(const DominantWeight& weight);

// All r-tuples with Σ a_i ≤ n in lexicographic order; C(n+r, r) of them.
std::vector<DominantWeight> enumerate_dominant_weights(std::size_t rank, std::int64_t depth,
                                                       const Limits& limits = {});

// C(n+r, r), the size of the truncated set above.
std::uint64_t dominant_weight_count(std::size_t rank, std::int64_t depth);

// Weyl dimension formula ∏_{i<j} (λ_i − λ_j + j − i)/(j − i), exact.
std::uint64_t weyl_dimension(const DominantWeight& weight, std::size_t n);

// h_0, …, h_max_degree evaluated at the given eigenvalues.
std::vector<Complex> complete_homogeneous(std::span<const Complex> eigenvalues, std::size_t max_degree);

// Schur polynomial s_λ by the Jacobi–Trudi determinant det[h_{λ_i − i + j}].
Complex schur_jacobi_trudi(std::span<const std::int64_t> partition, std::span<const Complex> h);

// Schur polynomial as the bialternant det[x_i^{λ_j+N−j}] / det[x_i^{N−j}].
// Throws ConstraintViolation when eigenvalues (nearly) coincide.
Complex schur_bialternant(std::span<const std::int64_t> partition, std::span<const Complex> eigenvalues);

// Character of the irreducible SU(N) representation with highest weight `a`
// at the element with eigenvalues e^{iθ_j}. Throws ConstraintViolation
// unless Σθ_j ≡ 0 (mod 2π) within 1e−9.
Complex su_character(const DominantWeight& weight, std::span<const Angle> theta);
Complex su_character_bialternant(const DominantWeight& weight, std::span<const Angle> theta);

// Same character evaluated directly on a matrix in SU(N), through power sums
// tr(U^k) and Newton's identities.
Complex su_character_of_matrix(const DominantWeight& weight, const Eigen::MatrixXcd& u);

struct PartialSumOptions {
  unsigned threads = 1;
  std::size_t chunk_size = 4096;
  Limits limits{};
};

struct SUPartialSumReport {
  std::size_t n = 0;  // SU(n)
  std::int64_t depth = 0;
  std::vector<Angle> theta;
  Complex raw;                 // Σ χ(g)/χ(1) over weights of weight-sum ≤ depth
  std::uint64_t irr_count = 0;  // C(depth + n − 1, n − 1)
  std::int64_t exponent = 0;   // d − r + 1
  Complex normalized;          // raw / irr_count^{d−r+1}
  double bound = 0.0;          // 1 / irr_count^{d−r}
  bool violation = false;      // |normalized| > bound
  std::size_t chunk_size = 0;
};

SUPartialSumReport su_partial_sum(std::size_t n, std::span<const Angle> theta, std::int64_t depth,
                                  const PartialSumOptions& options = {});

// Generalization to tori, SU(N) and direct products of them: characters are
// products of factor characters, each factor truncated at the same depth
// (box for torus factors, simplex for SU factors).
struct CompactPartialSumReport {
  std::int64_t depth = 0;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  Complex raw;
  std::uint64_t irr_count = 0;
  Complex normalized;  // raw / irr_count^{d−r+1}
  double bound = 0.0;  // 1 / irr_count^{d−r}
};

CompactPartialSumReport compact_partial_sum(const GroupSpec& spec, const GroupPoint& point, std::int64_t depth,
                                            const PartialSumOptions& options = {});

}  // namespace frobenius
