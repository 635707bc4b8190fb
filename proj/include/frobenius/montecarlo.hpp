#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "frobenius/group_core.hpp"
#include "frobenius/weyl.hpp"

namespace frobenius {

// Independent generator for chunk `stream` of a run seeded with `seed`.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);  // uniform in [0, n)
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

// Ginibre matrix, QR, phases of diag(R) moved into Q.
Eigen::MatrixXcd haar_unitary(std::size_t n, RngStream& rng);
// U(N) sample divided by a uniformly chosen N-th root of its determinant.
Eigen::MatrixXcd haar_special_unitary(std::size_t n, RngStream& rng);

GroupPoint haar_sample(const GroupSpec& spec, RngStream& rng);

struct MCEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;  // sqrt(p(1 − p)/n)
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  bool exact_equality = false;  // ε unused: commutators compared exactly
  std::string metric;
  std::string group;
  std::string group_digest;
  std::size_t chunk_size = 0;
  double wall_time_seconds = 0.0;
};

struct MCOptions {
  std::size_t chunk_size = 4096;
  unsigned threads = 1;
};

// Fraction of Haar pairs (x, y) with d([x, y], e) < ε. For finite groups,
// tori and their products equality is decided exactly and ε is ignored.
MCEstimate estimate_commuting_probability(const GroupSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                          double epsilon, const MCOptions& options = {});

// Fraction of Haar pairs with d([x, y], g) < ε.
MCEstimate estimate_ball_fiber(const GroupSpec& spec, const GroupPoint& g, double epsilon, std::uint64_t samples,
                               std::uint64_t seed, const MCOptions& options = {});

struct OrthogonalityEntry {
  DominantWeight a;
  DominantWeight b;
  Complex mean;               // E[χ_a(U) conj χ_b(U)]
  double expected = 0.0;      // δ_ab
  double standard_error = 0.0;
  bool within_three_sigma = false;
};

// Empirical Schur orthogonality of haar_special_unitary over all pairs of
// weights of weight-sum ≤ depth, from one shared set of samples.
std::vector<OrthogonalityEntry> su_character_orthogonality(std::size_t n, std::int64_t depth, std::uint64_t samples,
                                                           std::uint64_t seed, const MCOptions& options = {});

struct ConjugationCheck {
  MCEstimate at_g;
  MCEstimate at_conjugate;  // at h g h⁻¹, seeded with seed + 1
  GroupPoint conjugate;
  double combined_standard_error = 0.0;
  bool within_three_sigma = false;
};

ConjugationCheck conjugation_invariance(const GroupSpec& spec, const GroupPoint& g, const GroupPoint& h,
                                        double epsilon, std::uint64_t samples, std::uint64_t seed,
                                        const MCOptions& options = {});

}  // namespace frobenius
