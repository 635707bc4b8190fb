#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "frobenius/fc_structure.hpp"
#include "frobenius/finite_group.hpp"
#include "frobenius/group_core.hpp"

namespace frobenius {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Split extension T^k ⋊ Φ with Φ finite acting through integer matrices:
//   (t, φ)(s, ψ) = (t + A(φ)s, φψ).
class SemidirectSpec {
 public:
  std::size_t torus_dim() const noexcept { return torus_dim_; }
  const FiniteGroup& phi() const noexcept { return *phi_; }
  const std::shared_ptr<const FiniteGroup>& phi_ptr() const noexcept { return phi_; }
  const IntMatrix& action(std::size_t phi_index) const { return action_[phi_index]; }

  TorusPoint act(std::size_t phi_index, const TorusPoint& t) const;

 private:
  friend std::shared_ptr<const SemidirectSpec> build_semidirect(std::size_t, std::shared_ptr<const FiniteGroup>,
                                                                const std::vector<std::pair<Permutation, IntMatrix>>&);
  std::size_t torus_dim_ = 0;
  std::shared_ptr<const FiniteGroup> phi_;
  std::vector<IntMatrix> action_;
};

// `action` assigns matrices to a generating set of Φ; they are extended along
// the Cayley graph and the result is checked to be a homomorphism into
// GL_k(Z). Throws NotUnimodular for det ≠ ±1 and NotAHomomorphism otherwise.
std::shared_ptr<const SemidirectSpec> build_semidirect(std::size_t torus_dim, std::shared_ptr<const FiniteGroup> phi,
                                                       const std::vector<std::pair<Permutation, IntMatrix>>& action);

struct CentreObligation {
  std::size_t phi = 0;
  bool in_kernel = false;
  // For φ outside the kernel, the class of (t, φ) contains the subtorus
  // t + (I − A(φ))T^k of this dimension (> 0), hence is infinite.
  std::size_t class_dimension = 0;
};

// F = T^k ⋊ ker(A), which equals T^k × ker(A).
struct FCCentreDescription {
  std::vector<std::size_t> kernel;  // indices into Φ
  std::size_t index = 1;           // |Φ| / |Φ₀|
  bool open = true;
  std::vector<CentreObligation> obligations;
  std::shared_ptr<const FCGroupSpec> centre;  // F as (T^k × Φ₀)/{e}
};

SemidirectPoint semidirect_multiply(const SemidirectSpec& group, const SemidirectPoint& a, const SemidirectPoint& b);
SemidirectPoint semidirect_inverse(const SemidirectSpec& group, const SemidirectPoint& a);
SemidirectPoint semidirect_commutator(const SemidirectSpec& group, const SemidirectPoint& a, const SemidirectPoint& b);
double semidirect_distance(const SemidirectPoint& a, const SemidirectPoint& b);

FCCentreDescription fc_centre(const SemidirectSpec& group, const Limits& limits = {});

// μ(α⁻¹(g)) = (|Φ₀|/|Φ|)² · μ_F({(x, y) ∈ F² : [x, y] = g}) for g ∈ F and 0
// otherwise. Throws IrrationalElement unless g's torus part is exact.
Rational restricted_fiber_measure(const SemidirectSpec& group, const SemidirectPoint& g, const Limits& limits = {});

struct CosetWitnessReport {
  SemidirectPoint witness;  // h0 with [x, h0] = g
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t centralizer_trials = 0;  // trials with y drawn from Z_G(x)
};

// Solves [x, h0] = g exactly and checks y ∈ Z_G(x) ⇔ h0·y ∈ Z_G^g(x) on
// `trials` samples y (half Haar on G, half drawn from Z_G(x)). Throws
// NoWitness if no h0 exists.
CosetWitnessReport commutator_coset_witness(const SemidirectSpec& group, const SemidirectPoint& x, const SemidirectPoint& g,
                              std::size_t trials, std::uint64_t seed);

// Solutions s ∈ T^k of M s ≡ c (mod 2π) for an integer matrix M.
class TorusCongruence {
 public:
  TorusCongruence(const IntMatrix& m, const TorusPoint& c);

  bool solvable() const noexcept { return solvable_; }
  TorusPoint particular() const;
  // A uniformly distributed solution (torsion choices and free coordinates).
  template <class Rng>
  TorusPoint sample(Rng& rng) const;
  // Dimension of the solution set.
  std::size_t free_dimension() const;

 private:
  TorusPoint assemble(const std::vector<std::int64_t>& torsion, const std::vector<double>& free_radians,
                      bool exact_free) const;

  IntMatrix v_;                       // s = V s'
  std::vector<std::int64_t> diag_;    // D = U M V
  std::vector<Angle> reduced_;        // c' = U c
  bool solvable_ = true;
};

template <class Rng>
TorusPoint TorusCongruence::sample(Rng& rng) const {
  std::vector<std::int64_t> torsion(diag_.size(), 0);
  std::vector<double> free(diag_.size(), 0.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] == 0) {
      free[i] = angle(rng);
    } else {
      std::uniform_int_distribution<std::int64_t> pick(0, std::abs(diag_[i]) - 1);
      torsion[i] = pick(rng);
    }
  }
  return assemble(torsion, free, false);
}

}  // namespace frobenius
