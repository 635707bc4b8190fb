#pragma once

#include <memory>
#include <vector>

#include "frobenius/finite_group.hpp"
#include "frobenius/group_core.hpp"
#include "frobenius/torus.hpp"

namespace frobenius {

// Element of the finite central subgroup N ⊂ T^k × Δ.
struct NElement {
  TorusPoint torus;   // exact rational turns
  std::size_t delta;  // index into Δ
};

// Compact Lie FC group (T^k × Δ)/N with N finite, central in Δ and embedded
// diagonally (both projections injective).
class FCGroupSpec {
 public:
  std::size_t torus_dim() const noexcept { return torus_dim_; }
  const FiniteGroup& delta() const noexcept { return *delta_; }
  const std::shared_ptr<const FiniteGroup>& delta_ptr() const noexcept { return delta_; }
  const CharacterTable& delta_table() const noexcept { return table_; }
  // Includes the identity first.
  const std::vector<NElement>& n_elements() const noexcept { return n_; }
  std::size_t n_order() const noexcept { return n_.size(); }

  // Canonical representative of (t, δ)N: among the |N| translates pick the one
  // whose Δ part has the smallest index. N acts freely on Δ, so this is
  // unique and needs no comparison of torus coordinates.
  CosetPoint canonical(const TorusPoint& torus, std::size_t delta) const;
  CosetPoint canonical(const TorusPoint& torus, const Permutation& delta) const;

 private:
  friend std::shared_ptr<const FCGroupSpec> build_fc_group(std::size_t, std::shared_ptr<const FiniteGroup>,
                                                           std::vector<std::pair<TorusPoint, Permutation>>,
                                                           const Limits&);
  std::size_t torus_dim_ = 0;
  std::shared_ptr<const FiniteGroup> delta_;
  CharacterTable table_;
  std::vector<NElement> n_;
};

// Validates and builds (T^k × Δ)/N. The identity of N may be omitted from
// `n`. Throws NotASubgroup (not closed, inexact torus coordinate, Δ part
// outside Δ), NotCentral (Δ part not central) or NotDiagonal (a projection of
// N is not injective).
std::shared_ptr<const FCGroupSpec> build_fc_group(std::size_t torus_dim, std::shared_ptr<const FiniteGroup> delta,
                                                  std::vector<std::pair<TorusPoint, Permutation>> n,
                                                  const Limits& limits = {});

// Irreducible character η ⊗ χ_m of T^k × Δ that descends to the quotient.
struct FCCharacter {
  std::size_t eta = 0;  // row of Δ's character table
  TorusWeight m;
};

// χ(g)/χ(1) = e^{i m·t} η(δ)/η(1) at any representative (t, δ).
Complex fc_character_ratio(const FCGroupSpec& group, const FCCharacter& chi, const TorusPoint& torus,
                           std::size_t delta);

// All (η, m) with |m_j| ≤ depth that are trivial on N.
std::vector<FCCharacter> enumerate_fc_characters(const FCGroupSpec& group, std::int64_t depth);

struct FCFormulaOptions {
  unsigned threads = 1;
  std::size_t chunk_size = 4096;
};

// (|N|/|Δ|) · (1/(2t+1)^k) · Σ_{χ ∈ Irr(G)_t} χ(g0)/χ(1). Throws NonRealResult
// if the imaginary part exceeds 1e−9.
double fc_fiber_formula(const FCGroupSpec& group, const CosetPoint& g0, std::int64_t depth,
                        const FCFormulaOptions& options = {});

// Σ_{n∈N} [torus part of h0·n is trivial] · f_Δ(Δ part of h0·n)/|Δ|².
// Torus coordinates of g0 that are inexact but within 1e−12 of 2πZ raise
// AmbiguousInput.
Rational fc_fiber_exact(const FCGroupSpec& group, const CosetPoint& g0, const Limits& limits = {});

// C/(2t+1)-type bound on |formula − exact| at depth t from the Dirichlet
// kernel estimate on every translate with non-trivial torus part.
double fc_fiber_error_bound(const FCGroupSpec& group, const CosetPoint& g0, std::int64_t depth,
                            const Limits& limits = {});

}  // namespace frobenius
