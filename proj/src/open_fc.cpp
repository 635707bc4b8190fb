#include "frobenius/open_fc.hpp"

#include <cmath>
#include <deque>

#include "frobenius/errors.hpp"

namespace frobenius {
namespace {

TorusPoint apply_matrix(const IntMatrix& m, const TorusPoint& t) {
  TorusPoint out = TorusPoint::identity(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Angle acc = Angle::zero();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) acc = acc + t.coords[static_cast<std::size_t>(j)].scaled(m(i, j));
    }
    out.coords[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

std::int64_t integer_determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_identity_matrix(const IntMatrix& m) { return m == IntMatrix::Identity(m.rows(), m.cols()); }

}  // namespace

TorusPoint SemidirectSpec::act(std::size_t phi_index, const TorusPoint& t) const {
  return apply_matrix(action_[phi_index], t);
}

std::shared_ptr<const SemidirectSpec> build_semidirect(std::size_t torus_dim, std::shared_ptr<const FiniteGroup> phi,
                                                       const std::vector<std::pair<Permutation, IntMatrix>>& action) {
  auto spec = std::make_shared<SemidirectSpec>();
  spec->torus_dim_ = torus_dim;
  spec->phi_ = std::move(phi);
  const FiniteGroup& g = *spec->phi_;
  const auto k = static_cast<Eigen::Index>(torus_dim);

  std::vector<std::pair<std::size_t, IntMatrix>> gens;
  for (const auto& [perm, m] : action) {
    if (m.rows() != k || m.cols() != k) {
      throw Error(ErrorKind::DimensionMismatch, "action matrices must be " + std::to_string(torus_dim) + "x" +
                                                    std::to_string(torus_dim));
    }
    const auto det = integer_determinant(m);
    if (det != 1 && det != -1) {
      throw Error(ErrorKind::NotUnimodular, "action of " + to_cycle_string(perm) + " has determinant " +
                                                std::to_string(det) + ", expected ±1");
    }
    auto idx = g.index_of(perm);
    if (!idx) throw Error(ErrorKind::NotAHomomorphism, to_cycle_string(perm) + " is not an element of Φ");
    gens.emplace_back(*idx, m);
  }

  // Extend along left multiplication by the given elements: A(s·x) = A(s)A(x).
  std::vector<std::optional<IntMatrix>> assigned(g.order());
  assigned[g.identity_index()] = IntMatrix::Identity(k, k);
  std::deque<std::size_t> queue{g.identity_index()};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& [s, m] : gens) {
      const std::size_t y = g.multiply(s, x);
      IntMatrix my = m * *assigned[x];
      if (!assigned[y]) {
        assigned[y] = std::move(my);
        queue.push_back(y);
      } else if (*assigned[y] != my) {
        throw Error(ErrorKind::NotAHomomorphism, "action is inconsistent at " + to_cycle_string(g.element(y)));
      }
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!assigned[i]) {
      throw Error(ErrorKind::NotAHomomorphism, "action is not defined on a generating set of Φ (missing " +
                                                   to_cycle_string(g.element(i)) + ")");
    }
    spec->action_.push_back(*assigned[i]);
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (spec->action_[g.multiply(a, b)] != spec->action_[a] * spec->action_[b]) {
        throw Error(ErrorKind::NotAHomomorphism, "A(φψ) ≠ A(φ)A(ψ) for φ = " + to_cycle_string(g.element(a)) +
                                                     ", ψ = " + to_cycle_string(g.element(b)));
      }
    }
  }
  return spec;
}

SemidirectPoint semidirect_multiply(const SemidirectSpec& group, const SemidirectPoint& a, const SemidirectPoint& b) {
  const std::size_t pa = group.phi().require_index(a.phi);
  return SemidirectPoint{a.torus + group.act(pa, b.torus), a.phi * b.phi};
}

SemidirectPoint semidirect_inverse(const SemidirectSpec& group, const SemidirectPoint& a) {
  const std::size_t inv = group.phi().inverse(group.phi().require_index(a.phi));
  return SemidirectPoint{-group.act(inv, a.torus), group.phi().element(inv)};
}

SemidirectPoint semidirect_commutator(const SemidirectSpec& group, const SemidirectPoint& a, const SemidirectPoint& b) {
  return semidirect_multiply(group, semidirect_multiply(group, a, b),
                             semidirect_multiply(group, semidirect_inverse(group, a), semidirect_inverse(group, b)));
}

double semidirect_distance(const SemidirectPoint& a, const SemidirectPoint& b) {
  double d = a.phi == b.phi ? 0.0 : 1.0;
  for (std::size_t j = 0; j < a.torus.dim(); ++j) d = std::max(d, circular_distance(a.torus.coords[j], b.torus.coords[j]));
  return d;
}

FCCentreDescription fc_centre(const SemidirectSpec& group, const Limits& limits) {
  FCCentreDescription out;
  const FiniteGroup& g = group.phi();
  const auto k = static_cast<Eigen::Index>(group.torus_dim());
  std::vector<Permutation> kernel_elements;
  for (std::size_t i = 0; i < g.order(); ++i) {
    CentreObligation ob;
    ob.phi = i;
    ob.in_kernel = is_identity_matrix(group.action(i));
    if (ob.in_kernel) {
      out.kernel.push_back(i);
      kernel_elements.push_back(g.element(i));
    } else {
      const Eigen::MatrixXd diff = (IntMatrix::Identity(k, k) - group.action(i)).cast<double>();
      ob.class_dimension = static_cast<std::size_t>(diff.fullPivLu().rank());
    }
    out.obligations.push_back(ob);
  }
  out.index = g.order() / out.kernel.size();
  auto kernel = std::make_shared<const FiniteGroup>(enumerate_group(kernel_elements, limits));
  out.centre = build_fc_group(group.torus_dim(), std::move(kernel), {}, limits);
  return out;
}

Rational restricted_fiber_measure(const SemidirectSpec& group, const SemidirectPoint& g, const Limits& limits) {
  if (g.torus.dim() != group.torus_dim()) throw Error(ErrorKind::SpecMismatch, "torus dimension mismatch");
  if (!g.torus.is_exact()) {
    throw Error(ErrorKind::IrrationalElement, "torus coordinates must be exact rational multiples of 2π");
  }
  const std::size_t phi = group.phi().require_index(g.phi);
  if (!is_identity_matrix(group.action(phi))) return Rational(0);
  const auto centre = fc_centre(group, limits);
  const Rational in_f = fc_fiber_exact(*centre.centre, CosetPoint{g.torus, g.phi}, limits);
  const Rational share(static_cast<std::int64_t>(centre.kernel.size()), static_cast<std::int64_t>(group.phi().order()));
  return share * share * in_f;
}

// ---------------------------------------------------------------------------
// M s ≡ c (mod 2π) through a diagonalization D = U M V.

TorusCongruence::TorusCongruence(const IntMatrix& m, const TorusPoint& c) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || static_cast<Eigen::Index>(c.dim()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "congruence needs a square matrix matching the torus");
  }
  IntMatrix a = m;
  IntMatrix u = IntMatrix::Identity(n, n);
  v_ = IntMatrix::Identity(n, n);
  for (Eigen::Index t = 0; t < n; ++t) {
    while (true) {
      Eigen::Index pi = -1, pj = -1;
      std::int64_t best = 0;
      for (Eigen::Index i = t; i < n; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          const std::int64_t v = std::abs(a(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      a.row(t).swap(a.row(pi));
      u.row(t).swap(u.row(pi));
      a.col(t).swap(a.col(pj));
      v_.col(t).swap(v_.col(pj));
      bool clear = true;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        const std::int64_t q = a(i, t) / a(t, t);
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (a(i, t) != 0) clear = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        const std::int64_t q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          v_.col(j) -= q * v_.col(t);
        }
        if (a(t, j) != 0) clear = false;
      }
      if (clear) break;
    }
  }
  diag_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) diag_[static_cast<std::size_t>(i)] = a(i, i);
  reduced_ = apply_matrix(u, c).coords;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] != 0) continue;
    const Angle& r = reduced_[i];
    const bool zero = r.is_exact() ? r.is_identity() : circular_distance(r, Angle::zero()) < 1e-9;
    if (!zero) solvable_ = false;
  }
}

std::size_t TorusCongruence::free_dimension() const {
  std::size_t n = 0;
  for (auto d : diag_) n += d == 0 ? 1 : 0;
  return n;
}

TorusPoint TorusCongruence::particular() const {
  return assemble(std::vector<std::int64_t>(diag_.size(), 0), std::vector<double>(diag_.size(), 0.0), true);
}

TorusPoint TorusCongruence::assemble(const std::vector<std::int64_t>& torsion, const std::vector<double>& free_radians,
                                     bool exact_free) const {
  if (!solvable_) throw Error(ErrorKind::NoWitness, "congruence has no solution");
  TorusPoint reduced_solution = TorusPoint::identity(diag_.size());
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    const std::int64_t d = diag_[i];
    if (d == 0) {
      reduced_solution.coords[i] = exact_free ? Angle::zero() : Angle::from_radians(free_radians[i]);
      continue;
    }
    const Angle& c = reduced_[i];
    if (const auto& turns = c.turns()) {
      reduced_solution.coords[i] = Angle::from_turns((*turns + torsion[i]) / d);
    } else {
      reduced_solution.coords[i] =
          Angle::from_radians((c.radians() + kTwoPi * static_cast<double>(torsion[i])) / static_cast<double>(d));
    }
  }
  return apply_matrix(v_, reduced_solution);
}

// ---------------------------------------------------------------------------
// Coset-translate witnesses

namespace {

// Torus equation for [x, (s, ψ)] = (u, γ) once ψ is fixed:
//   (A(φ) − A(γ)) s ≡ u − t + A(φψφ⁻¹) t.
TorusCongruence commutator_equation(const SemidirectSpec& group, const SemidirectPoint& x, std::size_t psi,
                                    const SemidirectPoint& g) {
  const FiniteGroup& f = group.phi();
  const std::size_t phi = f.require_index(x.phi);
  const std::size_t gamma = f.require_index(g.phi);
  const std::size_t conj = f.multiply(f.multiply(phi, psi), f.inverse(phi));
  const IntMatrix m = group.action(phi) - group.action(gamma);
  const TorusPoint c = g.torus + (-x.torus) + group.act(conj, x.torus);
  return TorusCongruence(m, c);
}

}  // namespace

CosetWitnessReport commutator_coset_witness(const SemidirectSpec& group, const SemidirectPoint& x, const SemidirectPoint& g,
                              std::size_t trials, std::uint64_t seed) {
  const FiniteGroup& f = group.phi();
  const std::size_t phi = f.require_index(x.phi);
  const std::size_t gamma = f.require_index(g.phi);
  const SemidirectPoint e{TorusPoint::identity(group.torus_dim()), f.element(f.identity_index())};

  std::optional<SemidirectPoint> witness;
  for (std::size_t psi = 0; psi < f.order() && !witness; ++psi) {
    if (f.commutator(phi, psi) != gamma) continue;
    auto eq = commutator_equation(group, x, psi, g);
    if (!eq.solvable()) continue;
    SemidirectPoint h0{eq.particular(), f.element(psi)};
    if (semidirect_distance(semidirect_commutator(group, x, h0), g) < 1e-9) witness = std::move(h0);
  }
  if (!witness) {
    throw Error(ErrorKind::NoWitness, "no h0 with [x, h0] = g; the fiber α⁻¹(g) misses {x} × G");
  }

  // Elements of Φ commuting with φ, for sampling the centralizer Z_G(x).
  std::vector<std::size_t> commuting;
  for (std::size_t psi = 0; psi < f.order(); ++psi) {
    if (f.commutator(phi, psi) == f.identity_index() && commutator_equation(group, x, psi, e).solvable()) {
      commuting.push_back(psi);
    }
  }

  CosetWitnessReport report;
  report.witness = *witness;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_int_distribution<std::size_t> any_phi(0, f.order() - 1);
  std::uniform_int_distribution<std::size_t> any_commuting(0, commuting.size() - 1);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SemidirectPoint y;
    if (trial % 2 == 0) {
      y.torus = TorusPoint::identity(group.torus_dim());
      for (auto& c : y.torus.coords) c = Angle::from_radians(angle(rng));
      y.phi = f.element(any_phi(rng));
    } else {
      const std::size_t psi = commuting[any_commuting(rng)];
      y = SemidirectPoint{commutator_equation(group, x, psi, e).sample(rng), f.element(psi)};
      ++report.centralizer_trials;
    }
    const bool centralizes = semidirect_distance(semidirect_commutator(group, x, y), e) < 1e-9;
    const bool shifted = semidirect_distance(
                             semidirect_commutator(group, x, semidirect_multiply(group, *witness, y)), g) < 1e-9;
    if (centralizes == shifted) ++report.passes;
  }
  return report;
}

}  // namespace frobenius
