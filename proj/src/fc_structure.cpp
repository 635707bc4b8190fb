#include "frobenius/fc_structure.hpp"

#include <algorithm>
#include <cmath>

#include "frobenius/errors.hpp"
#include "frobenius/parallel.hpp"

namespace frobenius {

CosetPoint FCGroupSpec::canonical(const TorusPoint& torus, std::size_t delta) const {
  std::size_t best_delta = delta_->order();
  const NElement* best = nullptr;
  for (const auto& n : n_) {
    const std::size_t d = delta_->multiply(delta, n.delta);
    if (d < best_delta) {
      best_delta = d;
      best = &n;
    }
  }
  return CosetPoint{torus + best->torus, delta_->element(best_delta)};
}

CosetPoint FCGroupSpec::canonical(const TorusPoint& torus, const Permutation& delta) const {
  return canonical(torus, delta_->require_index(delta));
}

std::shared_ptr<const FCGroupSpec> build_fc_group(std::size_t torus_dim, std::shared_ptr<const FiniteGroup> delta,
                                                  std::vector<std::pair<TorusPoint, Permutation>> n,
                                                  const Limits& limits) {
  auto spec = std::make_shared<FCGroupSpec>();
  spec->torus_dim_ = torus_dim;
  spec->delta_ = std::move(delta);
  const FiniteGroup& d = *spec->delta_;

  spec->n_.push_back({TorusPoint::identity(torus_dim), d.identity_index()});
  for (const auto& [torus, perm] : n) {
    if (torus.dim() != torus_dim) {
      throw Error(ErrorKind::NotASubgroup, "N element has " + std::to_string(torus.dim()) +
                                               " torus coordinates, expected " + std::to_string(torus_dim));
    }
    if (!torus.is_exact()) {
      throw Error(ErrorKind::NotASubgroup, "N torus coordinates must be exact rational multiples of 2π");
    }
    auto idx = d.index_of(perm);
    if (!idx) throw Error(ErrorKind::NotASubgroup, "N element " + to_cycle_string(perm) + " is not in Δ");
    NElement elt{torus, *idx};
    if (elt.torus.is_identity() && elt.delta == d.identity_index()) continue;
    for (const auto& existing : spec->n_) {
      if (existing.delta == elt.delta && existing.torus == elt.torus) {
        throw Error(ErrorKind::NotASubgroup, "duplicate element of N");
      }
    }
    spec->n_.push_back(std::move(elt));
  }

  for (const auto& elt : spec->n_) {
    if (!d.is_central(elt.delta)) {
      throw Error(ErrorKind::NotCentral, "Δ part " + to_cycle_string(d.element(elt.delta)) +
                                             " of N is not central in Δ (N must lie in the centre)");
    }
  }
  auto find = [&](const TorusPoint& t, std::size_t delta_idx) {
    return std::find_if(spec->n_.begin(), spec->n_.end(),
                        [&](const NElement& e) { return e.delta == delta_idx && e.torus == t; });
  };
  for (const auto& a : spec->n_) {
    for (const auto& b : spec->n_) {
      if (find(a.torus + b.torus, d.multiply(a.delta, b.delta)) == spec->n_.end()) {
        throw Error(ErrorKind::NotASubgroup, "N is not closed under multiplication");
      }
    }
  }
  for (std::size_t i = 0; i < spec->n_.size(); ++i) {
    for (std::size_t j = i + 1; j < spec->n_.size(); ++j) {
      if (spec->n_[i].delta == spec->n_[j].delta || spec->n_[i].torus == spec->n_[j].torus) {
        throw Error(ErrorKind::NotDiagonal,
                    "N must embed diagonally as n ↦ (n, n⁻¹): both projections of N have to be injective");
      }
    }
  }

  spec->table_ = character_table(d, limits);
  return spec;
}

Complex fc_character_ratio(const FCGroupSpec& group, const FCCharacter& chi, const TorusPoint& torus,
                           std::size_t delta) {
  const auto& table = group.delta_table();
  const Complex eta = table.at(chi.eta, group.delta().class_of(delta)) / static_cast<double>(table.degrees[chi.eta]);
  return torus_character(chi.m, torus.coords) * eta;
}

namespace {

bool descends(const FCGroupSpec& group, const FCCharacter& chi) {
  for (const auto& n : group.n_elements()) {
    if (std::abs(fc_character_ratio(group, chi, n.torus, n.delta) - Complex(1.0, 0.0)) > 1e-6) return false;
  }
  return true;
}

// Mixed-radix decoding of the i-th weight of the box |m_j| ≤ depth.
TorusWeight box_weight(std::size_t index, std::size_t k, std::int64_t depth) {
  const auto width = static_cast<std::size_t>(2 * depth + 1);
  TorusWeight w{std::vector<std::int64_t>(k)};
  for (std::size_t j = k; j-- > 0;) {
    w.m[j] = static_cast<std::int64_t>(index % width) - depth;
    index /= width;
  }
  return w;
}

}  // namespace

std::vector<FCCharacter> enumerate_fc_characters(const FCGroupSpec& group, std::int64_t depth) {
  std::vector<FCCharacter> out;
  if (depth < 0) return out;
  const auto weights = enumerate_torus_weights(group.torus_dim(), depth);
  for (std::size_t eta = 0; eta < group.delta_table().size(); ++eta) {
    for (const auto& m : weights) {
      FCCharacter chi{eta, m};
      if (descends(group, chi)) out.push_back(std::move(chi));
    }
  }
  return out;
}

double fc_fiber_formula(const FCGroupSpec& group, const CosetPoint& g0, std::int64_t depth,
                        const FCFormulaOptions& options) {
  if (depth < 0) throw Error(ErrorKind::ConstraintViolation, "depth must be non-negative");
  if (g0.torus.dim() != group.torus_dim()) throw Error(ErrorKind::SpecMismatch, "torus dimension mismatch");
  const std::size_t delta = group.delta().require_index(g0.delta);
  const std::size_t k = group.torus_dim();
  std::size_t box = 1;
  for (std::size_t j = 0; j < k; ++j) box *= static_cast<std::size_t>(2 * depth + 1);
  const std::size_t etas = group.delta_table().size();

  const Complex sum = chunked_sum<Complex>(etas * box, options.chunk_size, options.threads, [&](std::size_t i) {
    FCCharacter chi{i / box, box_weight(i % box, k, depth)};
    if (!descends(group, chi)) return Complex(0.0, 0.0);
    return fc_character_ratio(group, chi, g0.torus, delta);
  });
  const double value = sum.real() / static_cast<double>(box) * static_cast<double>(group.n_order()) /
                       static_cast<double>(group.delta().order());
  const double imag = sum.imag() / static_cast<double>(box) * static_cast<double>(group.n_order()) /
                      static_cast<double>(group.delta().order());
  if (std::abs(imag) > 1e-9) {
    throw Error(ErrorKind::NonRealResult, "character sum has imaginary part " + std::to_string(imag));
  }
  return value;
}

namespace {

bool torus_trivial_checked(const TorusPoint& t) {
  for (const auto& a : t.coords) {
    if (a.is_identity()) continue;
    if (!a.is_exact() && std::min(a.radians(), kTwoPi - a.radians()) < 1e-12) {
      throw Error(ErrorKind::AmbiguousInput,
                  "torus coordinate " + to_string(a) + " is within 1e-12 of 2πZ; supply it in exact form");
    }
    return false;
  }
  return true;
}

}  // namespace

Rational fc_fiber_exact(const FCGroupSpec& group, const CosetPoint& g0, const Limits& limits) {
  if (g0.torus.dim() != group.torus_dim()) throw Error(ErrorKind::SpecMismatch, "torus dimension mismatch");
  const FiniteGroup& d = group.delta();
  const std::size_t delta = d.require_index(g0.delta);
  const auto order = static_cast<std::int64_t>(d.order());
  Rational total(0);
  for (const auto& n : group.n_elements()) {
    if (!torus_trivial_checked(g0.torus + n.torus)) continue;
    total += Rational(static_cast<std::int64_t>(brute_force_fiber(d, d.multiply(delta, n.delta), limits)), order * order);
  }
  return total;
}

double fc_fiber_error_bound(const FCGroupSpec& group, const CosetPoint& g0, std::int64_t depth, const Limits& limits) {
  const FiniteGroup& d = group.delta();
  const std::size_t delta = d.require_index(g0.delta);
  const double order = static_cast<double>(d.order());
  double bound = 0.0;
  for (const auto& n : group.n_elements()) {
    const TorusPoint shifted = g0.torus + n.torus;
    if (torus_trivial_checked(shifted)) continue;
    const double weight = static_cast<double>(brute_force_fiber(d, d.multiply(delta, n.delta), limits)) / (order * order);
    if (weight == 0.0) continue;
    bound += weight * torus_partial_sum(shifted.coords, depth).bound;
  }
  return bound;
}

}  // namespace frobenius
