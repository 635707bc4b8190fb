#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "frobenius/permutation.hpp"
#include "frobenius/rational.hpp"

namespace frobenius {

class FiniteGroup;
class FCGroupSpec;
class SemidirectSpec;

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Points

struct TorusPoint {
  std::vector<Angle> coords;

  static TorusPoint identity(std::size_t dim) { return {std::vector<Angle>(dim, Angle::zero())}; }
  std::size_t dim() const noexcept { return coords.size(); }
  bool is_exact() const noexcept;
  bool is_identity() const noexcept;

  TorusPoint operator+(const TorusPoint& other) const;
  TorusPoint operator-() const;
  bool operator==(const TorusPoint& other) const;
};

struct SpecialUnitaryPoint {
  Eigen::MatrixXcd matrix;
};

struct GroupPoint;

struct ProductPoint {
  std::vector<GroupPoint> components;
};

// Canonical representative (torus part, Δ part) of a coset in (T^k × Δ)/N.
struct CosetPoint {
  TorusPoint torus;
  Permutation delta;
};

// (t, φ) in T^k ⋊ Φ.
struct SemidirectPoint {
  TorusPoint torus;
  Permutation phi;
};

struct GroupPoint {
  using Variant =
      std::variant<Permutation, TorusPoint, SpecialUnitaryPoint, ProductPoint, CosetPoint, SemidirectPoint>;
  Variant value;

  GroupPoint() = default;
  GroupPoint(Permutation p) : value(std::move(p)) {}
  GroupPoint(TorusPoint t) : value(std::move(t)) {}
  GroupPoint(SpecialUnitaryPoint u) : value(std::move(u)) {}
  GroupPoint(ProductPoint p) : value(std::move(p)) {}
  GroupPoint(CosetPoint c) : value(std::move(c)) {}
  GroupPoint(SemidirectPoint s) : value(std::move(s)) {}

  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
};

// ---------------------------------------------------------------------------
// Ambient groups

struct FiniteSpec {
  std::shared_ptr<const FiniteGroup> group;
  std::string name;  // built-in name, empty for descriptor input
};
struct TorusSpec {
  std::size_t dim = 1;
};
struct SUSpec {
  std::size_t n = 2;
};
struct GroupSpec;
struct ProductSpec {
  std::vector<GroupSpec> factors;
};
struct FCQuotientSpec {
  std::shared_ptr<const FCGroupSpec> group;
};
struct SemidirectProductSpec {
  std::shared_ptr<const SemidirectSpec> group;
};

struct GroupSpec {
  using Variant =
      std::variant<FiniteSpec, TorusSpec, SUSpec, ProductSpec, FCQuotientSpec, SemidirectProductSpec>;
  Variant value;

  GroupSpec() = default;
  GroupSpec(FiniteSpec s) : value(std::move(s)) {}
  GroupSpec(TorusSpec s) : value(s) {}
  GroupSpec(SUSpec s) : value(s) {}
  GroupSpec(ProductSpec s) : value(std::move(s)) {}
  GroupSpec(FCQuotientSpec s) : value(std::move(s)) {}
  GroupSpec(SemidirectProductSpec s) : value(std::move(s)) {}

  // Real dimension d and rank r (dimension of a maximal torus).
  // SU(N): d = N²−1, r = N−1; T^k: d = r = k; finite groups: 0.
  std::size_t dimension() const;
  std::size_t rank() const;

  // Stable human-readable description and a 64-bit FNV-1a digest of it.
  std::string describe() const;
  std::string digest() const;
};

// ---------------------------------------------------------------------------
// Element algebra. Every operation checks that its operands have the shape
// the GroupSpec expects and throws SpecMismatch otherwise. Results are canonical.

GroupPoint identity(const GroupSpec& spec);
GroupPoint multiply(const GroupSpec& spec, const GroupPoint& a, const GroupPoint& b);
GroupPoint inverse(const GroupSpec& spec, const GroupPoint& a);
// a b a⁻¹ b⁻¹
GroupPoint commutator(const GroupSpec& spec, const GroupPoint& a, const GroupPoint& b);
// h a h⁻¹
GroupPoint conjugate(const GroupSpec& spec, const GroupPoint& h, const GroupPoint& a);
GroupPoint canonicalize(const GroupSpec& spec, const GroupPoint& a);

// Metric used by the ε-ball estimators:
//   finite parts      discrete 0/1
//   tori              max over coordinates of circular distance
//   SU(N)             Frobenius norm of the difference
//   products, (t, φ)  max over components
//   quotients         minimum over N of the representative distance
double distance(const GroupSpec& spec, const GroupPoint& a, const GroupPoint& b);
std::string metric_name(const GroupSpec& spec);

// Throws SpecMismatch on a shape mismatch and ConstraintViolation when a
// point breaks its representation invariants (non-unitary matrix, element not
// in the finite group, ...).
void validate_point(const GroupSpec& spec, const GroupPoint& a, double matrix_tolerance = 1e-9);

// True when every component is a finite group or a torus, so equality of
// commutators can be decided without a tolerance.
bool has_exact_commutators(const GroupSpec& spec);

std::string format_point(const GroupSpec& spec, const GroupPoint& a);

// Re-unitarizes and fixes det = 1 when the drift from SU(N) exceeds 1e−12.
Eigen::MatrixXcd renormalize_special_unitary(const Eigen::MatrixXcd& u);

// diag(e^{iθ_1}, …, e^{iθ_N})
Eigen::MatrixXcd diagonal_unitary(const std::vector<double>& angles);

}  // namespace frobenius
