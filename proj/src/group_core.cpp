#include "frobenius/group_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "frobenius/errors.hpp"
#include "frobenius/fc_structure.hpp"
#include "frobenius/finite_group.hpp"
#include "frobenius/open_fc.hpp"

namespace frobenius {

bool TorusPoint::is_exact() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](const Angle& a) { return a.is_exact(); });
}

bool TorusPoint::is_identity() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](const Angle& a) { return a.is_identity(); });
}

TorusPoint TorusPoint::operator+(const TorusPoint& other) const {
  if (other.dim() != dim()) throw Error(ErrorKind::SpecMismatch, "torus points of different dimension");
  TorusPoint out = *this;
  for (std::size_t j = 0; j < coords.size(); ++j) out.coords[j] = coords[j] + other.coords[j];
  return out;
}

TorusPoint TorusPoint::operator-() const {
  TorusPoint out = *this;
  for (auto& a : out.coords) a = -a;
  return out;
}

bool TorusPoint::operator==(const TorusPoint& other) const { return coords == other.coords; }

// ---------------------------------------------------------------------------
// GroupSpec

std::size_t GroupSpec::dimension() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TorusSpec>) {
          return s.dim;
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return s.n * s.n - 1;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::size_t d = 0;
          for (const auto& f : s.factors) d += f.dimension();
          return d;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          return s.group->torus_dim();
        } else if constexpr (std::is_same_v<T, SemidirectProductSpec>) {
          return s.group->torus_dim();
        } else {
          return 0;
        }
      },
      value);
}

std::size_t GroupSpec::rank() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SUSpec>) {
          return s.n - 1;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::size_t r = 0;
          for (const auto& f : s.factors) r += f.rank();
          return r;
        } else {
          return GroupSpec(s).dimension();
        }
      },
      value);
}

namespace {

std::string describe_finite(const FiniteGroup& g) {
  std::string out = "perm" + std::to_string(g.degree()) + "<";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += ",";
    out += to_cycle_string(g.element(g.generators()[i]));
  }
  return out + ">";
}

std::string describe_torus(const TorusPoint& t) {
  std::string out = "[";
  for (std::size_t j = 0; j < t.dim(); ++j) {
    if (j) out += ",";
    out += to_string(t.coords[j]);
  }
  return out + "]";
}

}  // namespace

std::string GroupSpec::describe() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return s.name.empty() ? describe_finite(*s.group) : s.name;
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return "T" + std::to_string(s.dim);
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return "SU" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::string out = "product(";
          for (std::size_t i = 0; i < s.factors.size(); ++i) out += (i ? "," : "") + s.factors[i].describe();
          return out + ")";
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          const auto& g = *s.group;
          std::string out = "fc(T" + std::to_string(g.torus_dim()) + "," + describe_finite(g.delta()) + ",N={";
          for (std::size_t i = 0; i < g.n_elements().size(); ++i) {
            const auto& n = g.n_elements()[i];
            out += (i ? ";" : "") + describe_torus(n.torus) + to_cycle_string(g.delta().element(n.delta));
          }
          return out + "})";
        } else {
          const auto& g = *s.group;
          std::string out = "semidirect(T" + std::to_string(g.torus_dim()) + "," + describe_finite(g.phi()) + ",A={";
          for (std::size_t i : g.phi().generators()) {
            out += to_cycle_string(g.phi().element(i)) + ":[";
            const auto& m = g.action(i);
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
              for (Eigen::Index c = 0; c < m.cols(); ++c) out += std::to_string(m(r, c)) + (c + 1 < m.cols() ? " " : "");
              if (r + 1 < m.rows()) out += ";";
            }
            out += "]";
          }
          return out + "})";
        }
      },
      value);
}

std::string GroupSpec::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : describe()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------
// Matrices

Eigen::MatrixXcd renormalize_special_unitary(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const double drift = (u.adjoint() * u - id).norm() + std::abs(u.determinant() - Complex(1.0, 0.0));
  if (drift <= 1e-12) return u;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd w = svd.matrixU() * svd.matrixV().adjoint();
  const Complex det = w.determinant();
  w /= std::pow(det, 1.0 / static_cast<double>(n));
  return w;
}

Eigen::MatrixXcd diagonal_unitary(const std::vector<double>& angles) {
  const auto n = static_cast<Eigen::Index>(angles.size());
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = std::polar(1.0, angles[static_cast<std::size_t>(i)]);
  return d;
}

// ---------------------------------------------------------------------------
// Element algebra

namespace {

[[noreturn]] void mismatch(const GroupSpec& spec, const char* what) {
  throw Error(ErrorKind::SpecMismatch, std::string(what) + " is not an element of " + spec.describe());
}

template <class T>
const T& expect(const GroupSpec& spec, const GroupPoint& a) {
  const T* p = std::get_if<T>(&a.value);
  if (!p) mismatch(spec, "operand");
  return *p;
}

const TorusPoint& expect_torus(const GroupSpec& spec, const GroupPoint& a, std::size_t dim) {
  const auto& t = expect<TorusPoint>(spec, a);
  if (t.dim() != dim) mismatch(spec, "torus point of wrong dimension");
  return t;
}

std::size_t expect_finite(const GroupSpec& spec, const FiniteGroup& g, const Permutation& p) {
  auto idx = g.index_of(p.degree() < g.degree() ? p.padded(g.degree()) : p);
  if (!idx) mismatch(spec, to_cycle_string(p).c_str());
  return *idx;
}

const ProductPoint& expect_product(const GroupSpec& spec, const ProductSpec& s, const GroupPoint& a) {
  const auto& p = expect<ProductPoint>(spec, a);
  if (p.components.size() != s.factors.size()) mismatch(spec, "product point of wrong length");
  return p;
}

const Eigen::MatrixXcd& expect_su(const GroupSpec& spec, std::size_t n, const GroupPoint& a) {
  const auto& u = expect<SpecialUnitaryPoint>(spec, a).matrix;
  if (static_cast<std::size_t>(u.rows()) != n || static_cast<std::size_t>(u.cols()) != n) {
    mismatch(spec, "matrix of wrong size");
  }
  return u;
}

CosetPoint expect_coset(const GroupSpec& spec, const FCGroupSpec& g, const GroupPoint& a) {
  const auto& c = expect<CosetPoint>(spec, a);
  if (c.torus.dim() != g.torus_dim()) mismatch(spec, "coset with wrong torus dimension");
  return CosetPoint{c.torus, g.delta().element(expect_finite(spec, g.delta(), c.delta))};
}

SemidirectPoint expect_semidirect(const GroupSpec& spec, const SemidirectSpec& g, const GroupPoint& a) {
  const auto& p = expect<SemidirectPoint>(spec, a);
  if (p.torus.dim() != g.torus_dim()) mismatch(spec, "pair with wrong torus dimension");
  return SemidirectPoint{p.torus, g.phi().element(expect_finite(spec, g.phi(), p.phi))};
}

}  // namespace

GroupPoint identity(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> GroupPoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return s.group->element(s.group->identity_index());
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return TorusPoint::identity(s.dim);
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          const auto n = static_cast<Eigen::Index>(s.n);
          return SpecialUnitaryPoint{Eigen::MatrixXcd::Identity(n, n)};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          ProductPoint p;
          for (const auto& f : s.factors) p.components.push_back(identity(f));
          return p;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          return CosetPoint{TorusPoint::identity(s.group->torus_dim()), s.group->delta().element(0)};
        } else {
          return SemidirectPoint{TorusPoint::identity(s.group->torus_dim()), s.group->phi().element(0)};
        }
      },
      spec.value);
}

GroupPoint multiply(const GroupSpec& spec, const GroupPoint& a, const GroupPoint& b) {
  return std::visit(
      [&](const auto& s) -> GroupPoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          const auto& g = *s.group;
          return g.element(g.multiply(expect_finite(spec, g, expect<Permutation>(spec, a)),
                                      expect_finite(spec, g, expect<Permutation>(spec, b))));
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return expect_torus(spec, a, s.dim) + expect_torus(spec, b, s.dim);
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return SpecialUnitaryPoint{renormalize_special_unitary(expect_su(spec, s.n, a) * expect_su(spec, s.n, b))};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          const auto& pa = expect_product(spec, s, a);
          const auto& pb = expect_product(spec, s, b);
          ProductPoint out;
          for (std::size_t i = 0; i < s.factors.size(); ++i) {
            out.components.push_back(multiply(s.factors[i], pa.components[i], pb.components[i]));
          }
          return out;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          const auto& g = *s.group;
          const auto ca = expect_coset(spec, g, a);
          const auto cb = expect_coset(spec, g, b);
          return g.canonical(ca.torus + cb.torus, ca.delta * cb.delta);
        } else {
          return semidirect_multiply(*s.group, expect_semidirect(spec, *s.group, a),
                                     expect_semidirect(spec, *s.group, b));
        }
      },
      spec.value);
}

GroupPoint inverse(const GroupSpec& spec, const GroupPoint& a) {
  return std::visit(
      [&](const auto& s) -> GroupPoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          const auto& g = *s.group;
          return g.element(g.inverse(expect_finite(spec, g, expect<Permutation>(spec, a))));
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return -expect_torus(spec, a, s.dim);
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return SpecialUnitaryPoint{renormalize_special_unitary(expect_su(spec, s.n, a).adjoint())};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          const auto& pa = expect_product(spec, s, a);
          ProductPoint out;
          for (std::size_t i = 0; i < s.factors.size(); ++i) out.components.push_back(inverse(s.factors[i], pa.components[i]));
          return out;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          const auto& g = *s.group;
          const auto ca = expect_coset(spec, g, a);
          return g.canonical(-ca.torus, ca.delta.inverse());
        } else {
          return semidirect_inverse(*s.group, expect_semidirect(spec, *s.group, a));
        }
      },
      spec.value);
}

GroupPoint commutator(const GroupSpec& spec, const GroupPoint& a, const GroupPoint& b) {
  if (const auto* t = std::get_if<TorusSpec>(&spec.value)) {
    expect_torus(spec, a, t->dim);
    expect_torus(spec, b, t->dim);
    return TorusPoint::identity(t->dim);
  }
  if (const auto* f = std::get_if<FiniteSpec>(&spec.value)) {
    const auto& g = *f->group;
    return g.element(g.commutator(expect_finite(spec, g, expect<Permutation>(spec, a)),
                                  expect_finite(spec, g, expect<Permutation>(spec, b))));
  }
  if (const auto* p = std::get_if<ProductSpec>(&spec.value)) {
    const auto& pa = expect_product(spec, *p, a);
    const auto& pb = expect_product(spec, *p, b);
    ProductPoint out;
    for (std::size_t i = 0; i < p->factors.size(); ++i) {
      out.components.push_back(commutator(p->factors[i], pa.components[i], pb.components[i]));
    }
    return out;
  }
  return multiply(spec, multiply(spec, a, b), multiply(spec, inverse(spec, a), inverse(spec, b)));
}

GroupPoint conjugate(const GroupSpec& spec, const GroupPoint& h, const GroupPoint& a) {
  return multiply(spec, multiply(spec, h, a), inverse(spec, h));
}

GroupPoint canonicalize(const GroupSpec& spec, const GroupPoint& a) {
  return std::visit(
      [&](const auto& s) -> GroupPoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return s.group->element(expect_finite(spec, *s.group, expect<Permutation>(spec, a)));
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return expect_torus(spec, a, s.dim);  // angles are reduced on construction
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return SpecialUnitaryPoint{renormalize_special_unitary(expect_su(spec, s.n, a))};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          const auto& pa = expect_product(spec, s, a);
          ProductPoint out;
          for (std::size_t i = 0; i < s.factors.size(); ++i) {
            out.components.push_back(canonicalize(s.factors[i], pa.components[i]));
          }
          return out;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          const auto ca = expect_coset(spec, *s.group, a);
          return s.group->canonical(ca.torus, ca.delta);
        } else {
          return expect_semidirect(spec, *s.group, a);
        }
      },
      spec.value);
}

namespace {

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, circular_distance(a.coords[j], b.coords[j]));
  return d;
}

}  // namespace

double distance(const GroupSpec& spec, const GroupPoint& a, const GroupPoint& b) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return expect_finite(spec, *s.group, expect<Permutation>(spec, a)) ==
                         expect_finite(spec, *s.group, expect<Permutation>(spec, b))
                     ? 0.0
                     : 1.0;
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return torus_distance(expect_torus(spec, a, s.dim), expect_torus(spec, b, s.dim));
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return (expect_su(spec, s.n, a) - expect_su(spec, s.n, b)).norm();
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          const auto& pa = expect_product(spec, s, a);
          const auto& pb = expect_product(spec, s, b);
          double d = 0.0;
          for (std::size_t i = 0; i < s.factors.size(); ++i) {
            d = std::max(d, distance(s.factors[i], pa.components[i], pb.components[i]));
          }
          return d;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          const auto& g = *s.group;
          const auto ca = expect_coset(spec, g, a);
          const auto cb = expect_coset(spec, g, b);
          const std::size_t da = g.delta().require_index(ca.delta);
          const std::size_t db = g.delta().require_index(cb.delta);
          double best = std::numeric_limits<double>::infinity();
          for (const auto& n : g.n_elements()) {
            const double discrete = g.delta().multiply(db, n.delta) == da ? 0.0 : 1.0;
            best = std::min(best, std::max(discrete, torus_distance(ca.torus, cb.torus + n.torus)));
          }
          return best;
        } else {
          return semidirect_distance(expect_semidirect(spec, *s.group, a), expect_semidirect(spec, *s.group, b));
        }
      },
      spec.value);
}

std::string metric_name(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return "discrete";
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return "torus-max-circular";
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return "frobenius-norm";
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::string out = "max(";
          for (std::size_t i = 0; i < s.factors.size(); ++i) out += (i ? "," : "") + metric_name(s.factors[i]);
          return out + ")";
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          return "quotient-min-over-N(max(torus-max-circular,discrete))";
        } else {
          return "max(torus-max-circular,discrete)";
        }
      },
      spec.value);
}

void validate_point(const GroupSpec& spec, const GroupPoint& a, double matrix_tolerance) {
  if (const auto* s = std::get_if<SUSpec>(&spec.value)) {
    const auto& u = expect_su(spec, s->n, a);
    const auto n = u.rows();
    const double unitarity = (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm();
    const double det = std::abs(u.determinant() - Complex(1.0, 0.0));
    if (unitarity >= matrix_tolerance || det >= matrix_tolerance) {
      throw Error(ErrorKind::ConstraintViolation, "matrix is not in SU(" + std::to_string(s->n) +
                                                      "): |U*U - I| = " + std::to_string(unitarity) +
                                                      ", |det U - 1| = " + std::to_string(det));
    }
    return;
  }
  if (const auto* p = std::get_if<ProductSpec>(&spec.value)) {
    const auto& pa = expect_product(spec, *p, a);
    for (std::size_t i = 0; i < p->factors.size(); ++i) validate_point(p->factors[i], pa.components[i], matrix_tolerance);
    return;
  }
  canonicalize(spec, a);
}

bool has_exact_commutators(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec> || std::is_same_v<T, TorusSpec>) {
          return true;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return std::all_of(s.factors.begin(), s.factors.end(), [](const GroupSpec& f) { return has_exact_commutators(f); });
        } else {
          return false;
        }
      },
      spec.value);
}

std::string format_point(const GroupSpec& spec, const GroupPoint& a) {
  return std::visit(
      [&](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          return to_cycle_string(p);
        } else if constexpr (std::is_same_v<T, TorusPoint>) {
          std::string out;
          for (std::size_t j = 0; j < p.dim(); ++j) out += (j ? ", " : "") + to_string(p.coords[j]);
          return out;
        } else if constexpr (std::is_same_v<T, SpecialUnitaryPoint>) {
          std::string out = "[";
          char buf[64];
          for (Eigen::Index r = 0; r < p.matrix.rows(); ++r) {
            out += r ? "; " : "";
            for (Eigen::Index c = 0; c < p.matrix.cols(); ++c) {
              std::snprintf(buf, sizeof buf, "%s%.6g%+.6gi", c ? " " : "", p.matrix(r, c).real(), p.matrix(r, c).imag());
              out += buf;
            }
          }
          return out + "]";
        } else if constexpr (std::is_same_v<T, ProductPoint>) {
          const auto* ps = std::get_if<ProductSpec>(&spec.value);
          std::string out;
          for (std::size_t i = 0; i < p.components.size(); ++i) {
            out += (i ? "; " : "") + (ps && i < ps->factors.size() ? format_point(ps->factors[i], p.components[i])
                                                                     : format_point(GroupSpec{}, p.components[i]));
          }
          return out;
        } else if constexpr (std::is_same_v<T, CosetPoint>) {
          return format_point(spec, GroupPoint(p.torus)) + " | " + to_cycle_string(p.delta);
        } else {
          return format_point(spec, GroupPoint(p.torus)) + " | " + to_cycle_string(p.phi);
        }
      },
      a.value);
}

}  // namespace frobenius
