#include "frobenius/weyl.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobenius/errors.hpp"
#include "frobenius/parallel.hpp"

namespace frobenius {

std::int64_t DominantWeight::weight_sum() const {
  std::int64_t s = 0;
  for (auto v : a) s += v;
  return s;
}

std::vector<std::int64_t> partition_of(const DominantWeight& weight) {
  const std::size_t n = weight.a.size() + 1;
  std::vector<std::int64_t> lambda(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) lambda[i] = lambda[i + 1] + weight.a[i];
  return lambda;
}

std::uint64_t dominant_weight_count(std::size_t rank, std::int64_t depth) {
  if (depth < 0) return 0;
  // C(depth + rank, rank), multiplicative form keeps every partial product integral
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= rank; ++i) {
    c = c * static_cast<unsigned __int128>(static_cast<std::uint64_t>(depth) + i) / i;
    if (c > static_cast<unsigned __int128>(UINT64_MAX)) throw Error(ErrorKind::Overflow, "weight count overflows");
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<DominantWeight> enumerate_dominant_weights(std::size_t rank, std::int64_t depth, const Limits& limits) {
  if (rank == 0) throw Error(ErrorKind::ConstraintViolation, "rank must be at least 1");
  if (depth < 0) throw Error(ErrorKind::ConstraintViolation, "depth must be non-negative");
  const std::uint64_t count = dominant_weight_count(rank, depth);
  if (count > limits.max_weights) {
    throw Error(ErrorKind::CapExceeded, std::to_string(count) + " dominant weights exceed the cap of " +
                                            std::to_string(limits.max_weights) + " (FROBENIUS_MAX_WEIGHTS)");
  }
  std::vector<DominantWeight> out;
  out.reserve(count);
  std::vector<std::int64_t> a(rank, 0);
  std::int64_t sum = 0;
  while (true) {
    out.push_back({a});
    // next tuple in lexicographic order with sum ≤ depth
    std::size_t j = rank;
    while (true) {
      if (j == 0) return out;
      --j;
      if (sum < depth) {
        ++a[j];
        ++sum;
        for (std::size_t t = j + 1; t < rank; ++t) {
          sum -= a[t];
          a[t] = 0;
        }
        break;
      }
      sum -= a[j];
      a[j] = 0;
    }
  }
}

std::uint64_t weyl_dimension(const DominantWeight& weight, std::size_t n) {
  using boost::multiprecision::cpp_int;
  if (weight.a.size() + 1 != n) {
    throw Error(ErrorKind::DimensionMismatch, "SU(" + std::to_string(n) + ") weights have " + std::to_string(n - 1) +
                                                  " entries, got " + std::to_string(weight.a.size()));
  }
  const auto lambda = partition_of(weight);
  cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= cpp_int(lambda[i] - lambda[j] + static_cast<std::int64_t>(j - i));
      den *= cpp_int(static_cast<std::int64_t>(j - i));
    }
  }
  cpp_int dim = num / den;
  if (dim * den != num || dim > cpp_int(UINT64_MAX)) {
    throw Error(ErrorKind::Overflow, "Weyl dimension does not fit in 64 bits");
  }
  return dim.convert_to<std::uint64_t>();
}

std::vector<Complex> complete_homogeneous(std::span<const Complex> eigenvalues, std::size_t max_degree) {
  std::vector<Complex> h(max_degree + 1, Complex(0.0, 0.0));
  h[0] = 1.0;
  for (const auto& x : eigenvalues) {
    for (std::size_t k = 1; k <= max_degree; ++k) h[k] += x * h[k - 1];
  }
  return h;
}

namespace {

Complex small_determinant(const Eigen::MatrixXcd& m) {
  switch (m.rows()) {
    case 0: return 1.0;
    case 1: return m(0, 0);
    case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default: return m.partialPivLu().determinant();
  }
}

std::vector<Complex> eigenvalues_of(std::span<const Angle> theta) {
  std::vector<Complex> x;
  x.reserve(theta.size());
  for (const auto& t : theta) x.push_back(std::polar(1.0, t.radians()));
  return x;
}

void require_special_unitary_angles(std::span<const Angle> theta) {
  Angle total = Angle::zero();
  for (const auto& t : theta) total = total + t;
  const bool ok = total.is_exact() ? total.is_identity() : circular_distance(total, Angle::zero()) <= 1e-9;
  if (!ok) {
    throw Error(ErrorKind::ConstraintViolation,
                "eigenangles must sum to 0 mod 2π for SU(N), got " + to_string(total));
  }
}

std::size_t partition_length(std::span<const std::int64_t> lambda) {
  std::size_t len = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] != 0) len = i + 1;
  }
  return len;
}

}  // namespace

Complex schur_jacobi_trudi(std::span<const std::int64_t> partition, std::span<const Complex> h) {
  const std::size_t len = partition_length(partition);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(len));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      const std::int64_t k = partition[i] - static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j);
      Complex v = 0.0;
      if (k >= 0) {
        if (static_cast<std::size_t>(k) >= h.size()) {
          throw Error(ErrorKind::DimensionMismatch, "not enough complete homogeneous polynomials supplied");
        }
        v = h[static_cast<std::size_t>(k)];
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return small_determinant(m);
}

Complex schur_bialternant(std::span<const std::int64_t> partition, std::span<const Complex> eigenvalues) {
  const std::size_t n = eigenvalues.size();
  if (partition.size() > n) throw Error(ErrorKind::DimensionMismatch, "partition longer than the eigenvalue list");
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd num(nn, nn), den(nn, nn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t part = j < partition.size() ? partition[j] : 0;
      const auto shift = static_cast<int>(n - 1 - j);
      num(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::pow(eigenvalues[i], static_cast<int>(part) + shift);
      den(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::pow(eigenvalues[i], shift);
    }
  }
  const Complex vandermonde = den.partialPivLu().determinant();
  if (std::abs(vandermonde) < 1e-12) {
    throw Error(ErrorKind::ConstraintViolation, "bialternant undefined at repeated eigenvalues");
  }
  return num.partialPivLu().determinant() / vandermonde;
}

Complex su_character(const DominantWeight& weight, std::span<const Angle> theta) {
  if (weight.a.size() + 1 != theta.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight of rank " + std::to_string(weight.a.size()) + " against " +
                                                  std::to_string(theta.size()) + " eigenangles");
  }
  require_special_unitary_angles(theta);
  const auto x = eigenvalues_of(theta);
  const auto lambda = partition_of(weight);
  const auto h = complete_homogeneous(x, static_cast<std::size_t>(lambda[0]) + theta.size());
  return schur_jacobi_trudi(lambda, h);
}

Complex su_character_bialternant(const DominantWeight& weight, std::span<const Angle> theta) {
  if (weight.a.size() + 1 != theta.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight/eigenangle length mismatch");
  }
  require_special_unitary_angles(theta);
  return schur_bialternant(partition_of(weight), eigenvalues_of(theta));
}

Complex su_character_of_matrix(const DominantWeight& weight, const Eigen::MatrixXcd& u) {
  const auto n = static_cast<std::size_t>(u.rows());
  if (weight.a.size() + 1 != n) throw Error(ErrorKind::DimensionMismatch, "weight/matrix size mismatch");
  const auto lambda = partition_of(weight);
  const std::size_t top = static_cast<std::size_t>(lambda[0]) + n;
  // Newton: k h_k = Σ_{i=1}^{k} p_i h_{k−i}, p_i = tr(U^i)
  std::vector<Complex> p(top + 1, 0.0);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  for (std::size_t i = 1; i <= top; ++i) {
    power = power * u;
    p[i] = power.trace();
  }
  std::vector<Complex> h(top + 1, 0.0);
  h[0] = 1.0;
  for (std::size_t k = 1; k <= top; ++k) {
    Complex s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += p[i] * h[k - i];
    h[k] = s / static_cast<double>(k);
  }
  return schur_jacobi_trudi(lambda, h);
}

namespace {

// Σ_{weight-sum ≤ depth} χ(g)/χ(1) for SU(n) at the given eigenvalues.
Complex su_raw_sum(std::size_t n, std::span<const Complex> eigenvalues, std::int64_t depth,
                   const PartialSumOptions& options) {
  const auto weights = enumerate_dominant_weights(n - 1, depth, options.limits);
  const auto h = complete_homogeneous(eigenvalues, static_cast<std::size_t>(depth) + n);
  return chunked_sum<Complex>(weights.size(), options.chunk_size, options.threads, [&](std::size_t i) {
    const auto lambda = partition_of(weights[i]);
    return schur_jacobi_trudi(lambda, h) / static_cast<double>(weyl_dimension(weights[i], n));
  });
}

}  // namespace

SUPartialSumReport su_partial_sum(std::size_t n, std::span<const Angle> theta, std::int64_t depth,
                                  const PartialSumOptions& options) {
  if (n < 2) throw Error(ErrorKind::ConstraintViolation, "SU(N) needs N ≥ 2");
  if (theta.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "SU(" + std::to_string(n) + ") needs " + std::to_string(n) + " eigenangles, got " + std::to_string(theta.size()));
  }
  if (depth < 0) throw Error(ErrorKind::ConstraintViolation, "depth must be non-negative");
  require_special_unitary_angles(theta);

  SUPartialSumReport report;
  report.n = n;
  report.depth = depth;
  report.theta.assign(theta.begin(), theta.end());
  report.chunk_size = options.chunk_size;
  report.raw = su_raw_sum(n, eigenvalues_of(theta), depth, options);
  report.irr_count = dominant_weight_count(n - 1, depth);
  const auto d = static_cast<std::int64_t>(n * n - 1);
  const auto r = static_cast<std::int64_t>(n - 1);
  report.exponent = d - r + 1;
  const double count = static_cast<double>(report.irr_count);
  const double scale = std::pow(count, static_cast<double>(d - r));
  report.normalized = (report.raw / count) / scale;
  report.bound = 1.0 / scale;
  report.violation = std::abs(report.normalized) > report.bound;
  return report;
}

namespace {

struct FactorSum {
  Complex raw;
  std::uint64_t count;
};

FactorSum factor_sum(const GroupSpec& spec, const GroupPoint& point, std::int64_t depth,
                     const PartialSumOptions& options) {
  if (const auto* torus = std::get_if<TorusSpec>(&spec.value)) {
    const auto* t = std::get_if<TorusPoint>(&point.value);
    if (!t || t->dim() != torus->dim) throw Error(ErrorKind::SpecMismatch, "expected a torus point");
    FactorSum out{1.0, 1};
    for (const auto& angle : t->coords) {
      double kernel = 0.0;
      for (std::int64_t m = -depth; m <= depth; ++m) kernel += std::cos(angle.scaled(m).radians());
      out.raw *= kernel;
      out.count *= static_cast<std::uint64_t>(2 * depth + 1);
    }
    return out;
  }
  if (const auto* su = std::get_if<SUSpec>(&spec.value)) {
    const auto* u = std::get_if<SpecialUnitaryPoint>(&point.value);
    if (!u || static_cast<std::size_t>(u->matrix.rows()) != su->n) {
      throw Error(ErrorKind::SpecMismatch, "expected an SU(" + std::to_string(su->n) + ") point");
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u->matrix, false);
    std::vector<Complex> x(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    return {su_raw_sum(su->n, x, depth, options), dominant_weight_count(su->n - 1, depth)};
  }
  if (const auto* product = std::get_if<ProductSpec>(&spec.value)) {
    const auto* p = std::get_if<ProductPoint>(&point.value);
    if (!p || p->components.size() != product->factors.size()) {
      throw Error(ErrorKind::SpecMismatch, "expected a product point");
    }
    FactorSum out{1.0, 1};
    for (std::size_t i = 0; i < product->factors.size(); ++i) {
      auto f = factor_sum(product->factors[i], p->components[i], depth, options);
      out.raw *= f.raw;
      out.count *= f.count;
    }
    return out;
  }
  throw Error(ErrorKind::UnsupportedSpec, "character sums are implemented for tori, SU(N) and their products");
}

}  // namespace

CompactPartialSumReport compact_partial_sum(const GroupSpec& spec, const GroupPoint& point, std::int64_t depth,
                                            const PartialSumOptions& options) {
  if (depth < 0) throw Error(ErrorKind::ConstraintViolation, "depth must be non-negative");
  const auto f = factor_sum(spec, point, depth, options);
  CompactPartialSumReport report;
  report.depth = depth;
  report.dimension = spec.dimension();
  report.rank = spec.rank();
  report.raw = f.raw;
  report.irr_count = f.count;
  const double count = static_cast<double>(f.count);
  const double scale = std::pow(count, static_cast<double>(report.dimension - report.rank));
  report.normalized = (f.raw / count) / scale;
  report.bound = 1.0 / scale;
  return report;
}

}  // namespace frobenius
