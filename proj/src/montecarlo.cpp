#include "frobenius/montecarlo.hpp"

#include <chrono>
#include <cmath>

#include "frobenius/errors.hpp"
#include "frobenius/fc_structure.hpp"
#include "frobenius/finite_group.hpp"
#include "frobenius/open_fc.hpp"
#include "frobenius/parallel.hpp"

namespace frobenius {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
  engine_.seed(seq);
}

double RngStream::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

std::size_t RngStream::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

double RngStream::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

namespace {

template <int N>
using FixedMatrix = Eigen::Matrix<Complex, N, N>;

template <class Matrix>
void fill_haar_unitary(Matrix& q, RngStream& rng) {
  const auto m = q.rows();
  Matrix z(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) z(i, j) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  q = qr.householderQ();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex d = qr.matrixQR()(j, j);
    const double mod = std::abs(d);
    q.col(j) *= mod > 0.0 ? d / mod : Complex(1.0, 0.0);
  }
}

template <class Matrix>
void to_special(Matrix& u, RngStream& rng) {
  const auto n = static_cast<std::size_t>(u.rows());
  const double phase = std::arg(u.determinant());
  const auto k = static_cast<double>(rng.index(n));
  u *= std::polar(1.0, -(phase + kTwoPi * k) / static_cast<double>(n));
}

template <int N>
FixedMatrix<N> haar_special_fixed(RngStream& rng) {
  FixedMatrix<N> u;
  fill_haar_unitary(u, rng);
  to_special(u, rng);
  return u;
}

}  // namespace

Eigen::MatrixXcd haar_unitary(std::size_t n, RngStream& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd q(m, m);
  fill_haar_unitary(q, rng);
  return q;
}

// Fixed-size kernels for N = 2, 3 consume the generator identically, so both
// paths return the same matrices.
Eigen::MatrixXcd haar_special_unitary(std::size_t n, RngStream& rng) {
  if (n == 2) return haar_special_fixed<2>(rng);
  if (n == 3) return haar_special_fixed<3>(rng);
  Eigen::MatrixXcd u = haar_unitary(n, rng);
  to_special(u, rng);
  return u;
}

GroupPoint haar_sample(const GroupSpec& spec, RngStream& rng) {
  auto torus = [&](std::size_t k) {
    TorusPoint t = TorusPoint::identity(k);
    for (auto& a : t.coords) a = Angle::from_radians(rng.uniform(0.0, kTwoPi));
    return t;
  };
  return std::visit(
      [&](const auto& s) -> GroupPoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return s.group->element(rng.index(s.group->order()));
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return torus(s.dim);
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          return SpecialUnitaryPoint{haar_special_unitary(s.n, rng)};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          ProductPoint p;
          for (const auto& f : s.factors) p.components.push_back(haar_sample(f, rng));
          return p;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          const auto& g = *s.group;
          auto t = torus(g.torus_dim());
          return g.canonical(t, rng.index(g.delta().order()));
        } else if constexpr (std::is_same_v<T, SemidirectProductSpec>) {
          const auto& g = *s.group;
          auto t = torus(g.torus_dim());
          return SemidirectPoint{std::move(t), g.phi().element(rng.index(g.phi().order()))};
        } else {
          throw Error(ErrorKind::UnsupportedSpec, "no Haar sampler for " + spec.describe());
        }
      },
      spec.value);
}

namespace {

// `pair_hit(rng)` draws one Haar pair and reports whether it counts.
template <class PairHit>
MCEstimate run_pairs(const GroupSpec& spec, std::uint64_t samples, std::uint64_t seed, const MCOptions& options,
                     PairHit pair_hit) {
  if (samples < 1) throw Error(ErrorKind::ConstraintViolation, "samples must be ≥ 1");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t chunk = std::max<std::size_t>(options.chunk_size, 1);
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  for_each_chunk(chunks, options.threads, [&](std::size_t c) {
    RngStream rng(seed, c);
    const std::uint64_t lo = c * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(samples, lo + chunk);
    std::uint64_t local = 0;
    for (std::uint64_t i = lo; i < hi; ++i) local += pair_hit(rng) ? 1 : 0;
    hits[c] = local;
  });

  MCEstimate out;
  for (auto h : hits) out.hits += h;
  out.samples = samples;
  out.seed = seed;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  out.metric = metric_name(spec);
  out.group = spec.describe();
  out.group_digest = spec.digest();
  out.chunk_size = chunk;
  out.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

template <int N>
auto su_ball(const Eigen::MatrixXcd& target, double epsilon) {
  const FixedMatrix<N> t = target;
  return [t, epsilon](RngStream& rng) {
    const FixedMatrix<N> x = haar_special_fixed<N>(rng);
    const FixedMatrix<N> y = haar_special_fixed<N>(rng);
    const FixedMatrix<N> c = x * y * x.adjoint() * y.adjoint();
    return (c - t).norm() < epsilon;
  };
}

// Pairs with d([x, y], target) < ε, or == target when exact.
MCEstimate ball_pairs(const GroupSpec& spec, const GroupPoint& target, double epsilon, bool exact,
                      std::uint64_t samples, std::uint64_t seed, const MCOptions& options) {
  if (const auto* su = std::get_if<SUSpec>(&spec.value); su && (su->n == 2 || su->n == 3)) {
    const auto& t = target.as<SpecialUnitaryPoint>().matrix;
    if (su->n == 2) return run_pairs(spec, samples, seed, options, su_ball<2>(t, epsilon));
    return run_pairs(spec, samples, seed, options, su_ball<3>(t, epsilon));
  }
  return run_pairs(spec, samples, seed, options, [&](RngStream& rng) {
    const GroupPoint x = haar_sample(spec, rng);
    const GroupPoint y = haar_sample(spec, rng);
    const double d = distance(spec, commutator(spec, x, y), target);
    return exact ? d == 0.0 : d < epsilon;
  });
}

}  // namespace

MCEstimate estimate_commuting_probability(const GroupSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                          double epsilon, const MCOptions& options) {
  const GroupPoint e = identity(spec);
  const bool exact = has_exact_commutators(spec);
  if (!exact && !(epsilon > 0.0)) throw Error(ErrorKind::ConstraintViolation, "epsilon must be > 0");
  MCEstimate out = ball_pairs(spec, e, epsilon, exact, samples, seed, options);
  out.epsilon = epsilon;
  out.exact_equality = exact;
  return out;
}

MCEstimate estimate_ball_fiber(const GroupSpec& spec, const GroupPoint& g, double epsilon, std::uint64_t samples,
                               std::uint64_t seed, const MCOptions& options) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::ConstraintViolation, "epsilon must be > 0");
  const GroupPoint target = canonicalize(spec, g);
  MCEstimate out = ball_pairs(spec, target, epsilon, false, samples, seed, options);
  out.epsilon = epsilon;
  return out;
}

std::vector<OrthogonalityEntry> su_character_orthogonality(std::size_t n, std::int64_t depth, std::uint64_t samples,
                                                           std::uint64_t seed, const MCOptions& options) {
  if (n < 2) throw Error(ErrorKind::ConstraintViolation, "SU(N) needs N ≥ 2");
  if (samples < 2) throw Error(ErrorKind::ConstraintViolation, "samples must be ≥ 2");
  const auto weights = enumerate_dominant_weights(n - 1, depth);
  const std::size_t w = weights.size();
  std::vector<std::vector<std::int64_t>> partitions;
  for (const auto& a : weights) partitions.push_back(partition_of(a));
  const std::size_t top = static_cast<std::size_t>(std::max<std::int64_t>(depth, 0)) + n;

  // Per chunk: Σz, Σ|Re z|², Σ|Im z|² for every ordered pair (a, b).
  struct Moments {
    std::vector<Complex> sum;
    std::vector<double> re2, im2;
  };
  const std::size_t chunk = std::max<std::size_t>(options.chunk_size, 1);
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  std::vector<Moments> moments(chunks);
  for_each_chunk(chunks, options.threads, [&](std::size_t c) {
    RngStream rng(seed, c);
    Moments m{std::vector<Complex>(w * w), std::vector<double>(w * w), std::vector<double>(w * w)};
    std::vector<Complex> chi(w), p(top + 1), h(top + 1);
    const std::uint64_t lo = c * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(samples, lo + chunk);
    for (std::uint64_t s = lo; s < hi; ++s) {
      const Eigen::MatrixXcd u = haar_special_unitary(n, rng);
      Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
      for (std::size_t i = 1; i <= top; ++i) {
        power = power * u;
        p[i] = power.trace();
      }
      h[0] = 1.0;
      for (std::size_t k = 1; k <= top; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) acc += p[i] * h[k - i];
        h[k] = acc / static_cast<double>(k);
      }
      for (std::size_t a = 0; a < w; ++a) chi[a] = schur_jacobi_trudi(partitions[a], h);
      for (std::size_t a = 0; a < w; ++a) {
        for (std::size_t b = 0; b < w; ++b) {
          const Complex z = chi[a] * std::conj(chi[b]);
          m.sum[a * w + b] += z;
          m.re2[a * w + b] += z.real() * z.real();
          m.im2[a * w + b] += z.imag() * z.imag();
        }
      }
    }
    moments[c] = std::move(m);
  });

  const auto ns = static_cast<double>(samples);
  std::vector<OrthogonalityEntry> out;
  for (std::size_t a = 0; a < w; ++a) {
    for (std::size_t b = 0; b < w; ++b) {
      Complex sum = 0.0;
      double re2 = 0.0, im2 = 0.0;
      for (const auto& m : moments) {
        sum += m.sum[a * w + b];
        re2 += m.re2[a * w + b];
        im2 += m.im2[a * w + b];
      }
      OrthogonalityEntry e;
      e.a = weights[a];
      e.b = weights[b];
      e.mean = sum / ns;
      e.expected = a == b ? 1.0 : 0.0;
      const double var_re = std::max(0.0, (re2 / ns - e.mean.real() * e.mean.real()) * ns / (ns - 1.0));
      const double var_im = std::max(0.0, (im2 / ns - e.mean.imag() * e.mean.imag()) * ns / (ns - 1.0));
      e.standard_error = std::sqrt((var_re + var_im) / ns);
      e.within_three_sigma = std::abs(e.mean - Complex(e.expected, 0.0)) <= 3.0 * e.standard_error + 1e-12;
      out.push_back(std::move(e));
    }
  }
  return out;
}

ConjugationCheck conjugation_invariance(const GroupSpec& spec, const GroupPoint& g, const GroupPoint& h,
                                        double epsilon, std::uint64_t samples, std::uint64_t seed,
                                        const MCOptions& options) {
  ConjugationCheck out;
  out.conjugate = conjugate(spec, h, g);
  out.at_g = estimate_ball_fiber(spec, g, epsilon, samples, seed, options);
  out.at_conjugate = estimate_ball_fiber(spec, out.conjugate, epsilon, samples, seed + 1, options);
  out.combined_standard_error = std::hypot(out.at_g.standard_error, out.at_conjugate.standard_error);
  out.within_three_sigma =
      std::abs(out.at_g.estimate - out.at_conjugate.estimate) <= 3.0 * out.combined_standard_error + 1e-12;
  return out;
}

}  // namespace frobenius
