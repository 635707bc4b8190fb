#include <doctest.h>

#include <random>

#include "frobenius/torus.hpp"
#include "frobenius/weyl.hpp"
#include "support.hpp"

using namespace frobenius;

namespace {

std::vector<Angle> angles(std::initializer_list<const char*> text) {
  std::vector<Angle> out;
  for (const char* t : text) out.push_back(parse_angle(t));
  return out;
}

std::vector<double> radians(const std::vector<Angle>& a) {
  std::vector<double> out;
  for (const auto& x : a) out.push_back(x.radians());
  return out;
}

// Random eigenangles summing to 0.
std::vector<Angle> random_su_angles(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::vector<double> t(n);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) sum += (t[i] = u(rng));
  t[n - 1] = -sum;
  std::vector<Angle> out;
  for (double x : t) out.push_back(Angle::from_radians(x));
  return out;
}

}  // namespace

TEST_CASE("dominant weight enumeration") {
  const auto w = enumerate_dominant_weights(1, 3);
  REQUIRE(w.size() == 4);
  for (std::int64_t i = 0; i < 4; ++i) CHECK(w[static_cast<std::size_t>(i)].a == std::vector<std::int64_t>{i});
  CHECK(enumerate_dominant_weights(2, 2).size() == 6);
  CHECK(enumerate_dominant_weights(2, 0).size() == 1);
  CHECK(enumerate_dominant_weights(2, 0).front().a == std::vector<std::int64_t>{0, 0});
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::int64_t n = 0; n <= 6; ++n) {
      const auto ws = enumerate_dominant_weights(r, n);
      CHECK(ws.size() == dominant_weight_count(r, n));
      CHECK(std::is_sorted(ws.begin(), ws.end(), [](const auto& x, const auto& y) { return x.a < y.a; }));
      for (const auto& x : ws) CHECK(x.weight_sum() <= n);
    }
  }
  CHECK(dominant_weight_count(2, 30) == 496);
  Limits small;
  small.max_weights = 100;
  CHECK(test::error_kind([&] { enumerate_dominant_weights(3, 10, small); }) == ErrorKind::CapExceeded);
}

TEST_CASE("Weyl dimensions match tableau counts") {
  CHECK(weyl_dimension({{3}}, 2) == 4);
  CHECK(weyl_dimension({{1, 1}}, 3) == 8);
  CHECK(weyl_dimension({{0, 0, 0}}, 4) == 1);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& w : enumerate_dominant_weights(n - 1, 4)) {
      CAPTURE(n);
      CHECK(weyl_dimension(w, n) == oracle::ssyt_count(w.a, static_cast<int>(n)));
    }
  }
  CHECK(test::error_kind([] { weyl_dimension({{1}}, 3); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("characters match tableau sums") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto theta = random_su_angles(n, rng);
      for (const auto& w : enumerate_dominant_weights(n - 1, 3)) {
        CHECK(std::abs(su_character(w, theta) - oracle::schur_by_tableaux(w.a, radians(theta))) < 1e-8);
      }
    }
  }
}

TEST_CASE("character examples") {
  CHECK(std::abs(su_character({{1}}, angles({"1/2 pi", "-1/2 pi"}))) < 1e-12);
  CHECK(std::abs(su_character({{1, 0}}, angles({"0", "2/3 pi", "-2/3 pi"}))) < 1e-12);
  for (const auto& w : enumerate_dominant_weights(2, 4)) {
    CHECK(std::abs(su_character(w, angles({"0", "0", "0"})) - static_cast<double>(weyl_dimension(w, 3))) < 1e-8);
  }
  CHECK(test::error_kind([] { su_character({{1}}, angles({"1/2 pi", "0"})); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("character symmetries") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto theta = random_su_angles(3, rng);
    std::vector<Angle> negated;
    for (const auto& a : theta) negated.push_back(-a);
    for (const auto& w : enumerate_dominant_weights(2, 4)) {
      const Complex v = su_character(w, theta);
      auto permuted = theta;
      std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
      CHECK(std::abs(su_character(w, permuted) - v) < 1e-9);
      std::swap(permuted[0], permuted[1]);
      CHECK(std::abs(su_character(w, permuted) - v) < 1e-9);
      CHECK(std::abs(su_character(w, negated) - std::conj(v)) < 1e-9);
      CHECK(std::abs(v) <= static_cast<double>(weyl_dimension(w, 3)) + 1e-8);
    }
  }
}

TEST_CASE("SU(2) closed form") {
  for (double t : {0.1, 0.7, 1.3, 2.9, -2.0}) {
    const std::vector<Angle> theta{Angle::from_radians(t), Angle::from_radians(-t)};
    for (std::int64_t m = 0; m <= 12; ++m) {
      CHECK(std::abs(su_character({{m}}, theta) - oracle::su2_character(static_cast<int>(m), t)) < 1e-8);
    }
  }
}

TEST_CASE("Jacobi-Trudi agrees with the bialternant") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto theta = random_su_angles(n, rng);
      for (const auto& w : enumerate_dominant_weights(n - 1, 3)) {
        CHECK(std::abs(su_character(w, theta) - su_character_bialternant(w, theta)) < 1e-8);
      }
    }
  }
}

TEST_CASE("characters of a matrix") {
  Eigen::MatrixXcd u = diagonal_unitary({0.4, 1.1, -1.5});
  const std::vector<Angle> theta{Angle::from_radians(0.4), Angle::from_radians(1.1), Angle::from_radians(-1.5)};
  for (const auto& w : enumerate_dominant_weights(2, 3)) {
    CHECK(std::abs(su_character_of_matrix(w, u) - su_character(w, theta)) < 1e-9);
  }
}

TEST_CASE("normalized partial sums") {
  const auto e2 = angles({"0", "0"});
  const auto r = su_partial_sum(2, e2, 9);
  CHECK(std::abs(r.normalized - 0.01) < 1e-15);
  CHECK(r.irr_count == 10);
  CHECK(r.exponent == 3);

  const auto q = su_partial_sum(2, angles({"1/2 pi", "-1/2 pi"}), 3);
  CHECK(std::abs(q.raw - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(q.normalized - (2.0 / 3.0) / 64.0) < 1e-12);

  const auto s = su_partial_sum(3, angles({"0", "0", "0"}), 2);
  CHECK(s.irr_count == 6);
  CHECK(s.normalized.real() == doctest::Approx(std::pow(6.0, -6.0)).epsilon(1e-14));
  CHECK(s.normalized.real() == s.bound);
}

TEST_CASE("partial sums are reproducible for a fixed chunking") {
  const auto theta = angles({"0.3", "1.2", "-1.5"});
  PartialSumOptions one;
  one.chunk_size = 7;
  PartialSumOptions two = one;
  two.threads = 3;
  CHECK(su_partial_sum(3, theta, 15, one).raw == su_partial_sum(3, theta, 15, two).raw);
}

TEST_CASE("products of tori and SU factors") {
  GroupSpec spec{ProductSpec{{GroupSpec{SUSpec{2}}, GroupSpec{TorusSpec{1}}}}};
  CHECK(spec.dimension() == 4);
  CHECK(spec.rank() == 2);
  const GroupPoint e = identity(spec);
  const auto r = compact_partial_sum(spec, e, 3);
  // (n+1) SU(2) weights times (2n+1) torus weights
  CHECK(r.irr_count == 4 * 7);
  CHECK(std::abs(r.raw - 28.0) < 1e-9);
  CHECK(std::abs(r.normalized) <= r.bound * (1 + 1e-12));

  GroupSpec torus{TorusSpec{2}};
  const GroupPoint t{TorusPoint{{Angle::from_turns(Rational(1, 3)), Angle::zero()}}};
  const auto tr = compact_partial_sum(torus, t, 10);
  CHECK(std::abs(tr.normalized - torus_partial_sum(t.as<TorusPoint>().coords, 10).value) < 1e-12);
}
