// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "frobenius/descriptors.hpp"
#include "frobenius/fc_structure.hpp"
#include "frobenius/finite_group.hpp"
#include "frobenius/montecarlo.hpp"
#include "frobenius/open_fc.hpp"
#include "frobenius/torus.hpp"
#include "frobenius/weyl.hpp"
#include "oracles.hpp"

using namespace frobenius;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<oracle::Perm> raw_elements(const FiniteGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.elements()) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

std::shared_ptr<const FiniteGroup> finite(const std::string& name) {
  return std::get<FiniteSpec>(load_group(name).spec.value).group;
}

Outcome exact_frobenius() {
  Outcome o;
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    const auto g = finite(name);
    const auto table = character_table(*g);
    const auto raw = raw_elements(*g);
    for (const auto& c : g->classes()) {
      const auto f = frobenius_fiber(*g, table, c.representative);
      o.require(f == brute_force_fiber(*g, c.representative) && f == oracle::fiber(raw, raw[c.representative]),
                std::string(name) + " class " + to_cycle_string(g->element(c.representative)));
    }
  }
  const auto s3 = finite("S3");
  const auto t = character_table(*s3);
  auto at = [&](const char* cycles) { return frobenius_fiber(*s3, t, s3->require_index(parse_cycles(cycles, 3))); };
  o.require(at("()") == 18 && at("(0 1)") == 0 && at("(0 1 2)") == 9, "S3 values are not (18, 0, 9)");
  return o;
}

Outcome product_residuals() {
  Outcome o;
  double worst = 0.0;
  for (const char* name : {"S3", "Q8"}) {
    const auto g = finite(name);
    const auto table = character_table(*g);
    for (std::size_t chi = 0; chi < table.size(); ++chi) {
      for (std::size_t a = 0; a < g->order(); ++a) {
        for (std::size_t b = 0; b < g->order(); ++b) worst = std::max(worst, character_product_residual(*g, table, chi, a, b));
      }
    }
  }
  o.require(worst < 1e-8, "max residual " + fmt(worst));
  o.detail = o.pass ? "max residual " + fmt(worst) : o.detail;
  return o;
}

Outcome torus_sums() {
  Outcome o;
  const std::vector<Rational> grid{Rational(0),    Rational(1, 2), Rational(1, 3),  Rational(2, 3),
                                   Rational(1, 5), Rational(3, 7), Rational(1, 12), Rational(5, 6)};
  double worst = 0.0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 50; ++n) {
      for (std::size_t s = 0; s < grid.size(); ++s) {
        std::vector<Angle> theta;
        std::vector<double> radians;
        for (std::size_t j = 0; j < k; ++j) {
          theta.push_back(Angle::from_turns(grid[(s + 3 * j) % grid.size()]));
          radians.push_back(theta.back().radians());
        }
        worst = std::max(worst, std::abs(torus_partial_sum(theta, n).value - oracle::torus_direct(radians, n)));
      }
    }
  }
  o.require(worst < 1e-10, "closed form vs direct " + fmt(worst));

  const std::vector<Angle> third{Angle::from_turns(Rational(1, 3))};
  for (int n : {10, 100, 1000}) {
    const double v = std::abs(torus_partial_sum(third, n).value);
    o.require(v <= 1.1548 / (2 * n + 1), "2π/3 bound at n = " + std::to_string(n));
  }
  const std::vector<Angle> zero{Angle::zero()};
  for (int n = 0; n <= 1000; ++n) o.require(torus_partial_sum(zero, n).value == Complex(1.0, 0.0), "value at θ = 0");
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

std::vector<std::vector<Angle>> su_grid(std::size_t n) {
  std::vector<std::vector<Angle>> out;
  auto add = [&](std::vector<Angle> a) {
    Angle sum = Angle::zero();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) sum = sum + a[i];
    a.back() = -sum;
    out.push_back(a);
  };
  const std::vector<Rational> exact{Rational(0),    Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                    Rational(1, 5), Rational(2, 7), Rational(3, 8), Rational(5, 12)};
  const std::vector<double> loose{0.001, 0.1, 0.7, 1.3, 2.2, 2.9, 3.1};
  for (std::size_t i = 0; i < exact.size(); ++i) {
    std::vector<Angle> a(n, Angle::zero());
    a[0] = Angle::from_turns(exact[i]);
    if (n > 2) a[1] = Angle::from_turns(exact[(i + 3) % exact.size()]);
    add(a);
  }
  for (std::size_t i = 0; i < loose.size(); ++i) {
    std::vector<Angle> a(n, Angle::zero());
    a[0] = Angle::from_radians(loose[i]);
    if (n > 2) a[1] = Angle::from_radians(-loose[(i + 2) % loose.size()]);
    add(a);
  }
  // Central elements.
  for (std::size_t k = 1; k < n; ++k) out.push_back(std::vector<Angle>(n, Angle::from_turns(Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)))));
  while (out.size() < 20) {
    std::vector<Angle> a(n, Angle::zero());
    for (std::size_t j = 0; j + 1 < n; ++j) a[j] = Angle::from_radians(0.37 * static_cast<double>(out.size() + j));
    add(a);
  }
  return out;
}

Outcome weyl_bound() {
  Outcome o;
  std::size_t checks = 0, violations = 0, tuples = 0;
  for (std::size_t n : {2, 3}) {
    const auto grid = su_grid(n);
    tuples += grid.size();
    o.require(grid.size() >= 20, "grid too small");
    for (const auto& theta : grid) {
      for (std::int64_t depth = 0; depth <= 30; ++depth) {
        const auto r = su_partial_sum(n, theta, depth);
        const auto r_ = static_cast<std::int64_t>(n - 1);
        const auto d = static_cast<std::int64_t>(n * n - 1);
        // Independent count C(depth + r, r) and bound.
        std::uint64_t count = 1;
        for (std::int64_t i = 1; i <= r_; ++i) count = count * static_cast<std::uint64_t>(depth + i) / static_cast<std::uint64_t>(i);
        o.require(r.irr_count == count, "weight count");
        const double bound = 1.0 / std::pow(static_cast<double>(count), static_cast<double>(d - r_));
        ++checks;
        if (std::abs(r.normalized) > bound || r.violation) ++violations;
        if (depth <= 4) {
          // Raw sum against a tableau evaluation of every character.
          std::vector<double> rad;
          for (const auto& a : theta) rad.push_back(a.radians());
          Complex raw = 0.0;
          for (const auto& w : enumerate_dominant_weights(n - 1, depth)) {
            raw += oracle::schur_by_tableaux(w.a, rad) / static_cast<double>(oracle::ssyt_count(w.a, static_cast<int>(n)));
          }
          o.require(std::abs(raw - r.raw) < 1e-8 * static_cast<double>(count), "raw sum vs tableau oracle");
        }
      }
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  const std::vector<Angle> e2{Angle::zero(), Angle::zero()};
  for (std::int64_t depth = 0; depth <= 30; ++depth) {
    const auto r = su_partial_sum(2, e2, depth);
    o.require(std::abs(r.normalized - 1.0 / static_cast<double>((depth + 1) * (depth + 1))) < 1e-12, "SU(2) identity");
  }
  if (o.pass) {
    o.detail = std::to_string(tuples) + " tuples, " + std::to_string(checks) + " sums, 0 violations";
  }
  return o;
}

Outcome weyl_dimensions() {
  Outcome o;
  const std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> expected{
      {{0, 0}, 1}, {{1, 0}, 3}, {{0, 1}, 3}, {{1, 1}, 8}, {{2, 0}, 6}, {{1, 2}, 15}};
  for (const auto& [a, dim] : expected) {
    const auto w = weyl_dimension(DominantWeight{a}, 3);
    o.require(w == dim && w == oracle::ssyt_count(a, 3), "dimension of a weight");
  }
  for (std::size_t n : {2, 3, 4}) {
    const std::vector<Angle> e(n, Angle::zero());
    for (const auto& w : enumerate_dominant_weights(n - 1, 4)) {
      const double dim = static_cast<double>(weyl_dimension(w, n));
      o.require(dim == static_cast<double>(oracle::ssyt_count(w.a, static_cast<int>(n))), "dimension vs tableau count");
      o.require(std::abs(su_character(w, e) - dim) < 1e-8, "character at identity");
    }
  }
  return o;
}

Outcome fc_formula() {
  Outcome o;
  const auto q8 = load_group("Q8xT1");
  const auto& g = *std::get<FCQuotientSpec>(q8.spec.value).group;
  const std::vector<std::pair<std::string, Rational>> points{{"0 | -1", Rational(3, 8)}, {"0 | i", Rational(0)}, {"0 | e", Rational(5, 8)}};
  for (const auto& [text, value] : points) {
    const auto p = parse_point(q8, text).as<CosetPoint>();
    const auto exact = fc_fiber_exact(g, p);
    o.require(exact == value, "exact value at " + text);
    for (std::int64_t t : {0, 10, 1000}) {
      o.require(std::abs(fc_fiber_formula(g, p, t) - boost::rational_cast<double>(exact)) < 1e-9,
                "formula at " + text + ", depth " + std::to_string(t));
    }
  }

  const auto diag = load_group("T1xZ2/diag");
  const auto& d = *std::get<FCQuotientSpec>(diag.spec.value).group;
  o.require(d.n_order() == 2, "N is not of order 2");
  std::size_t trivial_points = 0;
  for (std::size_t delta = 0; delta < d.delta().order(); ++delta) {
    for (const auto& s : {Rational(0), Rational(1, 2)}) {
      const auto p = d.canonical(TorusPoint{{Angle::from_turns(s)}}, delta);
      if (!p.torus.is_identity()) continue;
      ++trivial_points;
      const double exact = boost::rational_cast<double>(fc_fiber_exact(d, p));
      for (std::int64_t t : {0, 10, 1000}) {
        o.require(std::abs(fc_fiber_formula(d, p, t) - exact) < 1e-9, "diagonal quotient at depth " + std::to_string(t));
      }
    }
  }
  o.require(trivial_points > 0, "no torus-trivial points");
  return o;
}

Outcome open_fc() {
  Outcome o;
  const auto o2 = load_group("O2");
  const auto& s = *std::get<SemidirectProductSpec>(o2.spec.value).group;
  o.require(restricted_fiber_measure(s, parse_point(o2, "0 | e").as<SemidirectPoint>()) == Rational(1, 4),
            "restricted measure at e");
  const auto mc = estimate_commuting_probability(o2.spec, 100000, 42, 1e-6);
  const double z = std::abs(mc.estimate - 0.25) / mc.standard_error;
  o.require(z < 3.0, "estimate " + fmt(mc.estimate) + " is " + fmt(z) + " σ from 1/4");
  if (o.pass) o.detail = "estimate " + fmt(mc.estimate) + " ± " + fmt(mc.standard_error) + " (" + fmt(z) + " σ)";
  return o;
}

Outcome sampler_validity() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t n : {2, 3}) {
    for (const auto& e : su_character_orthogonality(n, 2, 100000, 42 + n)) {
      ++pairs;
      o.require(e.within_three_sigma, "orthogonality off by more than 3σ in SU(" + std::to_string(n) + ")");
    }
  }
  for (const char* name : {"SU2", "SU3"}) {
    const auto h = load_group(name);
    const auto g = parse_point(h, name == std::string("SU2") ? "1/3 pi, -1/3 pi" : "1/2 pi, 1/4 pi, -3/4 pi");
    RngStream rng(7, 0);
    const auto conj = haar_sample(h.spec, rng);
    const double eps = name == std::string("SU2") ? 0.4 : 1.5;
    const auto c = conjugation_invariance(h.spec, g, conj, eps, 100000, 42);
    o.require(c.within_three_sigma, std::string("conjugation invariance in ") + name);
    o.require(c.at_g.hits > 100, std::string("too few hits in ") + name);
  }
  if (o.pass) o.detail = std::to_string(pairs) + " weight pairs, 2 conjugation checks";
  return o;
}

Outcome measure_decay() {
  Outcome o;
  const auto su = load_group("SU2");
  std::ostringstream trail;
  for (const char* text : {"e", "1/3 pi, -1/3 pi"}) {
    const auto g = parse_point(su, text);
    std::vector<MCEstimate> est;
    std::uint64_t seed = 42;
    for (double eps : {0.4, 0.2, 0.1}) est.push_back(estimate_ball_fiber(su.spec, g, eps, 1000000, seed++));
    trail << "[" << text << ":";
    for (const auto& e : est) trail << " " << fmt(e.estimate);
    trail << "] ";
    for (std::size_t i = 1; i < est.size(); ++i) {
      const double drop = est[i - 1].estimate - est[i].estimate;
      const double sigma = std::hypot(est[i - 1].standard_error, est[i].standard_error);
      o.require(drop > 3 * sigma, std::string("decrease below 3σ at ") + text);
    }
  }
  if (o.pass) o.detail = trail.str();
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0: no runtime requirement
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact Frobenius counts on S3, D4, Q8, A4, S4", 10, exact_frobenius},
      {2, "character product residuals on S3 and Q8", 5, product_residuals},
      {3, "torus partial sums", 0, torus_sums},
      {4, "SU(2), SU(3) character sum bound", 60, weyl_bound},
      {5, "Weyl dimensions and characters at the identity", 0, weyl_dimensions},
      {6, "FC formula against exact measure", 0, fc_formula},
      {7, "O(2) restricted measure and Monte Carlo", 10, open_fc},
      {8, "Haar sampler orthogonality and conjugation invariance", 0, sampler_validity},
      {9, "SU(2) ball-fiber decay", 120, measure_decay},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.require(false, "runtime " + fmt(seconds) + " s exceeds " + fmt(c.budget_seconds) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
