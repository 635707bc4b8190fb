#include <doctest.h>

#include "frobenius/descriptors.hpp"
#include "frobenius/fc_structure.hpp"
#include "support.hpp"

using namespace frobenius;

namespace {

std::shared_ptr<const FCGroupSpec> q8_circle() { return build_fc_group(1, test::builtin("Q8"), {}); }

std::shared_ptr<const FCGroupSpec> circle_mod_diag() {
  const auto z2 = test::builtin("Z2");
  return build_fc_group(1, z2, {{TorusPoint{{Angle::from_turns(Rational(1, 2))}}, parse_cycles("(0 1)", 2)}});
}

CosetPoint q8_point(const FCGroupSpec& g, const std::string& delta, const Angle& t = Angle::zero()) {
  return g.canonical(TorusPoint{{t}}, test::named("Q8", delta));
}

// Exact measure computed from scratch: pairs ((s, a), (u, b)) in the cover
// with [a, b] = δ·n and torus part t + τ_n ≡ 0, weighted by 1/|Δ|².
Rational exact_by_pairs(const FCGroupSpec& g, const CosetPoint& p) {
  const auto raw = test::raw_elements(g.delta());
  Rational total(0);
  for (const auto& n : g.n_elements()) {
    if (!(p.torus + n.torus).is_identity()) continue;
    const auto target = g.delta().multiply(g.delta().require_index(p.delta), n.delta);
    const auto count = oracle::fiber(raw, raw[target]);
    total += Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(raw.size() * raw.size()));
  }
  return total;
}

}  // namespace

TEST_CASE("building FC groups") {
  const auto g = q8_circle();
  CHECK(g->n_order() == 1);
  CHECK(circle_mod_diag()->n_order() == 2);

  const auto s3 = test::builtin("S3");
  CHECK(test::error_kind([&] {
          build_fc_group(1, s3, {{TorusPoint{{Angle::from_turns(Rational(1, 2))}}, parse_cycles("(0 1)", 3)}});
        }) == ErrorKind::NotCentral);
  const auto z2 = test::builtin("Z2");
  CHECK(test::error_kind([&] {
          build_fc_group(1, z2, {{TorusPoint{{Angle::from_turns(Rational(1, 3))}}, parse_cycles("(0 1)", 2)}});
        }) == ErrorKind::NotASubgroup);
  CHECK(test::error_kind([&] {
          build_fc_group(1, z2, {{TorusPoint{{Angle::from_turns(Rational(1, 2))}}, parse_cycles("()", 2)}});
        }) == ErrorKind::NotDiagonal);
  CHECK(test::error_kind([&] {
          build_fc_group(1, z2, {{TorusPoint{{Angle::from_radians(kPi)}}, parse_cycles("(0 1)", 2)}});
        }) == ErrorKind::NotASubgroup);
  CHECK(test::error_kind([&] {
          build_fc_group(1, z2, {{TorusPoint{{Angle::zero()}}, parse_cycles("(0 1)", 2)}});
        }) == ErrorKind::NotDiagonal);
}

TEST_CASE("character enumeration") {
  CHECK(enumerate_fc_characters(*q8_circle(), 1).size() == 15);
  const auto d = circle_mod_diag();
  const auto chars = enumerate_fc_characters(*d, 1);
  CHECK(chars.size() == 3);
  for (const auto& c : chars) {
    // η(s) e^{iπm} = 1: trivial η with even m, sign η with odd m
    CHECK((c.eta == 0) == (c.m.m[0] % 2 == 0));
  }
  for (const auto& g : {q8_circle(), d}) {
    const auto c0 = enumerate_fc_characters(*g, 0);
    CHECK(std::any_of(c0.begin(), c0.end(), [](const FCCharacter& c) { return c.eta == 0 && c.m.m[0] == 0; }));
  }
  // |N| divides evenly here: |Irr(Δ)|(2t+1)/|N| up to the parity boundary.
  CHECK(enumerate_fc_characters(*d, 10).size() == 21);
}

TEST_CASE("formula and exact value on Q8 x circle") {
  const auto g = q8_circle();
  for (std::int64_t t : {0, 10, 1000}) {
    CHECK(std::abs(fc_fiber_formula(*g, q8_point(*g, "-1"), t) - 0.375) < 1e-9);
    CHECK(std::abs(fc_fiber_formula(*g, q8_point(*g, "i"), t)) < 1e-9);
    CHECK(std::abs(fc_fiber_formula(*g, q8_point(*g, "e"), t) - 0.625) < 1e-9);
  }
  CHECK(fc_fiber_exact(*g, q8_point(*g, "-1")) == Rational(3, 8));
  CHECK(fc_fiber_exact(*g, q8_point(*g, "e")) == Rational(5, 8));
  CHECK(fc_fiber_exact(*g, q8_point(*g, "i")) == Rational(0));
  CHECK(fc_fiber_exact(*g, q8_point(*g, "e", Angle::from_radians(1.0))) == Rational(0));
}

TEST_CASE("exact value agrees with a direct pair count") {
  for (const auto& g : {q8_circle(), circle_mod_diag()}) {
    for (std::size_t d = 0; d < g->delta().order(); ++d) {
      for (const auto& t : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
        const auto p = g->canonical(TorusPoint{{Angle::from_turns(t)}}, d);
        CHECK(fc_fiber_exact(*g, p) == exact_by_pairs(*g, p));
      }
    }
  }
}

TEST_CASE("nontrivial torus part converges within the bound") {
  const auto g = q8_circle();
  for (const auto& s : {Rational(1, 3), Rational(1, 7), Rational(2, 5)}) {
    const auto p = q8_point(*g, "e", Angle::from_turns(s));
    for (std::int64_t t : {1, 10, 100, 1000}) {
      const double f = fc_fiber_formula(*g, p, t);
      const double bound = fc_fiber_error_bound(*g, p, t);
      CHECK(std::abs(f - boost::rational_cast<double>(fc_fiber_exact(*g, p))) <= bound + 1e-12);
      CHECK(bound <= 0.625 / std::abs(std::sin(kPi * boost::rational_cast<double>(s))) / (2 * t + 1) + 1e-15);
    }
  }
}

TEST_CASE("torus-trivial points of the diagonal quotient") {
  const auto g = circle_mod_diag();
  const auto e = g->canonical(TorusPoint::identity(1), std::size_t{0});
  for (std::int64_t t : {0, 1, 10, 1000}) {
    CHECK(std::abs(fc_fiber_formula(*g, e, t) - boost::rational_cast<double>(fc_fiber_exact(*g, e))) < 1e-9);
  }
  CHECK(fc_fiber_exact(*g, e) == Rational(1));
  // The coset of (0, s) is the half turn, whose fiber is empty.
  const auto s = g->canonical(TorusPoint::identity(1), parse_cycles("(0 1)", 2));
  CHECK(fc_fiber_exact(*g, s) == Rational(0));
  for (std::int64_t t : {1, 10, 1000}) {
    CHECK(std::abs(fc_fiber_formula(*g, s, t)) <= fc_fiber_error_bound(*g, s, t) + 1e-12);
  }
}

TEST_CASE("trivial N factorizes into finite average times torus sum") {
  for (const char* name : {"Q8", "S3", "D4"}) {
    const auto delta = test::builtin(name);
    const auto g = build_fc_group(1, delta, {});
    const auto table = character_table(*delta);
    for (std::size_t d = 0; d < delta->order(); ++d) {
      Complex average = 0.0;
      for (std::size_t chi = 0; chi < table.size(); ++chi) {
        average += table.at(chi, delta->class_of(d)) / static_cast<double>(table.degrees[chi]);
      }
      average /= static_cast<double>(delta->order());
      for (const auto& s : {Rational(0), Rational(1, 3)}) {
        const TorusPoint torus{{Angle::from_turns(s)}};
        for (std::int64_t t : {0, 3, 25}) {
          const double expected = (average * torus_partial_sum(torus.coords, t).value).real();
          CHECK(std::abs(fc_fiber_formula(*g, g->canonical(torus, d), t) - expected) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("total measure over torus-trivial elements is one") {
  for (const char* name : {"Q8", "S3", "A4"}) {
    const auto g = build_fc_group(1, test::builtin(name), {});
    Rational total(0);
    for (std::size_t d = 0; d < g->delta().order(); ++d) total += fc_fiber_exact(*g, g->canonical(TorusPoint::identity(1), d));
    CHECK(total == Rational(1));
  }
}

TEST_CASE("ambiguous inexact torus parts") {
  const auto g = q8_circle();
  CHECK(test::error_kind([&] { fc_fiber_exact(*g, q8_point(*g, "e", Angle::from_radians(1e-13))); }) ==
        ErrorKind::AmbiguousInput);
}

TEST_CASE("formula is reproducible across thread counts") {
  const auto g = q8_circle();
  const auto p = q8_point(*g, "i", Angle::from_turns(Rational(1, 5)));
  CHECK(fc_fiber_formula(*g, p, 300, {1, 64}) == fc_fiber_formula(*g, p, 300, {4, 64}));
}

TEST_CASE("JSON descriptor") {
  const auto h = group_from_json(nlohmann::json::parse(
      R"j({"torus_dim": 1, "delta": {"builtin": "Z2"}, "N": [{"torus": ["1/2"], "delta_elt": "(0 1)"}]})j"));
  const auto* fc = std::get_if<FCQuotientSpec>(&h.spec.value);
  REQUIRE(fc);
  CHECK(fc->group->n_order() == 2);
}
