#include <doctest.h>

#include <random>

#include "frobenius/finite_group.hpp"
#include "support.hpp"

using namespace frobenius;

namespace {

const std::vector<std::string> kBuiltins{"S3", "S4", "A4", "D4", "Q8", "Z2", "Z4"};

std::vector<std::size_t> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : g.classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("permutation composition and cycle notation") {
  const auto a = parse_cycles("(0 1)", 3);
  const auto b = parse_cycles("(0 2)", 3);
  // (a b)(0) = a(b(0)) = a(2) = 2
  CHECK((a * b)(0) == 2);
  CHECK(to_cycle_string(a * b) == "(0 2 1)");
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(parse_cycles("()").degree() == 1);
  CHECK(parse_cycles("(0 1 2)(3 4)").degree() == 5);
  CHECK(test::error_kind([] { parse_cycles("(0 1 1)"); }) == ErrorKind::ParseError);
  CHECK(test::error_kind([] { Permutation({0, 0, 1}); }) == ErrorKind::BadGenerator);
  CHECK(test::error_kind([&] { (void)(a * Permutation::identity(5)); }) == ErrorKind::SpecMismatch);
}

TEST_CASE("enumeration agrees with a naive closure") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const auto b = builtin_group(name);
    const auto g = enumerate_group(b->generators);
    std::vector<oracle::Perm> gens;
    for (const auto& p : b->generators) gens.emplace_back(p.images().begin(), p.images().end());
    const auto expected = oracle::closure(gens);
    CHECK(test::raw_elements(g) == expected);
    CHECK(g.element(g.identity_index()).is_identity());
  }
  CHECK(enumerate_group(std::vector<Permutation>{parse_cycles("()")}).order() == 1);
  CHECK(enumerate_group(builtin_group("S3")->generators).order() == 6);
  CHECK(enumerate_group(builtin_group("Q8")->generators).order() == 8);
}

TEST_CASE("enumeration errors") {
  CHECK(test::error_kind([] { enumerate_group(std::vector<Permutation>{}); }) == ErrorKind::BadGenerator);
  CHECK(test::error_kind([] {
          enumerate_group(std::vector<Permutation>{parse_cycles("(0 1)", 2), parse_cycles("(0 1 2)", 3)});
        }) == ErrorKind::BadGenerator);
  Limits small;
  small.max_group_order = 10;
  CHECK(test::error_kind([&] { enumerate_group(builtin_group("S4")->generators, small); }) == ErrorKind::CapExceeded);
}

TEST_CASE("conjugacy classes agree with orbit computation") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const auto g = test::builtin(name);
    CHECK(sorted_class_sizes(*g) == oracle::class_sizes(test::raw_elements(*g)));
    std::size_t total = 0;
    for (const auto& c : g->classes()) {
      CHECK(g->order() % c.size() == 0);
      CHECK(c.representative == *std::min_element(c.members.begin(), c.members.end()));
      total += c.size();
    }
    CHECK(total == g->order());
  }
  CHECK(sorted_class_sizes(*test::builtin("S3")) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sorted_class_sizes(*test::builtin("Q8")) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  const auto z4 = test::builtin("Z4");
  for (const auto& c : z4->classes()) CHECK(c.size() == 1);
}

TEST_CASE("character tables") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const auto g = test::builtin(name);
    const auto t = character_table(*g);
    CHECK(t.size() == g->classes().size());
    std::int64_t squares = 0;
    for (auto d : t.degrees) {
      CHECK(d > 0);
      squares += d * d;
    }
    CHECK(squares == static_cast<std::int64_t>(g->order()));
    CHECK(row_orthogonality_error(t) < 1e-8);
    CHECK(column_orthogonality_error(t) < 1e-8);
    // The trivial character comes first.
    for (std::size_t c = 0; c < t.size(); ++c) CHECK(std::abs(t.at(0, c) - 1.0) < 1e-9);
  }
  auto degrees = [](const std::string& n) { return character_table(*test::builtin(n)).degrees; };
  CHECK(degrees("S3") == std::vector<std::int64_t>{1, 1, 2});
  CHECK(degrees("Q8") == std::vector<std::int64_t>{1, 1, 1, 1, 2});

  const auto z2 = test::builtin("Z2");
  const auto t = character_table(*z2);
  CHECK(std::abs(t.at(1, 0) - 1.0) < 1e-12);
  CHECK(std::abs(t.at(1, 1) + 1.0) < 1e-12);
}

TEST_CASE("character table is independent of the random combination") {
  const auto g = test::builtin("S4");
  const auto a = character_table(*g, {}, {1, 10});
  const auto b = character_table(*g, {}, {99, 10});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t c = 0; c < a.size(); ++c) CHECK(std::abs(a.at(i, c) - b.at(i, c)) < 1e-8);
  }
}

TEST_CASE("fiber counts: formula equals exhaustive count on every element") {
  for (const auto& name : kBuiltins) {
    CAPTURE(name);
    const auto g = test::builtin(name);
    const auto t = character_table(*g);
    const auto raw = test::raw_elements(*g);
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < g->order(); ++e) {
      const auto f = frobenius_fiber(*g, t, e);
      CHECK(f == brute_force_fiber(*g, e));
      CHECK(f == oracle::fiber(raw, raw[e]));
      CHECK(f == frobenius_fiber(*g, t, g->classes()[g->class_of(e)].representative));
      total += f;
    }
    CHECK(total == g->order() * g->order());
  }
}

TEST_CASE("fiber examples") {
  const auto s3 = test::builtin("S3");
  const auto t = character_table(*s3);
  const auto idx = [&](const char* c) { return s3->require_index(parse_cycles(c, 3)); };
  CHECK(brute_force_fiber(*s3, idx("()")) == 18);
  CHECK(brute_force_fiber(*s3, idx("(0 1 2)")) == 9);
  CHECK(brute_force_fiber(*s3, idx("(0 1)")) == 0);
  CHECK(frobenius_fiber(*s3, t, idx("()")) == 18);
  CHECK(frobenius_fiber(*s3, t, idx("(0 1 2)")) == 9);
  CHECK(finite_pr(*s3, idx("()")) == Rational(1, 2));
  CHECK(finite_pr(*s3, idx("(0 1)")) == Rational(0));

  const auto q8 = test::builtin("Q8");
  const auto minus_one = q8->require_index(test::named("Q8", "-1"));
  CHECK(frobenius_fiber(*q8, character_table(*q8), minus_one) == 24);
  CHECK(finite_pr(*q8, minus_one) == Rational(3, 8));

  Limits small;
  small.max_pair_evaluations = 10;
  CHECK(test::error_kind([&] { brute_force_fiber(*s3, 0, small); }) == ErrorKind::CapExceeded);
}

TEST_CASE("commutator example in S3") {
  const auto s3 = test::builtin("S3");
  const auto a = s3->require_index(parse_cycles("(0 1)", 3));
  const auto b = s3->require_index(parse_cycles("(0 2)", 3));
  CHECK(s3->element(s3->commutator(a, b)) == parse_cycles("(0 1 2)", 3));
  CHECK(s3->commutator(a, a) == s3->identity_index());
}

TEST_CASE("character product residual vanishes exhaustively") {
  for (const auto& name : {"S3", "Q8", "D4", "Z4"}) {
    CAPTURE(name);
    const auto g = test::builtin(name);
    const auto t = character_table(*g);
    double worst = 0.0;
    for (std::size_t chi = 0; chi < t.size(); ++chi) {
      for (std::size_t a = 0; a < g->order(); ++a) {
        for (std::size_t b = 0; b < g->order(); ++b) worst = std::max(worst, character_product_residual(*g, t, chi, a, b));
      }
    }
    CHECK(worst < 1e-8);
    if (g->is_abelian()) CHECK(worst < 1e-12);
  }
  const auto q8 = test::builtin("Q8");
  const auto t = character_table(*q8);
  const auto i = q8->require_index(test::named("Q8", "i"));
  const auto j = q8->require_index(test::named("Q8", "j"));
  CHECK(character_product_residual(*q8, t, t.size() - 1, i, j) < 1e-10);
}
