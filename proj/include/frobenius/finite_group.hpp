#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobenius/limits.hpp"
#include "frobenius/permutation.hpp"
#include "frobenius/rational.hpp"

namespace frobenius {

struct ConjugacyClass {
  std::size_t representative = 0;  // smallest member in canonical order
  std::vector<std::size_t> members;

  std::size_t size() const noexcept { return members.size(); }
};

// A fully enumerated permutation group. Elements are sorted by image tuple,
// so index 0 is always the identity.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t identity_index() const noexcept { return 0; }

  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  // Like index_of but throws ConstraintViolation for non-members.
  std::size_t require_index(const Permutation& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::size_t commutator(std::size_t a, std::size_t b) const;

  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const std::vector<std::size_t>& center() const noexcept { return center_; }
  bool is_central(std::size_t element) const;
  bool is_abelian() const noexcept { return center_.size() == elements_.size(); }

 private:
  friend FiniteGroup enumerate_group(std::span<const Permutation>, const Limits&);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverses_;
  std::vector<std::uint32_t> table_;  // row-major products, empty for large groups
  std::vector<std::size_t> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> center_;
};

// Breadth-first closure of the generators. Throws BadGenerator for mixed
// degrees or an empty generator list, CapExceeded past limits.max_group_order.
FiniteGroup enumerate_group(std::span<const Permutation> generators, const Limits& limits = {});

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& group);

struct CharacterTable {
  // values[χ][c] is χ evaluated on class c.
  std::vector<std::vector<std::complex<double>>> values;
  std::vector<std::int64_t> degrees;
  std::vector<std::size_t> class_sizes;
  std::size_t group_order = 0;

  std::size_t size() const noexcept { return values.size(); }
  std::complex<double> at(std::size_t chi, std::size_t cls) const { return values[chi][cls]; }
};

struct CharacterTableOptions {
  std::uint64_t seed = 0x5eedULL;
  int max_retries = 10;
};

// Burnside's class-matrix method. Throws CapExceeded for more than
// limits.max_classes classes, DegenerateSpectrum after max_retries failed
// attempts to separate the characters.
CharacterTable character_table(const FiniteGroup& group, const Limits& limits = {},
                               const CharacterTableOptions& options = {});

// Largest deviation from the row and column orthogonality relations.
double row_orthogonality_error(const CharacterTable& table);
double column_orthogonality_error(const CharacterTable& table);

struct FiberCount {
  std::size_t element = 0;
  std::uint64_t count = 0;
};

// #{(x, y) ∈ G² : [x, y] = g} by exhaustive enumeration.
std::uint64_t brute_force_fiber(const FiniteGroup& group, std::size_t element, const Limits& limits = {});

// |G| Σ_χ χ(g)/χ(1), rounded. Throws NonIntegral if the sum is more than 1e−6
// away from an integer.
std::uint64_t frobenius_fiber(const FiniteGroup& group, const CharacterTable& table, std::size_t element);

// One FiberCount per conjugacy class representative.
std::vector<FiberCount> frobenius_fibers_by_class(const FiniteGroup& group, const CharacterTable& table);

// |χ(g)χ(h) − (χ(1)/|G|) Σ_z χ(g z h z⁻¹)|
double character_product_residual(const FiniteGroup& group, const CharacterTable& table, std::size_t chi, std::size_t g,
                        std::size_t h);

// f(g)/|G|² as an exact fraction; at the identity this is the commuting
// probability.
Rational finite_pr(const FiniteGroup& group, std::size_t element, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Built-in groups: S3, S4, A4, D4, Q8, Z2, Z4.

struct NamedElement {
  std::string name;
  Permutation permutation;
};

struct BuiltinGroup {
  std::string name;
  std::vector<Permutation> generators;
  // Conventional names for a few elements ("e", "-1", "i", ... for Q8).
  std::vector<NamedElement> named;
};

std::optional<BuiltinGroup> builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

}  // namespace frobenius
