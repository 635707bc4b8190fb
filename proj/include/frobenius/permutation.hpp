#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobenius {

// Bijection of {0, …, degree−1} stored by its image list.
//
// Composition convention, used everywhere in the library:
//   (p * q)(i) = p(q(i))      (the right factor acts first)
class Permutation {
 public:
  Permutation() = default;
  // Throws BadGenerator if `images` is not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // Throws SpecMismatch on differing degrees.
  Permutation operator*(const Permutation& rhs) const;

  // Same permutation on a larger point set (extra points fixed).
  Permutation padded(std::size_t degree) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Cycle notation, 0-based, whitespace separated: "(0 1 2)(3 4)"; "()" is the
// identity. The degree is max(degree, largest point + 1).
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);
std::string to_cycle_string(const Permutation& p);

}  // namespace frobenius
