#pragma once

#include <cstddef>
#include <cstdint>

namespace frobenius {

// Resource caps shared by the exact engines. Defaults can be overridden via
// the environment:
//   FROBENIUS_MAX_GROUP_ORDER, FROBENIUS_MAX_PAIRS, FROBENIUS_MAX_CLASSES,
//   FROBENIUS_MAX_WEIGHTS
struct Limits {
  std::size_t max_group_order = 10'000;
  std::uint64_t max_pair_evaluations = 100'000'000;
  std::size_t max_classes = 64;
  std::uint64_t max_weights = 10'000'000;
  // Frobenius-norm tolerance for matrix equality and SU(N) membership.
  double matrix_tolerance = 1e-9;

  static Limits from_environment();
};

}  // namespace frobenius
