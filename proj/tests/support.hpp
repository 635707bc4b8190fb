#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "frobenius/errors.hpp"
#include "frobenius/finite_group.hpp"
#include "oracles.hpp"

namespace test {

inline std::shared_ptr<const frobenius::FiniteGroup> builtin(const std::string& name) {
  auto b = frobenius::builtin_group(name);
  return std::make_shared<const frobenius::FiniteGroup>(frobenius::enumerate_group(b->generators));
}

inline frobenius::Permutation named(const std::string& group, const std::string& element) {
  const auto b = frobenius::builtin_group(group);
  for (const auto& n : b->named) {
    if (n.name == element) return n.permutation;
  }
  throw std::runtime_error("no element " + element);
}

// Kind of the frobenius::Error thrown by `f`, if any.
inline std::optional<frobenius::ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const frobenius::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::vector<oracle::Perm> raw_elements(const frobenius::FiniteGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.elements()) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

}  // namespace test
