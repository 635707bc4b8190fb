#include "frobenius/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "frobenius/errors.hpp"

namespace frobenius {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorKind::BadGenerator, "image list is not a bijection on {0.." +
                                               std::to_string(images_.size()) + "-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw Error(ErrorKind::SpecMismatch, "composing permutations of degree " + std::to_string(degree()) +
                                             " and " + std::to_string(rhs.degree()));
  }
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = images_[rhs.images_[i]];
  return p;
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  Permutation p = identity(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error(ErrorKind::ParseError, "empty cycle notation (identity is '()')");
  std::uint32_t max_point = 0;
  bool any_point = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') {
      throw Error(ErrorKind::ParseError, "expected '(' in cycle notation '" + std::string(text) + "'");
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw Error(ErrorKind::ParseError, "unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw Error(ErrorKind::ParseError, "bad point in cycle notation '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) {
        throw Error(ErrorKind::ParseError, "repeated point in cycle '" + std::string(text) + "'");
      }
      cycle.push_back(v);
      max_point = std::max(max_point, v);
      any_point = true;
    }
    cycles.push_back(std::move(cycle));
  }
  std::size_t n = std::max<std::size_t>({degree, any_point ? max_point + 1 : 0, 1});
  Permutation result = Permutation::identity(n);
  // Cycles are composed left to right as written, each a permutation in its own right.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    if (c.size() < 2) continue;
    std::vector<std::uint32_t> images(n);
    for (std::size_t p = 0; p < n; ++p) images[p] = static_cast<std::uint32_t>(p);
    for (std::size_t k = 0; k < c.size(); ++k) images[c[k]] = c[(k + 1) % c.size()];
    result = Permutation(std::move(images)) * result;
  }
  return result;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = p(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace frobenius
