#pragma once

// Reference computations that share no code with the library: plain vectors,
// naive loops, textbook formulas.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using cd = std::complex<double>;

// (p q)(i) = p(q(i))
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

// Closure by repeated multiplication until nothing new appears.
inline std::vector<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> all(gens.begin(), gens.end());
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0u);
  all.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        if (all.insert(compose(a, b)).second) grew = true;
      }
    }
  }
  return {all.begin(), all.end()};
}

inline Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(a, b), compose(invert(a), invert(b)));
}

// Class sizes from orbits of the full conjugation action, sorted.
inline std::vector<std::size_t> class_sizes(const std::vector<Perm>& group) {
  std::set<Perm> seen;
  std::vector<std::size_t> sizes;
  for (const auto& g : group) {
    if (seen.count(g)) continue;
    std::set<Perm> orbit;
    for (const auto& h : group) orbit.insert(compose(compose(h, g), invert(h)));
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::uint64_t fiber(const std::vector<Perm>& group, const Perm& g) {
  std::uint64_t n = 0;
  for (const auto& x : group) {
    for (const auto& y : group) n += commutator(x, y) == g ? 1 : 0;
  }
  return n;
}

// Σ_{|m_j| ≤ n} exp(i m·θ), normalized by (2n+1)^k.
inline cd torus_direct(const std::vector<double>& theta, int n) {
  const std::size_t k = theta.size();
  std::vector<int> m(k, -n);
  cd sum = 0.0;
  double count = 0.0;
  while (true) {
    double phase = 0.0;
    for (std::size_t j = 0; j < k; ++j) phase += m[j] * theta[j];
    sum += std::polar(1.0, phase);
    count += 1.0;
    std::size_t j = 0;
    while (j < k && m[j] == n) m[j++] = -n;
    if (j == k) break;
    ++m[j];
  }
  return sum / count;
}

// Semistandard tableaux of shape λ with entries 1..N, each reported to
// `visit` as its content vector.
inline void for_each_ssyt(const std::vector<int>& lambda, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<std::vector<int>> t;
  for (int len : lambda) {
    if (len > 0) t.emplace_back(len, 0);
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  }
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      std::vector<int> content(n, 0);
      for (const auto& row : t) {
        for (int v : row) ++content[v - 1];
      }
      visit(content);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      fill(idx + 1);
    }
  };
  fill(0);
}

// λ_i = Σ_{t ≥ i} a_t
inline std::vector<int> partition(const std::vector<std::int64_t>& a) {
  std::vector<int> lambda(a.size(), 0);
  int acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc += static_cast<int>(a[i]);
    lambda[i] = acc;
  }
  return lambda;
}

inline std::uint64_t ssyt_count(const std::vector<std::int64_t>& a, int n) {
  std::uint64_t count = 0;
  for_each_ssyt(partition(a), n, [&](const std::vector<int>&) { ++count; });
  return count;
}

// Character as the sum of monomials over tableaux.
inline cd schur_by_tableaux(const std::vector<std::int64_t>& a, const std::vector<double>& theta) {
  cd sum = 0.0;
  for_each_ssyt(partition(a), static_cast<int>(theta.size()), [&](const std::vector<int>& content) {
    double phase = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) phase += content[j] * theta[j];
    sum += std::polar(1.0, phase);
  });
  return sum;
}

inline double su2_character(int m, double t) { return std::sin((m + 1) * t) / std::sin(t); }

}  // namespace oracle
