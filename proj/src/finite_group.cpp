#include "frobenius/finite_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <unordered_set>

#include <Eigen/Dense>

#include "frobenius/errors.hpp"

namespace frobenius {
namespace {

constexpr std::size_t kTableThreshold = 2048;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using Complex = std::complex<double>;

}  // namespace

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::require_index(const Permutation& p) const {
  auto idx = index_of(p);
  if (!idx) throw Error(ErrorKind::ConstraintViolation, to_cycle_string(p) + " is not an element of the group");
  return *idx;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return *index_of(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::commutator(std::size_t a, std::size_t b) const {
  return multiply(multiply(a, b), multiply(inverses_[a], inverses_[b]));
}

bool FiniteGroup::is_central(std::size_t element) const {
  return std::binary_search(center_.begin(), center_.end(), element);
}

FiniteGroup enumerate_group(std::span<const Permutation> generators, const Limits& limits) {
  if (generators.empty()) throw Error(ErrorKind::BadGenerator, "at least one generator is required");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::BadGenerator, "generators have different degrees (" + std::to_string(degree) +
                                               " and " + std::to_string(g.degree()) + ")");
    }
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation e = Permutation::identity(degree);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation y = s * x;
      if (seen.insert(y).second) {
        if (seen.size() > limits.max_group_order) {
          throw Error(ErrorKind::CapExceeded, "group closure exceeds " + std::to_string(limits.max_group_order) +
                                                  " elements (FROBENIUS_MAX_GROUP_ORDER)");
        }
        queue.push_back(std::move(y));
      }
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());
  const std::size_t n = g.elements_.size();

  if (n <= kTableThreshold) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g.table_[a * n + b] = static_cast<std::uint32_t>(*g.index_of(g.elements_[a] * g.elements_[b]));
      }
    }
  }
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) g.inverses_[a] = *g.index_of(g.elements_[a].inverse());

  std::vector<std::size_t> gens;
  for (const auto& s : generators) gens.push_back(*g.index_of(s));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  g.generators_ = gens;

  // Conjugacy classes as orbits under conjugation by the generators.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  g.class_of_.assign(n, kUnassigned);
  for (std::size_t start = 0; start < n; ++start) {
    if (g.class_of_[start] != kUnassigned) continue;
    ConjugacyClass cls;
    const std::size_t id = g.classes_.size();
    std::vector<std::size_t> stack{start};
    g.class_of_[start] = id;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      cls.members.push_back(x);
      for (std::size_t s : gens) {
        std::size_t y = g.multiply(g.multiply(s, x), g.inverses_[s]);
        if (g.class_of_[y] == kUnassigned) {
          g.class_of_[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();  // == start, the smallest unassigned index
    g.classes_.push_back(std::move(cls));
  }
  for (const auto& cls : g.classes_) {
    if (cls.size() == 1) g.center_.push_back(cls.representative);
  }
  std::sort(g.center_.begin(), g.center_.end());
  return g;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& group) { return group.classes(); }

// ---------------------------------------------------------------------------
// Character table

namespace {

// c[i][j][k] = #{x ∈ C_i : x⁻¹ z_k ∈ C_j} for a fixed z_k ∈ C_k.
std::vector<double> class_constants(const FiniteGroup& g) {
  const std::size_t r = g.classes().size();
  std::vector<double> c(r * r * r, 0.0);
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = g.classes()[k].representative;
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t i = g.class_of(x);
      const std::size_t j = g.class_of(g.multiply(g.inverse(x), z));
      c[(i * r + j) * r + k] += 1.0;
    }
  }
  return c;
}

std::optional<CharacterTable> attempt_table(const FiniteGroup& g, const std::vector<double>& constants,
                                            std::mt19937_64& rng) {
  const std::size_t r = g.classes().size();
  const double order = static_cast<double>(g.order());
  std::vector<double> sizes(r);
  for (std::size_t i = 0; i < r; ++i) sizes[i] = static_cast<double>(g.classes()[i].size());

  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> a(r);
  for (auto& v : a) v = coeff(rng);

  // M_{ik} = Σ_j a_j c_{ijk}; each central character ω is a right eigenvector
  // with eigenvalue Σ_j a_j ω_j. Scaling by |C_i|^{-1/2} makes the
  // eigenvectors orthogonal, so the solver sees a normal matrix.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      double v = 0.0;
      for (std::size_t j = 0; j < r; ++j) v += a[j] * constants[(i * r + j) * r + k];
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v * std::sqrt(sizes[k] / sizes[i]);
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const auto& lambda = solver.eigenvalues();
  double scale = 1.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) scale = std::max(scale, std::abs(lambda(i)));
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    for (Eigen::Index j = i + 1; j < lambda.size(); ++j) {
      if (std::abs(lambda(i) - lambda(j)) < 1e-7 * scale) return std::nullopt;
    }
  }

  CharacterTable table;
  table.group_order = g.order();
  for (std::size_t i = 0; i < r; ++i) table.class_sizes.push_back(g.classes()[i].size());
  for (std::size_t col = 0; col < r; ++col) {
    std::vector<Complex> omega(r);
    for (std::size_t i = 0; i < r; ++i) {
      omega[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) *
                 std::sqrt(sizes[i]);
    }
    if (std::abs(omega[0]) < 1e-10) return std::nullopt;
    const Complex lead = omega[0];
    for (auto& w : omega) w /= lead;
    double norm = 0.0;
    for (std::size_t i = 0; i < r; ++i) norm += std::norm(omega[i]) / sizes[i];
    const double degree = std::sqrt(order / norm);
    const double rounded = std::round(degree);
    if (rounded < 1.0 || std::abs(degree - rounded) > 1e-6) return std::nullopt;
    std::vector<Complex> row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = rounded * omega[i] / sizes[i];
    row[0] = Complex(rounded, 0.0);
    table.values.push_back(std::move(row));
    table.degrees.push_back(static_cast<std::int64_t>(rounded));
  }

  std::int64_t sum_sq = 0;
  for (auto d : table.degrees) sum_sq += d * d;
  if (sum_sq != static_cast<std::int64_t>(g.order())) return std::nullopt;

  // Trivial character first, then by degree, then by values.
  auto key = [](const std::vector<Complex>& row) {
    std::vector<std::pair<double, double>> k;
    for (const auto& v : row) k.emplace_back(-std::round(v.real() * 1e9), -std::round(v.imag() * 1e9));
    return k;
  };
  std::vector<std::size_t> order_idx(r);
  for (std::size_t i = 0; i < r; ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t x, std::size_t y) {
    if (table.degrees[x] != table.degrees[y]) return table.degrees[x] < table.degrees[y];
    return key(table.values[x]) < key(table.values[y]);
  });
  CharacterTable sorted;
  sorted.group_order = table.group_order;
  sorted.class_sizes = table.class_sizes;
  for (auto i : order_idx) {
    sorted.values.push_back(table.values[i]);
    sorted.degrees.push_back(table.degrees[i]);
  }

  if (row_orthogonality_error(sorted) > 1e-8 || column_orthogonality_error(sorted) > 1e-8) return std::nullopt;
  return sorted;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& group, const Limits& limits, const CharacterTableOptions& options) {
  const std::size_t r = group.classes().size();
  if (r > limits.max_classes) {
    throw Error(ErrorKind::CapExceeded, std::to_string(r) + " conjugacy classes exceed the cap of " +
                                            std::to_string(limits.max_classes) + " (FROBENIUS_MAX_CLASSES)");
  }
  const auto constants = class_constants(group);
  std::mt19937_64 rng(options.seed);
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    if (auto table = attempt_table(group, constants, rng)) return *table;
  }
  throw Error(ErrorKind::DegenerateSpectrum, "could not separate the irreducible characters after " +
                                                 std::to_string(options.max_retries) + " retries");
}

double row_orthogonality_error(const CharacterTable& t) {
  double worst = 0.0;
  const double order = static_cast<double>(t.group_order);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < t.class_sizes.size(); ++c) {
        s += static_cast<double>(t.class_sizes[c]) * t.values[a][c] * std::conj(t.values[b][c]);
      }
      s /= order;
      worst = std::max(worst, std::abs(s - Complex(a == b ? 1.0 : 0.0, 0.0)));
    }
  }
  return worst;
}

double column_orthogonality_error(const CharacterTable& t) {
  double worst = 0.0;
  const double order = static_cast<double>(t.group_order);
  const std::size_t r = t.class_sizes.size();
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = 0; d < r; ++d) {
      Complex s = 0.0;
      for (std::size_t chi = 0; chi < t.size(); ++chi) s += t.values[chi][c] * std::conj(t.values[chi][d]);
      // Σ_χ χ(g_c) conj χ(g_d) = δ_cd |G|/|C_c|
      double expected = c == d ? order / static_cast<double>(t.class_sizes[c]) : 0.0;
      worst = std::max(worst, std::abs(s - expected) / std::max(1.0, expected));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Fibers

std::uint64_t brute_force_fiber(const FiniteGroup& group, std::size_t element, const Limits& limits) {
  const std::uint64_t n = group.order();
  if (n * n > limits.max_pair_evaluations) {
    throw Error(ErrorKind::CapExceeded, std::to_string(n * n) + " pair evaluations exceed the cap of " +
                                            std::to_string(limits.max_pair_evaluations) + " (FROBENIUS_MAX_PAIRS)");
  }
  std::uint64_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (group.commutator(x, y) == element) ++count;
    }
  }
  return count;
}

std::uint64_t frobenius_fiber(const FiniteGroup& group, const CharacterTable& table, std::size_t element) {
  const std::size_t cls = group.class_of(element);
  Complex sum = 0.0;
  for (std::size_t chi = 0; chi < table.size(); ++chi) {
    sum += table.values[chi][cls] / static_cast<double>(table.degrees[chi]);
  }
  sum *= static_cast<double>(group.order());
  const double rounded = std::round(sum.real());
  if (std::abs(sum - Complex(rounded, 0.0)) > 1e-6 || rounded < 0.0) {
    throw Error(ErrorKind::NonIntegral, "character sum " + std::to_string(sum.real()) + "+" +
                                            std::to_string(sum.imag()) + "i is not a non-negative integer");
  }
  return static_cast<std::uint64_t>(rounded);
}

std::vector<FiberCount> frobenius_fibers_by_class(const FiniteGroup& group, const CharacterTable& table) {
  std::vector<FiberCount> out;
  for (const auto& cls : group.classes()) out.push_back({cls.representative, frobenius_fiber(group, table, cls.representative)});
  return out;
}

double character_product_residual(const FiniteGroup& group, const CharacterTable& table, std::size_t chi, std::size_t g,
                        std::size_t h) {
  const auto& row = table.values.at(chi);
  auto value = [&](std::size_t x) { return row[group.class_of(x)]; };
  Complex sum = 0.0;
  for (std::size_t z = 0; z < group.order(); ++z) {
    sum += value(group.multiply(group.multiply(g, z), group.multiply(h, group.inverse(z))));
  }
  const Complex rhs = static_cast<double>(table.degrees[chi]) / static_cast<double>(group.order()) * sum;
  return std::abs(value(g) * value(h) - rhs);
}

Rational finite_pr(const FiniteGroup& group, std::size_t element, const Limits& limits) {
  const auto n = static_cast<std::int64_t>(group.order());
  return Rational(static_cast<std::int64_t>(brute_force_fiber(group, element, limits)), n * n);
}

// ---------------------------------------------------------------------------
// Built-ins

namespace {

Permutation cyc(std::string_view text, std::size_t degree) { return parse_cycles(text, degree); }

// Unit quaternions ±1, ±i, ±j, ±k indexed 0..7 as (1, -1, i, -i, j, -j, k, -k).
std::size_t quaternion_product(std::size_t a, std::size_t b) {
  // basis product table on {1, i, j, k} with signs
  static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const std::size_t ba = a / 2, bb = b / 2;
  int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ba][bb];
  return static_cast<std::size_t>(basis[ba][bb]) * 2 + (s < 0 ? 1 : 0);
}

Permutation quaternion_left_regular(std::size_t q) {
  std::vector<std::uint32_t> images(8);
  for (std::size_t x = 0; x < 8; ++x) images[x] = static_cast<std::uint32_t>(quaternion_product(q, x));
  return Permutation(std::move(images));
}

}  // namespace

std::optional<BuiltinGroup> builtin_group(std::string_view name) {
  BuiltinGroup b;
  b.name = std::string(name);
  if (name == "S3") {
    b.generators = {cyc("(0 1)", 3), cyc("(0 1 2)", 3)};
  } else if (name == "S4") {
    b.generators = {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)};
  } else if (name == "A4") {
    b.generators = {cyc("(0 1 2)", 4), cyc("(1 2 3)", 4)};
  } else if (name == "D4") {
    b.generators = {cyc("(0 1 2 3)", 4), cyc("(1 3)", 4)};
  } else if (name == "Z2") {
    b.generators = {cyc("(0 1)", 2)};
  } else if (name == "Z4") {
    b.generators = {cyc("(0 1 2 3)", 4)};
  } else if (name == "Q8") {
    static const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    b.generators = {quaternion_left_regular(2), quaternion_left_regular(4)};
    for (std::size_t q = 0; q < 8; ++q) b.named.push_back({names[q], quaternion_left_regular(q)});
  } else {
    return std::nullopt;
  }
  b.named.insert(b.named.begin(), NamedElement{"e", Permutation::identity(b.generators.front().degree())});
  return b;
}

std::vector<std::string> builtin_group_names() { return {"S3", "S4", "A4", "D4", "Q8", "Z2", "Z4"}; }

}  // namespace frobenius
