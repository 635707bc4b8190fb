#include "frobenius/descriptors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "frobenius/errors.hpp"
#include "frobenius/fc_structure.hpp"
#include "frobenius/open_fc.hpp"

namespace frobenius {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

GroupHandle finite_handle(std::vector<Permutation> generators, std::string name, std::vector<NamedElement> named,
                          const Limits& limits) {
  auto group = std::make_shared<const FiniteGroup>(enumerate_group(generators, limits));
  if (named.empty() || named.front().name != "e") {
    named.insert(named.begin(), NamedElement{"e", group->element(group->identity_index())});
  }
  return GroupHandle{FiniteSpec{std::move(group), std::move(name)}, std::move(named), {}};
}

Permutation permutation_from_json(const json& j, std::size_t degree) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), degree).padded(std::max(degree, std::size_t{1}));
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "generator must be an image list or a cycle string");
  std::vector<std::uint32_t> images;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw Error(ErrorKind::BadGenerator, "image lists must contain non-negative integers");
    }
    images.push_back(v.get<std::uint32_t>());
  }
  if (degree != 0 && images.size() != degree) {
    throw Error(ErrorKind::BadGenerator, "generator has " + std::to_string(images.size()) + " images, degree is " +
                                             std::to_string(degree));
  }
  return Permutation(std::move(images));
}

const FiniteSpec& require_finite(const GroupHandle& h, const char* role) {
  const auto* f = std::get_if<FiniteSpec>(&h.spec.value);
  if (!f) throw Error(ErrorKind::ParseError, std::string(role) + " must be a finite group descriptor");
  return *f;
}

GroupHandle fc_from_json(const json& j, const Limits& limits) {
  const auto k = j.at("torus_dim").get<std::size_t>();
  GroupHandle delta = group_from_json(j.at("delta"), limits);
  const auto& fd = require_finite(delta, "delta");
  std::vector<std::pair<TorusPoint, Permutation>> n;
  if (j.contains("N")) {
    for (const auto& e : j.at("N")) {
      TorusPoint t;
      for (const auto& c : e.at("torus")) {
        t.coords.push_back(c.is_string() ? parse_turns(c.get<std::string>()) : Angle::from_turns(Rational(c.get<std::int64_t>())));
      }
      Permutation p = e.contains("delta_elt")
                          ? parse_finite_element(*fd.group, delta.named, e.at("delta_elt").get<std::string>())
                          : fd.group->element(fd.group->identity_index());
      n.emplace_back(std::move(t), std::move(p));
    }
  }
  GroupHandle out;
  out.spec = FCQuotientSpec{build_fc_group(k, fd.group, std::move(n), limits)};
  out.named = std::move(delta.named);
  return out;
}

GroupHandle semidirect_from_json(const json& j, const Limits& limits) {
  const auto k = j.at("torus_dim").get<std::size_t>();
  GroupHandle phi = group_from_json(j.at("phi"), limits);
  const auto& fp = require_finite(phi, "phi");
  std::vector<std::pair<Permutation, IntMatrix>> action;
  for (const auto& [key, rows] : j.at("action").items()) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    IntMatrix m(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (static_cast<Eigen::Index>(row.size()) != r) throw Error(ErrorKind::DimensionMismatch, "action matrix must be square");
      for (Eigen::Index c = 0; c < r; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<std::int64_t>();
    }
    action.emplace_back(parse_finite_element(*fp.group, phi.named, key), std::move(m));
  }
  GroupHandle out;
  out.spec = SemidirectProductSpec{build_semidirect(k, fp.group, action)};
  out.named = std::move(phi.named);
  return out;
}

}  // namespace

GroupHandle group_from_json(const json& j, const Limits& limits) {
  try {
    if (j.is_string()) {
      auto h = builtin_handle(j.get<std::string>(), limits);
      if (!h) throw Error(ErrorKind::ParseError, "unknown built-in group '" + j.get<std::string>() + "'");
      return *h;
    }
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "group descriptor must be an object or a name");
    if (j.contains("builtin")) return group_from_json(j.at("builtin"), limits);
    if (j.contains("generators")) {
      const std::size_t degree = j.value("degree", std::size_t{0});
      std::vector<Permutation> gens;
      for (const auto& g : j.at("generators")) gens.push_back(permutation_from_json(g, degree));
      if (degree != 0) {
        for (auto& g : gens) {
          if (g.degree() > degree) throw Error(ErrorKind::BadGenerator, "generator moves a point ≥ degree");
          g = g.padded(degree);
        }
      }
      return finite_handle(std::move(gens), "", {}, limits);
    }
    if (j.contains("torus")) return GroupHandle{TorusSpec{j.at("torus").get<std::size_t>()}, {}, {}};
    if (j.contains("su")) {
      const auto n = j.at("su").get<std::size_t>();
      if (n < 2) throw Error(ErrorKind::ConstraintViolation, "SU(N) needs N ≥ 2");
      return GroupHandle{SUSpec{n}, {}, {}};
    }
    if (j.contains("product")) {
      GroupHandle out;
      ProductSpec p;
      for (const auto& f : j.at("product")) {
        out.factors.push_back(group_from_json(f, limits));
        p.factors.push_back(out.factors.back().spec);
      }
      if (p.factors.empty()) throw Error(ErrorKind::ParseError, "product needs at least one factor");
      out.spec = std::move(p);
      return out;
    }
    if (j.contains("delta")) return fc_from_json(j, limits);
    if (j.contains("phi")) return semidirect_from_json(j, limits);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad group descriptor: ") + e.what());
  }
  throw Error(ErrorKind::ParseError, "unrecognized group descriptor " + j.dump());
}

std::optional<GroupHandle> builtin_handle(std::string_view name, const Limits& limits) {
  if (auto b = builtin_group(name)) return finite_handle(b->generators, b->name, b->named, limits);
  const std::string s(name);
  auto number_after = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return std::nullopt;
    std::size_t v = 0;
    for (char c : s.substr(prefix.size())) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (auto k = number_after("T"); k && *k >= 1) return GroupHandle{TorusSpec{*k}, {}, {}};
  if (auto n = number_after("SU"); n && *n >= 2) return GroupHandle{SUSpec{*n}, {}, {}};
  if (s == "O2") {
    return group_from_json(json::parse(R"j({"torus_dim": 1, "phi": "Z2", "action": {"(0 1)": [[-1]]}})j"), limits);
  }
  if (s == "Z4rot") {
    return group_from_json(
        json::parse(R"j({"torus_dim": 2, "phi": "Z4", "action": {"(0 1 2 3)": [[0, -1], [1, 0]]}})j"), limits);
  }
  if (s == "Q8xT1") return group_from_json(json::parse(R"j({"torus_dim": 1, "delta": "Q8", "N": []})j"), limits);
  if (s == "T1xZ2/diag") {
    return group_from_json(
        json::parse(R"j({"torus_dim": 1, "delta": "Z2", "N": [{"torus": ["1/2"], "delta_elt": "(0 1)"}]})j"), limits);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_handle_names() {
  auto names = builtin_group_names();
  for (const char* n : {"T<k>", "SU<N>", "O2", "Z4rot", "Q8xT1", "T1xZ2/diag"}) names.emplace_back(n);
  return names;
}

GroupHandle load_group(std::string_view name_or_path, const Limits& limits) {
  const std::string_view s = trim(name_or_path);
  if (auto h = builtin_handle(s, limits)) return *h;
  try {
    if (!s.empty() && s.front() == '{') return group_from_json(json::parse(s), limits);
    std::ifstream in{std::string(s)};
    if (!in) {
      throw Error(ErrorKind::ParseError, "'" + std::string(s) + "' is neither a built-in group nor a readable file");
    }
    return group_from_json(json::parse(in), limits);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON in '" + std::string(s) + "': " + e.what());
  }
}

Permutation parse_finite_element(const FiniteGroup& group, const std::vector<NamedElement>& named,
                                 std::string_view text) {
  const std::string_view s = trim(text);
  for (const auto& n : named) {
    if (n.name == s) return n.permutation;
  }
  if (s == "e") return group.element(group.identity_index());
  Permutation p;
  if (!s.empty() && s.front() == '[') {
    json arr;
    try {
      arr = json::parse(s);
    } catch (const json::exception&) {
      throw Error(ErrorKind::ParseError, "bad image list '" + std::string(s) + "'");
    }
    p = permutation_from_json(arr, group.degree());
  } else if (!s.empty() && s.front() == '(') {
    p = parse_cycles(s, group.degree());
  } else {
    throw Error(ErrorKind::ParseError, "unknown element '" + std::string(s) + "'");
  }
  if (p.degree() < group.degree()) p = p.padded(group.degree());
  if (p.degree() != group.degree() || !group.index_of(p)) {
    throw Error(ErrorKind::ConstraintViolation, to_cycle_string(p) + " is not an element of the group");
  }
  return p;
}

namespace {

TorusPoint parse_torus(std::string_view text, std::size_t dim) {
  const std::string_view s = trim(text);
  if (s == "e") return TorusPoint::identity(dim);
  TorusPoint t{parse_angle_list(s)};
  if (t.dim() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim) + " angles, got " +
                                                  std::to_string(t.dim()));
  }
  return t;
}

std::pair<std::string_view, std::string_view> split_pair(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected '<angles> | <finite element>', got '" + std::string(text) + "'");
  }
  return {trim(text.substr(0, bar)), trim(text.substr(bar + 1))};
}

}  // namespace

GroupPoint parse_point(const GroupHandle& group, std::string_view text) {
  const std::string_view s = trim(text);
  const GroupSpec& spec = group.spec;
  return std::visit(
      [&](const auto& g) -> GroupPoint {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, FiniteSpec>) {
          return parse_finite_element(*g.group, group.named, s);
        } else if constexpr (std::is_same_v<T, TorusSpec>) {
          return parse_torus(s, g.dim);
        } else if constexpr (std::is_same_v<T, SUSpec>) {
          if (s == "e" || s == "I") return identity(spec);
          if (s == "-I") {
            if (g.n % 2 != 0) throw Error(ErrorKind::ConstraintViolation, "-I is not in SU(N) for odd N");
            const auto n = static_cast<Eigen::Index>(g.n);
            return SpecialUnitaryPoint{-Eigen::MatrixXcd::Identity(n, n)};
          }
          const auto angles = parse_torus(s, g.n);
          Rational turns(0);
          bool exact = true;
          double radians = 0.0;
          std::vector<double> values;
          for (const auto& a : angles.coords) {
            values.push_back(a.radians());
            radians += a.radians();
            if (a.turns()) {
              turns += *a.turns();
            } else {
              exact = false;
            }
          }
          const bool on_lattice = exact ? turns.denominator() == 1
                                        : circular_distance(Angle::from_radians(radians), Angle::zero()) < 1e-9;
          if (!on_lattice) {
            throw Error(ErrorKind::ConstraintViolation, "SU(N) eigenangles must sum to 0 mod 2π");
          }
          return SpecialUnitaryPoint{renormalize_special_unitary(diagonal_unitary(values))};
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          const auto parts = split(s, ';');
          if (parts.size() != g.factors.size()) {
            throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(g.factors.size()) +
                                                          " ';'-separated components");
          }
          ProductPoint p;
          for (std::size_t i = 0; i < parts.size(); ++i) p.components.push_back(parse_point(group.factors[i], parts[i]));
          return p;
        } else if constexpr (std::is_same_v<T, FCQuotientSpec>) {
          if (s == "e") return identity(spec);
          auto [t, d] = split_pair(s);
          return g.group->canonical(parse_torus(t, g.group->torus_dim()),
                                    parse_finite_element(g.group->delta(), group.named, d));
        } else {
          if (s == "e") return identity(spec);
          auto [t, d] = split_pair(s);
          return SemidirectPoint{parse_torus(t, g.group->torus_dim()),
                                 parse_finite_element(g.group->phi(), group.named, d)};
        }
      },
      spec.value);
}

}  // namespace frobenius
