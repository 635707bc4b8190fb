#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frobenius/finite_group.hpp"
#include "frobenius/group_core.hpp"
#include "frobenius/limits.hpp"

namespace frobenius {

// A parsed group together with the element names its input defined.
struct GroupHandle {
  GroupSpec spec;
  std::vector<NamedElement> named;  // for the finite part (Δ or Φ for quotients)
  std::vector<GroupHandle> factors;  // products only
};

// JSON descriptors:
//   {"degree": 3, "generators": [[1,0,2], [1,2,0]]}   (or cycle strings)
//   "S3" / {"builtin": "S3"}
//   {"torus": k}   {"su": N}   {"product": [<descriptor>, ...]}
//   {"torus_dim": k, "delta": <finite>, "N": [{"torus": ["1/2"], "delta_elt": "(0 1)"}]}
//   {"torus_dim": k, "phi": <finite>, "action": {"(0 1)": [[-1]]}}
GroupHandle group_from_json(const nlohmann::json& descriptor, const Limits& limits = {});

// Built-in names: S3 S4 A4 D4 Q8 Z2 Z4, T<k>, SU<N>, O2 (T¹ ⋊ Z2 by
// inversion), Z4rot (T² ⋊ Z4 by rotation), Q8xT1, T1xZ2/diag.
std::optional<GroupHandle> builtin_handle(std::string_view name, const Limits& limits = {});
std::vector<std::string> builtin_handle_names();

// Built-in name, path to a JSON file, or inline JSON.
GroupHandle load_group(std::string_view name_or_path, const Limits& limits = {});

// Element syntax:
//   finite       "e", a named element ("-1", "i"), cycles "(0 1 2)" or images "[1,2,0]"
//   torus        angle list "1/2 pi, 0"
//   SU(N)        "e", or eigenangles "1/2 pi, -1/2 pi" (a diagonal matrix)
//   product      components separated by ';'
//   quotient     "<angles> | <finite element>"
//   (t, φ)       "<angles> | <finite element>"
GroupPoint parse_point(const GroupHandle& group, std::string_view text);

Permutation parse_finite_element(const FiniteGroup& group, const std::vector<NamedElement>& named,
                                 std::string_view text);

}  // namespace frobenius
