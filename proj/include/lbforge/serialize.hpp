#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lbforge/cobracket.hpp"
#include "lbforge/lagrangian.hpp"
#include "lbforge/rmatrix.hpp"

namespace lbforge {

using Json = nlohmann::ordered_json;

/// Wire format of r(u,v):
///   {"algebra": {"type": "A", "rank": n}, "basis": [labels],
///    "entries": [{"i": label, "j": label, "num": [[du, dv, "a/b"], ...],
///                 "den_power": k, "den_scale": "a/b"}]}
/// with entry = num / (den_scale * (v-u)^den_power). Written with den_scale "1".
Json spectral_to_json(const LieAlgebra& alg, const SpectralTensor2& r);

struct SpectralDocument {
  int rank = 0;  // A_rank = sl_{rank+1}
  SpectralTensor2 r;
  std::optional<std::string> case_text;  // optional "case" member
};

/// Throws Error(Parse) on any schema violation, including a basis list that
/// differs from the one of sl_{rank+1}.
SpectralDocument spectral_from_json(const Json& doc);

Json poly_to_json(const Poly2& p);
Poly2 poly_from_json(const Json& j);

Json dual_basis_to_json(const LieAlgebra& alg, const CaseSpec& spec, const std::vector<DualElement>& duals);
Json axiom_results_to_json(const std::vector<AxiomResult>& results);

}  // namespace lbforge
