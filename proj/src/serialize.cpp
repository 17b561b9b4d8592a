#include "lbforge/serialize.hpp"

#include "lbforge/error.hpp"

namespace lbforge {

namespace {

Error parse_error(const std::string& what) { return Error(Errc::Parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing member '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j, const char* what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a rational string");
  return parse_rational(j.get<std::string>());
}

Json poly1_to_json(const Poly1& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e[0], to_string(c)}));
  return terms;
}

Json gelement_to_json(const LieAlgebra& alg, const GElement& x) {
  Json out = Json::object();
  for (const auto& [i, c] : x.entries()) out[alg.labels()[static_cast<std::size_t>(i[0])]] = to_string(c);
  return out;
}

}  // namespace

Json poly_to_json(const Poly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e[0], e[1], to_string(c)}));
  return terms;
}

Poly2 poly_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("'num' must be an array of [du, dv, \"a/b\"]");
  Poly2 p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw parse_error("numerator term must be [du, dv, \"a/b\"]");
    p.add_term({as_int(t[0], "du"), as_int(t[1], "dv")}, as_rational(t[2], "coefficient"));
  }
  return p;
}

Json spectral_to_json(const LieAlgebra& alg, const SpectralTensor2& r) {
  Json doc;
  doc["algebra"] = {{"type", "A"}, {"rank", alg.rank()}};
  doc["basis"] = alg.labels();
  Json entries = Json::array();
  for (const auto& [ij, f] : r.entries()) {
    Json e;
    e["i"] = alg.labels()[static_cast<std::size_t>(ij[0])];
    e["j"] = alg.labels()[static_cast<std::size_t>(ij[1])];
    e["num"] = poly_to_json(f.numerator());
    e["den_power"] = f.den_power();
    e["den_scale"] = "1";
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

SpectralDocument spectral_from_json(const Json& doc) {
  SpectralDocument out;
  const Json& algebra = member(doc, "algebra");
  const Json& type = member(algebra, "type");
  if (!type.is_string() || type.get<std::string>() != "A") throw parse_error("only algebra type \"A\" is supported");
  out.rank = as_int(member(algebra, "rank"), "rank");
  if (out.rank < 1) throw parse_error("rank must be >= 1");
  const LieAlgebra alg = build_sl(out.rank + 1);
  const Json& basis = member(doc, "basis");
  if (!basis.is_array() || basis.size() != alg.labels().size()) throw parse_error("basis does not match algebra");
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].is_string() || basis[k].get<std::string>() != alg.labels()[k])
      throw parse_error("basis does not match algebra at position " + std::to_string(k));
  const Json& entries = member(doc, "entries");
  if (!entries.is_array()) throw parse_error("'entries' must be an array");
  auto label = [&](const Json& j, const char* what) {
    if (!j.is_string()) throw parse_error(std::string(what) + " must be a basis label");
    auto idx = alg.index_of(j.get<std::string>());
    if (!idx) throw parse_error("unknown basis label '" + j.get<std::string>() + "'");
    return *idx;
  };
  for (const auto& e : entries) {
    const int i = label(member(e, "i"), "i"), j = label(member(e, "j"), "j");
    const int k = as_int(member(e, "den_power"), "den_power");
    if (k < 0) throw parse_error("den_power must be >= 0");
    const Rational scale = e.contains("den_scale") ? as_rational(e.at("den_scale"), "den_scale") : Rational(1);
    if (is_zero(scale)) throw parse_error("den_scale must be nonzero");
    out.r.add({i, j}, BivarRat(poly_from_json(member(e, "num")), k, scale));
  }
  if (doc.contains("case")) {
    if (!doc.at("case").is_string()) throw parse_error("'case' must be a string");
    out.case_text = doc.at("case").get<std::string>();
  }
  return out;
}

Json dual_basis_to_json(const LieAlgebra& alg, const CaseSpec& spec, const std::vector<DualElement>& duals) {
  Json doc;
  doc["algebra"] = {{"type", "A"}, {"rank", alg.rank()}};
  doc["case"] = spec.to_string();
  Json list = Json::array();
  for (const auto& d : duals) {
    Json e;
    e["basis"] = alg.labels()[static_cast<std::size_t>(d.basis)];
    e["degree"] = d.degree;
    Json loop = Json::object();
    for (const auto& [i, p] : d.dual.loop.entries()) loop[alg.labels()[static_cast<std::size_t>(i[0])]] = poly1_to_json(p);
    e["loop"] = std::move(loop);
    if (!d.dual.finite.is_zero()) e["finite"] = gelement_to_json(alg, d.dual.finite);
    if (!d.dual.eps.is_zero()) e["eps"] = gelement_to_json(alg, d.dual.eps);
    list.push_back(std::move(e));
  }
  doc["duals"] = std::move(list);
  return doc;
}

Json axiom_results_to_json(const std::vector<AxiomResult>& results) {
  Json list = Json::array();
  for (const auto& r : results)
    list.push_back({{"family", r.family}, {"element", r.element}, {"check", r.check}, {"pass", r.pass}});
  return list;
}

}  // namespace lbforge
