#include "lbforge/pairing.hpp"

#include <vector>

#include "lbforge/error.hpp"

namespace lbforge {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

const char* form_name(AForm f) {
  switch (f) {
    case AForm::TwoPoints: return "two-points";
    case AForm::DoublePole: return "double-pole";
    case AForm::SimplePole: return "simple-pole";
    case AForm::Constant: return "constant";
  }
  return "?";
}

std::string a_display(const CaseSpec& s) {
  switch (s.form) {
    case AForm::TwoPoints: return "1/((1 - c1 u)(1 - c2 u))";
    case AForm::DoublePole: return "1/(1 - u)^2";
    case AForm::SimplePole: return "1/(1 - u)";
    case AForm::Constant: return "1";
  }
  return "?";
}

}  // namespace

std::string to_string(DoubleType t) {
  switch (t) {
    case DoubleType::I: return "I";
    case DoubleType::II: return "II";
    case DoubleType::III: return "III";
  }
  return "?";
}

RatFun1 CaseSpec::a() const {
  const Poly1 u = Poly1::variable(0);
  switch (form) {
    case AForm::TwoPoints: return {Poly1(1), (Poly1(1) - u * c1) * (Poly1(1) - u * c2)};
    case AForm::DoublePole: return {Poly1(1), (Poly1(1) - u).pow(2)};
    case AForm::SimplePole: return {Poly1(1), Poly1(1) - u};
    case AForm::Constant: return {Poly1(1), Poly1(1)};
  }
  return {Poly1(1), Poly1(1)};
}

int CaseSpec::inverse_degree() const {
  switch (form) {
    case AForm::TwoPoints:
    case AForm::DoublePole: return 2;
    case AForm::SimplePole: return 1;
    case AForm::Constant: return 0;
  }
  return 0;
}

std::string CaseSpec::to_string() const {
  std::string s = lbforge::to_string(type) + ":" + form_name(form);
  if (form == AForm::TwoPoints) s += ":" + lbforge::to_string(c1) + "," + lbforge::to_string(c2);
  return s;
}

CaseSpec CaseSpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  auto fail = [&](const std::string& why) {
    return Error(Errc::Parse, "case '" + std::string(text) + "': " + why);
  };
  if (parts.size() < 2) throw fail("expected <I|II|III>:<form>[:c1,c2]");
  CaseSpec spec;
  if (parts[0] == "I")
    spec.type = DoubleType::I;
  else if (parts[0] == "II")
    spec.type = DoubleType::II;
  else if (parts[0] == "III")
    spec.type = DoubleType::III;
  else
    throw fail("unknown double type '" + std::string(parts[0]) + "'");

  if (parts[1] == "two-points") {
    spec.form = AForm::TwoPoints;
    if (parts.size() != 3) throw fail("two-points needs parameters c1,c2");
    auto cs = split(parts[2], ',');
    if (cs.size() != 2) throw fail("two-points needs exactly two parameters");
    spec.c1 = parse_rational(cs[0]);
    spec.c2 = parse_rational(cs[1]);
    return spec;
  }
  if (parts.size() != 2) throw fail("unexpected parameters");
  if (parts[1] == "double-pole")
    spec.form = AForm::DoublePole;
  else if (parts[1] == "simple-pole")
    spec.form = AForm::SimplePole;
  else if (parts[1] == "constant")
    spec.form = AForm::Constant;
  else
    throw fail("unknown a(u) form '" + std::string(parts[1]) + "'");
  return spec;
}

DoubleElement& DoubleElement::operator+=(const DoubleElement& o) {
  loop += o.loop;
  finite += o.finite;
  eps += o.eps;
  return *this;
}

LoopElement loop_element(const GElement& x, const Poly1& p) {
  LoopElement r;
  for (const auto& [i, c] : x.entries()) r.add(i, p * c);
  return r;
}

DoubleElement loop_only(LoopElement loop) { return {std::move(loop), {}, {}}; }

DoubleElement canonical_element(const CaseSpec& spec, int basis, int degree) {
  DoubleElement x;
  x.loop.add({basis}, Poly1::monomial({degree}));
  if (spec.type != DoubleType::I && degree == 0) x.finite.add({basis}, 1);
  if (spec.type == DoubleType::III && degree == 1) x.eps.add({basis}, 1);
  return x;
}

namespace {

void check_shape(const CaseSpec& spec, const DoubleElement& x) {
  if (spec.type == DoubleType::I && !(x.finite.is_zero() && x.eps.is_zero()))
    throw Error(Errc::MalformedElement, "type I double has no finite summand");
  if (spec.type == DoubleType::II && !x.eps.is_zero())
    throw Error(Errc::MalformedElement, "type II double has no eps summand");
}

}  // namespace

Rational q_form(const LieAlgebra& alg, const CaseSpec& spec, const DoubleElement& x, const DoubleElement& y) {
  check_shape(spec, x);
  check_shape(spec, y);
  LaurentScalar s;
  for (const auto& [a, pa] : x.loop.entries())
    for (int b : alg.form_partners(a[0])) {
      auto it = y.loop.entries().find({b});
      if (it != y.loop.entries().end()) s += pa * it->second * alg.form(a[0], b);
    }
  switch (spec.type) {
    case DoubleType::I: return residue(s, spec.a());
    case DoubleType::II: return residue(s.shifted({-1}), spec.a()) - alg.form(x.finite, y.finite);
    case DoubleType::III:
      return residue(s.shifted({-2}), spec.a()) - alg.form(x.eps, y.finite) - alg.form(x.finite, y.eps);
  }
  return 0;
}

DoubleElement bracket(const LieAlgebra& alg, const CaseSpec& spec, const DoubleElement& x, const DoubleElement& y) {
  check_shape(spec, x);
  check_shape(spec, y);
  DoubleElement r;
  for (const auto& [a, pa] : x.loop.entries())
    for (const auto& [b, pb] : y.loop.entries()) {
      const Poly1 p = pa * pb;
      for (const auto& [k, ck] : alg.bracket_basis(a[0], b[0]).entries()) r.loop.add(k, p * ck);
    }
  r.finite = alg.bracket(x.finite, y.finite);
  r.eps = alg.bracket(x.finite, y.eps) + alg.bracket(x.eps, y.finite);
  return r;
}

std::optional<int> admissible_degree(DoubleType type, const Vertex& vertex) {
  const bool at_max = vertex.kind == Vertex::Kind::MinusAlphaMax;
  const bool k_one = at_max || vertex.k == 1;
  switch (type) {
    case DoubleType::I: return k_one ? 2 : 1;
    case DoubleType::II: return k_one ? 1 : 0;
    case DoubleType::III:
      if (k_one) return 0;
      return std::nullopt;
  }
  return std::nullopt;
}

CaseValidation validate_case(const CaseSpec& spec) {
  if (spec.form == AForm::TwoPoints) {
    if (is_zero(spec.c1) || is_zero(spec.c2))
      return {false, "two-points form needs nonzero constants c1, c2"};
    if (spec.c1 == spec.c2) return {false, "two-points form needs distinct constants c1 != c2"};
  }
  const int bound = *admissible_degree(spec.type, Vertex::minus_alpha_max());
  const int deg = spec.inverse_degree();
  if (deg <= bound) return {true, {}};
  std::string rule;
  switch (spec.type) {
    case DoubleType::I: rule = "double g((u)) at -alpha_max: 1/a(u) is a polynomial of degree at most 2"; break;
    case DoubleType::II: rule = "double g((u)) + g at -alpha_max: 1/a(u) is a polynomial of degree at most 1"; break;
    case DoubleType::III: rule = "double g((u)) + (g + eps g) at -alpha_max: 1/a(u) is a constant"; break;
  }
  return {false, "degree bound violated (" + rule + "); a(u) = " + a_display(spec) + " has deg(1/a) = " +
                     std::to_string(deg)};
}

}  // namespace lbforge
