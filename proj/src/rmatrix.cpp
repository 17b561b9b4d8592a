#include "lbforge/rmatrix.hpp"

#include <algorithm>
#include <vector>

#include "lbforge/error.hpp"

namespace lbforge {

namespace {

bool all_zero(const ConstTensor3& t) { return t.is_zero(); }

struct Entry {
  int i, j;
  Poly3 uv, uw, vw;  // numerator with the legs' variables assigned
};

PolyTensor3 times(PolyTensor3 t, const Poly3& f) {
  PolyTensor3 r;
  for (const auto& [idx, p] : t.entries()) r.add(idx, p * f);
  return r;
}

}  // namespace

RKind::RKind(const LieAlgebra& alg, Tag tag, ConstTensor2 value) : tag_(tag), value_(std::move(value)) {
  const ConstTensor2 sym = value_ + swap_legs(value_);
  if (tag == Tag::MCYBE && !(sym == casimir(alg))) throw Error(Errc::InvalidInput, "r + r21 != Omega");
  if (tag == Tag::SkewCYBE && !sym.is_zero()) throw Error(Errc::InvalidInput, "r is not skew-symmetric");
  if (!all_zero(cyb(alg, value_))) throw Error(Errc::InvalidInput, "CYB(r) != 0");
}

std::string to_string(RKind::Tag tag) { return tag == RKind::Tag::MCYBE ? "MCYBE" : "SkewCYBE"; }

RKind::Tag required_kind(const CaseSpec& spec) {
  return quotient_ambient(spec) == Ambient::PairSum ? RKind::Tag::MCYBE : RKind::Tag::SkewCYBE;
}

SpectralTensor2 spectral(const ConstTensor2& t, const BivarRat& f) { return scale_by<2, BivarRat>(t, f); }

SpectralTensor2 build_r(const LieAlgebra& alg, const CaseSpec& spec, const RKind& r) {
  const auto valid = validate_case(spec);
  if (!valid.ok) throw Error(Errc::InvalidParameter, valid.reason);
  if (r.tag() != required_kind(spec))
    throw Error(Errc::KindMismatch, spec.to_string() + " needs a " + to_string(required_kind(spec)) +
                                        " constant part, got " + to_string(r.tag()));
  const Poly2 u = Poly2::variable(0), v = Poly2::variable(1), one(1);
  const ConstTensor2 omega = casimir(alg);
  Poly2 num;
  ConstTensor2 constant = r.value();
  switch (spec.type) {
    case DoubleType::I:
      switch (spec.form) {
        case AForm::TwoPoints:
          num = one - v * spec.c1 - u * spec.c2 + u * v * Rational(spec.c1 * spec.c2);
          constant *= Rational(spec.c1 - spec.c2);
          break;
        case AForm::DoublePole: num = (u - one) * (v - one); break;
        case AForm::SimplePole:
          num = one - u;
          constant *= Rational(-1);
          break;
        case AForm::Constant: num = one; break;
      }
      break;
    case DoubleType::II:
      if (spec.form == AForm::SimplePole) {
        num = u * (one - v);
      } else {
        num = v;
        constant = -swap_legs(constant);
      }
      break;
    case DoubleType::III: num = u * v; break;
  }
  return spectral(omega, BivarRat(num, 1)) + spectral(constant);
}

RKind catalog_r(const LieAlgebra& alg, const CaseSpec& spec) {
  return required_kind(spec) == RKind::Tag::MCYBE ? RKind::dj(alg) : RKind::zero(alg);
}

PolyTensor2 sum_dual_series(const LieAlgebra& alg, const WPresentation& w, int truncation) {
  PolyTensor2 out;
  for (const auto& d : dual_basis(alg, w, truncation))
    for (const auto& [b, p] : d.dual.loop.entries()) {
      const Poly2 in_v = p.remap<2>({1});
      out.add({d.basis, b[0]}, in_v.shifted({d.degree, 0}));
    }
  return out;
}

PolyTensor2 expand_region(const SpectralTensor2& r, int truncation) {
  PolyTensor2 out;
  for (const auto& [ij, f] : r.entries()) out.add(ij, expand_region_scalar(f, truncation));
  return out;
}

SpectralCyb cyb_spectral(const LieAlgebra& alg, const SpectralTensor2& r) {
  int k = 0;
  for (const auto& [ij, f] : r.entries()) k = std::max(k, f.den_power());
  const Poly2 d = v_minus_u();
  std::vector<Entry> entries;
  for (const auto& [ij, f] : r.entries()) {
    const Poly2 n = f.numerator() * d.pow(k - f.den_power());
    entries.push_back({ij[0], ij[1], n.remap<3>({0, 1}), n.remap<3>({0, 2}), n.remap<3>({1, 2})});
  }
  PolyTensor3 t12_13, t12_23, t13_23;
  for (const auto& x : entries)
    for (const auto& y : entries) {
      // r12 = x (legs 1,2), second factor y on legs (1,3) or (2,3)
      for (const auto& [c, s] : alg.bracket_basis(x.i, y.i).entries())
        t12_13.add({c[0], x.j, y.j}, x.uv * y.uw * s);
      for (const auto& [c, s] : alg.bracket_basis(x.j, y.i).entries())
        t12_23.add({x.i, c[0], y.j}, x.uv * y.vw * s);
      for (const auto& [c, s] : alg.bracket_basis(x.j, y.j).entries())
        t13_23.add({x.i, y.i, c[0]}, x.uw * y.vw * s);
    }
  const Poly3 u = Poly3::variable(0), v = Poly3::variable(1), w = Poly3::variable(2);
  SpectralCyb out;
  out.den_power = k;
  out.numerator = times(t12_13, (w - v).pow(k)) + times(t12_23, (w - u).pow(k)) + times(t13_23, (v - u).pow(k));
  return out;
}

SpectralTensor2 unitarity_defect(const SpectralTensor2& r) {
  SpectralTensor2 out = r;
  for (const auto& [ij, f] : r.entries()) out.add({ij[1], ij[0]}, f.swapped_variables());
  return out;
}

bool skew_spectral_check(const SpectralTensor2& r) { return unitarity_defect(r).is_zero(); }

}  // namespace lbforge
