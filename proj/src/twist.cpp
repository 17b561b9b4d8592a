#include "lbforge/twist.hpp"

#include "lbforge/error.hpp"

namespace lbforge {

AffineChange solve_pq(const Rational& c1, const Rational& c2, const Rational& d1, const Rational& d2) {
  if (is_zero(c1) || is_zero(c2) || is_zero(d1) || is_zero(d2))
    throw Error(Errc::InvalidParameter, "constants must be nonzero");
  if (c1 == c2) throw Error(Errc::InvalidParameter, "c1 = c2");
  if (d1 == d2) throw Error(Errc::InvalidParameter, "d1 = d2");
  const Rational x = (1 / d1 - 1 / d2) / (1 / c1 - 1 / c2);
  const Rational y = x / c1 - 1 / d1;
  if (is_zero(x)) throw Error(Errc::DegenerateChange, "no finite p solves the system");
  AffineChange ch{1 / x, y / x};
  if (is_zero(1 - c1 * ch.q) || is_zero(1 - c2 * ch.q))
    throw Error(Errc::DegenerateChange, "1 - c_i q vanishes");
  return ch;
}

AffineChange compose(const AffineChange& outer, const AffineChange& inner) {
  return {outer.p * inner.p, outer.p * inner.q + outer.q};
}

Rational forward_constant(const AffineChange& ch, const Rational& c) {
  const Rational den = 1 - c * ch.q;
  if (is_zero(den)) throw Error(Errc::DegenerateChange, "1 - c q vanishes");
  return c * ch.p / den;
}

SpectralTensor2 substitute_affine_tensor(const SpectralTensor2& r, const AffineChange& ch) {
  SpectralTensor2 out;
  for (const auto& [ij, f] : r.entries()) out.add(ij, substitute_affine_scalar(f, ch.p, ch.q));
  return out;
}

TwistReport quasi_twist_verify(const LieAlgebra& alg, const Rational& c1, const Rational& c2, const Rational& d1,
                               const Rational& d2) {
  TwistReport report;
  report.change = solve_pq(c1, c2, d1, d2);
  const auto& [p, q] = report.change;
  report.scale = p / ((1 - c1 * q) * (1 - c2 * q));
  const RKind dj = RKind::dj(alg);
  const SpectralTensor2 lhs = build_r(alg, CaseSpec::two_points(d1, d2), dj);
  const SpectralTensor2 rhs =
      substitute_affine_tensor(build_r(alg, CaseSpec::two_points(c1, c2), dj), report.change) * report.scale;
  report.equal = lhs == rhs;
  return report;
}

bool remark_example_check(const LieAlgebra& alg, const Rational& factor) {
  const Poly2 u = Poly2::variable(0), v = Poly2::variable(1), one(1);
  const ConstTensor2 omega = casimir(alg);
  ConstTensor2 wedges;
  for (int a = 0; a < alg.num_positive_roots(); ++a)
    wedges += wedge(basis_element(alg.e_index(a)), basis_element(alg.f_index(a)));
  const SpectralTensor2 r = spectral(omega, BivarRat(one - u * v, 1)) + spectral(wedges);
  const SpectralTensor2 moved = substitute_affine_tensor(r, {2, -1});
  const SpectralTensor2 target = (spectral(omega, BivarRat(u * (one - v), 1)) + spectral(r_dj(alg))) * factor;
  return moved == target;
}

}  // namespace lbforge
