#pragma once

#include "lbforge/rmatrix.hpp"

namespace lbforge {

/// sigma(u) = p u + q, p != 0.
struct AffineChange {
  Rational p = 1;
  Rational q = 0;

  friend bool operator==(const AffineChange&, const AffineChange&) = default;
};

/// The unique (p, q) with d_i = c_i p / (1 - c_i q), i = 1, 2. Solved as the
/// linear system 1/d_i = X/c_i - Y in X = 1/p, Y = q/p.
/// Throws Error(InvalidParameter) for zero or repeated constants and
/// Error(DegenerateChange) when the solution has p = 0 or 1 - c_i q = 0.
AffineChange solve_pq(const Rational& c1, const Rational& c2, const Rational& d1, const Rational& d2);

/// outer(inner(u)): substituting inner after outer.
AffineChange compose(const AffineChange& outer, const AffineChange& inner);

/// c p / (1 - c q).
Rational forward_constant(const AffineChange& ch, const Rational& c);

/// r(pu + q, pv + q), entrywise.
SpectralTensor2 substitute_affine_tensor(const SpectralTensor2& r, const AffineChange& ch);

struct TwistReport {
  AffineChange change;
  Rational scale;  // p / ((1 - c1 q)(1 - c2 q))
  bool equal = false;
};

/// Compares build_r(I/two-points(d1,d2), r_DJ) with
/// C * build_r(I/two-points(c1,c2), r_DJ)(pu + q, pv + q).
TwistReport quasi_twist_verify(const LieAlgebra& alg, const Rational& c1, const Rational& c2, const Rational& d1,
                               const Rational& d2);

/// Substitutes u = 2u1 - 1 into (1 - uv)/(v-u) Omega + sum_a e_a ^ e_-a and
/// compares with factor * (u1(1 - v1)/(v1 - u1) Omega + r_DJ).
bool remark_example_check(const LieAlgebra& alg, const Rational& factor = 2);

}  // namespace lbforge
