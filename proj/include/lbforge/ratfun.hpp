#pragma once

#include <vector>

#include "lbforge/poly.hpp"
#include "lbforge/rational.hpp"

namespace lbforge {

/// Scalar Laurent polynomial in u (finite support).
using LaurentScalar = Poly1;

/// num(u) / den(u), both genuine polynomials, den != 0.
struct RatFun1 {
  Poly1 num;
  Poly1 den;

  static RatFun1 polynomial(Poly1 p) { return {std::move(p), Poly1(1)}; }
};

/// Taylor coefficients t_0..t_order of f at u = 0 by long division.
/// Throws Error(PoleAtZero) when den(0) == 0.
std::vector<Rational> expand_at_zero(const RatFun1& f, int order);

/// Coefficient of u^-1 in f(u) * a(u), with a expanded at 0 as far as the
/// most negative power of f requires.
Rational residue(const LaurentScalar& f, const RatFun1& a);

/// num(u,v) / (v - u)^k. The denominator scale is folded into the numerator
/// and common factors of (v - u) are cancelled on construction, so equality
/// of values is equality of the stored pairs.
class BivarRat {
 public:
  BivarRat() = default;
  BivarRat(const Rational& c) : num_(c) {}  // NOLINT
  BivarRat(int c) : num_(c) {}              // NOLINT
  explicit BivarRat(Poly2 num, int den_power = 0, const Rational& den_scale = 1);

  const Poly2& numerator() const { return num_; }
  int den_power() const { return den_power_; }
  bool is_zero() const { return num_.is_zero(); }

  /// f(v, u).
  BivarRat swapped_variables() const;

  BivarRat& operator+=(const BivarRat& o);
  BivarRat& operator-=(const BivarRat& o) { return *this += -o; }
  friend BivarRat operator+(BivarRat a, const BivarRat& b) { return a += b; }
  friend BivarRat operator-(BivarRat a, const BivarRat& b) { return a -= b; }
  friend BivarRat operator-(const BivarRat& a) {
    BivarRat r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend BivarRat operator*(const BivarRat& a, const BivarRat& b);
  friend BivarRat operator*(BivarRat a, const Rational& s) {
    a.num_ *= s;
    if (a.num_.is_zero()) a.den_power_ = 0;
    return a;
  }
  friend BivarRat operator*(const Rational& s, const BivarRat& a) { return a * s; }
  friend bool operator==(const BivarRat& a, const BivarRat& b) = default;

 private:
  void reduce();

  Poly2 num_;
  int den_power_ = 0;
};

inline bool is_zero(const BivarRat& f) { return f.is_zero(); }

/// f(pu + q, pv + q); the denominator becomes (p(v - u))^k.
/// Throws Error(DegenerateSubstitution) when p == 0.
BivarRat substitute_affine_scalar(const BivarRat& f, const Rational& p, const Rational& q);

/// Expansion of f in the region |u| < |v|: a series in u whose coefficients
/// are Laurent polynomials in v, truncated to u-degree <= order.
Poly2 expand_region_scalar(const BivarRat& f, int order);

std::string to_string(const BivarRat& f);

}  // namespace lbforge
