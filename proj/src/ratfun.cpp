#include "lbforge/ratfun.hpp"

#include <algorithm>
#include <map>

#include "lbforge/error.hpp"

namespace lbforge {

std::optional<Poly2> divide_by_v_minus_u(const Poly2& p) {
  if (p.is_zero()) return Poly2();
  // p = sum_j p_j(u) v^j, j in [lo, hi]
  const int lo = p.min_degree(1), hi = p.max_degree(1);
  std::map<int, Poly1> slices;
  for (const auto& [e, c] : p.terms()) slices[e[1] - lo].add_term({e[0]}, c);
  const Poly1 u = Poly1::variable(0);
  Poly2 quotient;
  Poly1 carry;  // q_j while walking down
  for (int j = hi - lo; j >= 1; --j) {
    auto it = slices.find(j);
    carry = (it == slices.end() ? Poly1() : it->second) + u * carry;  // q_{j-1}
    for (const auto& [e, c] : carry.terms()) quotient.add_term({e[0], j - 1 + lo}, c);
  }
  auto it0 = slices.find(0);
  Poly1 remainder = (it0 == slices.end() ? Poly1() : it0->second) + u * carry;
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

Rational evaluate(const Poly1& p, const Rational& x) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    if (e[0] >= 0) {
      for (int k = 0; k < e[0]; ++k) term *= x;
    } else {
      for (int k = 0; k < -e[0]; ++k) term /= x;
    }
    s += term;
  }
  return s;
}

std::vector<Rational> expand_at_zero(const RatFun1& f, int order) {
  if (order < 0) throw Error(Errc::InvalidParameter, "expansion order must be >= 0");
  if (!f.num.is_polynomial() || !f.den.is_polynomial())
    throw Error(Errc::InvalidParameter, "numerator and denominator must be polynomials in u");
  const Rational d0 = f.den.constant_term();
  if (is_zero(d0)) throw Error(Errc::PoleAtZero, "denominator vanishes at u = 0");
  // den * t = num through degree `order`: t_k = (n_k - sum_{i>=1} d_i t_{k-i}) / d_0
  std::vector<Rational> t(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int k = 0; k <= order; ++k) {
    Rational acc = f.num.coeff({k});
    for (const auto& [e, c] : f.den.terms())
      if (e[0] >= 1 && e[0] <= k) acc -= c * t[static_cast<std::size_t>(k - e[0])];
    t[static_cast<std::size_t>(k)] = acc / d0;
  }
  return t;
}

Rational residue(const LaurentScalar& f, const RatFun1& a) {
  if (f.is_zero()) return 0;
  const int lowest = f.min_degree(0);
  const int order = std::max(0, -lowest - 1);
  const auto taylor = expand_at_zero(a, order);
  // u^-1 coefficient of sum_d f_d u^d * sum_k t_k u^k: d + k = -1
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    const int k = -1 - e[0];
    if (k >= 0 && k <= order) s += c * taylor[static_cast<std::size_t>(k)];
  }
  return s;
}

BivarRat::BivarRat(Poly2 num, int den_power, const Rational& den_scale) : num_(std::move(num)), den_power_(den_power) {
  if (lbforge::is_zero(den_scale)) throw Error(Errc::InvalidParameter, "zero denominator scale");
  if (den_power < 0) throw Error(Errc::InvalidParameter, "negative power of (v-u) in denominator");
  if (den_scale != 1) num_ *= Rational(1 / den_scale);
  reduce();
}

void BivarRat::reduce() {
  if (num_.is_zero()) {
    den_power_ = 0;
    return;
  }
  while (den_power_ > 0) {
    auto q = divide_by_v_minus_u(num_);
    if (!q) break;
    num_ = std::move(*q);
    --den_power_;
  }
}

BivarRat BivarRat::swapped_variables() const {
  // (u - v)^k = (-1)^k (v - u)^k
  BivarRat r;
  r.num_ = swap_variables(num_);
  if (den_power_ % 2 != 0) r.num_ = -r.num_;
  r.den_power_ = den_power_;
  return r;
}

BivarRat& BivarRat::operator+=(const BivarRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int k = std::max(den_power_, o.den_power_);
  const Poly2 d = v_minus_u();
  num_ = num_ * d.pow(k - den_power_) + o.num_ * d.pow(k - o.den_power_);
  den_power_ = k;
  reduce();
  return *this;
}

BivarRat operator*(const BivarRat& a, const BivarRat& b) {
  BivarRat r;
  r.num_ = a.num_ * b.num_;
  r.den_power_ = r.num_.is_zero() ? 0 : a.den_power_ + b.den_power_;
  r.reduce();
  return r;
}

BivarRat substitute_affine_scalar(const BivarRat& f, const Rational& p, const Rational& q) {
  if (is_zero(p)) throw Error(Errc::DegenerateSubstitution, "affine substitution with p = 0");
  if (!f.numerator().is_polynomial())
    throw Error(Errc::InvalidParameter, "affine substitution needs a polynomial numerator");
  Rational scale = 1;
  for (int k = 0; k < f.den_power(); ++k) scale *= p;
  return BivarRat(substitute_affine(f.numerator(), p, q), f.den_power(), scale);
}

Poly2 expand_region_scalar(const BivarRat& f, int order) {
  const int k = f.den_power();
  if (k == 0) return f.numerator().truncated(0, f.numerator().min_degree(0), order);
  const int lowest_u = std::min(0, f.numerator().min_degree(0));
  // 1/(v-u)^k = sum_m C(m+k-1, k-1) u^m v^{-m-k}
  Poly2 series;
  for (int m = 0; m <= order - lowest_u; ++m) series.add_term({m, -m - k}, binomial(m + k - 1, k - 1));
  return (f.numerator() * series).truncated(0, lowest_u, order);
}

std::string to_string(const BivarRat& f) {
  std::string num = to_string(f.numerator());
  if (f.den_power() == 0) return num;
  std::string den = f.den_power() == 1 ? "(v - u)" : "(v - u)^" + std::to_string(f.den_power());
  return "(" + num + ")/" + den;
}

}  // namespace lbforge
