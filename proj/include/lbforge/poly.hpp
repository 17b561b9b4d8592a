#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lbforge/rational.hpp"

namespace lbforge {

/// Sparse Laurent polynomial in `Vars` variables over exact rationals.
/// Exponents may be negative; zero coefficients are never stored, so two
/// values are equal iff their term maps are equal.
template <std::size_t Vars>
class Poly {
 public:
  using Exponent = std::array<int, Vars>;
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: constants convert implicitly
    if (!lbforge::is_zero(c)) terms_.emplace(Exponent{}, c);
  }
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT

  static Poly monomial(const Exponent& e, const Rational& c = 1) {
    Poly p;
    p.add_term(e, c);
    return p;
  }

  /// The variable x_k.
  static Poly variable(std::size_t k) {
    Exponent e{};
    e[k] = 1;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const Rational& c) {
    if (lbforge::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (lbforge::is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coeff(Exponent{}); }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (lbforge::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, int s) { return a *= Rational(s); }
  friend Poly operator*(int s, Poly a) { return a *= Rational(s); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < Vars; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int n) const {
    Poly r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Multiply by the monomial x^shift.
  Poly shifted(const Exponent& shift) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t k = 0; k < Vars; ++k) f[k] = e[k] + shift[k];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  int min_degree(std::size_t var) const {
    int d = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
  }
  int max_degree(std::size_t var) const {
    int d = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  /// True iff no exponent is negative.
  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return false;
    return true;
  }

  /// Re-home every variable: x_k becomes y_{target[k]} in a poly of `Out` variables.
  template <std::size_t Out>
  Poly<Out> remap(const std::array<std::size_t, Vars>& target) const {
    Poly<Out> r;
    for (const auto& [e, c] : terms_) {
      typename Poly<Out>::Exponent f{};
      for (std::size_t k = 0; k < Vars; ++k) f[target[k]] += e[k];
      r.add_term(f, c);
    }
    return r;
  }

  /// Keep only the terms whose exponent of `var` lies in [lo, hi].
  Poly truncated(std::size_t var, int lo, int hi) const {
    Poly r;
    for (const auto& [e, c] : terms_)
      if (e[var] >= lo && e[var] <= hi) r.terms_.emplace(e, c);
    return r;
  }

 private:
  Terms terms_;
};

using Poly1 = Poly<1>;
using Poly2 = Poly<2>;
using Poly3 = Poly<3>;

template <std::size_t Vars>
bool is_zero(const Poly<Vars>& p) {
  return p.is_zero();
}

/// Substitute x_k -> p*x_k + q in every variable. Requires a genuine polynomial.
template <std::size_t Vars>
Poly<Vars> substitute_affine(const Poly<Vars>& f, const Rational& p, const Rational& q) {
  int max_e = 0;
  for (const auto& [e, c] : f.terms())
    for (int x : e) max_e = std::max(max_e, x);
  // powers[k] = (p x + q)^k as coefficient vector in x
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(max_e) + 1);
  powers[0] = {Rational(1)};
  for (int k = 1; k <= max_e; ++k) {
    const auto& prev = powers[static_cast<std::size_t>(k - 1)];
    std::vector<Rational> next(prev.size() + 1, Rational(0));
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] += prev[i] * q;
      next[i + 1] += prev[i] * p;
    }
    powers[static_cast<std::size_t>(k)] = std::move(next);
  }
  Poly<Vars> out;
  for (const auto& [e, c] : f.terms()) {
    Poly<Vars> term(c);
    for (std::size_t k = 0; k < Vars; ++k) {
      Poly<Vars> factor;
      const auto& pw = powers[static_cast<std::size_t>(e[k])];
      for (std::size_t i = 0; i < pw.size(); ++i) {
        typename Poly<Vars>::Exponent x{};
        x[k] = static_cast<int>(i);
        factor.add_term(x, pw[i]);
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

/// Exact quotient of a bivariate polynomial P(u,v) by (v - u), or nullopt when
/// P(u,u) != 0. Synthetic division in v with coefficients in u[u^-1].
std::optional<Poly2> divide_by_v_minus_u(const Poly2& p);

/// P(u,v) -> P(v,u).
inline Poly2 swap_variables(const Poly2& p) { return p.remap<2>({1, 0}); }

/// (v - u) as a bivariate polynomial.
inline Poly2 v_minus_u() { return Poly2::variable(1) - Poly2::variable(0); }

/// Evaluate a univariate Laurent polynomial at a nonzero rational (or at any
/// rational when it has no negative powers).
Rational evaluate(const Poly1& p, const Rational& x);

/// Human-readable rendering with variable names, e.g. "u*v - 1/2*u^-1".
template <std::size_t Vars>
std::string to_string(const Poly<Vars>& p, const std::array<const char*, Vars>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < Vars; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

inline std::string to_string(const Poly1& p) { return to_string<1>(p, {"u"}); }
inline std::string to_string(const Poly2& p) { return to_string<2>(p, {"u", "v"}); }
inline std::string to_string(const Poly3& p) { return to_string<3>(p, {"u", "v", "w"}); }

}  // namespace lbforge
