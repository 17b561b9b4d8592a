#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "lbforge/poly.hpp"
#include "lbforge/rational.hpp"

namespace lbforge {

namespace detail {
// Unqualified so that ADL finds is_zero overloads declared after this header.
template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
  using lbforge::is_zero;
  return is_zero(c);
}
}  // namespace detail

/// Sparse map from `Rank` basis indices to a coefficient. Coefficients that
/// become zero are erased, so structural equality is mathematical equality.
/// `Coeff` needs +=, unary -, multiplication by Rational and a free is_zero().
template <std::size_t Rank, class Coeff>
class SparseTensor {
 public:
  using Index = std::array<int, Rank>;
  using Entries = std::map<Index, Coeff>;

  SparseTensor() = default;

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  void add(const Index& idx, const Coeff& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = entries_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) entries_.erase(it);
    }
  }

  Coeff at(const Index& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? Coeff() : it->second;
  }

  SparseTensor& operator+=(const SparseTensor& o) {
    for (const auto& [i, c] : o.entries_) add(i, c);
    return *this;
  }
  SparseTensor& operator-=(const SparseTensor& o) {
    for (const auto& [i, c] : o.entries_) add(i, -c);
    return *this;
  }
  SparseTensor& operator*=(const Rational& s) {
    if (lbforge::is_zero(s)) {
      entries_.clear();
      return *this;
    }
    for (auto& [i, c] : entries_) c = c * s;
    return *this;
  }

  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator-(const SparseTensor& a) {
    SparseTensor r;
    for (const auto& [i, c] : a.entries_) r.entries_.emplace(i, -c);
    return r;
  }
  friend SparseTensor operator*(SparseTensor a, const Rational& s) { return a *= s; }
  friend SparseTensor operator*(const Rational& s, SparseTensor a) { return a *= s; }
  friend bool operator==(const SparseTensor& a, const SparseTensor& b) { return a.entries_ == b.entries_; }

 private:
  Entries entries_;
};

template <std::size_t Rank, class Coeff>
bool is_zero(const SparseTensor<Rank, Coeff>& t) {
  return t.is_zero();
}

/// Element of g: basis index -> rational.
using GElement = SparseTensor<1, Rational>;
/// Element of g (x) g with constant coefficients.
using ConstTensor2 = SparseTensor<2, Rational>;
using ConstTensor3 = SparseTensor<3, Rational>;
/// g-valued Laurent polynomial in u: basis index -> Laurent polynomial.
using LoopElement = SparseTensor<1, Poly1>;
/// Elements of g (x) g and g (x) g (x) g with polynomial (or Laurent) entries.
using PolyTensor2 = SparseTensor<2, Poly2>;
using PolyTensor3 = SparseTensor<3, Poly3>;

inline GElement basis_element(int i, const Rational& c = 1) {
  GElement x;
  x.add({i}, c);
  return x;
}

/// Leg swap of a two-leg tensor (coefficients untouched).
template <class Coeff>
SparseTensor<2, Coeff> swap_legs(const SparseTensor<2, Coeff>& t) {
  SparseTensor<2, Coeff> r;
  for (const auto& [ij, c] : t.entries()) r.add({ij[1], ij[0]}, c);
  return r;
}

/// x (x) y for g-elements.
inline ConstTensor2 outer(const GElement& x, const GElement& y) {
  ConstTensor2 r;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries()) r.add({i[0], j[0]}, a * b);
  return r;
}

/// x ^ y = x (x) y - y (x) x.
inline ConstTensor2 wedge(const GElement& x, const GElement& y) { return outer(x, y) - outer(y, x); }

/// Multiply every entry of a rational tensor by a common scalar coefficient.
template <std::size_t Rank, class Coeff>
SparseTensor<Rank, Coeff> scale_by(const SparseTensor<Rank, Rational>& t, const Coeff& f) {
  SparseTensor<Rank, Coeff> r;
  for (const auto& [i, c] : t.entries()) r.add(i, f * c);
  return r;
}

}  // namespace lbforge
