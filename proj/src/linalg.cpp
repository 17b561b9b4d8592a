#include "lbforge/linalg.hpp"

namespace lbforge {

namespace {

void axpy(SparseVector& y, const Rational& s, const SparseVector& x) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += s * c;
    if (is_zero(it->second)) y.erase(it);
  }
}

}  // namespace

SparseVector EchelonBasis::reduce(SparseVector v) const {
  // Rows are fully reduced against each other, so one pass in pivot order suffices.
  for (auto it = v.begin(); it != v.end();) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    Rational s = -it->second;
    axpy(v, s, row->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  Rational lead = v.begin()->second;
  for (auto& [k, c] : v) c /= lead;
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) {
      Rational s = -it->second;
      axpy(row, s, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::optional<DenseMatrix> inverse(DenseMatrix m) {
  const int n = m.n;
  DenseMatrix inv(n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Rational p = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Rational f = m(i, col);
      if (is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        if (!is_zero(m(col, j))) m(i, j) -= f * m(col, j);
        if (!is_zero(inv(col, j))) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace lbforge
