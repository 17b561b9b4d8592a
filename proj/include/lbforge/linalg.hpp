#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lbforge/rational.hpp"

namespace lbforge {

/// Sparse coefficient vector over the rationals.
using SparseVector = std::map<int, Rational>;

/// Incrementally maintained echelon basis of a subspace. Each stored row has a
/// distinct pivot column with coefficient 1.
class EchelonBasis {
 public:
  /// Remainder of v after elimination against the stored rows.
  SparseVector reduce(SparseVector v) const;

  /// Adds v; returns false when v was already in the span.
  bool insert(SparseVector v);

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<int, SparseVector> rows_;  // pivot column -> row
};

/// Dense square matrix, row-major.
struct DenseMatrix {
  int n = 0;
  std::vector<Rational> a;

  explicit DenseMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), Rational(0)) {}
  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<DenseMatrix> inverse(DenseMatrix m);

}  // namespace lbforge
