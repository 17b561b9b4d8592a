#include "lbforge/lie.hpp"

#include <algorithm>

#include "lbforge/error.hpp"

namespace lbforge {

namespace {

using Matrix = std::vector<Rational>;  // row-major n x n

Matrix unit(int n, int i, int j) {
  Matrix m(static_cast<std::size_t>(n * n), Rational(0));
  m[static_cast<std::size_t>(i * n + j)] = 1;
  return m;
}

Matrix multiply(int n, const Matrix& a, const Matrix& b) {
  Matrix c(static_cast<std::size_t>(n * n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a[static_cast<std::size_t>(i * n + k)];
      if (is_zero(aik)) continue;
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
    }
  return c;
}

Rational trace(int n, const Matrix& a) {
  Rational t = 0;
  for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i * n + i)];
  return t;
}

}  // namespace

std::optional<int> LieAlgebra::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> LieAlgebra::root_index(int i, int j) const {
  for (int a = 0; a < num_positive_roots(); ++a)
    if (roots_[static_cast<std::size_t>(a)] == PositiveRoot{i, j}) return a;
  return std::nullopt;
}

GElement LieAlgebra::coroot(int root) const { return bracket_basis(e_index(root), f_index(root)); }

GElement LieAlgebra::bracket(const GElement& x, const GElement& y) const {
  GElement r;
  for (const auto& [a, ca] : x.entries())
    for (const auto& [b, cb] : y.entries()) {
      Rational s = ca * cb;
      for (const auto& [k, ck] : bracket_basis(a[0], b[0]).entries()) r.add(k, s * ck);
    }
  return r;
}

Rational LieAlgebra::form(const GElement& x, const GElement& y) const {
  Rational s = 0;
  for (const auto& [a, ca] : x.entries())
    for (int b : form_partners(a[0])) {
      auto it = y.entries().find({b});
      if (it != y.entries().end()) s += ca * it->second * form(a[0], b);
    }
  return s;
}

LieAlgebra build_sl(int n) {
  if (n < 2) throw Error(Errc::InvalidRank, "sl_n needs n >= 2, got " + std::to_string(n));
  LieAlgebra alg;
  alg.n_ = n;
  for (int h = 1; h < n; ++h)
    for (int i = 1; i + h <= n; ++i) alg.roots_.push_back({i, i + h});

  std::vector<Matrix> basis;
  for (const auto& r : alg.roots_) {
    basis.push_back(unit(n, r.i - 1, r.j - 1));
    alg.labels_.push_back("E" + std::to_string(r.i) + std::to_string(r.j));
  }
  for (const auto& r : alg.roots_) {
    basis.push_back(unit(n, r.j - 1, r.i - 1));
    alg.labels_.push_back("F" + std::to_string(r.i) + std::to_string(r.j));
  }
  for (int i = 1; i < n; ++i) {
    Matrix h = unit(n, i - 1, i - 1);
    h[static_cast<std::size_t>(i * n + i)] = -1;
    basis.push_back(h);
    alg.labels_.push_back("H" + std::to_string(i));
  }
  const int d = alg.dim();

  // Coordinates of a traceless matrix: off-diagonal entries give E/F, and the
  // diagonal d_1..d_n = sum_i c_i (e_i - e_{i+1}) gives c_k = d_1 + ... + d_k.
  auto decompose = [&](const Matrix& m) {
    GElement x;
    for (int a = 0; a < alg.num_positive_roots(); ++a) {
      const auto& r = alg.roots_[static_cast<std::size_t>(a)];
      x.add({alg.e_index(a)}, m[static_cast<std::size_t>((r.i - 1) * n + (r.j - 1))]);
      x.add({alg.f_index(a)}, m[static_cast<std::size_t>((r.j - 1) * n + (r.i - 1))]);
    }
    Rational partial = 0;
    for (int k = 1; k < n; ++k) {
      partial += m[static_cast<std::size_t>((k - 1) * n + (k - 1))];
      x.add({alg.h_index(k)}, partial);
    }
    return x;
  };

  alg.structure_.resize(static_cast<std::size_t>(d * d));
  alg.gram_.assign(static_cast<std::size_t>(d * d), Rational(0));
  alg.partners_.resize(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Matrix ab = multiply(n, basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
      Matrix ba = multiply(n, basis[static_cast<std::size_t>(b)], basis[static_cast<std::size_t>(a)]);
      Matrix comm(ab.size());
      for (std::size_t k = 0; k < ab.size(); ++k) comm[k] = ab[k] - ba[k];
      alg.structure_[static_cast<std::size_t>(a * d + b)] = decompose(comm);
      Rational t = trace(n, ab);
      alg.gram_[static_cast<std::size_t>(a * d + b)] = t;
      if (!is_zero(t)) alg.partners_[static_cast<std::size_t>(a)].push_back(b);
    }

  // Dual basis: E(a) <-> F(a) directly; the Cartan block inverts the Cartan
  // part of the Gram matrix (the tridiagonal 2,-1 matrix).
  alg.dual_.resize(static_cast<std::size_t>(d));
  for (int a = 0; a < alg.num_positive_roots(); ++a) {
    alg.dual_[static_cast<std::size_t>(alg.e_index(a))] = basis_element(alg.f_index(a));
    alg.dual_[static_cast<std::size_t>(alg.f_index(a))] = basis_element(alg.e_index(a));
  }
  const int r = n - 1;
  std::vector<Rational> g(static_cast<std::size_t>(r * r)), inv(static_cast<std::size_t>(r * r), Rational(0));
  for (int i = 0; i < r; ++i) {
    inv[static_cast<std::size_t>(i * r + i)] = 1;
    for (int j = 0; j < r; ++j) g[static_cast<std::size_t>(i * r + j)] = alg.form(alg.h_index(i + 1), alg.h_index(j + 1));
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (is_zero(g[static_cast<std::size_t>(piv * r + col)])) ++piv;
    for (int j = 0; j < r; ++j) {
      std::swap(g[static_cast<std::size_t>(piv * r + j)], g[static_cast<std::size_t>(col * r + j)]);
      std::swap(inv[static_cast<std::size_t>(piv * r + j)], inv[static_cast<std::size_t>(col * r + j)]);
    }
    Rational p = g[static_cast<std::size_t>(col * r + col)];
    for (int j = 0; j < r; ++j) {
      g[static_cast<std::size_t>(col * r + j)] /= p;
      inv[static_cast<std::size_t>(col * r + j)] /= p;
    }
    for (int i = 0; i < r; ++i) {
      if (i == col) continue;
      Rational f = g[static_cast<std::size_t>(i * r + col)];
      if (is_zero(f)) continue;
      for (int j = 0; j < r; ++j) {
        g[static_cast<std::size_t>(i * r + j)] -= f * g[static_cast<std::size_t>(col * r + j)];
        inv[static_cast<std::size_t>(i * r + j)] -= f * inv[static_cast<std::size_t>(col * r + j)];
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    GElement x;
    for (int j = 0; j < r; ++j) x.add({alg.h_index(j + 1)}, inv[static_cast<std::size_t>(i * r + j)]);
    alg.dual_[static_cast<std::size_t>(alg.h_index(i + 1))] = x;
  }
  return alg;
}

ConstTensor2 casimir(const LieAlgebra& alg) {
  ConstTensor2 omega;
  for (int a = 0; a < alg.dim(); ++a) omega += outer(basis_element(a), alg.dual_vector(a));
  return omega;
}

ConstTensor2 r_dj(const LieAlgebra& alg) {
  ConstTensor2 r = casimir(alg);
  for (int a = 0; a < alg.num_positive_roots(); ++a)
    r += wedge(basis_element(alg.e_index(a)), basis_element(alg.f_index(a)));
  return r * Rational(1, 2);
}

ConstTensor2 r_c1c2(const LieAlgebra& alg, const Rational& c1, const Rational& c2) {
  if (c1 == c2 || is_zero(c1) || is_zero(c2))
    throw Error(Errc::InvalidParameter, "r_{c1,c2} needs distinct nonzero constants, got " + to_string(c1) + ", " + to_string(c2));
  return casimir(alg) * c1 - r_dj(alg) * Rational(c1 - c2);
}

ConstTensor2 jordanian(const LieAlgebra& alg, int root) {
  if (root < 0 || root >= alg.num_positive_roots())
    throw Error(Errc::InvalidParameter, "no positive root with index " + std::to_string(root));
  return wedge(alg.coroot(root), basis_element(alg.e_index(root)));
}

ConstTensor3 cyb(const LieAlgebra& alg, const ConstTensor2& r) {
  ConstTensor3 out;
  for (const auto& [ab, x] : r.entries())
    for (const auto& [cd, y] : r.entries()) {
      const int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
      Rational s = x * y;
      // [r12, r13] = [a,c] (x) b (x) d
      for (const auto& [k, ck] : alg.bracket_basis(a, c).entries()) out.add({k[0], b, d}, s * ck);
      // [r12, r23] = a (x) [b,c] (x) d
      for (const auto& [k, ck] : alg.bracket_basis(b, c).entries()) out.add({a, k[0], d}, s * ck);
      // [r13, r23] = a (x) c (x) [b,d]
      for (const auto& [k, ck] : alg.bracket_basis(b, d).entries()) out.add({a, c, k[0]}, s * ck);
    }
  return out;
}

ConstTensor2 adjoint_action(const LieAlgebra& alg, const GElement& x, const ConstTensor2& t) {
  ConstTensor2 out;
  for (const auto& [xi, cx] : x.entries())
    for (const auto& [ab, c] : t.entries()) {
      Rational s = cx * c;
      for (const auto& [k, ck] : alg.bracket_basis(xi[0], ab[0]).entries()) out.add({k[0], ab[1]}, s * ck);
      for (const auto& [k, ck] : alg.bracket_basis(xi[0], ab[1]).entries()) out.add({ab[0], k[0]}, s * ck);
    }
  return out;
}

}  // namespace lbforge
