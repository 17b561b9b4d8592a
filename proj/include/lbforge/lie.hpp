#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbforge/rational.hpp"
#include "lbforge/tensor.hpp"

namespace lbforge {

/// Positive root alpha_{ij} = eps_i - eps_j of sl_n, 1 <= i < j <= n.
struct PositiveRoot {
  int i;
  int j;
  int height() const { return j - i; }
  friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

/// sl_n in Chevalley-Weyl form with the trace form B(x,y) = tr(xy), so that
/// B(e_a, e_-a) = 1 and h_a = [e_a, e_-a].
///
/// Basis order: E(a) for every positive root a (ordered by height, then by i),
/// then F(a) in the same order, then H(1..rank) with H(i) = E_ii - E_{i+1,i+1}.
/// Immutable after construction.
class LieAlgebra {
 public:
  int matrix_size() const { return n_; }
  int rank() const { return n_ - 1; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }

  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;
  std::optional<int> root_index(int i, int j) const;

  int e_index(int root) const { return root; }
  int f_index(int root) const { return num_positive_roots() + root; }
  int h_index(int i) const { return 2 * num_positive_roots() + i - 1; }  // i in 1..rank

  /// h_a = [e_a, e_-a].
  GElement coroot(int root) const;

  /// [b_a, b_b] from the structure constants.
  const GElement& bracket_basis(int a, int b) const { return structure_[static_cast<std::size_t>(a * dim() + b)]; }
  GElement bracket(const GElement& x, const GElement& y) const;

  const Rational& form(int a, int b) const { return gram_[static_cast<std::size_t>(a * dim() + b)]; }
  Rational form(const GElement& x, const GElement& y) const;

  /// b^a, the B-dual of basis vector a: B(b_c, b^a) = delta_ca.
  const GElement& dual_vector(int a) const { return dual_[static_cast<std::size_t>(a)]; }

  /// Indices b with B(b_a, b_b) != 0 (sparse row of the Gram matrix).
  const std::vector<int>& form_partners(int a) const { return partners_[static_cast<std::size_t>(a)]; }

 private:
  friend LieAlgebra build_sl(int n);

  int n_ = 0;
  std::vector<PositiveRoot> roots_;
  std::vector<std::string> labels_;
  std::vector<GElement> structure_;
  std::vector<Rational> gram_;
  std::vector<GElement> dual_;
  std::vector<std::vector<int>> partners_;
};

/// sl_n, n >= 2. Throws Error(InvalidRank) otherwise.
LieAlgebra build_sl(int n);

/// Omega = sum_i b_i (x) b^i.
ConstTensor2 casimir(const LieAlgebra& alg);

/// r_DJ = 1/2 (sum_{a>0} e_a ^ e_-a + Omega).
ConstTensor2 r_dj(const LieAlgebra& alg);

/// c1 Omega - (c1 - c2) r_DJ; on sl_2 this is
/// c1 f(x)e + c2 e(x)f + (c1+c2)/4 h(x)h. Needs c1 != c2, both nonzero.
ConstTensor2 r_c1c2(const LieAlgebra& alg, const Rational& c1, const Rational& c2);

/// h_a ^ e_a, a skew solution of the CYBE for every positive root a.
ConstTensor2 jordanian(const LieAlgebra& alg, int root);

/// [r12,r13] + [r12,r23] + [r13,r23].
ConstTensor3 cyb(const LieAlgebra& alg, const ConstTensor2& r);

/// [x (x) 1 + 1 (x) x, t].
ConstTensor2 adjoint_action(const LieAlgebra& alg, const GElement& x, const ConstTensor2& t);

}  // namespace lbforge
