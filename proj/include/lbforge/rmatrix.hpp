#pragma once

#include <string>

#include "lbforge/lagrangian.hpp"
#include "lbforge/lie.hpp"
#include "lbforge/pairing.hpp"
#include "lbforge/ratfun.hpp"
#include "lbforge/tensor.hpp"

namespace lbforge {

/// r(u,v) in g (x) g: every entry is num(u,v)/(v-u)^k in lowest terms.
using SpectralTensor2 = SparseTensor<2, BivarRat>;

/// Constant part of an r-matrix, tagged by the equation it solves.
///   MCYBE:    r + r21 = Omega, CYB(r) = 0
///   SkewCYBE: r + r21 = 0,     CYB(r) = 0
class RKind {
 public:
  enum class Tag { MCYBE, SkewCYBE };

  /// Verifies the tag's contract; throws Error(InvalidInput) when it fails.
  RKind(const LieAlgebra& alg, Tag tag, ConstTensor2 value);

  static RKind zero(const LieAlgebra& alg) { return {alg, Tag::SkewCYBE, {}}; }
  static RKind dj(const LieAlgebra& alg) { return {alg, Tag::MCYBE, r_dj(alg)}; }
  static RKind jordanian(const LieAlgebra& alg, int root) {
    return {alg, Tag::SkewCYBE, lbforge::jordanian(alg, root)};
  }

  Tag tag() const { return tag_; }
  const ConstTensor2& value() const { return value_; }

 private:
  Tag tag_;
  ConstTensor2 value_;
};

std::string to_string(RKind::Tag tag);

/// Which kind of constant part a family takes.
RKind::Tag required_kind(const CaseSpec& spec);

/// Closed forms:
///   I/two-points   (1 - c1 v - c2 u + c1 c2 u v)/(v-u) Omega + (c1 - c2) r
///   I/double-pole  (u-1)(v-1)/(v-u) Omega + r
///   I/simple-pole  (1-u)/(v-u) Omega - r
///   I/constant     Omega/(v-u) + r
///   II/simple-pole u(1-v)/(v-u) Omega + r
///   II/constant    v/(v-u) Omega - r21  (= u/(v-u) Omega + r)
///   III/constant   uv/(v-u) Omega + r
/// Throws Error(InvalidParameter) for an illegal case and Error(KindMismatch)
/// when r has the wrong tag.
SpectralTensor2 build_r(const LieAlgebra& alg, const CaseSpec& spec, const RKind& r);

/// The constant part paired with catalog_w0: r_DJ for triangular W, 0 for eps g.
RKind catalog_r(const LieAlgebra& alg, const CaseSpec& spec);

/// f(u,v) * t for a constant tensor t.
SpectralTensor2 spectral(const ConstTensor2& t, const BivarRat& f = BivarRat(1));

/// sum_{a,k<=N} b_a u^k (x) w_{a,k}(v), the loop part of the dual element in v.
PolyTensor2 sum_dual_series(const LieAlgebra& alg, const WPresentation& w, int truncation);

/// Entrywise expansion in |u| < |v|, truncated to u-degree <= truncation.
PolyTensor2 expand_region(const SpectralTensor2& r, int truncation);

/// CYB(r)(u,v,w) times (v-u)^K (w-u)^K (w-v)^K, K the largest entry denominator power.
struct SpectralCyb {
  PolyTensor3 numerator;
  int den_power = 0;

  bool is_zero() const { return numerator.is_zero(); }
};
SpectralCyb cyb_spectral(const LieAlgebra& alg, const SpectralTensor2& r);

/// r(u,v) + tau r(v,u).
SpectralTensor2 unitarity_defect(const SpectralTensor2& r);
bool skew_spectral_check(const SpectralTensor2& r);

}  // namespace lbforge
