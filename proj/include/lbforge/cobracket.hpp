#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lbforge/rmatrix.hpp"

namespace lbforge {

/// delta(f) = [f(u) (x) 1 + 1 (x) f(v), r(u,v)], first leg in u, second in v.
/// Throws Error(NotPolynomial) when (v-u) fails to cancel, and
/// Error(InvalidParameter) when f is not polynomial in u.
PolyTensor2 delta(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f);

/// [f(u) (x) 1 + 1 (x) f(v), t] for a polynomial two-leg tensor.
PolyTensor2 act(const LieAlgebra& alg, const LoopElement& f, const PolyTensor2& t);

/// [f, g] in g[u].
LoopElement loop_bracket(const LieAlgebra& alg, const LoopElement& f, const LoopElement& g);

bool check_skew(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f);
bool check_cocycle(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f, const LoopElement& g);
bool check_cojacobi(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f);

/// delta for a fixed r, cached on the monomials b_a u^k and extended linearly.
class CobracketEvaluator {
 public:
  CobracketEvaluator(const LieAlgebra& alg, SpectralTensor2 r) : alg_(alg), r_(std::move(r)) {}

  const PolyTensor2& monomial(int basis, int degree);
  PolyTensor2 operator()(const LoopElement& f);

  bool skew(const LoopElement& f);
  bool cocycle(const LoopElement& f, const LoopElement& g);
  bool cojacobi(const LoopElement& f);

 private:
  const LieAlgebra& alg_;
  SpectralTensor2 r_;
  std::map<std::pair<int, int>, PolyTensor2> cache_;
};

struct AxiomResult {
  std::string family;
  std::string element;
  std::string check;  // polynomial, skew, cocycle, co-jacobi
  bool pass = false;
};

struct SweepLimits {
  int degree = 4;         // canonical f = b_a u^k, k <= degree
  int pair_degree = 4;    // cocycle on pairs with both degrees <= pair_degree
  int jacobi_degree = 4;  // co-Jacobi for k <= jacobi_degree
};

/// Runs every check on the canonical f of bounded degree.
std::vector<AxiomResult> axiom_sweep(const LieAlgebra& alg, const std::string& family, const SpectralTensor2& r,
                                     const SweepLimits& limits);

}  // namespace lbforge
