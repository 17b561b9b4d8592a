#include "lbforge/cobracket.hpp"

#include <algorithm>

#include "lbforge/error.hpp"

namespace lbforge {

namespace {

PolyTensor2 full_swap(const PolyTensor2& t) {
  PolyTensor2 r;
  for (const auto& [ij, p] : t.entries()) r.add({ij[1], ij[0]}, swap_variables(p));
  return r;
}

PolyTensor3 cyclic(const PolyTensor3& t) {
  PolyTensor3 r;
  for (const auto& [idx, p] : t.entries()) r.add({idx[2], idx[0], idx[1]}, p.remap<3>({1, 2, 0}));
  return r;
}

LoopElement monomial_element(int basis, int degree) {
  return loop_element(basis_element(basis), Poly1::monomial({degree}));
}

std::string describe(const LieAlgebra& alg, int basis, int degree) {
  const std::string& label = alg.labels()[static_cast<std::size_t>(basis)];
  if (degree == 0) return label;
  if (degree == 1) return label + "*u";
  return label + "*u^" + std::to_string(degree);
}

}  // namespace

PolyTensor2 act(const LieAlgebra& alg, const LoopElement& f, const PolyTensor2& t) {
  PolyTensor2 r;
  for (const auto& [a, fa] : f.entries()) {
    const Poly2 fu = fa.remap<2>({0}), fv = fa.remap<2>({1});
    for (const auto& [ij, p] : t.entries()) {
      const Poly2 left = fu * p, right = fv * p;
      for (const auto& [c, s] : alg.bracket_basis(a[0], ij[0]).entries()) r.add({c[0], ij[1]}, left * s);
      for (const auto& [c, s] : alg.bracket_basis(a[0], ij[1]).entries()) r.add({ij[0], c[0]}, right * s);
    }
  }
  return r;
}

LoopElement loop_bracket(const LieAlgebra& alg, const LoopElement& f, const LoopElement& g) {
  LoopElement r;
  for (const auto& [a, fa] : f.entries())
    for (const auto& [b, gb] : g.entries()) {
      const Poly1 p = fa * gb;
      for (const auto& [c, s] : alg.bracket_basis(a[0], b[0]).entries()) r.add(c, p * s);
    }
  return r;
}

PolyTensor2 delta(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f) {
  for (const auto& [a, p] : f.entries())
    if (!p.is_polynomial()) throw Error(Errc::InvalidParameter, "delta needs f in g[u]");
  int k = 0;
  for (const auto& [ij, e] : r.entries()) k = std::max(k, e.den_power());
  const Poly2 d = v_minus_u();
  PolyTensor2 num;
  for (const auto& [ij, e] : r.entries()) num.add(ij, e.numerator() * d.pow(k - e.den_power()));
  const PolyTensor2 commutator = act(alg, f, num);
  PolyTensor2 out;
  for (auto [ij, p] : commutator.entries()) {
    for (int i = 0; i < k; ++i) {
      auto q = divide_by_v_minus_u(p);
      if (!q) throw Error(Errc::NotPolynomial, "(v-u) does not divide the commutator; delta leaves g[u] (x) g[v]");
      p = std::move(*q);
    }
    if (!p.is_polynomial()) throw Error(Errc::NotPolynomial, "delta has negative powers of u or v");
    out.add(ij, p);
  }
  return out;
}

bool check_skew(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f) {
  const PolyTensor2 d = delta(alg, r, f);
  return (d + full_swap(d)).is_zero();
}

bool check_cocycle(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f, const LoopElement& g) {
  return CobracketEvaluator(alg, r).cocycle(f, g);
}

bool check_cojacobi(const LieAlgebra& alg, const SpectralTensor2& r, const LoopElement& f) {
  return CobracketEvaluator(alg, r).cojacobi(f);
}

const PolyTensor2& CobracketEvaluator::monomial(int basis, int degree) {
  const auto key = std::make_pair(basis, degree);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, delta(alg_, r_, monomial_element(basis, degree))).first;
  return it->second;
}

PolyTensor2 CobracketEvaluator::operator()(const LoopElement& f) {
  PolyTensor2 out;
  for (const auto& [a, p] : f.entries())
    for (const auto& [e, c] : p.terms()) {
      if (e[0] < 0) throw Error(Errc::InvalidParameter, "delta needs f in g[u]");
      out += monomial(a[0], e[0]) * c;
    }
  return out;
}

bool CobracketEvaluator::skew(const LoopElement& f) {
  const PolyTensor2 d = (*this)(f);
  return (d + full_swap(d)).is_zero();
}

bool CobracketEvaluator::cocycle(const LoopElement& f, const LoopElement& g) {
  const PolyTensor2 lhs = (*this)(loop_bracket(alg_, f, g));
  const PolyTensor2 rhs = act(alg_, f, (*this)(g)) - act(alg_, g, (*this)(f));
  return lhs == rhs;
}

bool CobracketEvaluator::cojacobi(const LoopElement& f) {
  // (delta (x) id) delta(f): the first leg b_i u^m is expanded by delta, the
  // second leg keeps its power of v, which becomes w.
  const PolyTensor2 d = (*this)(f);
  PolyTensor3 t;
  for (const auto& [ij, p] : d.entries())
    for (const auto& [e, c] : p.terms()) {
      const PolyTensor2& inner = monomial(ij[0], e[0]);
      for (const auto& [kl, q] : inner.entries())
        t.add({kl[0], kl[1], ij[1]}, q.remap<3>({0, 1}).shifted({0, 0, e[1]}) * c);
    }
  const PolyTensor3 once = cyclic(t);
  return (t + once + cyclic(once)).is_zero();
}

std::vector<AxiomResult> axiom_sweep(const LieAlgebra& alg, const std::string& family, const SpectralTensor2& r,
                                     const SweepLimits& limits) {
  std::vector<AxiomResult> out;
  CobracketEvaluator eval(alg, r);
  const int dim = alg.dim();
  for (int k = 0; k <= limits.degree; ++k)
    for (int a = 0; a < dim; ++a) {
      const std::string name = describe(alg, a, k);
      bool poly = true;
      try {
        eval.monomial(a, k);
      } catch (const Error& e) {
        if (e.code() != Errc::NotPolynomial) throw;
        poly = false;
      }
      out.push_back({family, name, "polynomial", poly});
      if (!poly) continue;
      const LoopElement f = monomial_element(a, k);
      out.push_back({family, name, "skew", eval.skew(f)});
      if (k > limits.jacobi_degree) continue;
      bool jacobi = false;
      try {
        jacobi = eval.cojacobi(f);
      } catch (const Error& e) {
        if (e.code() != Errc::NotPolynomial) throw;
      }
      out.push_back({family, name, "co-jacobi", jacobi});
    }
  const int pd = std::min(limits.pair_degree, limits.degree);
  for (int k = 0; k <= pd; ++k)
    for (int a = 0; a < dim; ++a)
      for (int l = k; l <= pd; ++l)
        for (int b = (l == k ? a + 1 : 0); b < dim; ++b) {
          bool pass = false;
          try {
            pass = eval.cocycle(monomial_element(a, k), monomial_element(b, l));
          } catch (const Error& e) {
            if (e.code() != Errc::NotPolynomial) throw;
          }
          out.push_back({family, "[" + describe(alg, a, k) + ", " + describe(alg, b, l) + "]", "cocycle", pass});
        }
  return out;
}

}  // namespace lbforge
