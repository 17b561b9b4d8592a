#include "lbforge/lagrangian.hpp"

#include <algorithm>

#include "lbforge/error.hpp"
#include "lbforge/linalg.hpp"

namespace lbforge {

namespace {

Poly1 t_power(int d) { return Poly1::monomial({-d}); }  // (u^-1)^d

// Column layout: finite block, eps block, then loop degree blocks.
constexpr int kDegreeOffset = 1 << 12;

SparseVector coordinates(int dim, const DoubleElement& x) {
  SparseVector v;
  for (const auto& [i, c] : x.finite.entries()) v.emplace(i[0], c);
  for (const auto& [i, c] : x.eps.entries()) v.emplace(dim + i[0], c);
  for (const auto& [i, p] : x.loop.entries())
    for (const auto& [e, c] : p.terms()) v.emplace(2 * dim + (e[0] + kDegreeOffset) * dim + i[0], c);
  return v;
}

SparseVector coordinates(int dim, const QuotientElement& x) {
  SparseVector v;
  for (const auto& [i, c] : x.first.entries()) v.emplace(i[0], c);
  for (const auto& [i, c] : x.second.entries()) v.emplace(dim + i[0], c);
  return v;
}

// Coefficients of p(u) as a polynomial in t = u^-1; throws on positive powers of u.
std::map<int, Rational> in_t(const Poly1& p) {
  std::map<int, Rational> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] > 0) throw Error(Errc::MalformedElement, "psi is defined on g[u^-1] only");
    out.emplace(-e[0], c);
  }
  return out;
}

Rational eval_t(const std::map<int, Rational>& p, const Rational& t) {
  Rational s = 0;
  for (const auto& [d, c] : p) {
    Rational term = c;
    for (int k = 0; k < d; ++k) term *= t;
    s += term;
  }
  return s;
}

Rational derivative_t(const std::map<int, Rational>& p, const Rational& t) {
  Rational s = 0;
  for (const auto& [d, c] : p) {
    if (d == 0) continue;
    Rational term = c * d;
    for (int k = 0; k < d - 1; ++k) term *= t;
    s += term;
  }
  return s;
}

int tail_depth(const WPresentation& w) { return w.tail.is_zero() ? 0 : -w.tail.min_degree(0); }

int head_depth(const WPresentation& w) {
  int d = 0;
  for (const auto& h : w.head) d = std::max(d, loop_depth(h));
  return d;
}

// Lowest canonical degree l that a generator of the given depth can still pair with.
int pairing_reach(DoubleType type, int depth) {
  switch (type) {
    case DoubleType::I: return depth - 1;
    case DoubleType::II: return depth;
    case DoubleType::III: return depth + 1;
  }
  return depth;
}

std::string describe(const LieAlgebra& alg, const DoubleElement& x) {
  std::string s;
  auto append = [&](const std::string& term) { s += s.empty() ? term : " + " + term; };
  for (const auto& [i, p] : x.loop.entries())
    append("(" + to_string(p) + ")*" + alg.labels()[static_cast<std::size_t>(i[0])]);
  for (const auto& [i, c] : x.finite.entries())
    append(to_string(c) + "*" + alg.labels()[static_cast<std::size_t>(i[0])] + "[finite]");
  for (const auto& [i, c] : x.eps.entries())
    append(to_string(c) + "*eps*" + alg.labels()[static_cast<std::size_t>(i[0])]);
  return s.empty() ? "0" : s;
}

EchelonBasis span_of(int dim, const std::vector<DoubleElement>& gens) {
  EchelonBasis basis;
  for (const auto& g : gens) basis.insert(coordinates(dim, g));
  return basis;
}

}  // namespace

Ambient quotient_ambient(const CaseSpec& spec) {
  if (spec.type == DoubleType::II) return Ambient::PairSum;
  if (spec.type == DoubleType::III) return Ambient::DualNumbers;
  switch (spec.form) {
    case AForm::TwoPoints:
    case AForm::SimplePole: return Ambient::PairSum;
    case AForm::DoublePole:
    case AForm::Constant: return Ambient::DualNumbers;
  }
  return Ambient::PairSum;
}

Poly1 tail_generator(const CaseSpec& spec) {
  const Poly1 t = t_power(1);
  switch (spec.type) {
    case DoubleType::I:
      switch (spec.form) {
        case AForm::TwoPoints: return (t - Poly1(spec.c1)) * (t - Poly1(spec.c2));
        case AForm::DoublePole: return (t - Poly1(1)).pow(2);
        case AForm::SimplePole: return t * (Poly1(1) - t);
        case AForm::Constant: return t_power(2);
      }
      break;
    case DoubleType::II: return spec.form == AForm::SimplePole ? t - Poly1(1) : t;
    case DoubleType::III: return Poly1(1);
  }
  return Poly1(1);
}

QuotientElement psi(const CaseSpec& spec, const DoubleElement& x) {
  QuotientElement out;
  if (spec.type == DoubleType::III) {
    for (const auto& [i, p] : x.loop.entries()) in_t(p);  // shape check only
    return {x.finite, x.eps};
  }
  if (!x.eps.is_zero()) throw Error(Errc::MalformedElement, "eps summand outside a type III double");
  if (spec.type == DoubleType::I && !x.finite.is_zero())
    throw Error(Errc::MalformedElement, "finite summand outside types II/III");
  for (const auto& [i, p] : x.loop.entries()) {
    const auto coeffs = in_t(p);
    if (spec.type == DoubleType::II) {
      out.first.add(i, eval_t(coeffs, spec.form == AForm::SimplePole ? 1 : 0));
      continue;
    }
    switch (spec.form) {
      case AForm::TwoPoints:
        out.first.add(i, eval_t(coeffs, spec.c1));
        out.second.add(i, eval_t(coeffs, spec.c2));
        break;
      case AForm::SimplePole:
        out.first.add(i, eval_t(coeffs, 0));
        out.second.add(i, eval_t(coeffs, 1));
        break;
      case AForm::DoublePole:  // t -> 1 + eps
        out.first.add(i, eval_t(coeffs, 1));
        out.second.add(i, derivative_t(coeffs, 1));
        break;
      case AForm::Constant:  // t -> eps
        out.first.add(i, eval_t(coeffs, 0));
        out.second.add(i, derivative_t(coeffs, 0));
        break;
    }
  }
  if (spec.type == DoubleType::II) out.second = x.finite;
  return out;
}

DoubleElement psi_inverse_lift(const CaseSpec& spec, const QuotientElement& target) {
  const Poly1 t = t_power(1), one(1);
  switch (spec.type) {
    case DoubleType::II: return {loop_element(target.first, one), target.second, {}};
    case DoubleType::III: return {{}, target.first, target.second};
    case DoubleType::I: break;
  }
  LoopElement loop;
  switch (spec.form) {
    case AForm::TwoPoints: {
      const Rational gap = spec.c1 - spec.c2;
      loop = loop_element(target.first, (t - Poly1(spec.c2)) * Rational(1 / gap)) +
             loop_element(target.second, (t - Poly1(spec.c1)) * Rational(-1 / gap));
      break;
    }
    case AForm::SimplePole: loop = loop_element(target.first, one - t) + loop_element(target.second, t); break;
    case AForm::DoublePole: loop = loop_element(target.first, one) + loop_element(target.second, t - one); break;
    case AForm::Constant: loop = loop_element(target.first, one) + loop_element(target.second, t); break;
  }
  return loop_only(std::move(loop));
}

Rational ambient_form(const LieAlgebra& alg, Ambient ambient, const QuotientElement& x, const QuotientElement& y) {
  if (ambient == Ambient::PairSum) return alg.form(x.first, y.first) - alg.form(x.second, y.second);
  return alg.form(x.first, y.second) + alg.form(x.second, y.first);
}

QuotientElement ambient_bracket(const LieAlgebra& alg, Ambient ambient, const QuotientElement& x,
                                const QuotientElement& y) {
  if (ambient == Ambient::PairSum) return {alg.bracket(x.first, y.first), alg.bracket(x.second, y.second)};
  return {alg.bracket(x.first, y.first), alg.bracket(x.first, y.second) + alg.bracket(x.second, y.first)};
}

WPresentation lift_lagrangian(const LieAlgebra& alg, const CaseSpec& spec, const FiniteLagrangian& wbar) {
  if (wbar.ambient != quotient_ambient(spec))
    throw Error(Errc::InvalidInput, "finite Lagrangian lives in the wrong quotient algebra for " + spec.to_string());
  const auto& gens = wbar.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (!is_zero(ambient_form(alg, wbar.ambient, gens[i], gens[j])))
        throw Error(Errc::InvalidInput, "finite subalgebra is not isotropic (generators " + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
  EchelonBasis span;
  for (const auto& g : gens) span.insert(coordinates(alg.dim(), g));
  if (static_cast<int>(span.rank()) != alg.dim())
    throw Error(Errc::InvalidInput, "finite subalgebra has dimension " + std::to_string(span.rank()) +
                                        ", expected dim g = " + std::to_string(alg.dim()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!span.contains(coordinates(alg.dim(), ambient_bracket(alg, wbar.ambient, gens[i], gens[j]))))
        throw Error(Errc::InvalidInput, "finite subspace is not closed under the bracket");
  WPresentation w{spec, {}, tail_generator(spec)};
  for (const auto& g : gens) w.head.push_back(psi_inverse_lift(spec, g));
  return w;
}

FiniteLagrangian triangular_complement(const LieAlgebra& alg) {
  FiniteLagrangian w{Ambient::PairSum, {}};
  for (int a = 0; a < alg.num_positive_roots(); ++a) w.generators.push_back({basis_element(alg.f_index(a)), {}});
  for (int a = 0; a < alg.num_positive_roots(); ++a) w.generators.push_back({{}, basis_element(alg.e_index(a))});
  for (int i = 1; i <= alg.rank(); ++i)
    w.generators.push_back({basis_element(alg.h_index(i)), basis_element(alg.h_index(i), -1)});
  return w;
}

FiniteLagrangian epsilon_g(const LieAlgebra& alg) {
  FiniteLagrangian w{Ambient::DualNumbers, {}};
  for (int a = 0; a < alg.dim(); ++a) w.generators.push_back({{}, basis_element(a)});
  return w;
}

FiniteLagrangian catalog_wbar(const LieAlgebra& alg, const CaseSpec& spec) {
  return quotient_ambient(spec) == Ambient::PairSum ? triangular_complement(alg) : epsilon_g(alg);
}

WPresentation catalog_w0(const LieAlgebra& alg, const CaseSpec& spec) {
  return lift_lagrangian(alg, spec, catalog_wbar(alg, spec));
}

int loop_depth(const DoubleElement& x) {
  int d = 0;
  for (const auto& [i, p] : x.loop.entries()) d = std::max(d, -p.min_degree(0));
  return d;
}

std::vector<DoubleElement> window_generators(const LieAlgebra& alg, const WPresentation& w, int max_depth) {
  std::vector<DoubleElement> gens;
  for (const auto& h : w.head)
    if (loop_depth(h) <= max_depth) gens.push_back(h);
  const int m = tail_depth(w);
  for (int j = 0; m + j <= max_depth; ++j) {
    const Poly1 p = w.tail * t_power(j);
    for (int a = 0; a < alg.dim(); ++a) gens.push_back(loop_only(loop_element(basis_element(a), p)));
  }
  return gens;
}

bool contains(const LieAlgebra& alg, const WPresentation& w, const DoubleElement& x) {
  for (const auto& [i, p] : x.loop.entries())
    if (p.max_degree(0) > 0) return false;
  const int depth = std::max({loop_depth(x), head_depth(w), tail_depth(w)});
  return span_of(alg.dim(), window_generators(alg, w, depth)).contains(coordinates(alg.dim(), x));
}

LagrangianReport is_lagrangian(const LieAlgebra& alg, const WPresentation& w, int window) {
  if (window < head_depth(w) || window < tail_depth(w))
    throw Error(Errc::InconclusiveWindow, "window " + std::to_string(window) + " is below the generator depth");
  const int dim = alg.dim();
  const auto gens = window_generators(alg, w, window);
  LagrangianReport report;

  report.isotropic = true;
  for (std::size_t i = 0; i < gens.size() && report.isotropic; ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const Rational q = q_form(alg, w.spec, gens[i], gens[j]);
      if (!is_zero(q)) {
        report.isotropic = false;
        report.witness = "Q(" + describe(alg, gens[i]) + ", " + describe(alg, gens[j]) + ") = " + to_string(q);
        break;
      }
    }

  report.closed = true;
  const EchelonBasis wide = span_of(dim, window_generators(alg, w, 2 * window));
  for (std::size_t i = 0; i < gens.size() && report.closed; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const DoubleElement br = bracket(alg, w.spec, gens[i], gens[j]);
      if (!wide.contains(coordinates(dim, br))) {
        report.closed = false;
        if (report.witness.empty())
          report.witness = "[" + describe(alg, gens[i]) + ", " + describe(alg, gens[j]) + "] not in W";
        break;
      }
    }

  // Slice: loop degrees [-window, window] plus the finite summands.
  int slice = (2 * window + 1) * dim;
  if (w.spec.type == DoubleType::II) slice += dim;
  if (w.spec.type == DoubleType::III) slice += 2 * dim;
  EchelonBasis all;
  int count = 0;
  bool independent = true;
  for (const auto& g : gens) {
    independent = all.insert(coordinates(dim, g)) && independent;
    ++count;
  }
  for (int k = 0; k <= window; ++k)
    for (int a = 0; a < dim; ++a) {
      independent = all.insert(coordinates(dim, canonical_element(w.spec, a, k))) && independent;
      ++count;
    }
  report.transversal = independent && count == slice && static_cast<int>(all.rank()) == slice;
  if (!report.transversal && report.witness.empty())
    report.witness = "rank " + std::to_string(all.rank()) + " of " + std::to_string(count) +
                     " window vectors, slice dimension " + std::to_string(slice);
  return report;
}

std::vector<DualElement> dual_basis(const LieAlgebra& alg, const WPresentation& w, int truncation) {
  if (truncation < 0) throw Error(Errc::InvalidParameter, "truncation must be >= 0");
  const DoubleType type = w.spec.type;
  int depth = std::max({head_depth(w), tail_depth(w), 0});
  while (pairing_reach(type, depth) < truncation) ++depth;
  const int reach = pairing_reach(type, depth);
  const auto gens = window_generators(alg, w, depth);
  const int dim = alg.dim();
  const int tests = (reach + 1) * dim;
  if (static_cast<int>(gens.size()) != tests)
    throw Error(Errc::NotTransversal, "pairing system is " + std::to_string(tests) + " x " +
                                          std::to_string(gens.size()) + ", not square");
  DenseMatrix pairing(tests);
  for (int l = 0; l <= reach; ++l)
    for (int a = 0; a < dim; ++a) {
      const DoubleElement e = canonical_element(w.spec, a, l);
      for (int g = 0; g < tests; ++g) pairing(l * dim + a, g) = q_form(alg, w.spec, e, gens[static_cast<std::size_t>(g)]);
    }
  const auto inv = inverse(pairing);
  if (!inv) throw Error(Errc::NotTransversal, "pairing between W and g[u] is degenerate");
  std::vector<DualElement> out;
  for (int k = 0; k <= truncation; ++k)
    for (int a = 0; a < dim; ++a) {
      const int t = k * dim + a;
      DoubleElement dual;
      for (int g = 0; g < tests; ++g)
        if (!is_zero((*inv)(g, t))) dual += gens[static_cast<std::size_t>(g)] * (*inv)(g, t);
      out.push_back({a, k, std::move(dual)});
    }
  return out;
}

}  // namespace lbforge
