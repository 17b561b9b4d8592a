#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lbforge/lie.hpp"
#include "lbforge/pairing.hpp"

namespace lbforge {

/// Finite quotient algebras of g[u^-1] (plus finite summands).
///   PairSum:     g (+) g, form B(x1,x2) - B(y1,y2)
///   DualNumbers: g + eps g, form B(x1,y2) + B(x2,y1) (negated for type III)
enum class Ambient { PairSum, DualNumbers };

/// (first, second) in g (+) g, or first + eps*second in g + eps g.
struct QuotientElement {
  GElement first;
  GElement second;

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

struct FiniteLagrangian {
  Ambient ambient = Ambient::PairSum;
  std::vector<QuotientElement> generators;
};

/// Lagrangian W = span(head) + tail * g[u^-1]. The tail polynomial m lives in
/// u^-1 (stored as a Laurent polynomial in u with nonpositive exponents);
/// m = 1 means all of g[u^-1] lies in W.
struct WPresentation {
  CaseSpec spec;
  std::vector<DoubleElement> head;
  Poly1 tail;
};

Ambient quotient_ambient(const CaseSpec& spec);

/// Generator of the kernel of psi:
///   I/two-points (u^-1 - c1)(u^-1 - c2), I/double-pole (u^-1 - 1)^2,
///   I/simple-pole u^-1 (1 - u^-1), I/constant u^-2,
///   II/simple-pole u^-1 - 1, II/constant u^-1, III/constant 1.
Poly1 tail_generator(const CaseSpec& spec);

/// Quotient epimorphism onto the finite algebra. Type I: u^-1 goes to (c1, c2),
/// 1 + eps, (0, 1) or eps. Type II: (f, z) -> (f at u^-1 = 1 or 0, z).
/// Type III: (f, x, y) -> x + eps y.
/// Throws Error(MalformedElement) for loop parts outside g[u^-1].
QuotientElement psi(const CaseSpec& spec, const DoubleElement& x);

/// Coset representative of minimal u^-1 degree with psi(result) = target.
DoubleElement psi_inverse_lift(const CaseSpec& spec, const QuotientElement& target);

/// Form and bracket of the finite quotient algebra.
Rational ambient_form(const LieAlgebra& alg, Ambient ambient, const QuotientElement& x, const QuotientElement& y);
QuotientElement ambient_bracket(const LieAlgebra& alg, Ambient ambient, const QuotientElement& x, const QuotientElement& y);

/// Checks isotropy, dim = dim g and bracket closure of Wbar, then lifts it.
/// Throws Error(InvalidInput) on any violation or ambient mismatch.
WPresentation lift_lagrangian(const LieAlgebra& alg, const CaseSpec& spec, const FiniteLagrangian& wbar);

/// span{(e_-a, 0), (0, e_a), (h, -h)} in g (+) g, complementary to the diagonal.
FiniteLagrangian triangular_complement(const LieAlgebra& alg);
/// eps g in g + eps g.
FiniteLagrangian epsilon_g(const LieAlgebra& alg);
/// The catalog choice for a case: triangular for pair quotients, eps g otherwise.
FiniteLagrangian catalog_wbar(const LieAlgebra& alg, const CaseSpec& spec);
WPresentation catalog_w0(const LieAlgebra& alg, const CaseSpec& spec);

/// Largest u^-1 degree in the loop part (0 for purely finite elements).
int loop_depth(const DoubleElement& x);

/// Head generators plus tail * u^-j * b_i for every j with total depth <= max_depth.
std::vector<DoubleElement> window_generators(const LieAlgebra& alg, const WPresentation& w, int max_depth);

struct LagrangianReport {
  bool isotropic = false;
  bool closed = false;
  bool transversal = false;
  std::string witness;  // first offending pair or element, empty when all pass

  bool ok() const { return isotropic && closed && transversal; }
};

/// Windowed checks with generators of u^-1 depth <= window:
///   isotropy: q_form vanishes on every generator pair;
///   closure: brackets of generator pairs lie in W (membership by exact solve);
///   transversality: W-window (+) {b u^k, k <= window} has full rank in the
///   degree slice [-window, window] (plus the finite summands).
/// Throws Error(InconclusiveWindow) when window is below the head depth or
/// below the tail degree.
LagrangianReport is_lagrangian(const LieAlgebra& alg, const WPresentation& w, int window);

/// True iff x lies in W (exact linear solve against a window deep enough for x).
bool contains(const LieAlgebra& alg, const WPresentation& w, const DoubleElement& x);

struct DualElement {
  int basis;
  int degree;
  DoubleElement dual;
};

/// w_{a,k} in W with q_form(b_c u^l, w_{a,k}) = [c == a][l == k] for every
/// canonical element b_c u^l (all l, not only l <= truncation), for k <= truncation.
/// Ordered by degree, then basis order. Throws Error(NotTransversal) when the
/// pairing system is singular.
std::vector<DualElement> dual_basis(const LieAlgebra& alg, const WPresentation& w, int truncation);

}  // namespace lbforge
