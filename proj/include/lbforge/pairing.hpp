#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lbforge/lie.hpp"
#include "lbforge/ratfun.hpp"
#include "lbforge/tensor.hpp"

namespace lbforge {

/// Shape of the Drinfeld double of g[[u]]:
///   I   -> g((u))
///   II  -> g((u)) + g
///   III -> g((u)) + (g + eps g), eps^2 = 0
enum class DoubleType { I, II, III };

/// Canonical form of a(u):
///   TwoPoints  1/((1 - c1 u)(1 - c2 u)), c1 != c2 nonzero
///   DoublePole 1/(1 - u)^2
///   SimplePole 1/(1 - u)
///   Constant   1
enum class AForm { TwoPoints, DoublePole, SimplePole, Constant };

struct CaseSpec {
  DoubleType type = DoubleType::I;
  AForm form = AForm::Constant;
  Rational c1 = 0;
  Rational c2 = 0;

  static CaseSpec two_points(const Rational& c1, const Rational& c2, DoubleType type = DoubleType::I) {
    return {type, AForm::TwoPoints, c1, c2};
  }
  static CaseSpec of(DoubleType type, AForm form) { return {type, form, 0, 0}; }

  RatFun1 a() const;
  /// Degree of the polynomial 1/a(u).
  int inverse_degree() const;

  /// Canonical text form: "I:two-points:1,2", "II:simple-pole", "III:constant".
  std::string to_string() const;
  /// Parses the text form; does not check legality (see validate_case).
  static CaseSpec parse(std::string_view text);

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

std::string to_string(DoubleType t);

/// Element of the double restricted to Laurent polynomials: a loop part in
/// g[u, u^-1], plus the finite summand g (types II, III) and its eps-partner
/// (type III only).
struct DoubleElement {
  LoopElement loop;
  GElement finite;
  GElement eps;

  friend bool operator==(const DoubleElement&, const DoubleElement&) = default;
  DoubleElement& operator+=(const DoubleElement& o);
  friend DoubleElement operator+(DoubleElement a, const DoubleElement& b) { return a += b; }
  friend DoubleElement operator*(DoubleElement a, const Rational& s) {
    a.loop *= s;
    a.finite *= s;
    a.eps *= s;
    return a;
  }
  friend DoubleElement operator-(const DoubleElement& a, const DoubleElement& b) { return a + b * Rational(-1); }
  bool is_zero() const { return loop.is_zero() && finite.is_zero() && eps.is_zero(); }
};

/// x * p(u) as a loop element.
LoopElement loop_element(const GElement& x, const Poly1& p);
DoubleElement loop_only(LoopElement loop);

/// Image of the canonical g[u] basis element b_basis u^degree in the double:
/// type I: b u^k; type II: (b u^k, [k == 0] b); type III: (b u^k, [k == 0] b, [k == 1] b).
DoubleElement canonical_element(const CaseSpec& spec, int basis, int degree);

/// The invariant form of the double.
///   I:   Res_{u=0} B(f1, f2) a(u)
///   II:  Res_{u=0} u^-1 a(u) B(f1, f2) - B(x1, x2)
///   III: Res_{u=0} u^-2 a(u) B(f1, f2) - B(x3, y2) - B(x2, y3)
/// Throws Error(MalformedElement) when an element carries components the
/// double does not have.
Rational q_form(const LieAlgebra& alg, const CaseSpec& spec, const DoubleElement& x, const DoubleElement& y);

/// Bracket in the double (componentwise; the eps part follows eps^2 = 0).
DoubleElement bracket(const LieAlgebra& alg, const CaseSpec& spec, const DoubleElement& x, const DoubleElement& y);

/// Vertex of the extended Dynkin diagram that the order is attached to.
struct Vertex {
  enum class Kind { MinusAlphaMax, Simple } kind = Kind::MinusAlphaMax;
  int k = 1;  // coefficient k_i of the simple root in alpha_max (Simple only)

  static Vertex minus_alpha_max() { return {Kind::MinusAlphaMax, 1}; }
  static Vertex simple(int k) { return {Kind::Simple, k}; }
};

/// Largest admissible degree of 1/a(u), or nullopt when the inclusion into
/// the order is impossible.
std::optional<int> admissible_degree(DoubleType type, const Vertex& vertex);

struct CaseValidation {
  bool ok = true;
  std::string reason;
};

/// Accepts exactly the (double type, a(u)) combinations allowed at the
/// -alpha_max vertex; the rejection states the violated degree bound.
CaseValidation validate_case(const CaseSpec& spec);

}  // namespace lbforge
