#include <doctest.h>

#include "lbforge/error.hpp"
#include "lbforge/lagrangian.hpp"

using namespace lbforge;

namespace {

const Poly1 t = Poly1::monomial({-1});  // u^-1

DoubleElement loop(int basis, const Poly1& p) { return loop_only(loop_element(basis_element(basis), p)); }

std::vector<CaseSpec> families() {
  return {CaseSpec::two_points(1, 2),
          CaseSpec::of(DoubleType::I, AForm::DoublePole),
          CaseSpec::of(DoubleType::I, AForm::SimplePole),
          CaseSpec::of(DoubleType::I, AForm::Constant),
          CaseSpec::of(DoubleType::II, AForm::SimplePole),
          CaseSpec::of(DoubleType::II, AForm::Constant),
          CaseSpec::of(DoubleType::III, AForm::Constant)};
}

}  // namespace

TEST_CASE("psi on generators") {
  const LieAlgebra alg = build_sl(2);
  const Rational c1(2), c2(-3);
  const auto tp = CaseSpec::two_points(c1, c2);
  const GElement x = basis_element(0) + basis_element(2, 3);
  CHECK(psi(tp, loop_only(loop_element(x, t))) == QuotientElement{x * c1, x * c2});
  CHECK(psi(tp, loop_only(loop_element(x, Poly1(1)))) == QuotientElement{x, x});
  CHECK(psi(tp, loop_only(loop_element(x, (t - Poly1(c1)) * (t - Poly1(c2))))) == QuotientElement{});

  const auto dp = CaseSpec::of(DoubleType::I, AForm::DoublePole);
  CHECK(psi(dp, loop_only(loop_element(x, t))) == QuotientElement{x, x});
  const auto sp = CaseSpec::of(DoubleType::I, AForm::SimplePole);
  CHECK(psi(sp, loop_only(loop_element(x, t))) == QuotientElement{{}, x});
  CHECK(psi(sp, loop_only(loop_element(x, Poly1(1)))) == QuotientElement{x, x});

  CHECK_THROWS_AS(psi(tp, loop(0, Poly1::variable(0))), Error);
}

TEST_CASE("psi_inverse_lift examples") {
  const LieAlgebra alg = build_sl(2);
  const Rational c1(5), c2(1, 3);
  const auto tp = CaseSpec::two_points(c1, c2);
  const int e = alg.e_index(0), f = alg.f_index(0), h = alg.h_index(1);
  CHECK(psi_inverse_lift(tp, {basis_element(f), {}}) == loop(f, (t - Poly1(c2)) * Rational(1 / (c1 - c2))));
  CHECK(psi_inverse_lift(tp, {basis_element(h), basis_element(h, -1)}) ==
        loop(h, (t * 2 - Poly1(c1 + c2)) * Rational(1 / (c1 - c2))));
  CHECK(psi_inverse_lift(CaseSpec::of(DoubleType::I, AForm::SimplePole), {{}, basis_element(e)}) == loop(e, t));
}

TEST_CASE("psi is a homomorphism and splits the lift") {
  const LieAlgebra alg = build_sl(2);
  for (const auto& s : families()) {
    const Ambient amb = quotient_ambient(s);
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b)
        for (int i = 0; i <= 4; ++i)
          for (int j = 0; j <= 4; ++j) {
            const auto x = loop(a, Poly1::monomial({-i})), y = loop(b, Poly1::monomial({-j}));
            CHECK(psi(s, bracket(alg, s, x, y)) == ambient_bracket(alg, amb, psi(s, x), psi(s, y)));
          }
    for (const auto& g : catalog_wbar(alg, s).generators) CHECK(psi(s, psi_inverse_lift(s, g)) == g);
    // the tail generates the kernel
    for (int a = 0; a < alg.dim(); ++a) CHECK(psi(s, loop(a, tail_generator(s))) == QuotientElement{});
  }
}

TEST_CASE("finite Lagrangians") {
  const LieAlgebra alg = build_sl(3);
  CHECK_NOTHROW(lift_lagrangian(alg, CaseSpec::two_points(1, 2), triangular_complement(alg)));
  // wrong ambient
  CHECK_THROWS_AS(lift_lagrangian(alg, CaseSpec::two_points(1, 2), epsilon_g(alg)), Error);
  // g (+) 0 is not isotropic
  FiniteLagrangian first{Ambient::PairSum, {}};
  for (int a = 0; a < alg.dim(); ++a) first.generators.push_back({basis_element(a), {}});
  CHECK_THROWS_AS(lift_lagrangian(alg, CaseSpec::two_points(1, 2), first), Error);
  // too small
  FiniteLagrangian small = triangular_complement(alg);
  small.generators.pop_back();
  CHECK_THROWS_AS(lift_lagrangian(alg, CaseSpec::two_points(1, 2), small), Error);
}

TEST_CASE("catalog W0 presentations") {
  const LieAlgebra alg = build_sl(2);
  const auto dp = CaseSpec::of(DoubleType::I, AForm::DoublePole);
  const auto w = catalog_w0(alg, dp);
  CHECK(w.tail == (t - Poly1(1)).pow(2));
  for (int a = 0; a < alg.dim(); ++a) CHECK(w.head[static_cast<std::size_t>(a)] == loop(a, t - Poly1(1)));
  const auto w3 = catalog_w0(alg, CaseSpec::of(DoubleType::III, AForm::Constant));
  CHECK(w3.tail == Poly1(1));
  for (int a = 0; a < alg.dim(); ++a) CHECK(w3.head[static_cast<std::size_t>(a)] == DoubleElement{{}, {}, basis_element(a)});
}

TEST_CASE("is_lagrangian on the catalog") {
  for (int n = 2; n <= 3; ++n) {
    const LieAlgebra alg = build_sl(n);
    for (const auto& s : families()) {
      const auto rep = is_lagrangian(alg, catalog_w0(alg, s), n == 2 ? 6 : 3);
      CHECK_MESSAGE(rep.ok(), s.to_string() << ": " << rep.witness);
    }
  }
}

TEST_CASE("is_lagrangian negatives") {
  const LieAlgebra alg = build_sl(2);
  // g[u^-1] in the a = 1 case is not isotropic: u^0 pairs with u^-1
  const auto constant = CaseSpec::of(DoubleType::I, AForm::Constant);
  WPresentation all{constant, {}, Poly1(1)};
  const auto rep = is_lagrangian(alg, all, 4);
  CHECK_FALSE(rep.isotropic);
  CHECK_FALSE(rep.witness.empty());

  // corrupted two-points generator: (u^-1 - c1) -> (u^-1 + c1)
  const Rational c1(1), c2(2);
  const auto tp = CaseSpec::two_points(c1, c2);
  WPresentation w = catalog_w0(alg, tp);
  w.head[1] = loop(alg.e_index(0), (t + Poly1(c1)) * Rational(1 / (c2 - c1)));
  const auto bad = is_lagrangian(alg, w, 6);
  CHECK_FALSE(bad.isotropic);
  CHECK(bad.witness.find("Q(") != std::string::npos);

  CHECK_THROWS_AS(is_lagrangian(alg, catalog_w0(alg, tp), 1), Error);
}

TEST_CASE("membership") {
  const LieAlgebra alg = build_sl(2);
  const auto tp = CaseSpec::two_points(1, 2);
  const auto w = catalog_w0(alg, tp);
  CHECK(contains(alg, w, loop(0, (t - Poly1(1)) * (t - Poly1(2)) * t.pow(3))));
  CHECK(contains(alg, w, loop(alg.f_index(0), t - Poly1(2))));
  CHECK_FALSE(contains(alg, w, loop(alg.f_index(0), t - Poly1(1))));
  CHECK_FALSE(contains(alg, w, loop(0, Poly1::variable(0))));
}

TEST_CASE("dual bases") {
  const LieAlgebra alg = build_sl(2);
  const int e = alg.e_index(0), f = alg.f_index(0), h = alg.h_index(1);
  const Rational c1(3), c2(7);
  const auto tp = CaseSpec::two_points(c1, c2);
  const auto duals = dual_basis(alg, catalog_w0(alg, tp), 2);
  REQUIRE(duals.size() == 9);
  CHECK(duals[static_cast<std::size_t>(h)].dual == loop(h, (t - Poly1(Rational((c1 + c2) / 2))) * Rational(1, 2)));

  const auto constant = CaseSpec::of(DoubleType::I, AForm::Constant);
  const auto cd = dual_basis(alg, catalog_w0(alg, constant), 4);
  for (int k = 0; k <= 4; ++k) CHECK(cd[static_cast<std::size_t>(3 * k + e)].dual == loop(f, Poly1::monomial({-k - 1})));

  const auto sp = CaseSpec::of(DoubleType::I, AForm::SimplePole);
  const auto sd = dual_basis(alg, catalog_w0(alg, sp), 1);
  CHECK(sd[static_cast<std::size_t>(h)].dual == loop(h, (Poly1(1) - t * 2) * Rational(-1, 4)));

  for (const auto& s : families()) {
    const auto w = catalog_w0(alg, s);
    const auto d = dual_basis(alg, w, 3);
    for (const auto& x : d) {
      CHECK(contains(alg, w, x.dual));
      for (int l = 0; l <= 8; ++l)
        for (int b = 0; b < alg.dim(); ++b)
          CHECK(q_form(alg, s, canonical_element(s, b, l), x.dual) == Rational(b == x.basis && l == x.degree ? 1 : 0));
    }
  }
}
