#include <doctest.h>

#include "lbforge/error.hpp"
#include "lbforge/lie.hpp"
#include "oracle.hpp"

using namespace lbforge;

namespace {

GElement g(const LieAlgebra& alg, const char* label, const Rational& c = 1) { return basis_element(*alg.index_of(label), c); }

ConstTensor2 t2(const LieAlgebra& alg, const char* a, const char* b, const Rational& c = 1) {
  return outer(g(alg, a), g(alg, b)) * c;
}

}  // namespace

TEST_CASE("sl2 basis, form and brackets") {
  const LieAlgebra alg = build_sl(2);
  CHECK(alg.labels() == std::vector<std::string>{"E12", "F12", "H1"});
  CHECK(alg.form(g(alg, "E12"), g(alg, "F12")) == 1);
  CHECK(alg.form(g(alg, "H1"), g(alg, "H1")) == 2);
  CHECK(alg.bracket(g(alg, "E12"), g(alg, "F12")) == g(alg, "H1"));
  CHECK(alg.bracket(g(alg, "H1"), g(alg, "E12")) == g(alg, "E12", 2));
  const GElement x = g(alg, "E12", 3) + g(alg, "H1", Rational(-1, 2));
  CHECK(alg.bracket(x, x).is_zero());
}

TEST_CASE("sl3 root vectors are normalized") {
  const LieAlgebra alg = build_sl(3);
  CHECK(alg.dim() == 8);
  CHECK(alg.num_positive_roots() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(alg.form(alg.e_index(a), alg.f_index(a)) == 1);
    // [h_a, e_a] = 2 e_a
    CHECK(alg.bracket(alg.coroot(a), basis_element(alg.e_index(a))) == basis_element(alg.e_index(a), 2));
  }
}

TEST_CASE("invalid rank") {
  CHECK_THROWS_AS(build_sl(1), Error);
  try {
    build_sl(0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidRank);
  }
}

TEST_CASE("structure constants agree with matrix commutators, form with traces") {
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra alg = build_sl(n);
    const oracle::Model m(alg);
    const int d = alg.dim();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        CHECK(m.element(alg.bracket_basis(a, b)) == oracle::commutator(m.basis[a], m.basis[b]));
        CHECK(alg.form(a, b) == oracle::trace(m.basis[a] * m.basis[b]));
      }
  }
}

TEST_CASE("Jacobi, antisymmetry and invariance on all basis triples") {
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra alg = build_sl(n);
    const int d = alg.dim();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const GElement x = basis_element(a), y = basis_element(b);
        CHECK((alg.bracket(x, y) + alg.bracket(y, x)).is_zero());
        for (int c = 0; c < d; ++c) {
          const GElement z = basis_element(c);
          CHECK((alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) + alg.bracket(z, alg.bracket(x, y)))
                    .is_zero());
          CHECK(alg.form(alg.bracket(x, y), z) == alg.form(x, alg.bracket(y, z)));
        }
      }
  }
}

TEST_CASE("casimir") {
  const LieAlgebra alg = build_sl(2);
  const ConstTensor2 omega = casimir(alg);
  CHECK(omega == t2(alg, "E12", "F12") + t2(alg, "F12", "E12") + t2(alg, "H1", "H1", Rational(1, 2)));
  CHECK(swap_legs(omega) == omega);
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra a = build_sl(n);
    const ConstTensor2 om = casimir(a);
    CHECK(oracle::Model(a).tensor(om) == oracle::Model(a).casimir());
    for (int x = 0; x < a.dim(); ++x) CHECK(adjoint_action(a, basis_element(x), om).is_zero());
  }
}

TEST_CASE("r_DJ and the constant CYB") {
  const LieAlgebra alg = build_sl(2);
  CHECK(r_dj(alg) == t2(alg, "E12", "F12") + t2(alg, "H1", "H1", Rational(1, 4)));
  CHECK(cyb(alg, ConstTensor2{}).is_zero());
  CHECK(cyb(alg, wedge(g(alg, "H1"), g(alg, "E12"))).is_zero());
  CHECK_FALSE(cyb(alg, t2(alg, "E12", "F12")).is_zero());

  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra a = build_sl(n);
    const oracle::Model m(a);
    const ConstTensor2 r = r_dj(a);
    CHECK(m.tensor(r) == m.r_dj());
    CHECK(r + swap_legs(r) == casimir(a));
    CHECK(cyb(a, r).is_zero());
    CHECK(cyb(a, swap_legs(r)).is_zero());
    for (int root = 0; root < a.num_positive_roots(); ++root) CHECK(cyb(a, jordanian(a, root)).is_zero());
  }
}

TEST_CASE("cyb agrees with the matrix model") {
  const LieAlgebra alg = build_sl(3);
  const oracle::Model m(alg);
  oracle::Sampler s(11);
  for (int trial = 0; trial < 5; ++trial) {
    ConstTensor2 r;
    for (int k = 0; k < 6; ++k) r.add({trial * 7 % 8, (k * 3 + trial) % 8}, s.rational());
    const oracle::Mat mr = m.tensor(r);
    CHECK(m.tensor3(cyb(alg, r)) == m.cyb(mr, mr, mr));
  }
}

TEST_CASE("r_c1c2") {
  const LieAlgebra alg = build_sl(2);
  const Rational c1(3, 2), c2(-5);
  CHECK(r_c1c2(alg, c1, c2) ==
        t2(alg, "F12", "E12", c1) + t2(alg, "E12", "F12", c2) + t2(alg, "H1", "H1", Rational((c1 + c2) / 4)));
  CHECK(casimir(alg) * c1 - r_c1c2(alg, c1, c2) == r_dj(alg) * Rational(c1 - c2));
  CHECK(r_c1c2(alg, 1, -1) == t2(alg, "F12", "E12") - t2(alg, "E12", "F12"));
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra a = build_sl(n);
    const ConstTensor2 r = r_c1c2(a, 2, 7);
    CHECK(r + swap_legs(r) == casimir(a) * Rational(9));
  }
  CHECK_THROWS_AS(r_c1c2(alg, 1, 1), Error);
  CHECK_THROWS_AS(r_c1c2(alg, 0, 1), Error);
}
