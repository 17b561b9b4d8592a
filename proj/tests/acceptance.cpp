// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "lbforge/cobracket.hpp"
#include "lbforge/error.hpp"
#include "lbforge/twist.hpp"
#include "oracle.hpp"

using namespace lbforge;

namespace {

const Poly2 U = Poly2::variable(0), V = Poly2::variable(1), ONE(1);

struct Family {
  CaseSpec spec;
  oracle::Family shape;
};

std::vector<Family> families(const Rational& c1 = 1, const Rational& c2 = 2) {
  return {{CaseSpec::two_points(c1, c2), oracle::Family::TwoPoints},
          {CaseSpec::of(DoubleType::I, AForm::DoublePole), oracle::Family::DoublePole},
          {CaseSpec::of(DoubleType::I, AForm::SimplePole), oracle::Family::SimplePoleI},
          {CaseSpec::of(DoubleType::I, AForm::Constant), oracle::Family::ConstantI},
          {CaseSpec::of(DoubleType::II, AForm::SimplePole), oracle::Family::SimplePoleII},
          {CaseSpec::of(DoubleType::II, AForm::Constant), oracle::Family::ConstantII},
          {CaseSpec::of(DoubleType::III, AForm::Constant), oracle::Family::ConstantIII}};
}

// r_DJ for MCYBE families; 0 and h_a ^ e_a for the given roots otherwise.
std::vector<std::pair<std::string, RKind>> constants(const LieAlgebra& alg, const CaseSpec& s,
                                                     const std::vector<int>& roots) {
  if (required_kind(s) == RKind::Tag::MCYBE) return {{"dj", RKind::dj(alg)}};
  std::vector<std::pair<std::string, RKind>> out{{"zero", RKind::zero(alg)}};
  for (int a : roots) out.emplace_back("jordanian[" + alg.labels()[static_cast<std::size_t>(a)] + "]", RKind::jordanian(alg, a));
  return out;
}

std::vector<int> all_roots(const LieAlgebra& alg) {
  std::vector<int> out;
  for (int a = 0; a < alg.num_positive_roots(); ++a) out.push_back(a);
  return out;
}

// h_a ^ e_a built from elementary matrices, for the root eps_i - eps_j.
oracle::Mat jordanian_matrix(const oracle::Model& m, int i, int j) {
  const oracle::Mat h = oracle::Mat::unit(m.n, i, i) - oracle::Mat::unit(m.n, j, j);
  const oracle::Mat e = oracle::Mat::unit(m.n, i, j);
  return oracle::kron(h, e) - oracle::kron(e, h);
}

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// Each criterion returns a short note for the report line or throws Failure.
std::string criterion1() {
  const LieAlgebra alg = build_sl(2);
  const oracle::Model m(alg);
  const ConstTensor2 omega = casimir(alg);
  oracle::Sampler s(1001);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cs = s.distinct(2);
    const Rational c1 = cs[0], c2 = cs[1];
    const SpectralTensor2 lhs =
        spectral(omega, BivarRat(ONE - U * Rational(c1 + c2) + U * V * Rational(c1 * c2), 1)) - spectral(r_c1c2(alg, c1, c2));
    const SpectralTensor2 rhs = spectral(omega, BivarRat(ONE - V * c1 - U * c2 + U * V * Rational(c1 * c2), 1)) +
                                spectral(r_dj(alg)) * Rational(c1 - c2);
    require(lhs == rhs, "symbolic mismatch at c = (" + to_string(c1) + ", " + to_string(c2) + ")");
    require(build_r(alg, CaseSpec::two_points(c1, c2), RKind::dj(alg)) == rhs, "build_r differs from the rewritten form");
    // r_{c1,c2} = c1 Omega - (c1 - c2) r_DJ in the defining representation
    const auto pts = s.distinct(2);
    const oracle::Q u = pts[0], v = pts[1];
    const oracle::Mat direct = m.casimir() * oracle::Q((1 - (c1 + c2) * u + c1 * c2 * u * v) / (v - u)) -
                               (m.casimir() * c1 - m.r_dj() * oracle::Q(c1 - c2));
    require(oracle::eval(m, lhs, u, v) == direct, "matrix model disagrees");
  }
  return "10 random (c1,c2), symbolic and matrix model";
}

std::string criterion2() {
  const LieAlgebra alg = build_sl(2);
  int pairs = 0;
  for (const auto& f : families()) {
    const WPresentation w = catalog_w0(alg, f.spec);
    const auto duals = dual_basis(alg, w, 6);
    require(duals.size() == static_cast<std::size_t>(7 * alg.dim()), f.spec.to_string() + ": wrong dual count");
    for (const auto& d : duals)
      for (int k = 0; k <= 6; ++k)
        for (int b = 0; b < alg.dim(); ++b) {
          const Rational want = (b == d.basis && k == d.degree) ? 1 : 0;
          require(q_form(alg, f.spec, canonical_element(f.spec, b, k), d.dual) == want,
                  f.spec.to_string() + ": pairing not the identity");
          ++pairs;
        }
    for (const auto& d : duals) require(contains(alg, w, d.dual), f.spec.to_string() + ": dual element outside W0");
  }
  return "7 families, " + std::to_string(pairs) + " pairings, k,l <= 6";
}

std::string criterion3() {
  int checked = 0;
  auto check = [&](int n, const CaseSpec& spec) {
    const LieAlgebra alg = build_sl(n);
    require(sum_dual_series(alg, catalog_w0(alg, spec), 6) ==
                expand_region(build_r(alg, spec, catalog_r(alg, spec)), 6),
            "sl_" + std::to_string(n) + " " + spec.to_string());
    ++checked;
  };
  for (const auto& f : families()) check(2, f.spec);
  check(3, CaseSpec::of(DoubleType::I, AForm::Constant));
  return std::to_string(checked) + " series through u^6";
}

std::string criterion4() {
  int checked = 0;
  for (int n = 2; n <= 3; ++n) {
    const LieAlgebra alg = build_sl(n);
    const oracle::Model m(alg);
    oracle::Sampler s(4000 + n);
    for (const auto& f : families())
      for (const auto& [name, r] : constants(alg, f.spec, all_roots(alg))) {
        const std::string tag = "sl_" + std::to_string(n) + " " + f.spec.to_string() + " " + name;
        require(cyb_spectral(alg, build_r(alg, f.spec, r)).is_zero(), tag);
        // the same family written in matrices, at random points
        const oracle::Mat rm = m.tensor(r.value());
        const auto p = s.distinct(3);
        const auto at = [&](const oracle::Q& x, const oracle::Q& y) { return oracle::family_matrix(m, f.shape, rm, x, y); };
        require(m.cyb(at(p[0], p[1]), at(p[0], p[2]), at(p[1], p[2])).is_zero(), tag + " (matrix model)");
        ++checked;
      }
  }
  return std::to_string(checked) + " (family, constant) pairs on sl_2, sl_3";
}

std::string criterion5() {
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra alg = build_sl(n);
    const oracle::Model m(alg);
    const std::string tag = "sl_" + std::to_string(n);
    const ConstTensor2 r = r_dj(alg);
    require(cyb(alg, r).is_zero(), tag + ": CYB(r_DJ) != 0");
    require(r + swap_legs(r) == casimir(alg), tag + ": r_DJ + r21 != Omega");
    require(m.tensor(r) == m.r_dj(), tag + ": r_DJ differs from the matrix model");
    const oracle::Mat rm = m.r_dj();
    require(m.cyb(rm, rm, rm).is_zero(), tag + ": CYB(r_DJ) != 0 in the matrix model");
    for (const auto& root : alg.positive_roots()) {
      const int a = *alg.root_index(root.i, root.j);
      const ConstTensor2 j = jordanian(alg, a);
      require(cyb(alg, j).is_zero(), tag + ": CYB(h ^ e) != 0");
      require(m.tensor(j) == jordanian_matrix(m, root.i - 1, root.j - 1), tag + ": h ^ e differs from the matrix model");
      const oracle::Mat jm = m.tensor(j);
      require(m.cyb(jm, jm, jm).is_zero(), tag + ": CYB(h ^ e) != 0 in the matrix model");
    }
  }
  return "sl_2, sl_3, sl_4, every positive root";
}

std::string criterion6() {
  std::size_t checks = 0;
  int configs[2] = {0, 0};
  for (int n = 2; n <= 3; ++n) {
    const LieAlgebra alg = build_sl(n);
    const int d = n == 2 ? 4 : 2;
    for (const auto& f : families())
      for (const auto& [name, r] : constants(alg, f.spec, all_roots(alg))) {
        const auto results = axiom_sweep(alg, f.spec.to_string(), build_r(alg, f.spec, r), {d, d, d});
        for (const auto& res : results)
          require(res.pass, "sl_" + std::to_string(n) + " " + res.family + " " + name + ": " + res.check + " fails at " + res.element);
        checks += results.size();
        ++configs[n - 2];
      }
  }
  return std::to_string(configs[0]) + " configurations on sl_2 (degree 4), " + std::to_string(configs[1]) +
         " on sl_3 (degree 2), " + std::to_string(checks) + " exact checks";
}

std::string criterion7() {
  const LieAlgebra alg = build_sl(2);
  oracle::Sampler s(7007);
  int done = 0;
  while (done < 20) {
    const auto c = s.distinct(2), d = s.distinct(2);
    AffineChange ch;
    try {
      ch = solve_pq(c[0], c[1], d[0], d[1]);
    } catch (const Error& e) {
      if (e.code() == Errc::DegenerateChange) continue;
      throw;
    }
    for (int i = 0; i < 2; ++i) require(c[i] * ch.p / (1 - c[i] * ch.q) == d[i], "back-substitution fails");
    const TwistReport rep = quasi_twist_verify(alg, c[0], c[1], d[0], d[1]);
    require(rep.change == ch && rep.equal, "quasi-twist identity fails");
    require(rep.scale == ch.p / ((1 - c[0] * ch.q) * (1 - c[1] * ch.q)), "wrong scale");
    ++done;
  }
  const TwistReport rep = quasi_twist_verify(alg, 1, 2, 3, 5);
  require(rep.change == AffineChange{Rational(15, 4), Rational(-1, 4)} && rep.scale == 2 && rep.equal,
          "instance (1,2,3,5)");
  const oracle::Q p(15, 4), q(-1, 4);
  require(1 * p / (1 - 1 * q) == 3 && 2 * p / (1 - 2 * q) == 5, "instance (1,2,3,5) back-substitution");
  return "20 random quadruples; (1,2,3,5) -> p=15/4 q=-1/4 C=2";
}

std::string criterion8() {
  const LieAlgebra alg = build_sl(2);
  require(remark_example_check(alg), "symbolic check fails");
  // matrix model at random points, u = 2 u1 - 1
  const oracle::Model m(alg);
  oracle::Sampler s(8008);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = s.distinct(2);
    const oracle::Q u1 = p[0], v1 = p[1], u = 2 * u1 - 1, v = 2 * v1 - 1;
    const oracle::Mat before = m.casimir() * oracle::Q((1 - u * v) / (v - u)) + m.wedge_sum();
    const oracle::Mat after = (m.casimir() * oracle::Q(u1 * (1 - v1) / (v1 - u1)) + m.r_dj()) * oracle::Q(2);
    require(before == after, "matrix model disagrees");
  }
  return "symbolic and 5 random points";
}

std::string criterion9() {
  using K = Vertex::Kind;
  struct Cell {
    DoubleType t;
    Vertex v;
    std::optional<int> want;
  };
  const std::vector<Cell> cells{
      {DoubleType::I, {K::MinusAlphaMax, 1}, 2},  {DoubleType::I, {K::Simple, 1}, 2},
      {DoubleType::I, {K::Simple, 2}, 1},         {DoubleType::II, {K::MinusAlphaMax, 1}, 1},
      {DoubleType::II, {K::Simple, 1}, 1},        {DoubleType::II, {K::Simple, 3}, 0},
      {DoubleType::III, {K::MinusAlphaMax, 1}, 0}, {DoubleType::III, {K::Simple, 1}, 0},
      {DoubleType::III, {K::Simple, 2}, std::nullopt}};
  for (const auto& c : cells) require(admissible_degree(c.t, c.v) == c.want, "table cell " + to_string(c.t));
  for (int k = 3; k <= 6; ++k) require(!admissible_degree(DoubleType::III, Vertex::simple(k)), "III/k>1 is impossible");

  struct Rejection {
    CaseSpec spec;
    std::string phrase;
  };
  const std::vector<Rejection> rejected{
      {CaseSpec::two_points(1, 2, DoubleType::II), "degree at most 1"},
      {CaseSpec::of(DoubleType::II, AForm::DoublePole), "degree at most 1"},
      {CaseSpec::two_points(1, 2, DoubleType::III), "is a constant"},
      {CaseSpec::of(DoubleType::III, AForm::DoublePole), "is a constant"},
      {CaseSpec::of(DoubleType::III, AForm::SimplePole), "is a constant"}};
  for (const auto& r : rejected) {
    const CaseValidation v = validate_case(r.spec);
    require(!v.ok && v.reason.find(r.phrase) != std::string::npos, r.spec.to_string() + " not rejected correctly");
  }
  for (const auto& f : families()) require(validate_case(f.spec).ok, f.spec.to_string() + " rejected");
  return "9 cells, 5 illegal cases rejected, 7 legal accepted";
}

std::string criterion10() {
  for (int n = 2; n <= 3; ++n) {
    const LieAlgebra alg = build_sl(n);
    const int window = n == 2 ? 6 : 3;
    for (const auto& f : families()) {
      const LagrangianReport rep = is_lagrangian(alg, catalog_w0(alg, f.spec), window);
      require(rep.ok(), "sl_" + std::to_string(n) + " " + f.spec.to_string() + ": " + rep.witness);
    }
  }
  const LieAlgebra alg = build_sl(2);
  const Rational c1(1), c2(2);
  WPresentation w = catalog_w0(alg, CaseSpec::two_points(c1, c2));
  // replace the E generator's factor (u^-1 - c1) by (u^-1 + c1)
  const Poly1 t = Poly1::monomial({-1});
  const int e = alg.e_index(0);
  const auto lift = [&](const Poly1& factor) {
    return loop_only(loop_element(basis_element(e), factor * Rational(1 / (c2 - c1))));
  };
  const auto it = std::find(w.head.begin(), w.head.end(), lift(t - Poly1(c1)));
  require(it != w.head.end(), "catalog generator with factor (u^-1 - c1) not found");
  *it = lift(t + Poly1(c1));
  const LagrangianReport bad = is_lagrangian(alg, w, 6);
  require(!bad.isotropic && !bad.witness.empty(), "corrupted generator not detected");
  return "window 6 on sl_2 (3 on sl_3); corrupted generator: " + bad.witness;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"rewriting identity", criterion1},      {"dual-basis duality", criterion2},
      {"series vs closed form", criterion3},   {"spectral CYBE", criterion4},
      {"constant-level contracts", criterion5}, {"bialgebra axiom sweep", criterion6},
      {"quasi-twist", criterion7},             {"change of variable example", criterion8},
      {"degree table", criterion9},            {"isotropy and transversality", criterion10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS", note;
    try {
      note = criteria[i].second();
    } catch (const std::exception& e) {
      status = "FAIL";
      note = e.what();
      ++failed;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << status << " " << (i + 1) << " " << criteria[i].first << ": " << note << " [" << time.str() << "s]"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
