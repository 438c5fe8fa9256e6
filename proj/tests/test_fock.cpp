#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qep/fock.hpp"

using namespace qep;
using C = std::complex<double>;

namespace {
bool diag_close(const CMatrix4& m, std::array<double, 4> want,
                double tol = 1e-12) {
  auto d = m.diagonal();
  for (int i = 0; i < 4; ++i)
    if (std::abs(d[i] - C{want[i], 0}) > tol) return false;
  // off-diagonal entries must vanish too
  CMatrix4 diag = CMatrix4::diag(d[0], d[1], d[2], d[3]);
  return (m - diag).max_abs() <= tol;
}
}  // namespace

TEST_CASE("undeformed point q = 1") {
  OscillatorRep rep = build_rep(CalcType::type1, 1.0);
  OscReport r = verify_osc_relations(rep);
  CHECK(r.max_residual < 1e-12);
  CMatrix4 id = CMatrix4::identity();
  CHECK((rep.b1 * rep.b1.adjoint() + rep.b1.adjoint() * rep.b1 - id)
            .max_abs() < 1e-12);
  CHECK((rep.b2 * rep.b2.adjoint() + rep.b2.adjoint() * rep.b2 - id)
            .max_abs() < 1e-12);
}

TEST_CASE("type 1 at q = 2i") {
  OscillatorRep rep = build_rep(CalcType::type1, C{0, 2});
  CHECK(rep.p_val == C{0, -2});
  CHECK(verify_osc_relations(rep).max_residual < 1e-12);

  CMatrix4 anti = rep.b2 * rep.b2.adjoint() + rep.b2.adjoint() * rep.b2;
  CHECK(diag_close(anti, {1, 1, 4, 4}));

  auto [n1, n2] = number_operators(rep);
  CHECK(diag_close(n1, {0, 0, 1, 1}));
  CHECK(diag_close(n2, {0, 1, 0, 4}));
}

TEST_CASE("type 2 at q = 2i") {
  OscillatorRep rep = build_rep(CalcType::type2, C{0, 2});
  CHECK(verify_osc_relations(rep).max_residual < 1e-12);

  CMatrix4 anti = rep.b1 * rep.b1.adjoint() + rep.b1.adjoint() * rep.b1;
  CHECK(diag_close(anti, {1, 0.25, 1, 0.25}));

  auto [n1, n2] = number_operators(rep);
  CHECK(diag_close(n2, {0, 1, 0, 1}));
}

TEST_CASE("sample points of the acceptance set") {
  for (CalcType t : {CalcType::type1, CalcType::type2})
    for (C qv : {C{0, 2}, C{0.5, 0.5}, C{3, 0}})
      CHECK(verify_osc_relations(build_rep(t, qv)).max_residual < 1e-12);
}

TEST_CASE("random annulus samples") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> radius(0.1, 10.0), angle(0.0, 6.28);
  for (int i = 0; i < 20; ++i) {
    C qv = std::polar(radius(rng), angle(rng));
    for (CalcType t : {CalcType::type1, CalcType::type2})
      CHECK(verify_osc_relations(build_rep(t, qv)).max_residual < 1e-12);
  }
}

TEST_CASE("unit-modulus parameters give canonical anticommutators") {
  for (CalcType t : {CalcType::type1, CalcType::type2})
    for (double a : {0.0, 0.9, 2.4}) {
      OscillatorRep rep = build_rep(t, std::polar(1.0, a));
      CMatrix4 id = CMatrix4::identity();
      CHECK((rep.b1 * rep.b1.adjoint() + rep.b1.adjoint() * rep.b1 - id)
                .max_abs() < 1e-12);
      CHECK((rep.b2 * rep.b2.adjoint() + rep.b2.adjoint() * rep.b2 - id)
                .max_abs() < 1e-12);
    }
}

TEST_CASE("structure of the representation") {
  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    OscillatorRep rep = build_rep(t, C{0.3, 1.7});
    // exact nilpotency, not merely small
    CHECK((rep.b1 * rep.b1).exactly_zero());
    CHECK((rep.b2 * rep.b2).exactly_zero());

    auto [n1, n2] = number_operators(rep);
    for (const CMatrix4* n : {&n1, &n2}) {
      CHECK((*n - n->adjoint()).max_abs() == 0.0);  // self-adjoint
      for (auto v : n->diagonal()) {
        CHECK(v.imag() == 0.0);
        CHECK(v.real() >= 0.0);  // positive semidefinite (diagonal)
      }
    }
  }
}

TEST_CASE("broken mode-coupling control") {
  // replace the graded weight on mode 2 by the identity coupling:
  // the mixed exchange relation picks up |1 + q|
  OscillatorRep rep = build_rep(CalcType::type1, C{0, 2});
  rep.b2 = build_rep(CalcType::type2, C{0, 2}).b2;  // I (x) lower
  OscReport r = verify_osc_relations(rep);
  double expected = std::abs(C{1, 2});  // |1 + q| at q = 2i
  REQUIRE(r.per_relation[0].name == "b1 b2 + q b2 b1");
  CHECK(r.per_relation[0].residual == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(r.per_relation[0].residual - std::sqrt(5.0)) < 1e-12);
}

TEST_CASE("symbolic rules hold as operator identities") {
  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    RuleSet rs = build_ruleset(t);
    for (C qv : {C{0, 2}, C{0.5, 0.5}, C{3, 0}}) {
      OscillatorRep rep = build_rep(t, qv);
      OscReport rules = verify_rules_numerically(rs, rep);
      CHECK(rules.max_residual < 1e-12);
      CHECK(rules.per_relation.size() == 10);

      // the aligned relation pairs agree residual for residual
      OscReport osc = verify_osc_relations(rep);
      auto residual_of = [](const OscReport& r, const std::string& nm) {
        for (const auto& rel : r.per_relation)
          if (rel.name == nm) return rel.residual;
        return -1.0;
      };
      std::string rule_name =
          t == CalcType::type1 ? "d_theta*theta" : "d_phi*phi";
      std::string osc_name =
          t == CalcType::type1 ? "{b1, b1+} - 1" : "{b2, b2+} - 1";
      double r1 = residual_of(rules, rule_name);
      double r2 = residual_of(osc, osc_name);
      REQUIRE(r1 >= 0.0);
      REQUIRE(r2 >= 0.0);
      CHECK(std::abs(r1 - r2) <= 1e-12);
    }
  }
}

TEST_CASE("rejects a vanishing deformation parameter") {
  CHECK_THROWS_WITH(build_rep(CalcType::type1, 0.0),
                    "deformation parameter must be nonzero");
}
