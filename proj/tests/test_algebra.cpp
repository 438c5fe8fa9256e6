#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "qep/expr.hpp"
#include "qep/sampling.hpp"

using namespace qep;

namespace {
const Laurent one{1};
const Laurent P = Laurent::p();
const Laurent Q = Laurent::q();
}  // namespace

TEST_CASE("laurent arithmetic basics") {
  Laurent one_minus_pq = one - P * Q;
  CHECK(one_minus_pq * (-(P * Q).inverse()) ==
        one - (P * Q).inverse());           // (1-pq) * -(pq)^-1 = 1 - (pq)^-1
  CHECK((P + (-P)).is_zero());
  CHECK(one - (P * Q).inverse() == (P * Q - one) * (P * Q).inverse());
  CHECK(Laurent{}.is_zero());
  CHECK(Laurent{}.terms().empty());
  CHECK(one.is_one());
  CHECK((P * P.inverse()).is_one());
}

TEST_CASE("laurent units and inverses") {
  CHECK(P.is_unit());
  CHECK(Laurent::monomial(mpq_class(-3, 2), 2, -1).is_unit());
  Laurent u = Laurent::monomial(mpq_class(-3, 2), 2, -1);
  CHECK((u * u.inverse()).is_one());
  CHECK_FALSE((one - P * Q).is_unit());
  CHECK_THROWS_AS((one - P * Q).inverse(), std::domain_error);
}

TEST_CASE("laurent evaluation") {
  using C = std::complex<double>;
  CHECK((one - P * Q).eval(2, 3) == C{-5, 0});
  CHECK(P.inverse().eval(2, 1) == C{0.5, 0});
  CHECK(std::abs((one - (P * Q).inverse()).eval(C{0, -2}, C{0, 2}) -
                 C{0.75, 0}) < 1e-15);
  CHECK_THROWS_WITH(P.eval(0, 1), "nonunital evaluation point");
  CHECK_THROWS_AS(Q.eval(1, 0), std::domain_error);
}

TEST_CASE("laurent substitution") {
  Laurent e = one - P * Q;
  CHECK(e.substituted(Laurent::q(-1), Laurent::p(-1)) ==
        one - (P * Q).inverse());
  CHECK(e.substituted(one, one).is_zero());
  CHECK(P.substituted(Q, P) == Q);
}

TEST_CASE("laurent ring axioms on random values") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng),
            c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    std::complex<double> pv{coord(rng), coord(rng)}, qv{coord(rng), coord(rng)};
    if (std::abs(pv) < 0.2 || std::abs(qv) < 0.2) continue;
    auto lhs_mul = (a * b).eval(pv, qv);
    auto rhs_mul = a.eval(pv, qv) * b.eval(pv, qv);
    CHECK(std::abs(lhs_mul - rhs_mul) <=
          1e-12 * std::max(1.0, std::abs(rhs_mul)));
    auto lhs_add = (a + b).eval(pv, qv);
    auto rhs_add = a.eval(pv, qv) + b.eval(pv, qv);
    CHECK(std::abs(lhs_add - rhs_add) <=
          1e-12 * std::max(1.0, std::abs(rhs_add)));
  }
}

TEST_CASE("word parity") {
  CHECK(word_parity({Gen::theta, Gen::phi}) == Parity::even);
  CHECK(word_parity({Gen::theta, Gen::diff_phi}) == Parity::odd);
  CHECK(word_parity({}) == Parity::even);
  CHECK(word_parity({Gen::del_theta}) == Parity::odd);
  CHECK(word_parity({Gen::diff_theta}) == Parity::even);

  // monoid homomorphism into Z/2 under concatenation
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng), v = random_word(rng);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    int sum = (word_parity(u) == Parity::odd) + (word_parity(v) == Parity::odd);
    CHECK((word_parity(uv) == Parity::odd) == (sum % 2 == 1));
  }
}

TEST_CASE("free algebra product and sum") {
  Expr theta = Expr::letter(Gen::theta);
  Expr phi = Expr::letter(Gen::phi);
  Expr prod = expr_product(theta, phi);
  REQUIRE(prod.size() == 1);
  CHECK(prod.terms().begin()->first == Word{Gen::theta, Gen::phi});
  CHECK(prod.terms().begin()->second.is_one());

  Expr lhs = expr_sum(prod, Laurent::p(-1) * expr_product(phi, theta));
  CHECK(lhs.size() == 2);  // theta*phi + p^-1 phi*theta, unreduced

  Expr with_diff = expr_product(prod, Expr::letter(Gen::diff_theta));
  REQUIRE(with_diff.size() == 1);
  CHECK(with_diff.terms().begin()->first ==
        Word{Gen::theta, Gen::phi, Gen::diff_theta});
}

TEST_CASE("free product is associative and distributive") {
  std::mt19937 rng(19);
  for (int i = 0; i < 60; ++i) {
    Expr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("exactly six generators with the stated kinds") {
  CHECK(all_generators.size() == 6);
  CHECK(kind(Gen::theta) == GenKind::coordinate);
  CHECK(kind(Gen::diff_phi) == GenKind::differential);
  CHECK(kind(Gen::del_phi) == GenKind::derivative);
  CHECK(index_of(Gen::theta) == 1);
  CHECK(index_of(Gen::del_phi) == 2);
  CHECK(parity(Gen::diff_theta) == Parity::even);
  CHECK(parity(Gen::theta) == Parity::odd);
  CHECK(parity(Gen::del_theta) == Parity::odd);
}
