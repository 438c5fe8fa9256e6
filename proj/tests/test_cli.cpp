#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qep/cli.hpp"
#include "qep/parser.hpp"
#include "qep/printer.hpp"
#include "qep/sampling.hpp"

using namespace qep;
using qep::cli::run_command;

namespace {
const Laurent one{1};
const Laurent P = Laurent::p();
const Laurent Q = Laurent::q();

cli::CommandResult run(std::vector<std::string> argv, std::string* text = nullptr,
                       const std::string& stdin_text = "") {
  std::ostringstream out;
  std::istringstream in(stdin_text);
  auto result = run_command(argv, out, in);
  if (text) *text = out.str();
  return result;
}
}  // namespace

TEST_CASE("parser accepts the grammar") {
  Expr lhs = parse_expr("theta*phi + p^-1 * phi*theta");
  Expr want = Expr::word({Gen::theta, Gen::phi}) +
              P.inverse() * Expr::word({Gen::phi, Gen::theta});
  CHECK(lhs == want);

  CHECK(parse_expr("(1 - p*q) * Phi * theta") ==
        Expr::term(one - P * Q, {Gen::diff_phi, Gen::theta}));
  CHECK(parse_expr("theta^2") == Expr::word({Gen::theta, Gen::theta}));
  CHECK(parse_expr("theta^0") == Expr::scalar(one));
  CHECK(parse_expr("3/2 * q^-2") ==
        Expr::scalar(Laurent::monomial(mpq_class(3, 2), 0, -2)));
  CHECK(parse_expr("2 theta") == Laurent{2} * Expr::letter(Gen::theta));
  CHECK(parse_expr("-p*theta") == Expr::term(-P, {Gen::theta}));
  CHECK(parse_expr("d_theta*d_phi") ==
        Expr::word({Gen::del_theta, Gen::del_phi}));
  CHECK(parse_expr("(theta + phi)^2") ==
        parse_expr("theta*theta + theta*phi + phi*theta + phi*phi"));
  CHECK(parse_expr("0").is_zero());
}

TEST_CASE("parser rejects malformed input with positions") {
  try {
    parse_expr("theta + \n  * phi");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_expr("omega"), ParseError);
  CHECK_THROWS_AS(parse_expr("theta*("), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
  CHECK_THROWS_AS(parse_expr("p^x"), ParseError);

  try {
    parse_expr("theta^-1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(
              "nilpotent generators admit only exponents 0 and 1 via ^; "
              "negative exponents are parameter-only") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_expr("(theta + phi)^-1"), ParseError);
  CHECK_THROWS_AS(parse_expr("2^-1"), ParseError);
  CHECK_NOTHROW(parse_expr("p^-3 * q^-1"));
}

TEST_CASE("formatting is canonical") {
  RuleSet t1 = build_ruleset(CalcType::type1);
  CHECK(format_expr(t1.normalize(parse_expr("phi*Theta"))) ==
        "p*Theta*phi + (1 - p*q)*Phi*theta");
  CHECK(format_expr(Expr{}) == "0");
  CHECK(format_expr(parse_expr("1 - p*q + theta")) == "1 - p*q + theta");
  CHECK(format_expr(Expr::term(-Q, {Gen::theta})) == "-q*theta");
  CHECK(format_expr(Expr::term(Laurent::monomial(mpq_class(1, 2), 0, 0),
                               {Gen::theta})) == "1/2*theta");
  CHECK(format_laurent(one - (P * Q).inverse()) == "1 - p^-1*q^-1");
  CHECK(format_expr(t1.normalize(parse_expr("phi*Theta")),
                    {.unicode = true}) == "p*Θ*φ + (1 - p*q)*Φ*θ");
}

TEST_CASE("parse-print round trip on random expressions") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    Expr e = random_expr(rng);
    CAPTURE(format_expr(e));
    CHECK(parse_expr(format_expr(e)) == e);
  }
}

TEST_CASE("json coefficient schema is exact") {
  nlohmann::json j = laurent_to_json(one - P * Q);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms")[0] ==
        nlohmann::json({{"p_exp", 0}, {"q_exp", 0}, {"num", 1}, {"den", 1}}));
  CHECK(j.at("terms")[1] ==
        nlohmann::json({{"p_exp", 1}, {"q_exp", 1}, {"num", -1}, {"den", 1}}));

  nlohmann::json e = expr_to_json(Expr::term(
      Laurent::monomial(mpq_class(1, 2), -1, 0), {Gen::diff_phi, Gen::theta}));
  CHECK(e.at("terms")[0].at("word") ==
        nlohmann::json::array({"Phi", "theta"}));
  CHECK(e.at("terms")[0].at("coeff").at("terms")[0].at("den") == 2);
}

TEST_CASE("command exit codes and outputs") {
  std::string text;

  auto r = run({"normalize", "--type", "1", "phi*Theta"}, &text);
  CHECK(r.exit_code == 0);
  CHECK(r.status == "value");
  CHECK(text == "p*Theta*phi + (1 - p*q)*Phi*theta\n");

  r = run({"d", "--type", "1", "theta"}, &text);
  CHECK(r.exit_code == 0);
  CHECK(text == "Theta\n");

  r = run({"derive", "--wrt", "phi", "--type", "1", "theta*phi"}, &text);
  CHECK(r.exit_code == 0);
  CHECK(text == "-q*theta\n");

  CHECK(run({"solve-ansatz"}).exit_code == 0);
  CHECK(run({"consistency", "--type", "1"}).exit_code == 0);
  CHECK(run({"consistency", "--type", "2"}).exit_code == 0);
  CHECK(run({"confluence", "--type", "2"}).exit_code == 0);
  CHECK(run({"ybe", "--type", "1"}).exit_code == 0);
  CHECK(run({"ybe", "--type", "2"}).exit_code == 0);
  CHECK(run({"rcheck", "--type", "1"}).exit_code == 0);
  CHECK(run({"rcheck", "--type", "2"}).exit_code == 0);
  CHECK(run({"rtt", "--type", "1"}).exit_code == 0);
  CHECK(run({"covariance", "--type", "1"}).exit_code == 0);
  CHECK(run({"covariance", "--type", "2"}).exit_code == 0);
  CHECK(run({"fock", "--type", "1", "--q", "0,2"}).exit_code == 0);
  CHECK(run({"fock", "--type", "2", "--q", "0.5,0.5"}).exit_code == 0);
  CHECK(run({"verify-all"}).exit_code == 0);

  // check failures exit 1
  CHECK(run({"consistency", "--type", "2", "--flipped-sign"}).exit_code == 1);
  CHECK(run({"confluence", "--type", "2", "--flipped-sign"}).exit_code == 1);
  CHECK(run({"covariance", "--type", "1", "--commutative"}).exit_code == 1);

  // usage errors exit 2
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"normalize", "--type", "3", "theta"}).exit_code == 2);
  CHECK(run({"normalize", "--type", "1"}).exit_code == 2);  // no expression
  CHECK(run({"normalize", "--type", "1", "--bogus", "theta"}).exit_code == 2);
  CHECK(run({"normalize", "--type", "1", "theta*("}).exit_code == 2);
  CHECK(run({"fock", "--type", "1", "--q", "zzz"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
}

TEST_CASE("expression via stdin and via --expr") {
  std::string text;
  auto r = run({"normalize", "--type", "1", "-"}, &text, "phi*Theta\n");
  CHECK(r.exit_code == 0);
  CHECK(text == "p*Theta*phi + (1 - p*q)*Phi*theta\n");

  r = run({"normalize", "--type", "1", "--expr=-p*theta"}, &text);
  CHECK(r.exit_code == 0);
  CHECK(text == "-p*theta\n");
}

TEST_CASE("json output is parseable and structured") {
  std::string text;
  auto r = run({"normalize", "--type", "1", "--output", "json", "phi*Theta"},
               &text);
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("command") == "normalize");
  CHECK(j.at("result_text") == "p*Theta*phi + (1 - p*q)*Phi*theta");
  CHECK(j.at("result").at("terms").size() == 2);

  r = run({"rtt", "--type", "1", "--output", "json"}, &text);
  nlohmann::json rtt = nlohmann::json::parse(text);
  CHECK(rtt.at("count") == 7);
  CHECK(rtt.at("relations").size() == 7);
  CHECK(rtt.at("relations")[0] == "a*b - p*b*a = 0");

  r = run({"solve-ansatz", "--output", "json"}, &text);
  nlohmann::json sj = nlohmann::json::parse(text);
  REQUIRE(sj.at("branches").size() == 2);
  CHECK(sj.at("branches")[0].at("F22") == "1 - p*q");
  CHECK(sj.at("branches")[1].at("F12") == "1 - p^-1*q^-1");
  CHECK(sj.at("branches")[0].at("A12") == "1 - p^-1*q^-1");
  CHECK(sj.at("branches")[1].at("B22") == "1 - p*q");
}

TEST_CASE("commands are deterministic given a seed") {
  std::string a, b;
  run({"verify-all", "--output", "json", "--seed", "9"}, &a);
  run({"verify-all", "--output", "json", "--seed", "9"}, &b);
  CHECK(a == b);
}
