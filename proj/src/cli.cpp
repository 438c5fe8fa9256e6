#include "qep/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>

#ifdef _WIN32
#include <io.h>
#define QEP_ISATTY _isatty(1)
#else
#include <unistd.h>
#define QEP_ISATTY isatty(1)
#endif

#include <CLI11.hpp>

#include "qep/ansatz.hpp"
#include "qep/covariance.hpp"
#include "qep/fock.hpp"
#include "qep/parser.hpp"
#include "qep/printer.hpp"
#include "qep/rmatrix.hpp"
#include "qep/sampling.hpp"

namespace qep::cli {

namespace {

using nlohmann::json;

CalcType to_type(int n) { return n == 1 ? CalcType::type1 : CalcType::type2; }

RuleSet select_ruleset(CalcType type, bool flipped_sign) {
  if (flipped_sign && type == CalcType::type2)
    return build_type2_flipped_sign_ruleset();
  return build_ruleset(type);
}

json coefficients_json(const AnsatzCoefficients& f,
                       const DiffDerivCoefficients& ab) {
  return json{{"A", format_laurent(f.a)},     {"B", format_laurent(f.b)},
              {"F11", format_laurent(f.f11)}, {"F12", format_laurent(f.f12)},
              {"F21", format_laurent(f.f21)}, {"F22", format_laurent(f.f22)},
              {"A11", format_laurent(ab.a11)}, {"A12", format_laurent(ab.a12)},
              {"A21", format_laurent(ab.a21)}, {"A22", format_laurent(ab.a22)},
              {"B11", format_laurent(ab.b11)}, {"B12", format_laurent(ab.b12)},
              {"B21", format_laurent(ab.b21)}, {"B22", format_laurent(ab.b22)}};
}

bool roundtrip_holds(unsigned seed, int count) {
  std::mt19937 rng(seed);
  for (int i = 0; i < count; ++i) {
    Expr e = random_expr(rng);
    if (!(parse_expr(format_expr(e)) == e)) return false;
  }
  return true;
}

// classical (undeformed) rule set: every deformation coefficient at 1 or 0
RuleSet classical_ruleset() {
  const Laurent one{1}, zero{};
  AnsatzCoefficients f{one, one, one, zero, one, zero};
  DiffDerivCoefficients ab{one, zero, one, zero, one, zero, one, zero};
  return make_ruleset(CalcType::type1, f, ab).substituted(one, one);
}

bool relation_is_commutator(const QGExpr& rel) {
  if (rel.terms().size() != 2) return false;
  auto it = rel.terms().begin();
  auto [w1, c1] = *it++;
  auto [w2, c2] = *it;
  QGWord rev(w2.rbegin(), w2.rend());
  return w1 == rev && (c1 + c2).is_zero();
}

}  // namespace

json normalize_payload(const std::string& expr_text, CalcType type) {
  RuleSet rs = build_ruleset(type);
  Expr result = rs.normalize(parse_expr(expr_text));
  return json{{"command", "normalize"},
              {"type", type_number(type)},
              {"input", expr_text},
              {"result_text", format_expr(result)},
              {"result", expr_to_json(result)}};
}

json exterior_d_payload(const std::string& expr_text, CalcType type) {
  RuleSet rs = build_ruleset(type);
  Expr result = exterior_d(parse_expr(expr_text), rs);
  return json{{"command", "d"},
              {"type", type_number(type)},
              {"input", expr_text},
              {"result_text", format_expr(result)},
              {"result", expr_to_json(result)}};
}

json derive_payload(const std::string& expr_text, const std::string& wrt,
                    CalcType type) {
  RuleSet rs = build_ruleset(type);
  int index = wrt == "theta" ? 1 : 2;
  Expr result = apply_derivative(index, parse_expr(expr_text), rs);
  return json{{"command", "derive"},
              {"type", type_number(type)},
              {"wrt", wrt},
              {"input", expr_text},
              {"result_text", format_expr(result)},
              {"result", expr_to_json(result)}};
}

json solve_ansatz_payload() {
  auto branches = solve_f(build_f_constraints());
  json out = {{"command", "solve-ansatz"}, {"branches", json::array()}};
  for (std::size_t i = 0; i < branches.size(); ++i) {
    DiffDerivCoefficients ab = solve_ab(branches[i]);
    json b = coefficients_json(branches[i], ab);
    b["name"] = "type " + std::to_string(i + 1);
    out["branches"].push_back(std::move(b));
  }
  return out;
}

json consistency_payload(CalcType type, bool flipped_sign) {
  RuleSet rs = select_ruleset(type, flipped_sign);
  ConsistencyReport report = check_consistency(rs);
  json groups = json::array();
  for (const auto& g : report.groups) {
    json fails = json::array();
    for (const auto& [what, residual] : g.failures)
      fails.push_back({{"identity", what}, {"residual", format_expr(residual)}});
    groups.push_back({{"name", g.name},
                      {"checked", g.checked},
                      {"pass", g.pass()},
                      {"failures", fails}});
  }
  return json{{"command", "consistency"},
              {"type", type_number(type)},
              {"flipped_sign", flipped_sign},
              {"groups", groups},
              {"pass", report.all_pass()}};
}

json confluence_payload(CalcType type, bool flipped_sign) {
  RuleSet rs = select_ruleset(type, flipped_sign);
  auto report = rs.system().check_confluence(all_generators);
  json fails = json::array();
  for (const auto& f : report.failures) {
    FormatOptions fo;
    fails.push_back({{"overlap", format_word(f.overlap, fo)},
                     {"normal_form_left", format_expr(f.normal_form_left)},
                     {"normal_form_right", format_expr(f.normal_form_right)}});
  }
  return json{{"command", "confluence"},
              {"type", type_number(type)},
              {"flipped_sign", flipped_sign},
              {"triples_scanned", report.triples_scanned},
              {"critical_pairs", report.overlaps_checked},
              {"failures", fails},
              {"pass", report.confluent()}};
}

json ybe_payload(CalcType type) {
  YbeReport report = ybe_check(r_matrix(type));
  return json{{"command", "ybe"},
              {"type", type_number(type)},
              {"plain", report.plain},
              {"braid", report.braid},
              {"plain_residuals", report.plain_residuals.size()},
              {"braid_residuals", report.braid_residuals.size()},
              {"pass", report.pass()}};
}

json rcheck_payload(CalcType type) {
  RFormReport report = check_r_form_calculus(type);
  auto family = [](const RFormFamily& f) {
    return json{
        {"name", f.name}, {"checked", f.checked}, {"pass", f.pass()},
        {"mismatches", f.mismatches}};
  };
  return json{
      {"command", "rcheck"},
      {"type", type_number(type)},
      {"families",
       {family(report.coordinate_differential),
        family(report.derivative_coordinate),
        family(report.derivative_differential),
        family(report.coordinate_coordinate),
        family(report.derivative_derivative)}},
      {"coordinate_scaling", report.coordinate_scaling
                                 ? format_laurent(*report.coordinate_scaling)
                                 : "unresolved"},
      {"derivative_scaling", report.derivative_scaling
                                 ? format_laurent(*report.derivative_scaling)
                                 : "unresolved"},
      {"nilpotency_forced_generically", report.nilpotency_forced_generically},
      {"pass", report.pass()}};
}

json rtt_payload(CalcType type) {
  QuantumGroupRelations rels = rtt_relations(hat(r_matrix(type)));
  QGNormalizer qg = QGNormalizer::from_relations(rels);
  json list = json::array();
  for (const QGExpr& r : rels.relations)
    list.push_back(format_qg_expr(r) + " = 0");
  return json{{"command", "rtt"},
              {"type", type_number(type)},
              {"count", rels.relations.size()},
              {"relations", list},
              {"normalizer_confluent", qg.confluent()}};
}

json covariance_payload(CalcType type, bool commutative_control) {
  CovarianceReport report =
      commutative_control
          ? check_covariance(type, QGNormalizer::commutative())
          : check_covariance(type);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"relation", c.relation}, {"pass", c.pass}};
    if (!c.pass) {
      json resid = json::array();
      for (const auto& [k, coeff] : c.residual.terms()) {
        std::string qs, ps;
        for (QGen g : k.first) qs += name(g);
        FormatOptions fo;
        resid.push_back({{"qg_word", qs},
                         {"plane_word", format_word(k.second, fo)},
                         {"coeff", format_laurent(coeff)}});
      }
      entry["residual"] = resid;
    }
    checks.push_back(std::move(entry));
  }
  return json{{"command", "covariance"},
              {"type", type_number(type)},
              {"commutative_control", commutative_control},
              {"checks", checks},
              {"pass", report.all_pass()}};
}

json fock_payload(CalcType type, std::complex<double> q_val) {
  OscillatorRep rep = build_rep(type, q_val);
  OscReport report = verify_osc_relations(rep);
  json rels = json::array();
  for (const auto& r : report.per_relation)
    rels.push_back({{"relation", r.name}, {"residual", r.residual}});
  return json{{"command", "fock"},
              {"type", type_number(type)},
              {"q", {q_val.real(), q_val.imag()}},
              {"max_residual", report.max_residual},
              {"relations", rels},
              {"pass", report.max_residual < 1e-12}};
}

json verify_all_payload(unsigned seed) {
  json checks = json::array();
  auto add = [&](const std::string& nm, bool pass, json detail = json::object()) {
    checks.push_back({{"name", nm}, {"pass", pass}, {"detail", detail}});
  };

  {
    auto branches = solve_f(build_f_constraints());
    bool ok = branches.size() == 2;
    for (CalcType t : {CalcType::type1, CalcType::type2}) {
      std::size_t i = t == CalcType::type1 ? 0 : 1;
      ok = ok && branches[i] == plane_coefficients(t) &&
           solve_ab(branches[i]) == derivative_coefficients(t) &&
           make_ruleset(t, branches[i], solve_ab(branches[i])).system() ==
               build_ruleset(t).system();
    }
    add("ansatz-branches", ok, {{"branches", branches.size()}});
  }

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    ConsistencyReport r = check_consistency(build_ruleset(t));
    std::size_t checked = 0, failures = 0;
    for (const auto& g : r.groups) {
      checked += g.checked;
      failures += g.failures.size();
    }
    add("consistency-type-" + std::to_string(type_number(t)), r.all_pass(),
        {{"checked", checked}, {"failures", failures}});
  }

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    auto r = build_ruleset(t).system().check_confluence(all_generators);
    add("confluence-type-" + std::to_string(type_number(t)), r.confluent(),
        {{"triples_scanned", r.triples_scanned},
         {"critical_pairs", r.overlaps_checked},
         {"failures", r.failures.size()}});
  }

  {
    RuleSet variant = build_type2_flipped_sign_ruleset();
    auto conf = variant.system().check_confluence(all_generators);
    ConsistencyReport cons = check_consistency(variant);
    // the flipped sign must break the calculus; detecting that is the pass
    add("flipped-sign-regression",
        !conf.confluent() && !cons.all_pass(),
        {{"nonjoining_pairs", conf.failures.size()}});
  }

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    YbeReport r = ybe_check(r_matrix(t));
    add("yang-baxter-type-" + std::to_string(type_number(t)), r.pass(),
        {{"plain", r.plain}, {"braid", r.braid}});
  }

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    RFormReport r = check_r_form_calculus(t);
    add("exchange-form-type-" + std::to_string(type_number(t)), r.pass(),
        {{"coordinate_scaling",
          r.coordinate_scaling ? format_laurent(*r.coordinate_scaling)
                               : "unresolved"},
         {"derivative_scaling",
          r.derivative_scaling ? format_laurent(*r.derivative_scaling)
                               : "unresolved"}});
  }

  add("transpose-inverse",
      transpose_inverse_check(true) && !transpose_inverse_check(false),
      {{"at_equal_parameters", transpose_inverse_check(true)},
       {"generic", transpose_inverse_check(false)}});

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    QuantumGroupRelations rels = rtt_relations(hat(r_matrix(t)));
    QGNormalizer qg = QGNormalizer::from_relations(rels);
    add("rtt-type-" + std::to_string(type_number(t)),
        qg.confluent() && qg.relations_closed(),
        {{"relations", rels.relations.size()}});
  }

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    CovarianceReport r = check_covariance(t);
    add("covariance-type-" + std::to_string(type_number(t)), r.all_pass(),
        {{"relations", r.checks.size()}});
  }

  {
    CovarianceReport r =
        check_covariance(CalcType::type1, QGNormalizer::commutative());
    std::size_t nonzero = 0;
    for (const auto& c : r.checks)
      if (!c.pass) ++nonzero;
    add("covariance-commutative-control", nonzero > 0,
        {{"nonzero_images", nonzero}});
  }

  {
    const Laurent one{1};
    RuleSet r1 = build_ruleset(CalcType::type1).substituted(one, one);
    RuleSet r2 = build_ruleset(CalcType::type2).substituted(one, one);
    bool ok = r1.system() == r2.system() &&
              r1.system() == classical_ruleset().system();
    for (CalcType t : {CalcType::type1, CalcType::type2})
      ok = ok &&
           r_matrix(t).substituted(one, one) == RMatrix4::identity();
    for (CalcType t : {CalcType::type1, CalcType::type2})
      for (const QGExpr& rel :
           rtt_relations(hat(r_matrix(t))).relations)
        ok = ok && relation_is_commutator(rel.substituted(one, one));
    add("classical-limit", ok);
  }

  for (CalcType t : {CalcType::type1, CalcType::type2}) {
    double worst = 0.0;
    for (std::complex<double> qv :
         {std::complex<double>{0, 2}, std::complex<double>{0.5, 0.5},
          std::complex<double>{3, 0}})
      worst = std::max(worst,
                       verify_osc_relations(build_rep(t, qv)).max_residual);
    // a unit-modulus sample: the two mode anticommutators become canonical
    OscillatorRep unit = build_rep(t, std::polar(1.0, 0.9));
    CMatrix4 id = CMatrix4::identity();
    double unit_resid = std::max(
        (unit.b1 * unit.b1.adjoint() + unit.b1.adjoint() * unit.b1 - id)
            .max_abs(),
        (unit.b2 * unit.b2.adjoint() + unit.b2.adjoint() * unit.b2 - id)
            .max_abs());
    add("fock-type-" + std::to_string(type_number(t)),
        worst < 1e-12 && unit_resid < 1e-12,
        {{"max_residual", worst}, {"unit_modulus_residual", unit_resid}});
  }

  add("parse-print-roundtrip", roundtrip_holds(seed, 1000),
      {{"count", 1000}, {"seed", seed}});

  bool all = true;
  for (const auto& c : checks) all = all && c.at("pass").get<bool>();
  return json{{"command", "verify-all"},
              {"seed", seed},
              {"checks", checks},
              {"pass", all}};
}

namespace {

struct GlobalOptions {
  std::string output = "text";
  unsigned seed = 0;
  bool unicode = false;
};

bool use_color(const std::ostream& out) {
  return &out == &std::cout && QEP_ISATTY && std::getenv("NO_COLOR") == nullptr;
}

std::string verdict(bool pass, const std::ostream& out) {
  if (use_color(out))
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
  return pass ? "PASS" : "FAIL";
}

std::string read_expression(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_check_lines(const json& payload, std::ostream& out) {
  for (const auto& c : payload.at("checks"))
    out << verdict(c.at("pass").get<bool>(), out) << "  "
        << c.at("name").get<std::string>() << "\n";
}

void render_text(const json& payload, std::ostream& out, bool unicode) {
  const std::string cmd = payload.at("command");
  if (cmd == "normalize" || cmd == "d" || cmd == "derive") {
    if (unicode) {
      // re-render from structured output with unicode generator names
      Expr e;
      for (const auto& t : payload.at("result").at("terms")) {
        Word w;
        for (const auto& g : t.at("word"))
          for (Gen cand : all_generators)
            if (g.get<std::string>() == name(cand)) w.push_back(cand);
        Laurent c;
        for (const auto& m : t.at("coeff").at("terms"))
          c += Laurent::monomial(
              mpq_class(m.at("num").get<long>(), m.at("den").get<long>()),
              m.at("p_exp").get<int>(), m.at("q_exp").get<int>());
        e.add_term(std::move(w), c);
      }
      out << format_expr(e, {.unicode = true}) << "\n";
    } else {
      out << payload.at("result_text").get<std::string>() << "\n";
    }
    return;
  }
  if (cmd == "solve-ansatz") {
    for (const auto& b : payload.at("branches")) {
      out << b.at("name").get<std::string>() << ":\n";
      for (const char* key : {"A", "B", "F11", "F12", "F21", "F22", "A11",
                              "A12", "A21", "A22", "B11", "B12", "B21", "B22"})
        out << "  " << key << " = " << b.at(key).get<std::string>() << "\n";
    }
    return;
  }
  if (cmd == "consistency") {
    for (const auto& g : payload.at("groups")) {
      out << verdict(g.at("pass").get<bool>(), out) << "  "
          << g.at("name").get<std::string>() << " (" << g.at("checked")
          << " checked)\n";
      for (const auto& f : g.at("failures"))
        out << "      " << f.at("identity").get<std::string>() << " -> "
            << f.at("residual").get<std::string>() << "\n";
    }
    return;
  }
  if (cmd == "confluence") {
    out << verdict(payload.at("pass").get<bool>(), out) << "  "
        << payload.at("critical_pairs") << " critical pairs over "
        << payload.at("triples_scanned") << " triples, "
        << payload.at("failures").size() << " non-joining\n";
    for (const auto& f : payload.at("failures"))
      out << "      " << f.at("overlap").get<std::string>() << ": "
          << f.at("normal_form_left").get<std::string>() << "  vs  "
          << f.at("normal_form_right").get<std::string>() << "\n";
    return;
  }
  if (cmd == "ybe") {
    out << verdict(payload.at("plain").get<bool>(), out)
        << "  operator form\n"
        << verdict(payload.at("braid").get<bool>(), out) << "  braid form\n";
    return;
  }
  if (cmd == "rcheck") {
    for (const auto& f : payload.at("families")) {
      out << verdict(f.at("pass").get<bool>(), out) << "  "
          << f.at("name").get<std::string>() << "\n";
      for (const auto& m : f.at("mismatches"))
        out << "      " << m.get<std::string>() << "\n";
    }
    out << "coordinate-coordinate scaling: "
        << payload.at("coordinate_scaling").get<std::string>() << "\n";
    out << "derivative-derivative scaling: "
        << payload.at("derivative_scaling").get<std::string>() << "\n";
    return;
  }
  if (cmd == "rtt") {
    out << payload.at("count") << " independent relations:\n";
    for (const auto& r : payload.at("relations"))
      out << "  " << r.get<std::string>() << "\n";
    return;
  }
  if (cmd == "covariance") {
    for (const auto& c : payload.at("checks"))
      out << verdict(c.at("pass").get<bool>(), out) << "  "
          << c.at("relation").get<std::string>() << "\n";
    return;
  }
  if (cmd == "fock") {
    out << verdict(payload.at("pass").get<bool>(), out)
        << "  max residual " << payload.at("max_residual").get<double>()
        << "\n";
    for (const auto& r : payload.at("relations"))
      out << "      " << r.at("relation").get<std::string>() << ": "
          << r.at("residual").get<double>() << "\n";
    return;
  }
  if (cmd == "verify-all") {
    print_check_lines(payload, out);
    out << (payload.at("pass").get<bool>() ? "all checks passed"
                                           : "some checks FAILED")
        << "\n";
    return;
  }
  out << payload.dump(2) << "\n";
}

CommandResult finish(json payload, bool is_check, std::ostream& out,
                     const GlobalOptions& opts) {
  CommandResult result;
  bool pass = !is_check || payload.value("pass", false);
  result.exit_code = pass ? 0 : 1;
  result.status = is_check ? (pass ? "pass" : "fail") : "value";
  if (opts.output == "json")
    out << payload.dump(2) << "\n";
  else
    render_text(payload, out, opts.unicode);
  result.payload = std::move(payload);
  return result;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv,
                          std::ostream& out, std::istream& in) {
  CLI::App app{"two-parameter exterior plane calculus"};
  app.name("qep");
  GlobalOptions opts;
  app.add_option("--output", opts.output, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized property checks")
      ->capture_default_str();
  app.add_flag("--unicode", opts.unicode, "unicode generator names");
  app.require_subcommand(1);
  app.fallthrough();

  int type_num = 1;
  std::string expr_arg, expr_opt, wrt = "theta", q_arg = "0,2";
  bool flipped = false, commutative = false;

  auto add_type = [&](CLI::App* cmd) {
    cmd->add_option("--type", type_num, "calculus type")
        ->check(CLI::IsMember({1, 2}))
        ->required();
  };
  auto add_expr = [&](CLI::App* cmd) {
    cmd->add_option("expression", expr_arg, "expression ('-' reads stdin)");
    cmd->add_option("--expr", expr_opt,
                    "expression (alternative to the positional; use for "
                    "expressions starting with '-')");
  };

  CLI::App* c_norm = app.add_subcommand("normalize", "normal form");
  add_type(c_norm);
  add_expr(c_norm);
  CLI::App* c_d = app.add_subcommand("d", "exterior derivative");
  add_type(c_d);
  add_expr(c_d);
  CLI::App* c_derive = app.add_subcommand("derive", "partial derivative");
  add_type(c_derive);
  add_expr(c_derive);
  c_derive->add_option("--wrt", wrt, "derivative variable")
      ->check(CLI::IsMember({"theta", "phi"}))
      ->required();
  CLI::App* c_solve =
      app.add_subcommand("solve-ansatz", "solve the coefficient constraints");
  (void)c_solve;
  CLI::App* c_cons = app.add_subcommand("consistency", "consistency checks");
  add_type(c_cons);
  c_cons->add_flag("--flipped-sign", flipped,
                   "use the sign-flipped type-2 variant");
  CLI::App* c_conf = app.add_subcommand("confluence", "critical-pair check");
  add_type(c_conf);
  c_conf->add_flag("--flipped-sign", flipped,
                   "use the sign-flipped type-2 variant");
  CLI::App* c_ybe = app.add_subcommand("ybe", "Yang-Baxter check");
  add_type(c_ybe);
  CLI::App* c_rcheck =
      app.add_subcommand("rcheck", "exchange-matrix form of the calculus");
  add_type(c_rcheck);
  CLI::App* c_rtt = app.add_subcommand("rtt", "quantum-group relations");
  add_type(c_rtt);
  CLI::App* c_cov = app.add_subcommand("covariance", "coaction covariance");
  add_type(c_cov);
  c_cov->add_flag("--commutative", commutative,
                  "replace the quantum-group relations by commutativity");
  CLI::App* c_fock = app.add_subcommand("fock", "oscillator representation");
  add_type(c_fock);
  c_fock->add_option("--q", q_arg, "deformation parameter as re,im")
      ->required();
  CLI::App* c_all = app.add_subcommand("verify-all", "run every check");
  (void)c_all;

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {0, "value", {}};
  } catch (const CLI::ParseError& e) {
    out << "error: " << e.what() << "\n" << app.help();
    return {2, "fail", {{"error", e.what()}}};
  }

  CalcType type = to_type(type_num);
  try {
    if (app.got_subcommand(c_norm) || app.got_subcommand(c_d) ||
        app.got_subcommand(c_derive)) {
      std::string text = !expr_opt.empty() ? expr_opt : expr_arg;
      if (text.empty()) {
        out << "error: missing expression\n";
        return {2, "fail", {{"error", "missing expression"}}};
      }
      text = read_expression(text, in);
      json payload = app.got_subcommand(c_norm)
                         ? normalize_payload(text, type)
                         : app.got_subcommand(c_d)
                               ? exterior_d_payload(text, type)
                               : derive_payload(text, wrt, type);
      return finish(std::move(payload), false, out, opts);
    }
    if (app.got_subcommand(c_solve))
      return finish(solve_ansatz_payload(), false, out, opts);
    if (app.got_subcommand(c_cons))
      return finish(consistency_payload(type, flipped), true, out, opts);
    if (app.got_subcommand(c_conf))
      return finish(confluence_payload(type, flipped), true, out, opts);
    if (app.got_subcommand(c_ybe))
      return finish(ybe_payload(type), true, out, opts);
    if (app.got_subcommand(c_rcheck))
      return finish(rcheck_payload(type), true, out, opts);
    if (app.got_subcommand(c_rtt))
      return finish(rtt_payload(type), false, out, opts);
    if (app.got_subcommand(c_cov))
      return finish(covariance_payload(type, commutative), true, out, opts);
    if (app.got_subcommand(c_fock)) {
      double re = 0, im = 0;
      if (std::sscanf(q_arg.c_str(), "%lf,%lf", &re, &im) != 2) {
        out << "error: --q expects re,im\n";
        return {2, "fail", {{"error", "--q expects re,im"}}};
      }
      return finish(fock_payload(type, {re, im}), true, out, opts);
    }
    return finish(verify_all_payload(opts.seed), true, out, opts);
  } catch (const ParseError& e) {
    out << "error: " << e.what() << "\n";
    return {2, "fail", {{"error", e.what()}}};
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return {2, "fail", {{"error", e.what()}}};
  }
}

}  // namespace qep::cli
