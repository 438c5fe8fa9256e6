#include "qep/calculus.hpp"

#include <stdexcept>

#include "qep/printer.hpp"

namespace qep {

namespace {

const Laurent kOne{1};
const Laurent kP = Laurent::p();
const Laurent kQ = Laurent::q();

Expr tm(const Laurent& c, std::initializer_list<Gen> w) {
  return Expr::term(c, Word(w));
}

void add_common_rules(RewriteSystem<Gen>& sys) {
  // coordinate exchange and nilpotency
  sys.add_rule(Gen::phi, Gen::theta, tm(-kP, {Gen::theta, Gen::phi}));
  sys.add_rule(Gen::theta, Gen::theta, Expr{});
  sys.add_rule(Gen::phi, Gen::phi, Expr{});
  // differential exchange
  sys.add_rule(Gen::diff_phi, Gen::diff_theta,
               tm(kQ.inverse(), {Gen::diff_theta, Gen::diff_phi}));
  // derivative exchange and nilpotency
  sys.add_rule(Gen::del_phi, Gen::del_theta,
               tm(-kQ.inverse(), {Gen::del_theta, Gen::del_phi}));
  sys.add_rule(Gen::del_theta, Gen::del_theta, Expr{});
  sys.add_rule(Gen::del_phi, Gen::del_phi, Expr{});
}

void add_ansatz_rules(RewriteSystem<Gen>& sys, const AnsatzCoefficients& f,
                      const DiffDerivCoefficients& ab) {
  // coordinate-differential
  sys.add_rule(Gen::theta, Gen::diff_theta,
               tm(f.a, {Gen::diff_theta, Gen::theta}));
  sys.add_rule(Gen::theta, Gen::diff_phi,
               tm(f.f11, {Gen::diff_phi, Gen::theta}) +
                   tm(f.f12, {Gen::diff_theta, Gen::phi}));
  sys.add_rule(Gen::phi, Gen::diff_phi, tm(f.b, {Gen::diff_phi, Gen::phi}));
  sys.add_rule(Gen::phi, Gen::diff_theta,
               tm(f.f21, {Gen::diff_theta, Gen::phi}) +
                   tm(f.f22, {Gen::diff_phi, Gen::theta}));
  // derivative-coordinate
  sys.add_rule(Gen::del_theta, Gen::theta,
               Expr::scalar(kOne) + tm(-kOne, {Gen::theta, Gen::del_theta}) +
                   tm(-f.f12, {Gen::phi, Gen::del_phi}));
  sys.add_rule(Gen::del_theta, Gen::phi,
               tm(-f.f21, {Gen::phi, Gen::del_theta}));
  sys.add_rule(Gen::del_phi, Gen::phi,
               Expr::scalar(kOne) + tm(-kOne, {Gen::phi, Gen::del_phi}) +
                   tm(-f.f22, {Gen::theta, Gen::del_theta}));
  sys.add_rule(Gen::del_phi, Gen::theta,
               tm(-f.f11, {Gen::theta, Gen::del_phi}));
  // derivative-differential
  sys.add_rule(Gen::del_theta, Gen::diff_theta,
               tm(ab.a11, {Gen::diff_theta, Gen::del_theta}) +
                   tm(ab.a12, {Gen::diff_phi, Gen::del_phi}));
  sys.add_rule(Gen::del_theta, Gen::diff_phi,
               tm(ab.a21, {Gen::diff_phi, Gen::del_theta}) +
                   tm(ab.a22, {Gen::diff_theta, Gen::del_phi}));
  sys.add_rule(Gen::del_phi, Gen::diff_theta,
               tm(ab.b11, {Gen::diff_theta, Gen::del_phi}) +
                   tm(ab.b12, {Gen::diff_phi, Gen::del_theta}));
  sys.add_rule(Gen::del_phi, Gen::diff_phi,
               tm(ab.b21, {Gen::diff_phi, Gen::del_phi}) +
                   tm(ab.b22, {Gen::diff_theta, Gen::del_theta}));
}

}  // namespace

AnsatzCoefficients plane_coefficients(CalcType type) {
  if (type == CalcType::type1)
    return {kOne, kOne, kQ, Laurent{}, kP, kOne - kP * kQ};
  return {kOne,           kOne,
          kP.inverse(),   kOne - (kP * kQ).inverse(),
          kQ.inverse(),   Laurent{}};
}

DiffDerivCoefficients derivative_coefficients(CalcType type) {
  if (type == CalcType::type1)
    return {kOne,          kOne - (kP * kQ).inverse(),
            kQ.inverse(),  Laurent{},
            kP.inverse(),  Laurent{},
            kOne,          Laurent{}};
  return {kOne, Laurent{}, kP,   Laurent{},
          kQ,   Laurent{}, kOne, kOne - kP * kQ};
}

RuleSet make_ruleset(CalcType label, const AnsatzCoefficients& f,
                     const DiffDerivCoefficients& ab) {
  RewriteSystem<Gen> sys;
  add_common_rules(sys);
  add_ansatz_rules(sys, f, ab);
  return RuleSet(label, std::move(sys));
}

RuleSet build_ruleset(CalcType type) {
  RewriteSystem<Gen> sys;
  add_common_rules(sys);
  if (type == CalcType::type1) {
    sys.add_rule(Gen::theta, Gen::diff_theta,
                 tm(kOne, {Gen::diff_theta, Gen::theta}));
    sys.add_rule(Gen::theta, Gen::diff_phi,
                 tm(kQ, {Gen::diff_phi, Gen::theta}));
    sys.add_rule(Gen::phi, Gen::diff_phi, tm(kOne, {Gen::diff_phi, Gen::phi}));
    sys.add_rule(Gen::phi, Gen::diff_theta,
                 tm(kP, {Gen::diff_theta, Gen::phi}) +
                     tm(kOne - kP * kQ, {Gen::diff_phi, Gen::theta}));
    sys.add_rule(Gen::del_theta, Gen::theta,
                 Expr::scalar(kOne) + tm(-kOne, {Gen::theta, Gen::del_theta}));
    sys.add_rule(Gen::del_theta, Gen::phi,
                 tm(-kP, {Gen::phi, Gen::del_theta}));
    sys.add_rule(Gen::del_phi, Gen::phi,
                 Expr::scalar(kOne) + tm(-kOne, {Gen::phi, Gen::del_phi}) +
                     tm(kP * kQ - kOne, {Gen::theta, Gen::del_theta}));
    sys.add_rule(Gen::del_phi, Gen::theta,
                 tm(-kQ, {Gen::theta, Gen::del_phi}));
    sys.add_rule(Gen::del_theta, Gen::diff_theta,
                 tm(kOne, {Gen::diff_theta, Gen::del_theta}) +
                     tm(kOne - (kP * kQ).inverse(),
                        {Gen::diff_phi, Gen::del_phi}));
    sys.add_rule(Gen::del_theta, Gen::diff_phi,
                 tm(kQ.inverse(), {Gen::diff_phi, Gen::del_theta}));
    sys.add_rule(Gen::del_phi, Gen::diff_theta,
                 tm(kP.inverse(), {Gen::diff_theta, Gen::del_phi}));
    sys.add_rule(Gen::del_phi, Gen::diff_phi,
                 tm(kOne, {Gen::diff_phi, Gen::del_phi}));
  } else {
    sys.add_rule(Gen::theta, Gen::diff_theta,
                 tm(kOne, {Gen::diff_theta, Gen::theta}));
    sys.add_rule(Gen::theta, Gen::diff_phi,
                 tm(kP.inverse(), {Gen::diff_phi, Gen::theta}) +
                     tm(kOne - (kP * kQ).inverse(),
                        {Gen::diff_theta, Gen::phi}));
    sys.add_rule(Gen::phi, Gen::diff_phi, tm(kOne, {Gen::diff_phi, Gen::phi}));
    sys.add_rule(Gen::phi, Gen::diff_theta,
                 tm(kQ.inverse(), {Gen::diff_theta, Gen::phi}));
    sys.add_rule(Gen::del_theta, Gen::theta,
                 Expr::scalar(kOne) + tm(-kOne, {Gen::theta, Gen::del_theta}) +
                     tm((kP * kQ).inverse() - kOne,
                        {Gen::phi, Gen::del_phi}));
    sys.add_rule(Gen::del_theta, Gen::phi,
                 tm(-kQ.inverse(), {Gen::phi, Gen::del_theta}));
    sys.add_rule(Gen::del_phi, Gen::phi,
                 Expr::scalar(kOne) + tm(-kOne, {Gen::phi, Gen::del_phi}));
    sys.add_rule(Gen::del_phi, Gen::theta,
                 tm(-kP.inverse(), {Gen::theta, Gen::del_phi}));
    sys.add_rule(Gen::del_theta, Gen::diff_theta,
                 tm(kOne, {Gen::diff_theta, Gen::del_theta}));
    sys.add_rule(Gen::del_theta, Gen::diff_phi,
                 tm(kP, {Gen::diff_phi, Gen::del_theta}));
    sys.add_rule(Gen::del_phi, Gen::diff_theta,
                 tm(kQ, {Gen::diff_theta, Gen::del_phi}));
    sys.add_rule(Gen::del_phi, Gen::diff_phi,
                 tm(kOne, {Gen::diff_phi, Gen::del_phi}) +
                     tm(kOne - kP * kQ, {Gen::diff_theta, Gen::del_theta}));
  }
  return RuleSet(type, std::move(sys));
}

RuleSet build_type2_flipped_sign_ruleset() {
  AnsatzCoefficients f = plane_coefficients(CalcType::type2);
  f.f12 = -f.f12;
  return make_ruleset(CalcType::type2, f,
                      derivative_coefficients(CalcType::type2));
}

Expr exterior_d(const Expr& e) {
  Expr out;
  for (const auto& [w, c] : e.terms()) {
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Gen g = w[i];
      if (kind(g) == GenKind::derivative)
        throw std::invalid_argument("d undefined on derivative generators");
      if (kind(g) == GenKind::coordinate) {
        Word dw = w;
        dw[i] = g == Gen::theta ? Gen::diff_theta : Gen::diff_phi;
        out.add_term(std::move(dw), Laurent{sign} * c);
      }
      if (parity(g) == Parity::odd) sign = -sign;
    }
  }
  return out;
}

Expr exterior_d(const Expr& e, const RuleSet& rs) {
  return rs.normalize(exterior_d(e));
}

Expr apply_derivative(int index, const Expr& f, const RuleSet& rs) {
  if (index != 1 && index != 2)
    throw std::invalid_argument("derivative index must be 1 or 2");
  for (const auto& [w, c] : f.terms())
    for (Gen g : w)
      if (kind(g) == GenKind::derivative)
        throw std::invalid_argument(
            "derivative action defined on coordinates and differentials only");
  Gen d = index == 1 ? Gen::del_theta : Gen::del_phi;
  Expr out;
  const Expr acted = rs.normalize(Expr::letter(d) * f);
  for (const auto& [w, c] : acted.terms()) {
    if (!w.empty() && kind(w.back()) == GenKind::derivative) continue;
    out.add_term(w, c);
  }
  return out;
}

bool is_normal_word(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (static_cast<int>(w[i]) > static_cast<int>(w[i + 1])) return false;
    if (w[i] == w[i + 1] && nilpotent(w[i])) return false;
  }
  return true;
}

namespace {

// Every word of length <= max_len over the given letters, incl. the empty one.
std::vector<Word> words_up_to(const std::vector<Gen>& letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Gen g : letters) {
        Word w = out[i];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

const std::vector<Gen> kCoordDiff = {Gen::diff_theta, Gen::diff_phi,
                                     Gen::theta, Gen::phi};

}  // namespace

ConsistencyReport check_consistency(const RuleSet& rs) {
  ConsistencyReport report;
  FormatOptions fmt;

  // exchange relation of the coordinates, multiplied by each differential
  {
    ConsistencyGroup g;
    g.name = "exchange-relation products with differentials";
    Expr plane = Expr::word({Gen::theta, Gen::phi}) +
                 Laurent::p(-1) * Expr::word({Gen::phi, Gen::theta});
    for (Gen x : {Gen::diff_theta, Gen::diff_phi}) {
      ++g.checked;
      Expr r = rs.normalize(plane * Expr::letter(x));
      if (!r.is_zero())
        g.failures.emplace_back(std::string("product with ") +
                                    std::string(name(x)),
                                r);
    }
    report.groups.push_back(std::move(g));
  }

  // d of every coordinate/differential relation
  {
    ConsistencyGroup g;
    g.name = "differential of the defining relations";
    for (const auto& [lhs, rhs] : rs.system().rules()) {
      bool cd = kind(lhs.first) != GenKind::derivative &&
                kind(lhs.second) != GenKind::derivative;
      if (!cd) continue;
      ++g.checked;
      Expr rel = Expr::word({lhs.first, lhs.second}) - rhs;
      Expr r = rs.normalize(exterior_d(rel));
      if (!r.is_zero())
        g.failures.emplace_back("d of rule " + std::string(name(lhs.first)) +
                                    "*" + std::string(name(lhs.second)),
                                r);
    }
    report.groups.push_back(std::move(g));
  }

  // d^2 = 0 on short words
  {
    ConsistencyGroup g;
    g.name = "d squared on words of length <= 3";
    for (const Word& w : words_up_to(kCoordDiff, 3)) {
      ++g.checked;
      Expr e = rs.normalize(Expr::word(w));
      Expr r = exterior_d(exterior_d(e, rs), rs);
      if (!r.is_zero()) g.failures.emplace_back(format_word(w, fmt), r);
    }
    report.groups.push_back(std::move(g));
  }

  // derivative anticommutator del_theta del_phi + q del_phi del_theta
  {
    ConsistencyGroup g;
    g.name = "derivative anticommutator on words of length <= 2";
    for (const Word& w : words_up_to(kCoordDiff, 2)) {
      ++g.checked;
      Expr e = rs.normalize(Expr::word(w));
      Expr r = apply_derivative(1, apply_derivative(2, e, rs), rs) +
               Laurent::q() * apply_derivative(2, apply_derivative(1, e, rs), rs);
      if (!r.is_zero()) g.failures.emplace_back(format_word(w, fmt), r);
    }
    report.groups.push_back(std::move(g));
  }

  return report;
}

}  // namespace qep
