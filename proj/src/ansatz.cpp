#include "qep/ansatz.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qep {

UnknownPoly UnknownPoly::constant(Laurent c) {
  UnknownPoly out;
  out.add_term({}, c);
  return out;
}

UnknownPoly UnknownPoly::unknown(int id) {
  UnknownPoly out;
  out.add_term({id}, Laurent{1});
  return out;
}

void UnknownPoly::add_term(Monomial m, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UnknownPoly& UnknownPoly::operator+=(const UnknownPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UnknownPoly& UnknownPoly::operator-=(const UnknownPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UnknownPoly operator*(const UnknownPoly& a, const UnknownPoly& b) {
  UnknownPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      UnknownPoly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      if (m.size() > 2)
        throw std::logic_error("constraint degree above 2");
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

UnknownPoly operator*(const Laurent& c, const UnknownPoly& a) {
  return UnknownPoly::constant(c) * a;
}

UnknownPoly UnknownPoly::assigned(int id, const Laurent& value) const {
  UnknownPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Laurent coeff = c;
    for (int u : m) {
      if (u == id)
        coeff *= value;
      else
        rest.push_back(u);
    }
    out.add_term(std::move(rest), coeff);
  }
  return out;
}

UnknownPoly UnknownPoly::substituted(const Laurent& pv,
                                     const Laurent& qv) const {
  UnknownPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, c.substituted(pv, qv));
  return out;
}

ConstraintSystem ConstraintSystem::substituted(const Laurent& pv,
                                               const Laurent& qv) const {
  ConstraintSystem out;
  out.unknowns = unknowns;
  for (const auto& eq : equations)
    out.equations.push_back({eq.name, eq.poly.substituted(pv, qv)});
  return out;
}

namespace {

enum FId { uA = 0, uB = 1, uF11 = 2, uF12 = 3, uF21 = 4, uF22 = 5 };
enum AbId { uA11 = 0, uA12, uA21, uA22, uB11, uB12, uB21, uB22 };

UnknownPoly k(const Laurent& c) { return UnknownPoly::constant(c); }
UnknownPoly x(int id) { return UnknownPoly::unknown(id); }

const Laurent one{1};

struct Assignment {
  std::vector<std::optional<Laurent>> values;

  explicit Assignment(std::size_t n) : values(n) {}

  UnknownPoly reduce(const UnknownPoly& p) const {
    UnknownPoly out = p;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i]) out = out.assigned(static_cast<int>(i), *values[i]);
    return out;
  }
};

// Repeatedly solve equations that have become linear in a single unknown.
// Returns false when some equation reduces to a nonzero constant.
bool eliminate(const ConstraintSystem& cs, Assignment& asg) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& eq : cs.equations) {
      UnknownPoly r = asg.reduce(eq.poly);
      if (r.is_zero()) continue;
      if (r.terms().size() == 1 && r.terms().begin()->first.empty())
        return false;  // nonzero constant: inconsistent
      // linear in exactly one unknown?
      std::optional<int> unknown;
      Laurent coeff, rest;
      bool solvable = true;
      for (const auto& [m, c] : r.terms()) {
        if (m.empty()) {
          rest = c;
        } else if (m.size() == 1 && (!unknown || *unknown == m[0])) {
          unknown = m[0];
          coeff += c;
        } else {
          solvable = false;
          break;
        }
      }
      if (!solvable || !unknown) continue;
      if (!coeff.is_unit())
        throw std::runtime_error(
            "solver requires division by a non-unit coefficient");
      asg.values[*unknown] = -(coeff.inverse() * rest);
      progress = true;
    }
  }
  return true;
}

bool verified(const ConstraintSystem& cs, const Assignment& asg) {
  for (const auto& eq : cs.equations)
    if (!asg.reduce(eq.poly).is_zero()) return false;
  return true;
}

std::optional<std::vector<Laurent>> solve_case(const ConstraintSystem& cs,
                                               int zero_unknown) {
  Assignment asg(cs.unknowns.size());
  if (zero_unknown >= 0) asg.values[zero_unknown] = Laurent{};
  if (!eliminate(cs, asg)) return std::nullopt;
  for (const auto& v : asg.values)
    if (!v) return std::nullopt;  // underdetermined
  if (!verified(cs, asg)) return std::nullopt;
  std::vector<Laurent> out;
  for (const auto& v : asg.values) out.push_back(*v);
  return out;
}

}  // namespace

ConstraintSystem build_f_constraints() {
  ConstraintSystem cs;
  cs.unknowns = {"A", "B", "F11", "F12", "F21", "F22"};
  const Laurent P = Laurent::p(), Q = Laurent::q();
  cs.equations = {
      {"A = 1", x(uA) - k(one)},
      {"B = 1", x(uB) - k(one)},
      {"F22 + p F11 = 1", x(uF22) + P * x(uF11) - k(one)},
      {"F21 + p F12 = p", x(uF21) + P * x(uF12) - k(P)},
      {"F12 F22 = 0", x(uF12) * x(uF22)},
      {"F11 F21 = 1 - F12 - F22",
       x(uF11) * x(uF21) + x(uF12) + x(uF22) - k(one)},
      {"F11 = q (1 - F12)", x(uF11) - k(Q) + Q * x(uF12)},
      {"F21 = q^-1 (1 - F22)",
       x(uF21) - k(Q.inverse()) + Q.inverse() * x(uF22)},
  };
  return cs;
}

std::vector<AnsatzCoefficients> solve_f(const ConstraintSystem& cs) {
  // locate the product equation x*y = 0 to split on
  std::optional<std::pair<int, int>> split;
  for (const auto& eq : cs.equations) {
    if (eq.poly.terms().size() != 1) continue;
    const auto& [m, c] = *eq.poly.terms().begin();
    if (m.size() == 2 && m[0] != m[1] && c.is_unit()) {
      split = {m[0], m[1]};
      break;
    }
  }
  if (!split) throw std::runtime_error("no solution");

  std::vector<AnsatzCoefficients> branches;
  for (int z : {split->first, split->second}) {
    auto sol = solve_case(cs, z);
    if (!sol) continue;
    AnsatzCoefficients b{(*sol)[uA],   (*sol)[uB],   (*sol)[uF11],
                         (*sol)[uF12], (*sol)[uF21], (*sol)[uF22]};
    if (std::find(branches.begin(), branches.end(), b) == branches.end())
      branches.push_back(std::move(b));
  }
  if (branches.empty()) throw std::runtime_error("no solution");
  return branches;
}

ConstraintSystem build_ab_constraints(const AnsatzCoefficients& f) {
  ConstraintSystem cs;
  cs.unknowns = {"A11", "A12", "A21", "A22", "B11", "B12", "B21", "B22"};
  cs.equations = {
      {"A11 = 1", x(uA11) - k(one)},
      {"A22 = 0", x(uA22)},
      {"B21 = 1", x(uB21) - k(one)},
      {"B12 = 0", x(uB12)},
      {"F11 A21 + F12 A12 = 1", f.f11 * x(uA21) + f.f12 * x(uA12) - k(one)},
      {"F21 A12 + F22 A21 = 0", f.f21 * x(uA12) + f.f22 * x(uA21)},
      {"F21 B11 + F22 B22 = 1", f.f21 * x(uB11) + f.f22 * x(uB22) - k(one)},
      {"F11 B22 + F12 B11 = 0", f.f11 * x(uB22) + f.f12 * x(uB11)},
  };
  return cs;
}

DiffDerivCoefficients solve_ab(const AnsatzCoefficients& branch) {
  ConstraintSystem cs = build_ab_constraints(branch);
  auto sol = solve_case(cs, -1);
  if (!sol) throw std::runtime_error("no solution");
  return {(*sol)[uA11], (*sol)[uA12], (*sol)[uA21], (*sol)[uA22],
          (*sol)[uB11], (*sol)[uB12], (*sol)[uB21], (*sol)[uB22]};
}

}  // namespace qep
