#include "qep/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "qep/printer.hpp"

namespace qep {

CMatrix4 CMatrix4::identity() { return diag(1, 1, 1, 1); }

CMatrix4 CMatrix4::diag(C a, C b, C c, C d) {
  CMatrix4 out;
  out.m[0][0] = a;
  out.m[1][1] = b;
  out.m[2][2] = c;
  out.m[3][3] = d;
  return out;
}

CMatrix4 CMatrix4::operator*(const CMatrix4& o) const {
  CMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out.m[i][j] += m[i][k] * o.m[k][j];
  return out;
}

CMatrix4 CMatrix4::operator+(const CMatrix4& o) const {
  CMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = m[i][j] + o.m[i][j];
  return out;
}

CMatrix4 CMatrix4::operator-(const CMatrix4& o) const {
  CMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = m[i][j] - o.m[i][j];
  return out;
}

CMatrix4 operator*(CMatrix4::C s, const CMatrix4& o) {
  CMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = s * o.m[i][j];
  return out;
}

CMatrix4 CMatrix4::adjoint() const {
  CMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = std::conj(m[j][i]);
  return out;
}

double CMatrix4::max_abs() const {
  double out = 0.0;
  for (const auto& row : m)
    for (C v : row) out = std::max(out, std::abs(v));
  return out;
}

bool CMatrix4::exactly_zero() const {
  for (const auto& row : m)
    for (C v : row)
      if (v != C{0.0, 0.0}) return false;
  return true;
}

std::array<CMatrix4::C, 4> CMatrix4::diagonal() const {
  return {m[0][0], m[1][1], m[2][2], m[3][3]};
}

namespace {

using C = CMatrix4::C;
using M2 = std::array<std::array<C, 2>, 2>;

// first factor = mode 1, second = mode 2; |n1 n2> -> index 2 n1 + n2
CMatrix4 kron(const M2& a, const M2& b) {
  CMatrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return out;
}

const M2 kLower = {{{C{0}, C{1}}, {C{0}, C{0}}}};  // |0><1|
const M2 kId2 = {{{C{1}, C{0}}, {C{0}, C{1}}}};

M2 diag2(C a, C b) { return {{{a, C{0}}, {C{0}, b}}}; }

}  // namespace

OscillatorRep build_rep(CalcType type, std::complex<double> q_val) {
  if (q_val == C{0.0, 0.0})
    throw std::invalid_argument("deformation parameter must be nonzero");
  OscillatorRep rep;
  rep.type = type;
  rep.q_val = q_val;
  rep.p_val = std::conj(q_val);
  if (type == CalcType::type1) {
    rep.b1 = kron(kLower, kId2);
    rep.b2 = kron(diag2(1, -q_val), kLower);
  } else {
    rep.b2 = kron(kId2, kLower);
    rep.b1 = kron(kLower, diag2(-q_val / std::abs(q_val),
                                C{1.0 / std::abs(q_val)}));
  }
  return rep;
}

OscReport verify_osc_relations(const OscillatorRep& rep) {
  const CMatrix4 &b1 = rep.b1, &b2 = rep.b2;
  const CMatrix4 b1d = b1.adjoint(), b2d = b2.adjoint();
  const CMatrix4 id = CMatrix4::identity();
  const C p = rep.p_val, q = rep.q_val;

  std::vector<std::pair<std::string, CMatrix4>> rels = {
      {"b1 b2 + q b2 b1", b1 * b2 + q * (b2 * b1)},
      {"b1^2", b1 * b1},
      {"b1+^2", b1d * b1d},
      {"b1+ b2+ + p^-1 b2+ b1+", b1d * b2d + (C{1} / p) * (b2d * b1d)},
      {"b2^2", b2 * b2},
      {"b2+^2", b2d * b2d},
  };
  if (rep.type == CalcType::type1) {
    rels.emplace_back("b1 b2+ + p b2+ b1", b1 * b2d + p * (b2d * b1));
    rels.emplace_back("b2 b1+ + q b1+ b2", b2 * b1d + q * (b1d * b2));
    rels.emplace_back("{b1, b1+} - 1", b1 * b1d + b1d * b1 - id);
    rels.emplace_back("{b2, b2+} - 1 - (pq - 1) b1+ b1",
                      b2 * b2d + b2d * b2 - id - (p * q - C{1}) * (b1d * b1));
  } else {
    rels.emplace_back("b1 b2+ + q^-1 b2+ b1",
                      b1 * b2d + (C{1} / q) * (b2d * b1));
    rels.emplace_back("b2 b1+ + p^-1 b1+ b2",
                      b2 * b1d + (C{1} / p) * (b1d * b2));
    rels.emplace_back(
        "{b1, b1+} - 1 - ((pq)^-1 - 1) b2+ b2",
        b1 * b1d + b1d * b1 - id - (C{1} / (p * q) - C{1}) * (b2d * b2));
    rels.emplace_back("{b2, b2+} - 1", b2 * b2d + b2d * b2 - id);
  }

  OscReport report;
  for (auto& [nm, residual] : rels) {
    double r = residual.max_abs();
    report.per_relation.push_back({nm, r});
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

std::pair<CMatrix4, CMatrix4> number_operators(const OscillatorRep& rep) {
  return {rep.b1.adjoint() * rep.b1, rep.b2.adjoint() * rep.b2};
}

OscReport verify_rules_numerically(const RuleSet& rs,
                                   const OscillatorRep& rep) {
  auto op = [&](Gen g) -> CMatrix4 {
    switch (g) {
      case Gen::theta: return rep.b1.adjoint();
      case Gen::phi: return rep.b2.adjoint();
      case Gen::del_theta: return rep.b1;
      case Gen::del_phi: return rep.b2;
      default:
        throw std::invalid_argument("no operator image for differentials");
    }
  };
  auto word_op = [&](const Word& w) {
    CMatrix4 out = CMatrix4::identity();
    for (Gen g : w) out = out * op(g);
    return out;
  };

  OscReport report;
  for (const auto& [lhs, rhs] : rs.system().rules()) {
    if (kind(lhs.first) == GenKind::differential ||
        kind(lhs.second) == GenKind::differential)
      continue;
    CMatrix4 residual = word_op({lhs.first, lhs.second});
    for (const auto& [w, c] : rhs.terms())
      residual = residual - c.eval(rep.p_val, rep.q_val) * word_op(w);
    double r = residual.max_abs();
    report.per_relation.push_back(
        {std::string(name(lhs.first)) + "*" + std::string(name(lhs.second)),
         r});
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

}  // namespace qep
