#include "qep/rmatrix.hpp"

#include <stdexcept>

#include "qep/printer.hpp"

namespace qep {

RMatrix4 RMatrix4::identity() {
  RMatrix4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = Laurent{1};
  return m;
}

RMatrix4 RMatrix4::operator*(const RMatrix4& o) const {
  RMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out.at(i, j) += at(i, k) * o.at(k, j);
  return out;
}

RMatrix4 RMatrix4::operator-(const RMatrix4& o) const {
  RMatrix4 out;
  for (int i = 0; i < 16; ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

RMatrix4 RMatrix4::operator+(const RMatrix4& o) const {
  RMatrix4 out;
  for (int i = 0; i < 16; ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

RMatrix4 operator*(const Laurent& c, const RMatrix4& m) {
  RMatrix4 out;
  for (int i = 0; i < 16; ++i) out.e_[i] = c * m.e_[i];
  return out;
}

bool RMatrix4::is_zero() const {
  for (const Laurent& c : e_)
    if (!c.is_zero()) return false;
  return true;
}

RMatrix4 RMatrix4::transpose() const {
  RMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.at(i, j) = at(j, i);
  return out;
}

RMatrix4 RMatrix4::substituted(const Laurent& pv, const Laurent& qv) const {
  RMatrix4 out;
  for (int i = 0; i < 16; ++i) out.e_[i] = e_[i].substituted(pv, qv);
  return out;
}

namespace {

Laurent det3(const RMatrix4& m, const std::array<int, 3>& rows,
             const std::array<int, 3>& cols) {
  Laurent out;
  out += m.at(rows[0], cols[0]) *
         (m.at(rows[1], cols[1]) * m.at(rows[2], cols[2]) -
          m.at(rows[1], cols[2]) * m.at(rows[2], cols[1]));
  out -= m.at(rows[0], cols[1]) *
         (m.at(rows[1], cols[0]) * m.at(rows[2], cols[2]) -
          m.at(rows[1], cols[2]) * m.at(rows[2], cols[0]));
  out += m.at(rows[0], cols[2]) *
         (m.at(rows[1], cols[0]) * m.at(rows[2], cols[1]) -
          m.at(rows[1], cols[1]) * m.at(rows[2], cols[0]));
  return out;
}

std::array<int, 3> others(int skip) {
  std::array<int, 3> out{};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != skip) out[k++] = i;
  return out;
}

}  // namespace

Laurent RMatrix4::det() const {
  Laurent out;
  for (int j = 0; j < 4; ++j) {
    Laurent minor = det3(*this, others(0), others(j));
    Laurent term = at(0, j) * minor;
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

RMatrix4 RMatrix4::inverse() const {
  Laurent d = det();
  if (!d.is_unit())
    throw std::domain_error("matrix inverse requires a unit determinant");
  Laurent dinv = d.inverse();
  RMatrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Laurent cof = det3(*this, others(j), others(i));
      out.at(i, j) = ((i + j) % 2 == 0) ? dinv * cof : -(dinv * cof);
    }
  return out;
}

RMatrix4 r_matrix(CalcType type) {
  // rows/cols 11, 12, 21, 22; central block carries (f21 f22 / f12 f11)
  const AnsatzCoefficients f = plane_coefficients(type);
  RMatrix4 m;
  m.at(0, 0) = Laurent{1};
  m.at(3, 3) = Laurent{1};
  m.at(1, 1) = f.f21;
  m.at(1, 2) = f.f22;
  m.at(2, 1) = f.f12;
  m.at(2, 2) = f.f11;
  return m;
}

RMatrix4 hat(const RMatrix4& r) {
  RMatrix4 out;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) out.at(i, j, k, l) = r.at(j, i, k, l);
  return out;
}

namespace {

// 8x8 operators on the threefold tensor space, stored row-major.
struct Mat8 {
  std::array<Laurent, 64> e;
  Laurent& at(int r, int c) { return e[r * 8 + c]; }
  const Laurent& at(int r, int c) const { return e[r * 8 + c]; }

  Mat8 operator*(const Mat8& o) const {
    Mat8 out;
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < 8; ++j)
          out.at(i, j) += at(i, k) * o.at(k, j);
      }
    return out;
  }
  Mat8 operator-(const Mat8& o) const {
    Mat8 out;
    for (int i = 0; i < 64; ++i) out.e[i] = e[i] - o.e[i];
    return out;
  }
};

enum class Slot { one_two, two_three, one_three };

Mat8 embed(const RMatrix4& r, Slot slot) {
  Mat8 out;
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int b = 0; b < 2; ++b)
            for (int l = 0; l < 2; ++l) {
              int row = 4 * i + 2 * a + j, col = 4 * k + 2 * b + l;
              switch (slot) {
                case Slot::one_two:
                  if (j == l) out.at(row, col) = r.at(2 * i + a, 2 * k + b);
                  break;
                case Slot::two_three:
                  if (i == k) out.at(row, col) = r.at(2 * a + j, 2 * b + l);
                  break;
                case Slot::one_three:
                  if (a == b) out.at(row, col) = r.at(2 * i + j, 2 * k + l);
                  break;
              }
            }
  return out;
}

std::vector<std::tuple<int, int, Laurent>> nonzero_entries(const Mat8& m) {
  std::vector<std::tuple<int, int, Laurent>> out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!m.at(i, j).is_zero()) out.emplace_back(i, j, m.at(i, j));
  return out;
}

}  // namespace

YbeReport ybe_check(const RMatrix4& r) {
  YbeReport report;
  {
    Mat8 r12 = embed(r, Slot::one_two);
    Mat8 r13 = embed(r, Slot::one_three);
    Mat8 r23 = embed(r, Slot::two_three);
    report.plain_residuals =
        nonzero_entries((r12 * r13) * r23 - (r23 * r13) * r12);
    report.plain = report.plain_residuals.empty();
  }
  {
    RMatrix4 h = hat(r);
    Mat8 h12 = embed(h, Slot::one_two);
    Mat8 h23 = embed(h, Slot::two_three);
    report.braid_residuals =
        nonzero_entries((h12 * h23) * h12 - (h23 * h12) * h23);
    report.braid = report.braid_residuals.empty();
  }
  return report;
}

namespace {

QGen t_entry(int i, int k) {
  // T = [[a, b], [c, d]] with indices in {1, 2}
  if (i == 1) return k == 1 ? QGen::a : QGen::b;
  return k == 1 ? QGen::c : QGen::d;
}

// r1 == unit * r2?
bool unit_multiple(const QGExpr& r1, const QGExpr& r2) {
  if (r1.terms().size() != r2.terms().size()) return false;
  auto it1 = r1.terms().begin();
  auto it2 = r2.terms().begin();
  // ratio of the leading coefficients; always a unit once both leading
  // monomials are isolated
  const Laurent& c1 = it1->second;
  const Laurent& c2 = it2->second;
  if (it1->first != it2->first) return false;
  const auto& [e1, a1] = *c1.terms().begin();
  const auto& [e2, a2] = *c2.terms().begin();
  Laurent ratio = Laurent::monomial(a1 / a2, e1.first - e2.first,
                                    e1.second - e2.second);
  for (; it1 != r1.terms().end(); ++it1, ++it2) {
    if (it1->first != it2->first) return false;
    if (!(it1->second == ratio * it2->second)) return false;
  }
  return true;
}

}  // namespace

QuantumGroupRelations rtt_relations(const RMatrix4& rhat) {
  // lhs^{IJ} = sum_K rhat^{IK} (T1 T2)^{KJ}, rhs with factors swapped, where
  // (T1 T2)^{(ij)(kl)} = T^i_k T^j_l as a two-letter word.
  auto t1t2 = [&](int row, int col) {
    int i = row / 2 + 1, j = row % 2 + 1;
    int k = col / 2 + 1, l = col % 2 + 1;
    return QGExpr::word({t_entry(i, k), t_entry(j, l)});
  };
  QuantumGroupRelations out;
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) {
      QGExpr rel;
      for (int k = 0; k < 4; ++k) {
        rel += rhat.at(row, k) * t1t2(k, col);
        rel -= rhat.at(k, col) * t1t2(row, k);
      }
      if (rel.is_zero()) continue;
      bool dup = false;
      for (const QGExpr& seen : out.relations)
        if (unit_multiple(rel, seen)) {
          dup = true;
          break;
        }
      if (!dup) out.relations.push_back(std::move(rel));
    }
  return out;
}

bool transpose_inverse_check(bool at_equal_parameters) {
  RMatrix4 r1 = r_matrix(CalcType::type1);
  RMatrix4 r2 = r_matrix(CalcType::type2);
  if (at_equal_parameters) {
    const Laurent q = Laurent::q();
    r1 = r1.substituted(q, q);
    r2 = r2.substituted(q, q);
  }
  return r1 == r2.inverse().transpose();
}

namespace {

Gen coord(int i) { return i == 1 ? Gen::theta : Gen::phi; }
Gen diff(int i) { return i == 1 ? Gen::diff_theta : Gen::diff_phi; }
Gen deriv(int i) { return i == 1 ? Gen::del_theta : Gen::del_phi; }

void compare_rule(RFormFamily& fam, const RuleSet& rs, Gen x, Gen y,
                  const Expr& expected_rhs) {
  ++fam.checked;
  const Expr* actual = rs.system().rule(x, y);
  if (!actual || !(*actual == expected_rhs)) {
    FormatOptions fo;
    fam.mismatches.push_back(
        std::string(name(x)) + "*" + std::string(name(y)) + ": expected " +
        format_expr(expected_rhs, fo) + ", rule set has " +
        (actual ? format_expr(*actual, fo) : std::string("<none>")));
  }
}

}  // namespace

RFormReport check_r_form_calculus(CalcType type) {
  RFormReport report;
  report.type = type;
  const RuleSet rs = build_ruleset(type);
  const RMatrix4 rh = hat(r_matrix(type));
  const RMatrix4 rh_inv = rh.inverse();

  // family: theta^i Theta^j = rhat^{ij}_{kl} Theta^k theta^l
  report.coordinate_differential.name = "coordinate-differential";
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Expr rhs;
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          rhs += Expr::term(rh.at(i, j, k, l), {diff(k), coord(l)});
      compare_rule(report.coordinate_differential, rs, coord(i), diff(j), rhs);
    }

  // family: del_i theta^j = delta^j_i - rhat^{jk}_{il} theta^l del_k
  report.derivative_coordinate.name = "derivative-coordinate";
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Expr rhs = i == j ? Expr::scalar(Laurent{1}) : Expr{};
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          rhs -= Expr::term(rh.at(j, k, i, l), {coord(l), deriv(k)});
      compare_rule(report.derivative_coordinate, rs, deriv(i), coord(j), rhs);
    }

  // family: del_i Theta^j = (rhat^-1)^{jk}_{il} Theta^l del_k
  report.derivative_differential.name = "derivative-differential";
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Expr rhs;
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l)
          rhs += Expr::term(rh_inv.at(j, k, i, l), {diff(l), deriv(k)});
      compare_rule(report.derivative_differential, rs, deriv(i), diff(j), rhs);
    }

  // scaled families: the scalar factor is one of -(pq)^-1 and -pq, resolved
  // by requiring every relation of the family to normalize to zero.
  const Laurent pq = Laurent::p() * Laurent::q();
  const std::vector<Laurent> candidates = {-pq.inverse(), -pq};

  auto resolve = [&](RFormFamily& fam, auto relation) {
    std::vector<Laurent> passing;
    for (const Laurent& s : candidates) {
      bool ok = true;
      for (int i = 1; i <= 2 && ok; ++i)
        for (int j = 1; j <= 2 && ok; ++j)
          ok = rs.normalize(relation(s, i, j)).is_zero();
      if (ok) passing.push_back(s);
    }
    fam.checked = 4 * candidates.size();
    if (passing.size() != 1) {
      fam.mismatches.push_back(passing.empty()
                                   ? "no candidate scaling closes the family"
                                   : "scaling is not uniquely determined");
      return std::optional<Laurent>{};
    }
    return std::optional<Laurent>{passing.front()};
  };

  report.coordinate_coordinate.name = "coordinate-coordinate";
  report.coordinate_scaling = resolve(
      report.coordinate_coordinate, [&](const Laurent& s, int i, int j) {
        Expr rel = Expr::word({coord(i), coord(j)});
        for (int k = 1; k <= 2; ++k)
          for (int l = 1; l <= 2; ++l)
            rel -= Expr::term(s * rh.at(i, j, k, l), {coord(k), coord(l)});
        return rel;
      });

  report.derivative_derivative.name = "derivative-derivative";
  report.derivative_scaling = resolve(
      report.derivative_derivative, [&](const Laurent& s, int i, int j) {
        Expr rel = Expr::word({deriv(i), deriv(j)});
        for (int k = 1; k <= 2; ++k)
          for (int l = 1; l <= 2; ++l)
            rel -= Expr::term(s * rh.at(k, l, j, i), {deriv(l), deriv(k)});
        return rel;
      });

  if (report.coordinate_scaling)
    report.nilpotency_forced_generically =
        !(Laurent{1} - *report.coordinate_scaling).is_zero();
  return report;
}

}  // namespace qep
