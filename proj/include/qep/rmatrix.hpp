// 4x4 matrices over the Laurent ring with composite tensor indices
// (11, 12, 21, 22), the exchange matrices of the two calculi, and the
// Yang-Baxter / RTT / exchange-form checks built on them.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qep/calculus.hpp"
#include "qep/expr.hpp"

namespace qep {

class RMatrix4 {
 public:
  RMatrix4() = default;
  static RMatrix4 identity();

  // composite indices: row = (ij), col = (kl), each in {0..3} ordered
  // 11, 12, 21, 22.
  Laurent& at(int row, int col) { return e_[row * 4 + col]; }
  const Laurent& at(int row, int col) const { return e_[row * 4 + col]; }

  // tensor indices in {1, 2}: entry R^{ij}_{kl}
  Laurent& at(int i, int j, int k, int l) {
    return at(idx(i, j), idx(k, l));
  }
  const Laurent& at(int i, int j, int k, int l) const {
    return at(idx(i, j), idx(k, l));
  }
  static int idx(int i, int j) { return 2 * (i - 1) + (j - 1); }

  RMatrix4 operator*(const RMatrix4& o) const;
  RMatrix4 operator-(const RMatrix4& o) const;
  RMatrix4 operator+(const RMatrix4& o) const;
  friend RMatrix4 operator*(const Laurent& c, const RMatrix4& m);
  bool operator==(const RMatrix4& o) const { return e_ == o.e_; }
  bool is_zero() const;

  RMatrix4 transpose() const;
  RMatrix4 substituted(const Laurent& pv, const Laurent& qv) const;
  Laurent det() const;
  // Cofactor inverse; requires det() to be a unit of the Laurent ring.
  RMatrix4 inverse() const;

 private:
  std::array<Laurent, 16> e_;
};

// The exchange matrix of each calculus type.
RMatrix4 r_matrix(CalcType type);

// Row-index swap hatR^{ij}_{kl} = R^{ji}_{kl}; an involution.
RMatrix4 hat(const RMatrix4& r);

struct YbeReport {
  bool plain = false;  // R12 R13 R23 = R23 R13 R12
  bool braid = false;  // hatR12 hatR23 hatR12 = hatR23 hatR12 hatR23
  // nonzero residual entries (row, col, value) of each side difference
  std::vector<std::tuple<int, int, Laurent>> plain_residuals;
  std::vector<std::tuple<int, int, Laurent>> braid_residuals;
  bool pass() const { return plain && braid; }
};

YbeReport ybe_check(const RMatrix4& r);

struct QuantumGroupRelations {
  // quadratic relations in a, b, c, d, each required to equal zero;
  // deduplicated up to unit scalar multiples
  std::vector<QGExpr> relations;
};

// Entry equations of hatR T1 T2 = T1 T2 hatR with T = [[a, b], [c, d]].
QuantumGroupRelations rtt_relations(const RMatrix4& rhat);

// Whether the two exchange matrices coincide with each other's
// inverse-transpose.  With at_equal_parameters the comparison is made after
// substituting q for p.
bool transpose_inverse_check(bool at_equal_parameters = true);

struct RFormFamily {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

struct RFormReport {
  CalcType type;
  // rule families compared literally against the calculus rule set
  RFormFamily coordinate_differential;
  RFormFamily derivative_coordinate;
  RFormFamily derivative_differential;
  // relation families with a scalar factor resolved from {-(pq)^-1, -pq}
  RFormFamily coordinate_coordinate;
  RFormFamily derivative_derivative;
  std::optional<Laurent> coordinate_scaling;
  std::optional<Laurent> derivative_scaling;
  // the diagonal coordinate relations force nilpotency iff 1 - scaling != 0
  bool nilpotency_forced_generically = false;
  bool pass() const {
    return coordinate_differential.pass() && derivative_coordinate.pass() &&
           derivative_differential.pass() && coordinate_coordinate.pass() &&
           derivative_derivative.pass() && coordinate_scaling &&
           derivative_scaling;
  }
};

// Verifies that the exchange-matrix formulation reproduces the rule set of
// the given calculus family by family, resolving the scalar factor of the
// coordinate-coordinate and derivative-derivative families empirically.
RFormReport check_r_form_calculus(CalcType type);

}  // namespace qep
