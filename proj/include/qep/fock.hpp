// Explicit 4x4 matrix representations of the deformed fermionic oscillator
// pair on the two-mode Fock space, basis ordered |00>, |01>, |10>, |11>,
// and the numeric verification of their relations.
#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qep/calculus.hpp"

namespace qep {

struct CMatrix4 {
  using C = std::complex<double>;
  std::array<std::array<C, 4>, 4> m{};

  static CMatrix4 identity();
  static CMatrix4 diag(C a, C b, C c, C d);

  CMatrix4 operator*(const CMatrix4& o) const;
  CMatrix4 operator+(const CMatrix4& o) const;
  CMatrix4 operator-(const CMatrix4& o) const;
  friend CMatrix4 operator*(C s, const CMatrix4& o);
  CMatrix4 adjoint() const;
  double max_abs() const;
  bool exactly_zero() const;
  std::array<C, 4> diagonal() const;
};

struct OscillatorRep {
  CalcType type;
  std::complex<double> q_val;
  std::complex<double> p_val;  // always conj(q_val)
  CMatrix4 b1, b2;
};

// The adjoints b1^+, b2^+ are conjugate transposes, never stored.
// Throws std::invalid_argument for q = 0.
OscillatorRep build_rep(CalcType type, std::complex<double> q_val);

struct OscRelation {
  std::string name;
  double residual;  // max-entry norm of lhs - rhs
};

struct OscReport {
  double max_residual = 0.0;
  std::vector<OscRelation> per_relation;
};

// Residuals of the full relation list of the rep's type.
OscReport verify_osc_relations(const OscillatorRep& rep);

// (b1^+ b1, b2^+ b2); diagonal with nonnegative entries.
std::pair<CMatrix4, CMatrix4> number_operators(const OscillatorRep& rep);

// Evaluates every rule of the calculus that involves only coordinates and
// derivatives as an operator identity under theta -> b1^+, phi -> b2^+,
// del_theta -> b1, del_phi -> b2, with coefficients at (p, q) =
// (conj(q_val), q_val).  Ties the symbolic layer to the representation.
OscReport verify_rules_numerically(const RuleSet& rs, const OscillatorRep& rep);

}  // namespace qep
