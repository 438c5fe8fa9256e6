// Constraint systems for the ansatz coefficients and their exact solver:
// a case split on the single product equation followed by linear
// back-substitution over the Laurent ring.
#pragma once

#include <string>
#include <vector>

#include "qep/calculus.hpp"
#include "qep/laurent.hpp"

namespace qep {

// Polynomial in named unknowns with Laurent coefficients, multilinear of
// total degree <= 2: the key is the sorted list of unknown ids of a monomial.
class UnknownPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Laurent>;

  static UnknownPoly constant(Laurent c);
  static UnknownPoly unknown(int id);

  UnknownPoly& operator+=(const UnknownPoly& o);
  UnknownPoly& operator-=(const UnknownPoly& o);
  friend UnknownPoly operator+(UnknownPoly a, const UnknownPoly& b) {
    return a += b;
  }
  friend UnknownPoly operator-(UnknownPoly a, const UnknownPoly& b) {
    return a -= b;
  }
  friend UnknownPoly operator*(const UnknownPoly& a, const UnknownPoly& b);
  friend UnknownPoly operator*(const Laurent& c, const UnknownPoly& a);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  // Replace unknown `id` by a constant value.
  UnknownPoly assigned(int id, const Laurent& value) const;
  UnknownPoly substituted(const Laurent& pv, const Laurent& qv) const;

  bool operator==(const UnknownPoly&) const = default;

 private:
  void add_term(Monomial m, const Laurent& c);
  Terms terms_;
};

struct Equation {
  std::string name;
  UnknownPoly poly;  // required to equal zero
};

struct ConstraintSystem {
  std::vector<std::string> unknowns;  // index = unknown id
  std::vector<Equation> equations;

  ConstraintSystem substituted(const Laurent& pv, const Laurent& qv) const;
};

// Unknowns {A, B, F11, F12, F21, F22} with the nilpotency, exchange-product,
// d-of-relations and differential-exchange constraints.
ConstraintSystem build_f_constraints();

// Case-splits on the product equation and back-substitutes; returns the two
// branches (the f12 = 0 branch first).  Throws std::runtime_error("no
// solution") when no case admits a solution.
std::vector<AnsatzCoefficients> solve_f(const ConstraintSystem& cs);

// The eight derivative-differential constraints with the branch's F values
// substituted.
ConstraintSystem build_ab_constraints(const AnsatzCoefficients& branch);

DiffDerivCoefficients solve_ab(const AnsatzCoefficients& branch);

}  // namespace qep
