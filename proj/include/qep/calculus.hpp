// The two differential calculi on the deformed exterior plane as oriented
// rewriting systems, together with the exterior derivative, the partial
// derivative action and the consistency diagnostics.
#pragma once

#include <string>
#include <vector>

#include "qep/expr.hpp"
#include "qep/rewrite.hpp"

namespace qep {

enum class CalcType { type1 = 1, type2 = 2 };

inline int type_number(CalcType t) { return t == CalcType::type1 ? 1 : 2; }

// Coefficients of the coordinate-differential ansatz
//   theta*Theta = a Theta*theta,          theta*Phi = f11 Phi*theta + f12 Theta*phi,
//   phi*Phi    = b Phi*phi,               phi*Theta = f21 Theta*phi + f22 Phi*theta.
struct AnsatzCoefficients {
  Laurent a, b, f11, f12, f21, f22;
  bool operator==(const AnsatzCoefficients&) const = default;
};

// Coefficients of the derivative-differential ansatz
//   del_theta*Theta = a11 Theta*del_theta + a12 Phi*del_phi, ...
struct DiffDerivCoefficients {
  Laurent a11, a12, a21, a22, b11, b12, b21, b22;
  bool operator==(const DiffDerivCoefficients&) const = default;
};

// The closed-form solution branch shipped with each calculus type.
AnsatzCoefficients plane_coefficients(CalcType type);
DiffDerivCoefficients derivative_coefficients(CalcType type);

class RuleSet {
 public:
  RuleSet(CalcType type, RewriteSystem<Gen> system)
      : type_(type), system_(std::move(system)) {}

  CalcType type() const { return type_; }
  const RewriteSystem<Gen>& system() const { return system_; }
  Expr normalize(const Expr& e) const { return system_.normalize(e); }
  RuleSet substituted(const Laurent& pv, const Laurent& qv) const {
    return RuleSet(type_, system_.substituted(pv, qv));
  }

 private:
  CalcType type_;
  RewriteSystem<Gen> system_;
};

// Rule set with the relations in their displayed closed form.
RuleSet build_ruleset(CalcType type);

// Rule set assembled from ansatz coefficients; build_ruleset(t) must equal
// make_ruleset(t, plane_coefficients(t), derivative_coefficients(t)).
RuleSet make_ruleset(CalcType label, const AnsatzCoefficients& f,
                     const DiffDerivCoefficients& ab);

// Type II variant with the sign of the mixed Theta*phi term of the
// theta*Phi relation flipped.  Inconsistent: kept as a regression input for
// the consistency and confluence diagnostics.
RuleSet build_type2_flipped_sign_ruleset();

// Graded Leibniz derivative on the free algebra: d(theta) = Theta,
// d(phi) = Phi, d(Theta) = d(Phi) = 0, with the sign (-1)^{parity of prefix}.
// Throws std::invalid_argument on derivative generators.
Expr exterior_d(const Expr& e);
// Same, followed by normalization in the given calculus.
Expr exterior_d(const Expr& e, const RuleSet& rs);

// Action of del_theta (index 1) or del_phi (index 2) on an expression in the
// coordinates and differentials: normalize(del_i * f) with every term still
// ending in a derivative letter discarded.
Expr apply_derivative(int index, const Expr& f, const RuleSet& rs);

struct ConsistencyGroup {
  std::string name;
  std::size_t checked = 0;
  // (description of the failing identity, its nonzero normal form)
  std::vector<std::pair<std::string, Expr>> failures;
  bool pass() const { return failures.empty(); }
};

struct ConsistencyReport {
  std::vector<ConsistencyGroup> groups;
  bool all_pass() const {
    for (const auto& g : groups)
      if (!g.pass()) return false;
    return true;
  }
};

// Verifies, by normalization to zero:
//  - the products (theta*phi + p^-1 phi*theta) * {Theta, Phi};
//  - d applied to every coordinate/differential relation;
//  - d^2 = 0 on all words of length <= 3 in coordinates and differentials;
//  - (del_theta del_phi + q del_phi del_theta) f = 0 on words of length <= 2.
ConsistencyReport check_consistency(const RuleSet& rs);

// Normal-form basis pattern Theta^a Phi^b theta^c phi^d dth^e dph^f with the
// nilpotent exponents in {0, 1}.
bool is_normal_word(const Word& w);

}  // namespace qep
