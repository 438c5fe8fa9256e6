// Covariance of the plane and calculus relations under the quantum-group
// coaction, computed in the tensor product of the quantum-group algebra with
// the plane algebra.  Quantum-group letters are even and commute with the
// plane letters, so a tensor term is a pair of words with one coefficient.
#pragma once

#include <string>
#include <vector>

#include "qep/calculus.hpp"
#include "qep/rmatrix.hpp"

namespace qep {

class TensorExpr {
 public:
  using Key = std::pair<QGWord, Word>;
  struct KeyLess {
    bool operator()(const Key& x, const Key& y) const {
      DegLex less;
      if (less(x.first, y.first)) return true;
      if (less(y.first, x.first)) return false;
      return less(x.second, y.second);
    }
  };
  using Terms = std::map<Key, Laurent, KeyLess>;

  TensorExpr() = default;
  static TensorExpr term(Laurent c, QGWord qw, Word pw);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add_term(Key k, const Laurent& c);
  TensorExpr& operator+=(const TensorExpr& o);
  friend TensorExpr operator+(TensorExpr a, const TensorExpr& b) {
    return a += b;
  }
  friend TensorExpr operator*(const TensorExpr& a, const TensorExpr& b);
  friend TensorExpr operator*(const Laurent& c, const TensorExpr& a);
  TensorExpr operator-() const { return Laurent{-1} * *this; }
  bool operator==(const TensorExpr& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

// Substitutes theta -> a (x) theta + b (x) phi, phi -> c (x) theta + d (x) phi
// and likewise for the differentials, expanding multilinearly without
// normalization.  Throws std::invalid_argument on derivative generators.
TensorExpr coact(const Expr& e);

// Oriented rewriting over the quantum-group letters with precedence
// a < b < c < d, built from the RTT relations.
class QGNormalizer {
 public:
  static QGNormalizer from_relations(const QuantumGroupRelations& rels);
  static QGNormalizer commutative();

  const RewriteSystem<QGen>& system() const { return sys_; }
  QGExpr normalize(const QGExpr& e) const { return sys_.normalize(e); }
  bool confluent() const { return confluent_; }
  // every source relation normalizes to zero under the oriented system
  bool relations_closed() const { return relations_closed_; }

 private:
  RewriteSystem<QGen> sys_;
  bool confluent_ = true;
  bool relations_closed_ = true;
};

// Normalizes both components of every term and collects the result.
TensorExpr tensor_normalize(const TensorExpr& t, const QGNormalizer& qg,
                            const RuleSet& rs);

struct CovarianceCheck {
  std::string relation;
  bool pass = false;
  TensorExpr residual;
};

struct CovarianceReport {
  CalcType type;
  std::vector<CovarianceCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks the coaction image of every plane and coordinate-differential
// relation of the given calculus against the quantum-group relations derived
// from its exchange matrix.
CovarianceReport check_covariance(CalcType type);
// Variant with an explicit normalizer (e.g. the commutative control).
CovarianceReport check_covariance(CalcType type, const QGNormalizer& qg);

}  // namespace qep
