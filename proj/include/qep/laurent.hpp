// Exact Laurent polynomials in the two central deformation parameters p, q
// with rational coefficients: the scalar ring of the whole engine.
#pragma once

#include <complex>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace qep {

class Laurent {
 public:
  // (p exponent, q exponent) -> rational coefficient; zero coefficients are
  // never stored, so equality is plain map comparison.
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, mpq_class>;

  Laurent() = default;
  Laurent(long n) : Laurent(mpq_class(n)) {}
  Laurent(int n) : Laurent(mpq_class(n)) {}
  explicit Laurent(const mpq_class& r);

  static Laurent monomial(const mpq_class& coeff, int p_exp, int q_exp);
  static Laurent p(int exp = 1) { return monomial(1, exp, 0); }
  static Laurent q(int exp = 1) { return monomial(1, 0, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Units of Q[p^{+-1}, q^{+-1}] are exactly the single-term elements.
  bool is_unit() const { return terms_.size() == 1; }
  Laurent inverse() const;  // throws std::domain_error unless is_unit()

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  // Substitute Laurent values for p and q.  Negative exponents require the
  // corresponding substitution value to be a unit.
  Laurent substituted(const Laurent& p_value, const Laurent& q_value) const;
  Laurent pow(int e) const;

  // Numeric substitution; throws std::domain_error at a zero point.
  std::complex<double> eval(std::complex<double> p_value,
                            std::complex<double> q_value) const;

  const Terms& terms() const { return terms_; }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

 private:
  void insert(const Exponents& e, const mpq_class& c);
  Terms terms_;
};

}  // namespace qep
