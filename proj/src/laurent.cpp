#include "qep/laurent.hpp"

#include <stdexcept>

namespace qep {

Laurent::Laurent(const mpq_class& r) { *this = monomial(r, 0, 0); }

Laurent Laurent::monomial(const mpq_class& coeff, int p_exp, int q_exp) {
  Laurent out;
  if (coeff != 0) {
    // mpq arithmetic requires canonical form; guard external inputs here
    mpq_class c = coeff;
    c.canonicalize();
    out.terms_[{p_exp, q_exp}] = c;
  }
  return out;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
         terms_.begin()->second == 1;
}

Laurent Laurent::inverse() const {
  if (!is_unit()) throw std::domain_error("Laurent inverse: not a unit");
  const auto& [e, c] = *terms_.begin();
  mpq_class r;
  mpq_inv(r.get_mpq_t(), c.get_mpq_t());
  return monomial(r, -e.first, -e.second);
}

void Laurent::insert(const Exponents& e, const mpq_class& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) insert(e, mpq_class(-c));
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.insert({ea.first + eb.first, ea.second + eb.second},
                 mpq_class(ca * cb));
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Laurent Laurent::pow(int e) const {
  Laurent base = e < 0 ? inverse() : *this;
  Laurent out{1};
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

Laurent Laurent::substituted(const Laurent& p_value,
                             const Laurent& q_value) const {
  Laurent out;
  for (const auto& [e, c] : terms_)
    out += Laurent(c) * p_value.pow(e.first) * q_value.pow(e.second);
  return out;
}

std::complex<double> Laurent::eval(std::complex<double> p_value,
                                   std::complex<double> q_value) const {
  if (p_value == 0.0 || q_value == 0.0)
    throw std::domain_error("nonunital evaluation point");
  auto ipow = [](std::complex<double> b, int e) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return e < 0 ? 1.0 / r : r;
  };
  std::complex<double> out{0.0, 0.0};
  for (const auto& [e, c] : terms_)
    out += c.get_d() * ipow(p_value, e.first) * ipow(q_value, e.second);
  return out;
}

}  // namespace qep
