// Elements of the free algebra over a letter alphabet: finite formal sums of
// (Laurent coefficient x word).  No relations are applied here; products
// simply concatenate words.
#pragma once

#include <initializer_list>
#include <map>

#include "qep/generators.hpp"
#include "qep/laurent.hpp"

namespace qep {

template <class L>
class FreeExpr {
 public:
  using WordT = std::vector<L>;
  using Terms = std::map<WordT, Laurent, DegLex>;

  FreeExpr() = default;

  static FreeExpr scalar(Laurent c) {
    FreeExpr e;
    if (!c.is_zero()) e.terms_.emplace(WordT{}, std::move(c));
    return e;
  }
  static FreeExpr letter(L g) { return word(WordT{g}); }
  static FreeExpr word(WordT w) {
    FreeExpr e;
    e.terms_.emplace(std::move(w), Laurent{1});
    return e;
  }
  static FreeExpr term(Laurent c, WordT w) {
    FreeExpr e;
    e.add_term(std::move(w), c);
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(WordT w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(std::move(w), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  FreeExpr& operator+=(const FreeExpr& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreeExpr& operator-=(const FreeExpr& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend FreeExpr operator+(FreeExpr a, const FreeExpr& b) { return a += b; }
  friend FreeExpr operator-(FreeExpr a, const FreeExpr& b) { return a -= b; }

  friend FreeExpr operator*(const FreeExpr& a, const FreeExpr& b) {
    FreeExpr out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        WordT w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(std::move(w), ca * cb);
      }
    return out;
  }
  FreeExpr& operator*=(const FreeExpr& o) { return *this = *this * o; }

  friend FreeExpr operator*(const Laurent& c, const FreeExpr& a) {
    FreeExpr out;
    for (const auto& [w, cc] : a.terms_) out.add_term(w, c * cc);
    return out;
  }
  FreeExpr operator-() const { return Laurent{-1} * *this; }

  bool operator==(const FreeExpr& o) const { return terms_ == o.terms_; }

  // Coefficient substitution term by term.
  FreeExpr substituted(const Laurent& p_value, const Laurent& q_value) const {
    FreeExpr out;
    for (const auto& [w, c] : terms_)
      out.add_term(w, c.substituted(p_value, q_value));
    return out;
  }

 private:
  Terms terms_;
};

using Expr = FreeExpr<Gen>;
using QGExpr = FreeExpr<QGen>;

inline Expr expr_sum(const Expr& a, const Expr& b) { return a + b; }
inline Expr expr_product(const Expr& a, const Expr& b) { return a * b; }

}  // namespace qep
