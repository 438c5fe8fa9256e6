#include "qep/printer.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace qep {

namespace {

// Print order for coefficient monomials: total absolute degree first, then
// the exponent pair, so constants print before deformation terms
// ("1 - p*q", "1 - p^-1*q^-1").
using Mono = std::pair<Laurent::Exponents, mpq_class>;

std::vector<Mono> ordered_monomials(const Laurent& c) {
  std::vector<Mono> out(c.terms().begin(), c.terms().end());
  auto key = [](const Mono& m) {
    return std::make_tuple(std::abs(m.first.first) + std::abs(m.first.second),
                           m.first.first, m.first.second);
  };
  std::sort(out.begin(), out.end(),
            [&](const Mono& x, const Mono& y) { return key(x) < key(y); });
  return out;
}

std::string rational_str(const mpq_class& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// One monomial without its sign, e.g. "3/2*p^2*q^-1" or "1".
std::string abs_monomial_str(const Mono& m) {
  mpq_class a = m.second < 0 ? mpq_class(-m.second) : m.second;
  std::vector<std::string> factors;
  if (a != 1 || (m.first.first == 0 && m.first.second == 0))
    factors.push_back(rational_str(a));
  auto power = [&](const char* sym, int e) {
    if (e == 0) return;
    factors.push_back(e == 1 ? std::string(sym)
                             : std::string(sym) + "^" + std::to_string(e));
  };
  power("p", m.first.first);
  power("q", m.first.second);
  std::string out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [negative, body] = parts[i];
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace

std::string format_laurent(const Laurent& c) {
  if (c.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> parts;
  for (const Mono& m : ordered_monomials(c))
    parts.emplace_back(m.second < 0, abs_monomial_str(m));
  return join_signed(parts);
}

std::string format_word(const Word& w, FormatOptions opts) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += opts.unicode ? unicode_name(w[i]) : name(w[i]);
  }
  return out;
}

namespace {

template <class L, class NameFn>
std::string format_free_expr(const FreeExpr<L>& e, NameFn word_str) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [w, c] : e.terms()) {
    if (w.empty()) {
      // bare coefficient term: fold its own sign structure into the sum
      for (const Mono& m : ordered_monomials(c))
        parts.emplace_back(m.second < 0, abs_monomial_str(m));
      continue;
    }
    std::string ws = word_str(w);
    if (c.is_unit()) {
      const Mono m = *c.terms().begin();
      bool neg = m.second < 0;
      mpq_class a = neg ? mpq_class(-m.second) : m.second;
      if (a == 1 && m.first.first == 0 && m.first.second == 0)
        parts.emplace_back(neg, ws);
      else
        parts.emplace_back(neg, abs_monomial_str(m) + "*" + ws);
    } else {
      parts.emplace_back(false, "(" + format_laurent(c) + ")*" + ws);
    }
  }
  return join_signed(parts);
}

}  // namespace

std::string format_expr(const Expr& e, FormatOptions opts) {
  return format_free_expr(e, [&](const Word& w) { return format_word(w, opts); });
}

std::string format_qg_expr(const QGExpr& e) {
  return format_free_expr(e, [](const QGWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += "*";
      out += name(w[i]);
    }
    return out;
  });
}

nlohmann::json laurent_to_json(const Laurent& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Mono& m : ordered_monomials(c))
    terms.push_back({{"p_exp", m.first.first},
                     {"q_exp", m.first.second},
                     {"num", static_cast<long>(m.second.get_num().get_si())},
                     {"den", static_cast<long>(m.second.get_den().get_si())}});
  return nlohmann::json{{"terms", terms}};
}

nlohmann::json expr_to_json(const Expr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (Gen g : w) word.push_back(std::string(name(g)));
    terms.push_back({{"coeff", laurent_to_json(c)}, {"word", word}});
  }
  return nlohmann::json{{"terms", terms}};
}

}  // namespace qep
