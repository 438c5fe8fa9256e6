#include "qep/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace qep {

namespace {

enum class Tok { atom, number, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok type;
  std::string text;      // atom name
  mpq_class value;       // number
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " (line " + std::to_string(current_.line) +
                         ", column " + std::to_string(current_.column) + ")",
                     current_.line, current_.column);
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    current_ = Token{Tok::end, "", 0, line_, col_};
    if (pos_ >= text_.size()) return;
    char ch = text_[pos_];
    switch (ch) {
      case '+': current_.type = Tok::plus; bump(); return;
      case '-': current_.type = Tok::minus; bump(); return;
      case '*': current_.type = Tok::star; bump(); return;
      case '^': current_.type = Tok::caret; bump(); return;
      case '(': current_.type = Tok::lparen; bump(); return;
      case ')': current_.type = Tok::rparen; bump(); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        bump();
        den = digits();
        if (mpz_class(den) == 0) fail("zero denominator in rational literal");
      }
      current_.type = Tok::number;
      current_.value = mpq_class(mpz_class(num), mpz_class(den));
      current_.value.canonicalize();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ident += text_[pos_];
        bump();
      }
      current_.type = Tok::atom;
      current_.text = std::move(ident);
      return;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      bump();
    }
    return out;
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_;
};

const std::map<std::string, Gen, std::less<>> kAtoms = {
    {"theta", Gen::theta},         {"phi", Gen::phi},
    {"Theta", Gen::diff_theta},    {"Phi", Gen::diff_phi},
    {"d_theta", Gen::del_theta},   {"d_phi", Gen::del_phi}};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Expr parse() {
    Expr e = expression();
    if (lex_.peek().type != Tok::end)
      lex_.fail("expected one of: '+', '-', '*', '^', end of input");
    return e;
  }

 private:
  Expr expression() {
    Expr out = term();
    while (true) {
      Tok t = lex_.peek().type;
      if (t == Tok::plus) {
        lex_.take();
        out += term();
      } else if (t == Tok::minus) {
        lex_.take();
        out -= term();
      } else {
        return out;
      }
    }
  }

  Expr term() {
    bool negate = false;
    if (lex_.peek().type == Tok::minus) {
      lex_.take();
      negate = true;
    }
    Expr out = factor();
    while (true) {
      Tok t = lex_.peek().type;
      if (t == Tok::star) {
        lex_.take();
        out *= factor();
      } else if (t == Tok::atom || t == Tok::number || t == Tok::lparen) {
        out *= factor();  // juxtaposition
      } else {
        break;
      }
    }
    return negate ? -out : out;
  }

  Expr factor() {
    Primary base = primary();
    if (lex_.peek().type != Tok::caret) return base.expr;
    lex_.take();
    bool neg = false;
    if (lex_.peek().type == Tok::minus) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().type != Tok::number || lex_.peek().value.get_den() != 1)
      lex_.fail("expected integer exponent after '^'");
    if (lex_.peek().value.get_num() > 9999)
      lex_.fail("exponent out of range (maximum 9999)");
    long e = lex_.take().value.get_num().get_si();
    if (neg) {
      if (!base.parameter)
        lex_.fail(
            "nilpotent generators admit only exponents 0 and 1 via ^; "
            "negative exponents are parameter-only");
      return Expr::scalar(base.parameter->pow(static_cast<int>(-e)));
    }
    Expr out = Expr::scalar(Laurent{1});
    for (long i = 0; i < e; ++i) {
      out *= base.expr;
      if (out.size() > 100000) lex_.fail("expression power is too large");
    }
    return out;
  }

  struct Primary {
    Expr expr;
    std::optional<Laurent> parameter;  // set for the atoms p and q
  };

  Primary primary() {
    const Token& t = lex_.peek();
    switch (t.type) {
      case Tok::number: {
        Token n = lex_.take();
        return {Expr::scalar(Laurent(n.value)), std::nullopt};
      }
      case Tok::atom: {
        Token a = lex_.take();
        if (a.text == "p") return {Expr::scalar(Laurent::p()), Laurent::p()};
        if (a.text == "q") return {Expr::scalar(Laurent::q()), Laurent::q()};
        auto it = kAtoms.find(a.text);
        if (it == kAtoms.end())
          throw ParseError("unknown atom '" + a.text +
                               "'; expected one of: theta, phi, Theta, Phi, "
                               "d_theta, d_phi, p, q (line " +
                               std::to_string(a.line) + ", column " +
                               std::to_string(a.column) + ")",
                           a.line, a.column);
        return {Expr::letter(it->second), std::nullopt};
      }
      case Tok::lparen: {
        lex_.take();
        Expr inner = expression();
        if (lex_.peek().type != Tok::rparen) lex_.fail("expected ')'");
        lex_.take();
        return {inner, std::nullopt};
      }
      default:
        lex_.fail("expected one of: atom, number, '('");
    }
  }

  Lexer lex_;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace qep
