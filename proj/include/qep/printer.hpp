// Deterministic text and JSON rendering of coefficients and expressions.
// Text output round-trips through the parser.
#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qep/expr.hpp"

namespace qep {

struct FormatOptions {
  bool unicode = false;
};

std::string format_laurent(const Laurent& c);
std::string format_word(const Word& w, FormatOptions opts = {});
std::string format_expr(const Expr& e, FormatOptions opts = {});
std::string format_qg_expr(const QGExpr& e);

nlohmann::json laurent_to_json(const Laurent& c);
nlohmann::json expr_to_json(const Expr& e);

}  // namespace qep
