// Seeded random coefficients, words and expressions for property checks.
#pragma once

#include <random>

#include "qep/expr.hpp"

namespace qep {

Laurent random_laurent(std::mt19937& rng, int max_terms = 3, int max_exp = 3,
                       int max_num = 9);
Word random_word(std::mt19937& rng, int max_len = 4);
Expr random_expr(std::mt19937& rng, int max_terms = 4, int max_word_len = 4);

}  // namespace qep
