#include "qep/sampling.hpp"

namespace qep {

Laurent random_laurent(std::mt19937& rng, int max_terms, int max_exp,
                       int max_num) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, 4);
  Laurent out;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    out += Laurent::monomial(mpq_class(num(rng), den(rng)), exp(rng), exp(rng));
  return out;
}

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 5);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back(all_generators[gen(rng)]);
  return w;
}

Expr random_expr(std::mt19937& rng, int max_terms, int max_word_len) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  Expr out;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    out += Expr::term(random_laurent(rng), random_word(rng, max_word_len));
  return out;
}

}  // namespace qep
