// The six generators of the calculus and words over them.  Enum values are
// chosen in the precedence order Theta < Phi < theta < phi < del_theta <
// del_phi, so a word is in normal form exactly when its letters are sorted
// and no nilpotent letter repeats.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qep {

enum class Gen : std::uint8_t {
  diff_theta = 0,  // Theta = d(theta)
  diff_phi = 1,    // Phi = d(phi)
  theta = 2,
  phi = 3,
  del_theta = 4,  // partial derivative w.r.t. theta
  del_phi = 5,
};

enum class GenKind { coordinate, differential, derivative };
enum class Parity { even, odd };

constexpr std::array<Gen, 6> all_generators = {
    Gen::diff_theta, Gen::diff_phi, Gen::theta,
    Gen::phi,        Gen::del_theta, Gen::del_phi};

constexpr GenKind kind(Gen g) {
  switch (g) {
    case Gen::theta:
    case Gen::phi:
      return GenKind::coordinate;
    case Gen::diff_theta:
    case Gen::diff_phi:
      return GenKind::differential;
    default:
      return GenKind::derivative;
  }
}

// 1 for the theta family, 2 for the phi family.
constexpr int index_of(Gen g) {
  return (g == Gen::diff_theta || g == Gen::theta || g == Gen::del_theta) ? 1
                                                                          : 2;
}

constexpr Parity parity(Gen g) {
  return kind(g) == GenKind::differential ? Parity::even : Parity::odd;
}

constexpr bool nilpotent(Gen g) { return kind(g) != GenKind::differential; }

constexpr std::string_view name(Gen g) {
  constexpr std::string_view names[] = {"Theta",   "Phi",    "theta",
                                        "phi",     "d_theta", "d_phi"};
  return names[static_cast<int>(g)];
}

constexpr std::string_view unicode_name(Gen g) {
  constexpr std::string_view names[] = {"Θ", "Φ", "θ", "φ", "∂θ", "∂φ"};
  return names[static_cast<int>(g)];
}

using Word = std::vector<Gen>;

inline Parity word_parity(const Word& w) {
  int odd = 0;
  for (Gen g : w)
    if (parity(g) == Parity::odd) ++odd;
  return odd % 2 ? Parity::odd : Parity::even;
}

// Matrix elements of the quantum group GL_{p,q}(2); all even, commuting with
// the plane generators.
enum class QGen : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

constexpr std::array<QGen, 4> all_qgens = {QGen::a, QGen::b, QGen::c, QGen::d};

constexpr std::string_view name(QGen g) {
  constexpr std::string_view names[] = {"a", "b", "c", "d"};
  return names[static_cast<int>(g)];
}

using QGWord = std::vector<QGen>;

// Degree-then-lexicographic word order; the rewriting term order.
struct DegLex {
  template <class L>
  bool operator()(const std::vector<L>& x, const std::vector<L>& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

}  // namespace qep
