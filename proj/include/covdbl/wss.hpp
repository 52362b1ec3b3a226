#pragma once

#include <cstdint>

#include "covdbl/character.hpp"
#include "covdbl/matgroups.hpp"

namespace covdbl {

/// Coefficient data of type (a, b) on GL_ab: the radical V_{a,b} of the
/// parabolic with Levi GL_b x ... x GL_b (a copies) and the functional
/// tr(X_{1,2} + ... + X_{a-1,a}).
struct WssData {
  int a = 1;
  int b = 1;
  GroupSpec ambient;
  ParabolicSpec radical;
  CharacterFunctional psi;
};

WssData build_wss(int a, int b);

/// Throws std::invalid_argument when x is not block unipotent for V_{a,b}.
template <class Field>
typename Field::Elem psi_ab_value(const Matrix<Field>& x, const WssData& w) {
  if (!w.radical.in_radical_pattern(x)) throw std::invalid_argument("matrix is not in V_{a,b}");
  return w.psi.value(x);
}

/// diag(h, ..., h) with a copies of h.
template <class Field>
Matrix<Field> diagonal_embed(const Matrix<Field>& h, int a) {
  if (!h.is_square()) throw std::invalid_argument("diagonal_embed needs a square block");
  const std::size_t b = h.rows();
  Matrix<Field> out(h.field(), b * static_cast<std::size_t>(a), b * static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) out.set_block(static_cast<std::size_t>(i) * b, static_cast<std::size_t>(i) * b, h);
  return out;
}

struct StabilizerCount {
  std::uint64_t levi_order = 0;
  std::uint64_t stabilizer_order = 0;
};

inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Counts Levi tuples (h_1, ..., h_a) in GL_b(F_p)^a fixing psi on the
/// superdiagonal spanning set of V/[V,V]. Throws std::length_error naming
/// the required budget when |GL_b(F_p)|^a exceeds `budget`.
StabilizerCount levi_stabilizer_bruteforce(const WssData& w, std::uint32_t p, unsigned threads = 1,
                                           std::uint64_t budget = kEnumerationBudget);

/// m | a
bool cover_divisibility_check(int m, int a);

}  // namespace covdbl
