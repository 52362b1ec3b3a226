#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covdbl/character.hpp"
#include "covdbl/lfactors.hpp"
#include "covdbl/matgroups.hpp"
#include "covdbl/partitions.hpp"
#include "covdbl/wss.hpp"

namespace covdbl {

/// Structural data of the doubling construction for G in {GL_n, Sp_2n,
/// SO_2n+1, SO_2n} with cover degree m and GL_k.
///
/// H is the big group, P its maximal parabolic (Levi GL_{kmc} or, for GL,
/// two such blocks) and Q the parabolic whose radical U carries psi_U.
/// For Sp the cover-adjusted r is used throughout (H = Sp_{4nrk}).
/// psi_U is only known for Sp; for the other families it stays empty.
struct DoublingData {
  Family family = Family::Sp;
  int n = 1;
  int m = 1;
  int k = 1;
  int r = 1;
  int c = 2;  // c(n)
  GroupSpec H;
  ParabolicSpec P;
  ParabolicSpec Q;
  std::optional<CharacterFunctional> psiU;
  Partition orbit;
  std::pair<int, int> wss_type{1, 1};
  long alpha = 0;

  /// rk - 1 (Sp) or mk - 1 (otherwise): GL blocks of Q before H_c(n).
  int chain_length() const;
  bool unipotent_trivial() const { return Q.radical_dim == 0; }
};

DoublingData doubling_parameters(Family family, int n, int m, int k);

/// Symplectic data with a prescribed r: m = r for odd r, m = 2r otherwise.
DoublingData sp_doubling_for_r(int n, int r, int k);

/// Same data with an extra coefficient on the Y_2 block of the character,
/// a deliberately wrong functional for negative controls. Throws when U is
/// trivial (nothing to perturb).
DoublingData with_perturbed_character(DoublingData d);

inline const CharacterFunctional& require_character(const DoublingData& d) {
  if (!d.psiU) throw std::invalid_argument("character unspecified for this family");
  return *d.psiU;
}

/// Sum of traces of the X blocks plus tr(Y_1 + Y_4), read at the stored
/// coordinates. Throws for non-symplectic families and when u is not in U.
template <class Field>
typename Field::Elem psi_U_value(const Matrix<Field>& u, const DoublingData& d) {
  const auto& psi = require_character(d);
  if (!d.Q.in_radical_pattern(u)) throw std::invalid_argument("matrix is not in the radical of Q");
  return psi.value(u);
}

/// The 4n x 4n block with g1's n x n corners at the outer positions and g2
/// in the middle.
template <class Field>
Matrix<Field> interleave_middle(const Matrix<Field>& g1, const Matrix<Field>& g2) {
  const std::size_t n2 = g1.rows();
  const std::size_t n = n2 / 2;
  Matrix<Field> mid(g1.field(), 2 * n2, 2 * n2);
  mid.set_block(0, 0, g1.block(0, 0, n, n));
  mid.set_block(0, 3 * n, g1.block(0, n, n, n));
  mid.set_block(3 * n, 0, g1.block(n, 0, n, n));
  mid.set_block(3 * n, 3 * n, g1.block(n, n, n, n));
  mid.set_block(n, n, g2);
  return mid;
}

/// diag(g1, ..., g1, middle(g1, g2), g1*, ..., g1*) in H = Sp_{4nrk}, with
/// g1* solved from the form. Throws unless g1, g2 lie in Sp_2n.
template <class Field>
Matrix<Field> embed_doubling(const Matrix<Field>& g1, const Matrix<Field>& g2, const DoublingData& d) {
  if (d.family != Family::Sp) throw std::invalid_argument("embedding implemented for the symplectic family only");
  const GroupSpec g(Family::Sp, 2 * d.n);
  if (!is_member(g1, g) || !is_member(g2, g)) throw std::invalid_argument("embedding arguments must lie in Sp_2n");
  std::vector<Matrix<Field>> chain(static_cast<std::size_t>(d.chain_length()), g1);
  const Matrix<Field> mid = interleave_middle(g1, g2);
  return assemble_levi(d.Q, chain, &mid);
}

struct StabilizationReport {
  int trials = 0;
  int pattern_failures = 0;  // conjugate left U
  int value_failures = 0;    // psi_U changed
  bool vacuous = false;      // U trivial
  std::vector<std::string> counterexamples;  // first few, for the report

  int failures() const { return pattern_failures + value_failures; }
};

/// Random (g1, g2, u) over F_p: iota(g1, g2) u iota(g1, g2)^{-1} must stay in
/// U with the same psi_U value. Failures are data, not exceptions.
StabilizationReport check_stabilization(const DoublingData& d, std::uint32_t p, int trials, std::uint64_t seed);

/// Brute-force stabilizer of psi_U in the Levi GL_2n^{rk-1} x Sp_4n of Q.
StabilizerCount levi_stabilizer_bruteforce_sp(const DoublingData& d, std::uint32_t p, unsigned threads = 1,
                                              std::uint64_t budget = kEnumerationBudget);
StabilizerCount levi_stabilizer_bruteforce_sp(int n, int r, int k, std::uint32_t p, unsigned threads = 1,
                                              std::uint64_t budget = kEnumerationBudget);

struct DimensionReport {
  int n = 0, m = 0, k = 0;
  long dim_g = 0;          // dim Sp_2n
  long half_orbit = 0;     // (1/2) dim ((km)^{2n})
  long radical_p = 0;      // dim U(P)
  long radical_q = 0;      // dim U
  long lhs = 0;
  long rhs = 0;
  bool equal = false;
};

/// dim G + (1/2) dim((km)^{2n}) + dim U(P)  vs  2 dim G + dim U, for Sp with
/// odd m. The radical dimensions are counted from the constructed
/// parabolics, the orbit dimension from the partition.
DimensionReport check_dimension_equation(int n, int m, int k);

}  // namespace covdbl
