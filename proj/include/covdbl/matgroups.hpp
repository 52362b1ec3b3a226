#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "covdbl/character.hpp"
#include "covdbl/family.hpp"
#include "covdbl/matrix.hpp"
#include "covdbl/random.hpp"

namespace covdbl {

/// A split classical group of N x N matrices. Orthogonal and symplectic
/// groups preserve the antidiagonal form J (J(i, N-1-i) = eps_i), so the
/// standard Borel is upper triangular:
///   Sp: eps_i = +1 for i < N/2, -1 otherwise;  SO: eps_i = +1.
struct GroupSpec {
  Family family = Family::GL;
  int size = 1;

  GroupSpec() = default;
  /// Throws std::invalid_argument on a size incompatible with the family.
  GroupSpec(Family family, int size);

  long dimension() const;

  /// Sign of the form at (i, N-1-i); 0 for GL/SL.
  int epsilon(int i) const;

  template <class Field>
  Matrix<Field> form(const Field& f) const {
    if (!is_classical(family)) throw std::logic_error(family_name(family) + " carries no form");
    Matrix<Field> j(f, static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) j(static_cast<std::size_t>(i), static_cast<std::size_t>(size - 1 - i)) = f.from_int(epsilon(i));
    return j;
  }

  bool operator==(const GroupSpec&) const = default;
};

struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

/// Standard parabolic by block composition. For Sp/SO the full block
/// sequence is gl_blocks, central (omitted when 0), then gl_blocks reversed;
/// for GL/SL it is gl_blocks and central must be 0.
struct ParabolicSpec {
  GroupSpec ambient;
  std::vector<int> gl_blocks;
  int central = 0;

  std::vector<int> block_sizes;
  std::vector<int> block_offsets;
  /// Free radical coordinates. For Sp/SO each pair identified by the form is
  /// listed once, by its member with row + col <= N - 1; SO drops the
  /// antidiagonal, where the form forces zeros.
  std::vector<Coord> radical_coords;
  long radical_dim = 0;

  int block_of(int index) const;
  std::size_t block_count() const { return block_sizes.size(); }
  /// Block index paired with `block` by the form (identity for GL).
  std::size_t mirror(std::size_t block) const;
  long levi_dimension() const;

  /// Radical coordinates in adjacent blocks: the image of U in U/[U,U].
  std::vector<Coord> layer_coords() const;

  /// Block-unipotent pattern: identity diagonal blocks, zeros below.
  template <class Field>
  bool in_radical_pattern(const Matrix<Field>& u) const {
    const auto n = static_cast<std::size_t>(ambient.size);
    if (u.rows() != n || u.cols() != n) return false;
    const Field& f = u.field();
    for (std::size_t i = 0; i < n; ++i) {
      const int bi = block_of(static_cast<int>(i));
      for (std::size_t j = 0; j < n; ++j) {
        const int bj = block_of(static_cast<int>(j));
        if (bj > bi) continue;
        const auto want = (i == j) ? f.one() : f.zero();
        if (u(i, j) != want) return false;
      }
    }
    return true;
  }
};

/// Throws std::invalid_argument when the blocks do not tile the group.
ParabolicSpec parabolic(const GroupSpec& spec, std::vector<int> gl_blocks, int central);

template <class Field>
bool is_member(const Matrix<Field>& g, const GroupSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.size);
  if (g.rows() != n || g.cols() != n) {
    throw std::invalid_argument("matrix is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                ", group needs " + std::to_string(n) + "x" + std::to_string(n));
  }
  const Field& f = g.field();
  switch (spec.family) {
    case Family::GL: return !f.is_zero(g.determinant());
    case Family::SL: return g.determinant() == f.one();
    case Family::Sp: {
      const auto j = spec.form(f);
      return g.transpose() * j * g == j;
    }
    case Family::SOodd:
    case Family::SOeven: {
      const auto j = spec.form(f);
      return g.transpose() * j * g == j && g.determinant() == f.one();
    }
  }
  return false;
}

/// Root positions of the group: every off-diagonal (i, j) for GL/SL; for
/// Sp/SO one representative per form-identified pair.
std::vector<Coord> root_positions(const GroupSpec& spec);

/// True when the root vector squares to a nonzero matrix (short roots of
/// SO_odd through the middle index); exp then needs 1/2.
bool root_needs_half(const GroupSpec& spec, Coord pos);

/// exp(x X) for the root vector X at `pos` (X(pos) = 1, the form-partner
/// entry filled in so that X lies in the Lie algebra).
template <class Field>
Matrix<Field> root_element(const GroupSpec& spec, Coord pos, const typename Field::Elem& x, const Field& f) {
  const auto n = static_cast<std::size_t>(spec.size);
  Matrix<Field> nil(f, n, n);
  nil(static_cast<std::size_t>(pos.row), static_cast<std::size_t>(pos.col)) = x;
  if (is_classical(spec.family)) {
    const int pr = spec.size - 1 - pos.col;
    const int pc = spec.size - 1 - pos.row;
    if (pr != pos.row || pc != pos.col) {
      // X^T J + J X = 0 forces X(j', a') = -eps_{a'} eps_{j'} X(a, j), a' = N-1-a
      const int s = -spec.epsilon(pc) * spec.epsilon(pr);
      nil(static_cast<std::size_t>(pr), static_cast<std::size_t>(pc)) = f.mul(f.from_int(s), x);
    }
  }
  // exp of a nilpotent matrix; root vectors have X^3 = 0
  Matrix<Field> result = Matrix<Field>::identity(f, n) + nil;
  Matrix<Field> sq = nil * nil;
  bool sq_zero = true;
  for (std::size_t i = 0; i < n && sq_zero; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!f.is_zero(sq(i, j))) {
        sq_zero = false;
        break;
      }
  if (!sq_zero) result = result + sq.scaled(f.inv(f.from_int(2)));
  return result;
}

/// Diagonal torus element from free parameters: GL takes N nonzero values,
/// SL takes N-1 (last entry balances the determinant), Sp/SO take floor(N/2)
/// values t_i placed at i and t_i^{-1} at N-1-i.
template <class Field>
Matrix<Field> torus_element(const GroupSpec& spec, const std::vector<typename Field::Elem>& params, const Field& f) {
  const int n = spec.size;
  Matrix<Field> d = Matrix<Field>::identity(f, static_cast<std::size_t>(n));
  auto at = [&](int i) -> typename Field::Elem& { return d(static_cast<std::size_t>(i), static_cast<std::size_t>(i)); };
  switch (spec.family) {
    case Family::GL:
      for (int i = 0; i < n; ++i) at(i) = params.at(static_cast<std::size_t>(i));
      break;
    case Family::SL: {
      auto prod = f.one();
      for (int i = 0; i + 1 < n; ++i) {
        at(i) = params.at(static_cast<std::size_t>(i));
        prod = f.mul(prod, at(i));
      }
      at(n - 1) = f.inv(prod);
      break;
    }
    case Family::Sp:
    case Family::SOodd:
    case Family::SOeven:
      for (int i = 0; i < n / 2; ++i) {
        at(i) = params.at(static_cast<std::size_t>(i));
        at(n - 1 - i) = f.inv(at(i));
      }
      break;
  }
  return d;
}

/// Uniform element of F_p, or a small integer in [-3, 3] over Q.
inline PrimeField::Elem random_scalar(Rng& rng, const PrimeField& f) {
  return static_cast<PrimeField::Elem>(rng.below(f.characteristic()));
}
inline Rational random_scalar(Rng& rng, const Rationals&) { return Rational(static_cast<long>(rng.between(-3, 3))); }

template <class Field>
typename Field::Elem random_unit(Rng& rng, const Field& f) {
  for (;;) {
    auto x = random_scalar(rng, f);
    if (!f.is_zero(x)) return x;
  }
}

template <class Field>
Matrix<Field> random_torus(const GroupSpec& spec, Rng& rng, const Field& f) {
  std::vector<typename Field::Elem> params(static_cast<std::size_t>(spec.size));
  for (auto& p : params) p = random_unit(rng, f);
  return torus_element(spec, params, f);
}

template <class Field>
bool characteristic_two(const Field& f) {
  return f.is_zero(f.from_int(2));
}

/// Product of `steps` random root elements, each followed with probability
/// 1/4 by a random torus element. Reproducible from the generator state.
template <class Field>
Matrix<Field> random_element(const GroupSpec& spec, const Field& f, Rng& rng, int steps) {
  std::vector<Coord> roots = root_positions(spec);
  if (characteristic_two(f)) {
    std::erase_if(roots, [&](Coord c) { return root_needs_half(spec, c); });
  }
  Matrix<Field> g = Matrix<Field>::identity(f, static_cast<std::size_t>(spec.size));
  for (int s = 0; s < steps; ++s) {
    if (!roots.empty()) {
      const Coord c = roots[rng.below(roots.size())];
      g = g * root_element(spec, c, random_scalar(rng, f), f);
    }
    if (rng.below(4) == 0) g = g * random_torus(spec, rng, f);
  }
  return g;
}

template <class Field>
Matrix<Field> random_element(const GroupSpec& spec, const Field& f, std::uint64_t seed, int steps) {
  Rng rng(seed);
  return random_element(spec, f, rng, steps);
}

/// Product of root elements over the radical coordinates, two passes in
/// random order with random parameters.
template <class Field>
Matrix<Field> random_radical_element(const ParabolicSpec& par, const Field& f, Rng& rng) {
  const auto n = static_cast<std::size_t>(par.ambient.size);
  Matrix<Field> u = Matrix<Field>::identity(f, n);
  std::vector<Coord> coords = par.radical_coords;
  if (characteristic_two(f)) {
    std::erase_if(coords, [&](Coord c) { return root_needs_half(par.ambient, c); });
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = coords.size(); i > 1; --i) std::swap(coords[i - 1], coords[rng.below(i)]);
    for (Coord c : coords) u = u * root_element(par.ambient, c, random_scalar(rng, f), f);
  }
  return u;
}

template <class Field>
Matrix<Field> random_radical_element(const ParabolicSpec& par, const Field& f, std::uint64_t seed) {
  Rng rng(seed);
  return random_radical_element(par, f, rng);
}

/// For a classical parabolic, the block at mirror(i) of a Levi element whose
/// block i is h: J_{i,i'}^{-1} h^{-T} J_{i,i'}, the unique choice keeping the
/// form. For GL parabolics blocks are independent and this is never called.
template <class Field>
Matrix<Field> mirror_block(const ParabolicSpec& par, std::size_t block, const Matrix<Field>& h) {
  const Field& f = h.field();
  const int c = par.block_sizes.at(block);
  const std::size_t other = par.mirror(block);
  const int r0 = par.block_offsets[block];
  const int c0 = par.block_offsets[other];
  Matrix<Field> jb(f, static_cast<std::size_t>(c), static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    const int gi = r0 + i;
    const int gj = par.ambient.size - 1 - gi;
    jb(static_cast<std::size_t>(i), static_cast<std::size_t>(gj - c0)) = f.from_int(par.ambient.epsilon(gi));
  }
  const Matrix<Field> jinv = inverse_or_throw(jb);
  return jinv * inverse_or_throw(h).transpose() * jb;
}

/// Levi element from its free blocks: one matrix per gl block, and for
/// Sp/SO the central block (ignored when central == 0). Mirrored blocks are
/// completed with mirror_block.
template <class Field>
Matrix<Field> assemble_levi(const ParabolicSpec& par, const std::vector<Matrix<Field>>& gl_parts,
                            const Matrix<Field>* central_part) {
  if (gl_parts.size() != par.gl_blocks.size()) throw std::invalid_argument("wrong number of Levi blocks");
  const Field& f = gl_parts.empty() ? central_part->field() : gl_parts.front().field();
  const auto n = static_cast<std::size_t>(par.ambient.size);
  Matrix<Field> l(f, n, n);
  for (std::size_t i = 0; i < gl_parts.size(); ++i) {
    const auto off = static_cast<std::size_t>(par.block_offsets[i]);
    l.set_block(off, off, gl_parts[i]);
    if (is_classical(par.ambient.family)) {
      const std::size_t mi = par.mirror(i);
      const auto moff = static_cast<std::size_t>(par.block_offsets[mi]);
      l.set_block(moff, moff, mirror_block(par, i, gl_parts[i]));
    }
  }
  if (is_classical(par.ambient.family) && par.central > 0) {
    if (central_part == nullptr) throw std::invalid_argument("missing central Levi block");
    const auto off = static_cast<std::size_t>(par.block_offsets[par.gl_blocks.size()]);
    l.set_block(off, off, *central_part);
  }
  return l;
}

/// Group order over F_q as an exact integer (GL, SL, Sp only).
Integer group_order(const GroupSpec& spec, std::uint64_t q);

/// All elements of G(F_p) by closure from root and torus generators, in a
/// deterministic order. Throws std::length_error when the order exceeds
/// `budget`, and std::invalid_argument for unsupported families.
std::vector<FpMatrix> enumerate_group(const GroupSpec& spec, const PrimeField& f, std::uint64_t budget);

}  // namespace covdbl
