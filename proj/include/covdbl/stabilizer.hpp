#pragma once

#include <cstdint>

#include "covdbl/character.hpp"
#include "covdbl/matgroups.hpp"
#include "covdbl/wss.hpp"

namespace covdbl {

/// Brute-force stabilizer of a character inside the Levi of `par` over F_p.
///
/// The Levi is enumerated as a product: GL_c(F_p) for every gl block and,
/// for a classical ambient group, the central block group (Sp only). A
/// Levi element l is counted when psi(l u l^{-1}) == psi(u) for every root
/// element u = exp(E) at the U/[U,U] layer coordinates, which span the
/// quotient on which psi lives.
///
/// The index range is split across `threads` workers; counts are summed, so
/// the result does not depend on the thread count.
StabilizerCount count_levi_stabilizer(const ParabolicSpec& par, const CharacterFunctional& psi, std::uint32_t p,
                                      unsigned threads, std::uint64_t budget);

/// Order of the Levi group over F_p, for budget checks before enumeration.
Integer levi_order(const ParabolicSpec& par, std::uint32_t p);

}  // namespace covdbl
