#pragma once

#include <vector>

#include "covdbl/matrix.hpp"
#include "covdbl/rational.hpp"

namespace covdbl {

struct CharacterTerm {
  int row = 0;  // 0-based
  int col = 0;
  Rational coef{1};

  bool operator==(const CharacterTerm&) const = default;
};

/// Linear functional on U/[U,U] read off matrix entries: the "log" of an
/// additive character. Evaluated on a group element u it returns
/// sum coef * u(row, col).
struct CharacterFunctional {
  std::vector<CharacterTerm> terms;

  bool empty() const { return terms.empty(); }

  template <class Field>
  typename Field::Elem value(const Matrix<Field>& u) const {
    const Field& f = u.field();
    auto acc = f.zero();
    for (const auto& t : terms) {
      acc = f.add(acc, f.mul(f.from_rational(t.coef), u(static_cast<std::size_t>(t.row), static_cast<std::size_t>(t.col))));
    }
    return acc;
  }

  bool operator==(const CharacterFunctional&) const = default;
};

}  // namespace covdbl
