#pragma once

#include <string>
#include <string_view>

namespace covdbl {

/// Split classical families. SOodd/SOeven split the orthogonal case by the
/// parity of the matrix size.
enum class Family { GL, SL, Sp, SOodd, SOeven };

/// "GL", "SL", "Sp", "SOodd", "SOeven"
std::string family_name(Family f);

/// Matrix-group label: "SO" for both orthogonal families.
std::string group_label(Family f);

/// Accepts the names above, the CLI spellings gl/sp/so_odd/so_even, and
/// "SO" when the size parity is known (size_hint >= 0).
Family parse_family(std::string_view name, long size_hint = -1);

inline bool is_orthogonal(Family f) { return f == Family::SOodd || f == Family::SOeven; }
inline bool is_classical(Family f) { return f == Family::Sp || is_orthogonal(f); }

}  // namespace covdbl
