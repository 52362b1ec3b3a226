#include "covdbl/family.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace covdbl {

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::SOodd: return "SOodd";
    case Family::SOeven: return "SOeven";
  }
  return "?";
}

std::string group_label(Family f) { return is_orthogonal(f) ? "SO" : family_name(f); }

Family parse_family(std::string_view name, long size_hint) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gl") return Family::GL;
  if (s == "sl") return Family::SL;
  if (s == "sp") return Family::Sp;
  if (s == "soodd" || s == "so_odd") return Family::SOodd;
  if (s == "soeven" || s == "so_even") return Family::SOeven;
  if (s == "so" && size_hint >= 0) return size_hint % 2 ? Family::SOodd : Family::SOeven;
  throw std::invalid_argument("unknown group family '" + std::string(name) + "'");
}

}  // namespace covdbl
