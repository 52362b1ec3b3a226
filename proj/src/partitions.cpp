#include "covdbl/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace covdbl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    total_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_blocks(const std::vector<std::pair<int, int>>& part_mult) {
  std::vector<int> parts;
  for (auto [part, mult] : part_mult) parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      parts.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  if (lambda.length() == 0) return Partition();
  const int width = lambda.parts().front();
  t.reserve(static_cast<std::size_t>(width));
  for (int col = 1; col <= width; ++col) {
    int height = 0;
    for (int p : lambda.parts()) {
      if (p < col) break;
      ++height;
    }
    t.push_back(height);
  }
  return Partition(std::move(t));
}

std::int64_t gl_orbit_dim(const Partition& lambda) {
  const std::int64_t n = lambda.total();
  std::int64_t centralizer = 0;
  const Partition t = transpose(lambda);
  for (int h : t.parts()) centralizer += static_cast<std::int64_t>(h) * h;
  return n * n - centralizer;
}

bool orbit_validity(const Partition& lambda, Family family, long size) {
  if (lambda.total() != size) {
    throw std::invalid_argument("partition " + lambda.str() + " does not partition " + std::to_string(size));
  }
  if ((family == Family::Sp || family == Family::SOeven) && size % 2 != 0) {
    throw std::invalid_argument(family_name(family) + " requires an even matrix size");
  }
  if (family == Family::SOodd && size % 2 == 0) {
    throw std::invalid_argument("SOodd requires an odd matrix size");
  }
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (auto [part, count] : mult) {
    if (family == Family::Sp && part % 2 == 1 && count % 2 == 1) return false;
    if (is_orthogonal(family) && part % 2 == 0 && count % 2 == 1) return false;
  }
  return true;
}

int c_of_n(Family g_family, int n) {
  switch (g_family) {
    case Family::GL: return n;
    case Family::Sp:
    case Family::SOeven: return 2 * n;
    case Family::SOodd: return 2 * n + 1;
    case Family::SL: break;
  }
  throw std::invalid_argument("no doubling data for family " + family_name(g_family));
}

int cover_r(Family g_family, int m) {
  if (m < 1) throw std::invalid_argument("cover degree must be >= 1");
  return (g_family == Family::Sp && m % 2 == 0) ? m / 2 : m;
}

Partition orbit_for_H(Family g_family, int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("n, m, k must be >= 1");
  const int c = c_of_n(g_family, n);
  const int r = cover_r(g_family, m);
  return Partition::from_blocks({{2 * r * k - 1, c}, {1, c}});
}

ResiduePoint residue_point(int m, int b) {
  if (m < 1 || b < 1) throw std::invalid_argument("m, b must be >= 1");
  ResiduePoint rp;
  rp.m = m;
  rp.s.reserve(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i) {
    Rational s(b + 1 - 2 * i, 2 * m);
    s.canonicalize();
    rp.s.push_back(s);
  }
  return rp;
}

Rational residue_point_maximal(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Rational s(2 * k + 1, 4 * k);
  s.canonicalize();
  return s;
}

}  // namespace covdbl
