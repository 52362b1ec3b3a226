#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covdbl/family.hpp"
#include "covdbl/rational.hpp"

namespace covdbl {

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive; the parts are
  /// sorted into decreasing order.
  explicit Partition(std::vector<int> parts);

  /// (part^mult) blocks concatenated, e.g. {{5, 2}, {1, 2}} -> (5,5,1,1).
  static Partition from_blocks(const std::vector<std::pair<int, int>>& part_mult);

  const std::vector<int>& parts() const { return parts_; }
  long total() const { return total_; }
  std::size_t length() const { return parts_.size(); }
  int multiplicity(int part) const;

  bool operator==(const Partition&) const = default;

  /// "(5,5,1,1)"
  std::string str() const;

 private:
  std::vector<int> parts_;
  long total_ = 0;
};

Partition parse_partition(std::string_view text);

Partition transpose(const Partition& lambda);

/// Dimension of the GL_N nilpotent orbit of Jordan type lambda:
/// N^2 - sum_i (lambda^t_i)^2.
std::int64_t gl_orbit_dim(const Partition& lambda);

/// Standard parity rule (Sp: odd parts even multiplicity; SO: even parts
/// even multiplicity) for the family of a group of matrix size
/// `size`. Throws std::invalid_argument when lambda does not partition size
/// or the size is incompatible with the family.
bool orbit_validity(const Partition& lambda, Family family, long size);

/// c(n): n for GL_n, 2n for Sp_2n and SO_2n, 2n+1 for SO_2n+1.
int c_of_n(Family g_family, int n);

/// r = m, except r = m/2 for the symplectic family with m even.
int cover_r(Family g_family, int m);

/// ((2 r' k - 1)^c 1^c) with r' = cover_r(family, m); it lives on H.
Partition orbit_for_H(Family g_family, int n, int m, int k);

struct ResiduePoint {
  std::vector<Rational> s;
  int m = 1;
};

/// s_i = (b + 1 - 2i) / (2m), the unique point with sum 0 and m(s_i - s_{i+1}) = 1.
ResiduePoint residue_point(int m, int b);

/// (2k + 1) / (4k)
Rational residue_point_maximal(int k);

}  // namespace covdbl
