#pragma once

#include <functional>
#include <vector>

#include "covdbl/matrix.hpp"
#include "covdbl/partitions.hpp"

namespace covdbl::oracle {

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Orbit dimension = rank of X -> XN - NX for the Jordan nilpotent N of type
// lambda, i.e. N^2 minus the centralizer dimension.
inline long centralizer_orbit_dim(const Partition& lambda) {
  const Rationals q;
  const auto n = static_cast<std::size_t>(lambda.total());
  QMatrix nil(q, n, n);
  std::size_t off = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i + 1 < part; ++i) nil(off + static_cast<std::size_t>(i), off + static_cast<std::size_t>(i) + 1) = 1;
    off += static_cast<std::size_t>(part);
  }
  QMatrix a(q, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        a(i * n + j, i * n + l) += nil(l, j);  // (X N)_{ij}
        a(i * n + j, l * n + j) -= nil(i, l);  // (N X)_{ij}
      }
  return static_cast<long>(a.rank());
}

}  // namespace covdbl::oracle
