#include "covdbl/wss.hpp"

#include "covdbl/stabilizer.hpp"

namespace covdbl {

WssData build_wss(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("WSS type needs a, b >= 1");
  WssData w;
  w.a = a;
  w.b = b;
  w.ambient = GroupSpec(Family::GL, a * b);
  w.radical = parabolic(w.ambient, std::vector<int>(static_cast<std::size_t>(a), b), 0);
  for (int i = 0; i + 1 < a; ++i) {
    for (int j = 0; j < b; ++j) w.psi.terms.push_back({i * b + j, (i + 1) * b + j, Rational(1)});
  }
  return w;
}

StabilizerCount levi_stabilizer_bruteforce(const WssData& w, std::uint32_t p, unsigned threads, std::uint64_t budget) {
  return count_levi_stabilizer(w.radical, w.psi, p, threads, budget);
}

bool cover_divisibility_check(int m, int a) {
  if (m < 1 || a < 1) throw std::invalid_argument("m, a must be >= 1");
  return a % m == 0;
}

}  // namespace covdbl
