#include "covdbl/doubling.hpp"

#include <sstream>

#include "covdbl/stabilizer.hpp"

namespace covdbl {

namespace {

std::vector<int> repeated(int value, int count) {
  return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), value);
}

CharacterFunctional symplectic_character(const DoublingData& d) {
  CharacterFunctional psi;
  const int chain = d.chain_length();
  if (chain == 0) return psi;
  const int w = 2 * d.n;
  // X_i between consecutive GL_2n blocks: coefficient 1 on the block diagonal
  for (int i = 0; i + 1 < chain; ++i) {
    const int r0 = d.Q.block_offsets[static_cast<std::size_t>(i)];
    const int c0 = d.Q.block_offsets[static_cast<std::size_t>(i + 1)];
    for (int j = 0; j < w; ++j) psi.terms.push_back({r0 + j, c0 + j, Rational(1)});
  }
  // Y = [[Y1 Z1 Y2], [Y3 Z2 Y4]] from the last GL block into Sp_4n: tr(Y1 + Y4)
  const int yr = d.Q.block_offsets[static_cast<std::size_t>(chain - 1)];
  const int yc = d.Q.block_offsets[static_cast<std::size_t>(chain)];
  for (int j = 0; j < d.n; ++j) psi.terms.push_back({yr + j, yc + j, Rational(1)});
  for (int j = 0; j < d.n; ++j) psi.terms.push_back({yr + d.n + j, yc + 3 * d.n + j, Rational(1)});
  return psi;
}

}  // namespace

int DoublingData::chain_length() const { return static_cast<int>(Q.gl_blocks.size()) - (family == Family::GL ? 1 : 0); }

DoublingData doubling_parameters(Family family, int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("n, m, k must be >= 1");
  DoublingData d;
  d.family = family;
  d.n = n;
  d.m = m;
  d.k = k;
  d.r = cover_r(family, m);
  d.c = c_of_n(family, n);
  d.alpha = alpha(n, m, k);
  d.orbit = orbit_for_H(family, n, m, k);

  switch (family) {
    case Family::GL: {
      const int km = k * m;
      d.H = GroupSpec(Family::GL, 2 * n * km);
      d.P = parabolic(d.H, {km * d.c, km * d.c}, 0);
      // GL_n^{mk-1} x (GL_2n x GL_n^{mk-1})
      std::vector<int> blocks = repeated(n, km - 1);
      blocks.push_back(2 * n);
      auto tail = repeated(n, km - 1);
      blocks.insert(blocks.end(), tail.begin(), tail.end());
      d.Q = parabolic(d.H, blocks, 0);
      d.wss_type = {km, d.c};
      break;
    }
    case Family::Sp: {
      const int rk = d.r * k;
      d.H = GroupSpec(Family::Sp, 4 * n * rk);
      d.P = parabolic(d.H, {2 * n * rk}, 0);
      d.Q = parabolic(d.H, repeated(2 * n, rk - 1), 4 * n);
      d.wss_type = {rk, d.c};
      break;
    }
    case Family::SOeven:
    case Family::SOodd: {
      const int km = k * m;
      d.H = GroupSpec(Family::SOeven, 2 * d.c * km);
      d.P = parabolic(d.H, {km * d.c}, 0);
      d.Q = parabolic(d.H, repeated(d.c, km - 1), 2 * d.c);
      d.wss_type = {km, d.c};
      break;
    }
    case Family::SL: throw std::invalid_argument("no doubling data for SL");
  }
  if (d.orbit.total() != d.H.size || !orbit_validity(d.orbit, d.H.family, d.H.size)) {
    throw std::logic_error("orbit " + d.orbit.str() + " is not a valid orbit of H");
  }
  if (family == Family::Sp) d.psiU = symplectic_character(d);
  return d;
}

DoublingData sp_doubling_for_r(int n, int r, int k) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  return doubling_parameters(Family::Sp, n, r % 2 ? r : 2 * r, k);
}

DoublingData with_perturbed_character(DoublingData d) {
  require_character(d);
  const int chain = d.chain_length();
  if (chain == 0) throw std::invalid_argument("U is trivial; there is no coordinate to perturb");
  const int yr = d.Q.block_offsets[static_cast<std::size_t>(chain - 1)];
  const int yc = d.Q.block_offsets[static_cast<std::size_t>(chain)];
  d.psiU->terms.push_back({yr, yc + 3 * d.n, Rational(1)});  // first entry of Y_2
  return d;
}

StabilizationReport check_stabilization(const DoublingData& d, std::uint32_t p, int trials, std::uint64_t seed) {
  require_character(d);
  const PrimeField fp(p);
  StabilizationReport rep;
  rep.trials = trials;
  rep.vacuous = d.unipotent_trivial();
  const GroupSpec g(Family::Sp, 2 * d.n);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto g1 = random_element(g, fp, rng, 24);
    const auto g2 = random_element(g, fp, rng, 24);
    const auto u = random_radical_element(d.Q, fp, rng);
    const auto iota = embed_doubling(g1, g2, d);
    const auto conj = iota * u * inverse_or_throw(iota);
    if (!d.Q.in_radical_pattern(conj)) {
      ++rep.pattern_failures;
      if (rep.counterexamples.size() < 3) rep.counterexamples.push_back("trial " + std::to_string(t) + ": conjugate left U");
      continue;
    }
    const auto before = psi_U_value(u, d);
    const auto after = psi_U_value(conj, d);
    if (before != after) {
      ++rep.value_failures;
      if (rep.counterexamples.size() < 3) {
        std::ostringstream os;
        os << "trial " << t << ": psi_U " << before << " -> " << after;
        rep.counterexamples.push_back(os.str());
      }
    }
  }
  return rep;
}

StabilizerCount levi_stabilizer_bruteforce_sp(const DoublingData& d, std::uint32_t p, unsigned threads,
                                              std::uint64_t budget) {
  return count_levi_stabilizer(d.Q, require_character(d), p, threads, budget);
}

StabilizerCount levi_stabilizer_bruteforce_sp(int n, int r, int k, std::uint32_t p, unsigned threads,
                                              std::uint64_t budget) {
  return levi_stabilizer_bruteforce_sp(sp_doubling_for_r(n, r, k), p, threads, budget);
}

DimensionReport check_dimension_equation(int n, int m, int k) {
  if (m % 2 == 0) throw std::invalid_argument("the dimension equation is checked for odd m only");
  const DoublingData d = doubling_parameters(Family::Sp, n, m, k);
  DimensionReport rep;
  rep.n = n;
  rep.m = m;
  rep.k = k;
  rep.dim_g = GroupSpec(Family::Sp, 2 * n).dimension();
  const std::int64_t orbit = gl_orbit_dim(Partition::from_blocks({{k * m, 2 * n}}));
  rep.half_orbit = static_cast<long>(orbit / 2);
  rep.radical_p = d.P.radical_dim;
  rep.radical_q = d.Q.radical_dim;
  rep.lhs = rep.dim_g + rep.half_orbit + rep.radical_p;
  rep.rhs = 2 * rep.dim_g + rep.radical_q;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace covdbl
