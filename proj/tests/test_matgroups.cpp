#include <doctest.h>

#include "covdbl/matgroups.hpp"

using namespace covdbl;

namespace {

const std::vector<GroupSpec> kGroups = {
    GroupSpec(Family::GL, 3), GroupSpec(Family::SL, 3), GroupSpec(Family::Sp, 4),
    GroupSpec(Family::Sp, 6), GroupSpec(Family::SOodd, 5), GroupSpec(Family::SOeven, 6),
};

// Every 2x2 matrix over F_p, counted by determinant.
std::pair<long, long> count_gl2_sl2(std::uint32_t p) {
  long gl = 0, sl = 0;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          const long det = ((static_cast<long>(a * d) - static_cast<long>(b * c)) % p + p) % p;
          if (det != 0) ++gl;
          if (det == 1) ++sl;
        }
  return {gl, sl};
}

}  // namespace

TEST_CASE("group specs and forms") {
  CHECK_THROWS_AS(GroupSpec(Family::Sp, 3), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::SOodd, 4), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec(Family::SOeven, 5), std::invalid_argument);
  CHECK(GroupSpec(Family::Sp, 4).dimension() == 10);
  CHECK(GroupSpec(Family::SOodd, 5).dimension() == 10);
  CHECK(GroupSpec(Family::GL, 3).dimension() == 9);
  const Rationals q;
  const auto j = GroupSpec(Family::Sp, 4).form(q);
  CHECK(j.transpose() == j.scaled(Rational(-1)));
  const auto s = GroupSpec(Family::SOeven, 4).form(q);
  CHECK(s.transpose() == s);
  CHECK_THROWS(is_member(QMatrix::identity(q, 3), GroupSpec(Family::Sp, 4)));
}

TEST_CASE("root and torus elements are members") {
  const PrimeField f(7);
  const Rationals q;
  for (const auto& g : kGroups) {
    for (Coord c : root_positions(g)) {
      CHECK(is_member(root_element(g, c, f.from_int(3), f), g));
      CHECK(is_member(root_element(g, c, Rational(-2), q), g));
    }
    Rng rng(3);
    CHECK(is_member(random_torus(g, rng, f), g));
  }
  CHECK(root_positions(GroupSpec(Family::Sp, 4)).size() == 8);
  CHECK(root_positions(GroupSpec(Family::SOeven, 4)).size() == 4);
  CHECK(root_positions(GroupSpec(Family::SOodd, 5)).size() == 8);
}

TEST_CASE("closure and inversion over F_3, F_5, F_7") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField f(p);
    Rng rng(100 + p);
    for (const auto& g : kGroups) {
      for (int t = 0; t < 1000 / static_cast<int>(kGroups.size()); ++t) {
        const auto a = random_element(g, f, rng, 12);
        const auto b = random_element(g, f, rng, 12);
        REQUIRE(is_member(a, g));
        CHECK(is_member(a * b, g));
        CHECK(is_member(inverse_or_throw(a), g));
      }
    }
  }
}

TEST_CASE("random elements are reproducible from the seed") {
  const PrimeField f(5);
  const GroupSpec g(Family::Sp, 6);
  CHECK(random_element(g, f, 77, 20) == random_element(g, f, 77, 20));
  CHECK_FALSE(random_element(g, f, 77, 20) == random_element(g, f, 78, 20));
}

TEST_CASE("Siegel radical dimension") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int m = 1; m <= 3; ++m) {
        const int s = 2 * n * k * m;
        const auto par = parabolic(GroupSpec(Family::Sp, 2 * s), {s}, 0);
        CHECK(par.radical_dim == static_cast<long>(n) * k * m * (2L * n * k * m + 1));
      }
}

TEST_CASE("radical dimension is half the codimension of the Levi") {
  Rng rng(5);
  int checked = 0;
  while (checked < 50) {
    const bool sp = rng.below(2) == 0;
    std::vector<int> blocks(static_cast<std::size_t>(rng.between(0, 3)));
    for (auto& b : blocks) b = static_cast<int>(rng.between(1, 3));
    int central = static_cast<int>(rng.between(0, 4));
    int total = central;
    for (int b : blocks) total += 2 * b;
    if (total == 0) continue;
    Family fam = sp ? Family::Sp : (total % 2 ? Family::SOodd : Family::SOeven);
    if (sp && central % 2) continue;
    if (!sp && central == 2 && blocks.empty()) continue;
    const GroupSpec g(fam, total);
    const auto par = parabolic(g, blocks, central);
    CHECK(2 * par.radical_dim == g.dimension() - par.levi_dimension());
    CHECK(par.radical_dim == static_cast<long>(par.radical_coords.size()));
    ++checked;
  }
  CHECK_THROWS_AS(parabolic(GroupSpec(Family::Sp, 8), {3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(parabolic(GroupSpec(Family::GL, 4), {2, 1}, 0), std::invalid_argument);
}

TEST_CASE("Levi elements assembled from free blocks are members") {
  const PrimeField f(5);
  Rng rng(6);
  const std::vector<ParabolicSpec> pars = {
      parabolic(GroupSpec(Family::Sp, 8), {2}, 4),
      parabolic(GroupSpec(Family::Sp, 12), {2, 2}, 4),
      parabolic(GroupSpec(Family::SOeven, 8), {3}, 2),
      parabolic(GroupSpec(Family::SOodd, 7), {1, 2}, 1),
  };
  for (const auto& par : pars) {
    for (int t = 0; t < 50; ++t) {
      std::vector<FpMatrix> parts;
      for (int c : par.gl_blocks) parts.push_back(random_element(GroupSpec(Family::GL, c), f, rng, 10));
      const GroupSpec cg(par.ambient.family, par.central);
      const FpMatrix central = random_element(cg, f, rng, 10);
      const auto l = assemble_levi(par, parts, &central);
      CHECK(is_member(l, par.ambient));
      // Levi normalizes U
      const auto u = random_radical_element(par, f, rng);
      CHECK(par.in_radical_pattern(l * u * inverse_or_throw(l)));
    }
  }
}

TEST_CASE("radical elements add on U/[U,U]") {
  const PrimeField f(7);
  Rng rng(7);
  const auto par = parabolic(GroupSpec(Family::Sp, 12), {2, 2}, 4);
  const auto layer = par.layer_coords();
  REQUIRE_FALSE(layer.empty());
  for (int t = 0; t < 500; ++t) {
    const auto u = random_radical_element(par, f, rng);
    const auto v = random_radical_element(par, f, rng);
    REQUIRE(par.in_radical_pattern(u));
    REQUIRE(is_member(u, par.ambient));
    const auto uv = u * v;
    for (Coord c : layer) {
      const auto i = static_cast<std::size_t>(c.row), j = static_cast<std::size_t>(c.col);
      CHECK(uv(i, j) == f.add(u(i, j), v(i, j)));
    }
  }
}

TEST_CASE("group orders and enumeration") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto [gl, sl] = count_gl2_sl2(p);
    CHECK(group_order(GroupSpec(Family::GL, 2), p) == gl);
    CHECK(group_order(GroupSpec(Family::SL, 2), p) == sl);
    CHECK(group_order(GroupSpec(Family::Sp, 2), p) == sl);
    const PrimeField f(p);
    CHECK(static_cast<long>(enumerate_group(GroupSpec(Family::GL, 2), f, 1'000'000).size()) == gl);
    CHECK(static_cast<long>(enumerate_group(GroupSpec(Family::Sp, 2), f, 1'000'000).size()) == sl);
  }
  CHECK(group_order(GroupSpec(Family::Sp, 4), 3) == 51840);
  const auto sp4 = enumerate_group(GroupSpec(Family::Sp, 4), PrimeField(3), 1'000'000);
  CHECK(sp4.size() == 51840);
  for (std::size_t i = 0; i < sp4.size(); i += 997) CHECK(is_member(sp4[i], GroupSpec(Family::Sp, 4)));
  CHECK_THROWS_AS(enumerate_group(GroupSpec(Family::Sp, 4), PrimeField(3), 1000), std::length_error);
  CHECK_THROWS_AS(enumerate_group(GroupSpec(Family::SOeven, 4), PrimeField(3), 1000), std::invalid_argument);
}
