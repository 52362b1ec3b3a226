#include <doctest.h>

#include "covdbl/doubling.hpp"
#include "covdbl/io.hpp"
#include "covdbl/verify.hpp"

using namespace covdbl;

namespace {

// dim U(Q) from the Levi: (dim H - dim L) / 2 with L = GL_2n^{rk-1} x Sp_4n.
long radical_q_oracle(int n, int r, int k) {
  const long big = 4L * n * r * k;
  const long levi = (r * k - 1) * (2L * n) * (2L * n) + (4L * n) * (4L * n + 1) / 2;
  return (big * (big + 1) / 2 - levi) / 2;
}

}  // namespace

TEST_CASE("doubling data tables") {
  const auto sp = doubling_parameters(Family::Sp, 1, 3, 1);
  CHECK(sp.r == 3);
  CHECK(sp.H == GroupSpec(Family::Sp, 12));
  CHECK(sp.P.gl_blocks == std::vector<int>{6});
  CHECK(sp.Q.gl_blocks == std::vector<int>{2, 2});
  CHECK(sp.Q.central == 4);
  CHECK(sp.orbit == Partition({5, 5, 1, 1}));
  CHECK(sp.wss_type == std::pair{3, 2});
  CHECK(sp.alpha == 21);

  const auto sp_even = doubling_parameters(Family::Sp, 1, 2, 1);
  CHECK(sp_even.r == 1);
  CHECK(sp_even.H.size == 4);
  CHECK(sp_even.unipotent_trivial());
  CHECK(sp_even.psiU->empty());

  const auto so_odd = doubling_parameters(Family::SOodd, 1, 1, 2);
  CHECK(so_odd.H == GroupSpec(Family::SOeven, 12));
  CHECK(so_odd.Q.gl_blocks == std::vector<int>{3});
  CHECK(so_odd.Q.central == 6);
  CHECK_FALSE(so_odd.psiU.has_value());
  CHECK(so_odd.orbit == Partition({3, 3, 3, 1, 1, 1}));

  const auto so_even = doubling_parameters(Family::SOeven, 2, 1, 2);
  CHECK(so_even.H == GroupSpec(Family::SOeven, 16));
  CHECK(so_even.Q.gl_blocks == std::vector<int>{4});
  CHECK(so_even.Q.central == 8);

  const auto gl = doubling_parameters(Family::GL, 1, 2, 1);
  CHECK(gl.H == GroupSpec(Family::GL, 4));
  CHECK(gl.P.gl_blocks == std::vector<int>{2, 2});
  CHECK(gl.Q.gl_blocks == std::vector<int>{1, 2, 1});
  CHECK(gl.orbit == Partition({3, 1}));

  CHECK(alpha(1, 1, 1) == 3);
  CHECK(alpha(1, 3, 1) == 21);
  CHECK(alpha(2, 3, 2) == 75);
  CHECK_THROWS_AS(doubling_parameters(Family::Sp, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(doubling_parameters(Family::SL, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("r-rule and sizes across parameters") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int k = 1; k <= 3; ++k) {
        const auto d = doubling_parameters(Family::Sp, n, m, k);
        const int r = m % 2 ? m : m / 2;
        CHECK(d.r == r);
        CHECK(d.H.size == 4 * n * r * k);
        CHECK(d.Q.radical_dim == radical_q_oracle(n, r, k));
        CHECK(static_cast<long>(d.psiU->terms.size()) == (r * k == 1 ? 0 : 2L * n * (r * k - 2) + 2L * n));
      }
  CHECK(sp_doubling_for_r(1, 2, 1).m == 4);
  CHECK(sp_doubling_for_r(1, 3, 1).m == 3);
}

TEST_CASE("character coordinates for n = 1, r = 3, k = 1") {
  const auto d = doubling_parameters(Family::Sp, 1, 3, 1);
  const std::vector<CharacterTerm> want = {{0, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 7, 1}};
  CHECK(d.psiU->terms == want);
  const auto bad = with_perturbed_character(d);
  CHECK(bad.psiU->terms.size() == 5);
  CHECK(bad.psiU->terms.back() == CharacterTerm{2, 7, 1});
  CHECK_THROWS_AS(with_perturbed_character(doubling_parameters(Family::Sp, 1, 1, 1)), std::invalid_argument);
}

TEST_CASE("psi_U argument checks") {
  const PrimeField f(5);
  const auto so = doubling_parameters(Family::SOeven, 1, 1, 2);
  CHECK_THROWS_WITH(psi_U_value(FpMatrix::identity(f, 8), so), "character unspecified for this family");
  const auto sp = doubling_parameters(Family::Sp, 1, 1, 2);
  auto x = FpMatrix::identity(f, 8);
  x(3, 0) = 1;
  CHECK_THROWS_AS(psi_U_value(x, sp), std::invalid_argument);
  auto g = FpMatrix::identity(f, 2);
  g(0, 0) = 2;  // det 2, not symplectic
  CHECK_THROWS_AS(embed_doubling(g, FpMatrix::identity(f, 2), sp), std::invalid_argument);
}

TEST_CASE("embedding is a homomorphism into H") {
  const std::vector<std::tuple<int, int, int>> configs = {{1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {1, 3, 1}};
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField f(p);
    Rng rng(p * 31);
    for (auto [n, r, k] : configs) {
      const auto d = sp_doubling_for_r(n, r, k);
      const GroupSpec g(Family::Sp, 2 * n);
      for (int t = 0; t < 100; ++t) {
        const auto g1 = random_element(g, f, rng, 16), g2 = random_element(g, f, rng, 16);
        const auto h1 = random_element(g, f, rng, 16), h2 = random_element(g, f, rng, 16);
        const auto e = embed_doubling(g1, g2, d);
        CHECK(is_member(e, d.H));
        CHECK(embed_doubling(g1 * h1, g2 * h2, d) == e * embed_doubling(h1, h2, d));
      }
    }
  }
}

TEST_CASE("faulty embedding is caught") {
  const PrimeField f(5);
  Rng rng(9);
  for (auto [n, r, k] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {1, 1, 2}}) {
    const auto d = sp_doubling_for_r(n, r, k);
    const GroupSpec g(Family::Sp, 2 * n);
    int caught = 0;
    for (int t = 0; t < 50; ++t) {
      const auto g1 = random_element(g, f, rng, 16), g2 = random_element(g, f, rng, 16);
      const auto h1 = random_element(g, f, rng, 16), h2 = random_element(g, f, rng, 16);
      const auto e = embed_doubling_faulty(g1, g2, d);
      if (!is_member(e, d.H) || !(embed_doubling_faulty(g1 * h1, g2 * h2, d) == e * embed_doubling_faulty(h1, h2, d))) ++caught;
    }
    CHECK(caught > 25);
  }
}

TEST_CASE("embedded G x G stabilizes psi_U") {
  for (auto [n, r, k] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {2, 1, 2}, {1, 3, 1}, {1, 2, 2}}) {
    const auto d = sp_doubling_for_r(n, r, k);
    for (std::uint32_t p : {3u, 7u}) {
      const auto rep = check_stabilization(d, p, 200, 5);
      CHECK(rep.failures() == 0);
      CHECK_FALSE(rep.vacuous);
      CHECK(check_stabilization(with_perturbed_character(d), p, 200, 5).failures() > 0);
    }
  }
  CHECK(check_stabilization(sp_doubling_for_r(1, 1, 1), 5, 10, 1).vacuous);
}

TEST_CASE("Levi stabilizer of psi_U for n = 1, r = 1, k = 2 over F_3") {
  const auto count = levi_stabilizer_bruteforce_sp(1, 1, 2, 3);
  CHECK(count.levi_order == 2488320);
  CHECK(count.stabilizer_order == 576);
}

TEST_CASE("dimension equation") {
  const auto a = check_dimension_equation(1, 1, 1);
  CHECK(a.lhs == 6);
  CHECK(a.rhs == 6);
  CHECK(check_dimension_equation(1, 1, 2).lhs == 17);
  CHECK(check_dimension_equation(1, 1, 2).rhs == 17);
  CHECK(check_dimension_equation(1, 3, 1).lhs == 36);
  CHECK(check_dimension_equation(1, 3, 1).rhs == 36);
  for (int n = 1; n <= 6; ++n)
    for (int m : {1, 3, 5})
      for (int k = 1; k <= 6; ++k) {
        const auto rep = check_dimension_equation(n, m, k);
        CHECK(rep.equal);
        const long km = static_cast<long>(k) * m;
        CHECK(rep.half_orbit == 2L * n * n * km * (km - 1));
        CHECK(rep.radical_p == n * km * (2 * n * km + 1));
        CHECK(rep.radical_q == radical_q_oracle(n, m, k));
      }
  CHECK_THROWS_AS(check_dimension_equation(1, 2, 1), std::invalid_argument);
}

TEST_CASE("JSON emission and round trip") {
  const auto d = doubling_parameters(Family::Sp, 1, 3, 1);
  const Json j = to_json(d);
  CHECK(j["H"]["size"] == 12);
  CHECK(j["alpha"] == 21);
  CHECK(j["orbit"] == Json::array({5, 5, 1, 1}));
  CHECK(j["wss_type"] == Json::array({3, 2}));
  CHECK(j["psiU"][0]["row"] == 1);
  CHECK(j["psiU"][0]["col"] == 3);
  CHECK(j["Q"]["radical_dim"] == 30);
  CHECK(to_json(doubling_parameters(Family::SOodd, 1, 1, 2))["H"] == Json({{"family", "SO"}, {"size", 12}}));
  CHECK(to_json(doubling_parameters(Family::SOodd, 1, 1, 2))["psiU"] == "unspecified");

  for (Family f : {Family::GL, Family::Sp, Family::SOodd, Family::SOeven})
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 2; ++k) {
          const std::string text = to_json(doubling_parameters(f, n, m, k)).dump();
          CHECK(to_json(doubling_from_json(Json::parse(text))).dump() == text);
        }
  const WssData w = build_wss(3, 2);
  CHECK(to_json(wss_from_json(to_json(w))) == to_json(w));

  Json broken = j;
  broken.erase("alpha");
  CHECK_THROWS_AS(doubling_from_json(broken), std::invalid_argument);
  broken = j;
  broken["Q"]["radical_dim"] = 29;
  CHECK_THROWS_AS(doubling_from_json(broken), std::invalid_argument);
  broken = j;
  broken["psiU"][0]["row"] = 0;
  CHECK_THROWS_AS(doubling_from_json(broken), std::invalid_argument);
}
