#include <doctest.h>

#include "covdbl/field.hpp"
#include "covdbl/matrix.hpp"
#include "covdbl/poly.hpp"
#include "covdbl/random.hpp"

using namespace covdbl;

namespace {

Rational frac(long long a, long long b) {
  Rational r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

// Laplace expansion along the first row; independent of elimination.
Rational cofactor_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    QMatrix minor(m.field(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Rational term = m(0, c) * cofactor_det(minor);
    acc += (c % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

QMatrix random_qmatrix(Rng& rng, std::size_t n) {
  const Rationals q;
  QMatrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = frac(rng.between(-4, 4), rng.between(1, 3));
  return m;
}

UniPoly random_poly(Rng& rng, int max_degree) {
  std::vector<Rational> c;
  const int d = static_cast<int>(rng.between(0, max_degree));
  for (int i = 0; i <= d; ++i) {
    const Rational x = frac(rng.between(-5, 5), rng.between(1, 4));
    c.push_back(x);
  }
  return UniPoly(c);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational(" 5 ") == Rational(5));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument);
  const PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_rational(Rational(1, 2)) == 4);
  CHECK_THROWS(f.from_rational(Rational(1, 7)));
}

TEST_CASE("matrix determinant matches cofactor expansion") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto m = random_qmatrix(rng, 1 + static_cast<std::size_t>(t % 5));
    CHECK(m.determinant() == cofactor_det(m));
  }
}

TEST_CASE("matrix inverse and rank") {
  Rng rng(12);
  const Rationals q;
  for (int t = 0; t < 40; ++t) {
    const auto m = random_qmatrix(rng, 4);
    const auto inv = m.inverse();
    if (m.determinant() == 0) {
      CHECK_FALSE(inv.has_value());
      CHECK(m.rank() < 4);
    } else {
      REQUIRE(inv.has_value());
      CHECK((m * *inv).is_identity());
      CHECK(m.rank() == 4);
    }
  }
  const auto sing = QMatrix::from_rows(q, {{1, 2}, {2, 4}});
  CHECK(sing.rank() == 1);
  CHECK_THROWS_AS(inverse_or_throw(sing), std::domain_error);
  CHECK_THROWS(QMatrix(q, 2, 3) * QMatrix(q, 2, 3));
  CHECK(reduce_mod(sing, PrimeField(3)).rank() == 1);
}

TEST_CASE("matrix over F_p: mixing fields is rejected") {
  const PrimeField f3(3), f5(5);
  CHECK_THROWS(FpMatrix::identity(f3, 2) * FpMatrix::identity(f5, 2));
}

TEST_CASE("polynomial printing and parsing") {
  const UniPoly p({Rational(1), Rational(-3), Rational(5, 2)});
  CHECK(p.str() == "1 - 3*t + 5/2*t^2");
  CHECK(parse_poly(p.str()) == p);
  CHECK(UniPoly().str() == "0");
  CHECK(parse_poly("-t^3") == UniPoly::monomial(Rational(-1), 3));
  CHECK(parse_poly("3/4 t^2") == UniPoly::monomial(Rational(3, 4), 2));
  CHECK(parse_poly("(1 - t)") == UniPoly::binomial(Rational(1), 1));
  CHECK(UniPoly().degree() == -1);
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto r = random_poly(rng, 6);
    CHECK(parse_poly(r.str()) == r);
  }
}

TEST_CASE("polynomial ring axioms and division") {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
    CHECK((a * b) == (b * a));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      const auto dm = divmod(a, b);
      CHECK((dm.quotient * b + dm.remainder) == a);
      CHECK(dm.remainder.degree() < b.degree());
    }
  }
  CHECK_THROWS(divmod(UniPoly(Rational(1)), UniPoly()));
}

TEST_CASE("gcd divides both inputs and absorbs common factors") {
  Rng rng(15);
  for (int t = 0; t < 150; ++t) {
    const auto a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 3);
    if (c.is_zero() || (a.is_zero() && b.is_zero())) continue;
    const auto g = gcd(a * c, b * c);
    CHECK(g.leading() == 1);
    CHECK(divmod(a * c, g).remainder.is_zero());
    CHECK(divmod(b * c, g).remainder.is_zero());
    CHECK(divmod(g, c.scaled(1 / c.leading())).remainder.is_zero());
  }
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("substitution commutes with evaluation") {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(rng, 5);
    const long a = rng.between(1, 4);
    const Rational c = frac(rng.between(1, 5), rng.between(1, 5));
    const Rational t0 = frac(rng.between(-3, 3), rng.between(1, 4));
    CHECK(substitute_argument(f, a, c).eval(t0) == f.eval(c * pow(t0, a)));
  }
  CHECK_THROWS(substitute_argument(UniPoly(Rational(1)), 0, Rational(1)));
  CHECK_THROWS(substitute_argument(UniPoly(Rational(1)), 1, Rational(0)));
}

TEST_CASE("rational function normalization") {
  const auto one_minus_t = UniPoly::binomial(Rational(1), 1);
  const auto num = one_minus_t * UniPoly::binomial(Rational(2), 1);
  const auto den = one_minus_t * UniPoly::binomial(Rational(3), 1).scaled(Rational(5));
  const auto r = normalize_ratfunc(RationalFunc(num, den));
  CHECK(r.denominator().coeff(0) == 1);
  CHECK(r.denominator() == UniPoly::binomial(Rational(3), 1));
  CHECK(r.numerator() == UniPoly::binomial(Rational(2), 1).scaled(Rational(1, 5)));
  CHECK(parse_ratfunc(r.str()) == r);
  CHECK_THROWS_AS(normalize_ratfunc(RationalFunc(num, UniPoly())), std::domain_error);
  CHECK_THROWS_AS(normalize_ratfunc(RationalFunc(num, UniPoly::monomial(Rational(1), 1))), std::domain_error);
  CHECK_THROWS_AS(r.eval(Rational(1, 3)), std::domain_error);

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 2);
    if (b.is_zero() || c.is_zero() || b.coeff(0) == 0 || c.coeff(0) == 0) continue;
    const auto x = normalize_ratfunc(RationalFunc(a * c, b * c));
    const auto y = normalize_ratfunc(RationalFunc(a, b));
    CHECK(x == y);
    const Rational t0 = frac(rng.between(-3, 3), 7);
    if (b.eval(t0) != 0 && c.eval(t0) != 0) CHECK(x.eval(t0) == a.eval(t0) / b.eval(t0));
  }
}
