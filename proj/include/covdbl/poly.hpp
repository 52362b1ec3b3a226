#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covdbl/rational.hpp"

namespace covdbl {

/// Dense univariate polynomial in t with rational coefficients, ascending
/// degree. Never carries trailing zero coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& constant);  // NOLINT: implicit on purpose, constants are polys

  /// 1 - c t^a
  static UniPoly binomial(const Rational& c, long a);
  static UniPoly monomial(const Rational& c, long a);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long i) const;
  const Rational& leading() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly scaled(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  Rational eval(const Rational& t) const;

  /// "1 - 3*t + 5/2*t^2": ascending degree, "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero iff both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// f(c t^a). Requires a >= 1 and c != 0.
UniPoly substitute_argument(const UniPoly& f, long a, const Rational& c);

/// Inverse of UniPoly::str; also accepts "t", "-t^3", "2*t", "3/4 t^2".
UniPoly parse_poly(std::string_view text);

/// num/den in t. Construction through normalize_ratfunc gives the canonical
/// form: coprime, denominator constant term 1.
class RationalFunc {
 public:
  RationalFunc() : num_(Rational(0)), den_(Rational(1)) {}
  /// Stores the pair verbatim; call normalize_ratfunc for the canonical form.
  RationalFunc(UniPoly num, UniPoly den);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Throws std::domain_error at a pole.
  Rational eval(const Rational& t) const;

  /// "<num> / <den>"
  std::string str() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

/// Cancels the gcd and scales so the denominator has constant term 1.
/// Throws std::domain_error("degenerate rational function") for a zero
/// denominator, and when the reduced denominator vanishes at t = 0.
RationalFunc normalize_ratfunc(const RationalFunc& r);

RationalFunc parse_ratfunc(std::string_view text);

}  // namespace covdbl
