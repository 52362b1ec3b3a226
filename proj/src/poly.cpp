#include "covdbl/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace covdbl {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

UniPoly UniPoly::binomial(const Rational& c, long a) {
  if (a < 0) throw std::invalid_argument("negative exponent");
  return UniPoly(Rational(1)) - monomial(c, a);
}

UniPoly UniPoly::monomial(const Rational& c, long a) {
  if (a < 0) throw std::invalid_argument("negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(a) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  // the substituted Euler factors are very sparse, so skip zeros on both sides
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
    if (sgn(o.coeffs_[j]) != 0) nz.push_back(j);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j : nz) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  if (sgn(s) == 0) return UniPoly();
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UniPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  const Rational lead_inv = 1 / b.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  for (long i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    Rational f = top * lead_inv;
    const long shift = i - db;
    for (long j = 0; j <= db; ++j) {
      if (sgn(bc[static_cast<std::size_t>(j)]) == 0) continue;
      rem[static_cast<std::size_t>(shift + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(shift)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

namespace {

UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading());
}

// Coefficients of a scaled to integers, reduced mod prime; empty optional if
// the scaling denominator vanishes mod the prime.
std::vector<std::uint64_t> reduce_integral(const UniPoly& a, std::uint64_t prime) {
  Integer l(1);
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<std::uint64_t> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(prime)));
  }
  return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Degree of gcd mod prime (inputs with nonzero leading coefficient mod p).
long modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.degree() == 0 || b.degree() == 0) return UniPoly(Rational(1));

  // Fast coprimality certificate: for a prime not dividing either leading
  // coefficient, deg gcd mod p >= deg gcd over Q.
  constexpr std::array<std::uint64_t, 3> primes{2147483647ULL, 2147483629ULL, 2147483587ULL};
  for (std::uint64_t p : primes) {
    auto ap = reduce_integral(a, p);
    auto bp = reduce_integral(b, p);
    if (ap.back() == 0 || bp.back() == 0) continue;
    if (modular_gcd_degree(std::move(ap), std::move(bp), p) == 0) return UniPoly(Rational(1));
    break;
  }

  UniPoly x = make_monic(a);
  UniPoly y = make_monic(b);
  while (!y.is_zero()) {
    UniPoly r = make_monic(divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly substitute_argument(const UniPoly& f, long a, const Rational& c) {
  if (a < 1) throw std::invalid_argument("substitution exponent must be >= 1");
  if (sgn(c) == 0) throw std::invalid_argument("substitution scale must be nonzero");
  if (f.is_zero()) return f;
  std::vector<Rational> out(static_cast<std::size_t>(f.degree() * a) + 1, Rational(0));
  Rational cpow(1);
  for (long i = 0; i <= f.degree(); ++i) {
    const Rational& fi = f.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(fi) != 0) out[static_cast<std::size_t>(i * a)] = fi * cpow;
    cpow *= c;
  }
  return UniPoly(std::move(out));
}

namespace {

UniPoly parse_term(std::string_view term, bool negative) {
  if (term.empty()) throw std::invalid_argument("empty polynomial term");
  auto tpos = term.find('t');
  Rational coef(1);
  long exp = 0;
  if (tpos == std::string_view::npos) {
    coef = parse_rational(term);
  } else {
    std::string_view c = term.substr(0, tpos);
    if (!c.empty() && c.back() == '*') c.remove_suffix(1);
    if (!c.empty()) coef = parse_rational(c);
    std::string_view e = term.substr(tpos + 1);
    if (e.empty()) {
      exp = 1;
    } else {
      if (e.front() != '^' || e.size() < 2) throw std::invalid_argument("malformed exponent in term");
      e.remove_prefix(1);
      for (char ch : e)
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("malformed exponent in term");
      exp = std::stol(std::string(e));
    }
  }
  return UniPoly::monomial(negative ? Rational(-coef) : coef, exp);
}

std::string strip_ws(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

UniPoly parse_poly(std::string_view text) {
  const std::string compact = strip_ws(text);
  std::string_view s = strip_parens(compact);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  UniPoly acc;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  std::size_t start = i;
  for (; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      acc = acc + parse_term(s.substr(start, i - start), negative);
      if (i < s.size()) negative = s[i] == '-';
      start = i + 1;
    }
  }
  return acc;
}

RationalFunc::RationalFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  return normalize_ratfunc(RationalFunc(num_ * o.num_, den_ * o.den_));
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
  if (o.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return normalize_ratfunc(RationalFunc(num_ * o.den_, den_ * o.num_));
}

Rational RationalFunc::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(t) / d;
}

std::string RationalFunc::str() const { return num_.str() + " / " + den_.str(); }

RationalFunc normalize_ratfunc(const RationalFunc& r) {
  if (r.denominator().is_zero()) throw std::domain_error("degenerate rational function");
  if (r.numerator().is_zero()) return RationalFunc(UniPoly(), UniPoly(Rational(1)));
  UniPoly g = gcd(r.numerator(), r.denominator());
  UniPoly num = r.numerator();
  UniPoly den = r.denominator();
  if (g.degree() > 0) {
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
  }
  const Rational c0 = den.coeff(0);
  if (sgn(c0) == 0) throw std::domain_error("degenerate rational function: pole at t = 0");
  const Rational s = 1 / c0;
  return RationalFunc(num.scaled(s), den.scaled(s));
}

RationalFunc parse_ratfunc(std::string_view text) {
  auto sep = text.find(" / ");
  if (sep == std::string_view::npos) return RationalFunc(parse_poly(text), UniPoly(Rational(1)));
  return RationalFunc(parse_poly(text.substr(0, sep)), parse_poly(text.substr(sep + 3)));
}

}  // namespace covdbl
