#include "covdbl/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "covdbl/field.hpp"

namespace covdbl {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = strip(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer in rational literal");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
    }
  }
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(parse_integer(text));
  } else {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    r = Rational(num, den);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (sgn(r) == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  // num/den is already in lowest terms
  return Rational(num, den);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw std::invalid_argument("prime field requires a prime p < 65536, got " + std::to_string(p));
  }
}

PrimeField::Elem PrimeField::from_rational(const Rational& r) const {
  unsigned long num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p_);
  unsigned long den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p_);
  if (den == 0) throw std::domain_error("denominator divisible by p");
  return mul(static_cast<Elem>(num), inv(static_cast<Elem>(den)));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace covdbl
