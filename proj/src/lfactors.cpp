#include "covdbl/lfactors.hpp"

#include <algorithm>
#include <stdexcept>

namespace covdbl {

namespace {

std::vector<Rational> powers(const std::vector<Rational>& xs, int m) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(pow(x, m));
  return out;
}

RationalFunc reciprocal(const FactorList& factors) { return RationalFunc(UniPoly(Rational(1)), expand(factors)); }

// Removes binomials common to both lists (as multisets).
void cancel_common(FactorList& num, FactorList& den) {
  FactorList kept;
  for (const auto& f : num) {
    auto it = std::find(den.begin(), den.end(), f);
    if (it != den.end()) {
      den.erase(it);
    } else {
      kept.push_back(f);
    }
  }
  num = std::move(kept);
}

}  // namespace

void SatakeData::validate() const {
  if (m < 1) throw std::invalid_argument("cover degree m must be >= 1");
  if (q <= 1) throw std::invalid_argument("q must exceed 1");
  for (const auto& x : mu)
    if (x == 0) throw std::invalid_argument("Satake parameters must be nonzero");
  for (const auto& x : chi)
    if (x == 0) throw std::invalid_argument("Satake parameters must be nonzero");
}

UniPoly expand(const FactorList& factors) {
  UniPoly out(Rational(1));
  for (const auto& f : factors) out = out * UniPoly::binomial(f.c, f.a);
  return out;
}

long total_degree(const FactorList& factors) {
  long d = 0;
  for (const auto& f : factors)
    if (f.c != 0) d += f.a;
  return d;
}

std::string factored_str(const FactorList& factors) {
  std::vector<std::pair<Binomial, int>> groups;
  for (const auto& f : factors) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == f; });
    if (it == groups.end()) {
      groups.emplace_back(f, 1);
    } else {
      ++it->second;
    }
  }
  if (groups.empty()) return "1";
  std::string out;
  for (const auto& [f, mult] : groups) {
    out += "(" + UniPoly::binomial(f.c, f.a).str() + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

FactorList substitute(const FactorList& factors, long a, const Rational& c) {
  if (a < 1) throw std::invalid_argument("substitution exponent must be >= 1");
  FactorList out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back({f.c * pow(c, f.a), f.a * a});
  return out;
}

FactorList tensor_factors(const SatakeData& sd) {
  sd.validate();
  const auto mu = powers(sd.mu, sd.m);
  const auto chi = powers(sd.chi, sd.m);
  FactorList out;
  for (const auto& x : mu) {
    for (const auto& y : chi) {
      out.push_back({x * y, 1});
      out.push_back({y / x, 1});
      out.push_back({y, 1});
    }
  }
  return out;
}

FactorList standard_factors(const SatakeData& sd) {
  sd.validate();
  FactorList out;
  for (const auto& y : powers(sd.chi, sd.m)) out.push_back({y, 1});
  return out;
}

FactorList ext_sq_factors(const SatakeData& sd) {
  sd.validate();
  const auto chi = powers(sd.chi, sd.m);
  FactorList out;
  for (std::size_t i = 0; i < chi.size(); ++i)
    for (std::size_t j = i + 1; j < chi.size(); ++j) out.push_back({chi[i] * chi[j], 1});
  return out;
}

FactorList sym_sq_factors(const SatakeData& sd) {
  sd.validate();
  const auto chi = powers(sd.chi, sd.m);
  FactorList out;
  for (std::size_t i = 0; i < chi.size(); ++i)
    for (std::size_t j = i; j < chi.size(); ++j) out.push_back({chi[i] * chi[j], 1});
  return out;
}

RationalFunc lfactor_tensor(const SatakeData& sd) { return reciprocal(tensor_factors(sd)); }
RationalFunc lfactor_standard(const SatakeData& sd) { return reciprocal(standard_factors(sd)); }
RationalFunc lfactor_ext_sq(const SatakeData& sd) { return reciprocal(ext_sq_factors(sd)); }
RationalFunc lfactor_sym_sq(const SatakeData& sd) { return reciprocal(sym_sq_factors(sd)); }

long alpha(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("n, m, k must be >= 1");
  return static_cast<long>(m) * (2L * n * m * k + 1);
}

long rhs_numerator_degree(int n, int m, int k) {
  const long a = alpha(n, m, k);
  const long nm = static_cast<long>(n) * m;
  return a * k + 2 * a * (static_cast<long>(k) * (k - 1) / 2) * nm + 2 * a * (static_cast<long>(k) * (k + 1) / 2) * (nm - 1);
}

long rhs_denominator_degree(int n, int m, int k) { return 3L * n * k * alpha(n, m, k); }

RhsAssembly thloc1_assemble(const SatakeData& sd, int n, int k) {
  sd.validate();
  if (sd.m % 2 == 0) {
    throw std::invalid_argument("the unramified identity requires odd m (hypothesis: m = r is odd); got m = " +
                                std::to_string(sd.m));
  }
  if (sd.mu.size() != static_cast<std::size_t>(n) || sd.chi.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " mu and " + std::to_string(k) +
                                " chi parameters");
  }
  RhsAssembly out;
  const long a = alpha(n, sd.m, k);
  const long nm = static_cast<long>(n) * sd.m;
  out.alpha = a;
  // argument a s + b  ->  t |-> q^{-b} t^a
  auto shift = [&](const FactorList& f, long slope, long b) { return substitute(f, slope, pow(sd.q, -b)); };

  out.denominator = shift(tensor_factors(sd), a, -(a - 1) / 2);
  out.numerator = shift(standard_factors(sd), a, nm + (1 - a) / 2);
  const FactorList ext = ext_sq_factors(sd);
  const FactorList sym = sym_sq_factors(sd);
  for (long j = 1; j <= nm; ++j) {
    const auto part = shift(ext, 2 * a, 2 * j - a);
    out.numerator.insert(out.numerator.end(), part.begin(), part.end());
  }
  for (long j = 1; j <= nm - 1; ++j) {
    const auto part = shift(sym, 2 * a, 2 * j + 1 - a);
    out.numerator.insert(out.numerator.end(), part.begin(), part.end());
  }
  out.raw_num_degree = total_degree(out.numerator);
  out.raw_den_degree = total_degree(out.denominator);
  out.audit_num_degree = rhs_numerator_degree(n, sd.m, k);
  out.audit_den_degree = rhs_denominator_degree(n, sd.m, k);

  FactorList num = out.numerator;
  FactorList den = out.denominator;
  cancel_common(num, den);
  out.value = normalize_ratfunc(RationalFunc(expand(num), expand(den)));
  return out;
}

RationalFunc thloc1_rhs(const SatakeData& sd, int n, int k) { return thloc1_assemble(sd, n, k).value; }

}  // namespace covdbl
