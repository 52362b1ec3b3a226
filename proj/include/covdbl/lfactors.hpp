#pragma once

#include <string>
#include <vector>

#include "covdbl/poly.hpp"
#include "covdbl/rational.hpp"

namespace covdbl {

/// Unramified data: mu_i (n values), chi_j (k values), residue field size q
/// and cover degree m. L-factors use the m-th powers of mu and chi.
struct SatakeData {
  std::vector<Rational> mu;
  std::vector<Rational> chi;
  Rational q{2};
  int m = 1;

  /// Throws std::invalid_argument on a zero parameter, q <= 1 or m < 1.
  void validate() const;
};

/// 1 - c t^a
struct Binomial {
  Rational c;
  long a = 1;
  bool operator==(const Binomial&) const = default;
};

/// Product of binomials, kept unexpanded so that identical factors cancel
/// before multiplication.
using FactorList = std::vector<Binomial>;

UniPoly expand(const FactorList& factors);
long total_degree(const FactorList& factors);

/// "(1 - 6*t)(1 - 3/2*t)(1 - 3*t)"; repeated factors as "(1 - t)^2" in
/// order of first appearance; "1" for the empty product.
std::string factored_str(const FactorList& factors);

/// Replace t by c t^a in every factor: L(a s + b) in t = q^{-s} is the
/// substitution with c = q^{-b}.
FactorList substitute(const FactorList& factors, long a, const Rational& c);

/// Denominators of the Euler factors (the L-factor is 1 / expand(...)).
///   tensor: prod_{i,j} (1 - mu_i^m chi_j^m t)(1 - mu_i^{-m} chi_j^m t)(1 - chi_j^m t)
///   standard: prod_j (1 - chi_j^m t)
///   ext_sq: prod_{i<j} (1 - chi_i^m chi_j^m t)
///   sym_sq: prod_{i<=j} (1 - chi_i^m chi_j^m t)
FactorList tensor_factors(const SatakeData& sd);
FactorList standard_factors(const SatakeData& sd);
FactorList ext_sq_factors(const SatakeData& sd);
FactorList sym_sq_factors(const SatakeData& sd);

RationalFunc lfactor_tensor(const SatakeData& sd);
RationalFunc lfactor_standard(const SatakeData& sd);
RationalFunc lfactor_ext_sq(const SatakeData& sd);
RationalFunc lfactor_sym_sq(const SatakeData& sd);

/// Unramified right-hand side as a ratio of substituted factor products:
///   L(alpha s - (alpha-1)/2, pi x tau)
///   / [L(alpha(s-1/2) + nm + 1/2, tau) prod_{j<=nm} L(alpha(2s-1) + 2j, tau, ext^2)
///      prod_{j<=nm-1} L(alpha(2s-1) + 2j + 1, tau, sym^2)]
/// Since L = 1/D, `numerator` collects the D factors of the bottom row and
/// `denominator` the tensor factors.
struct RhsAssembly {
  long alpha = 0;
  FactorList numerator;
  FactorList denominator;
  long raw_num_degree = 0;  // before any cancellation
  long raw_den_degree = 0;
  long audit_num_degree = 0;  // closed-form counts
  long audit_den_degree = 0;
  RationalFunc value;  // normalized
};

/// Throws std::invalid_argument for even m (the identity is stated for odd
/// m = r) and when the parameter counts disagree with (n, k).
RhsAssembly thloc1_assemble(const SatakeData& sd, int n, int k);
RationalFunc thloc1_rhs(const SatakeData& sd, int n, int k);

/// m(2nmk + 1)
long alpha(int n, int m, int k);

/// Closed-form degree counts of the unreduced ratio.
long rhs_numerator_degree(int n, int m, int k);
long rhs_denominator_degree(int n, int m, int k);

}  // namespace covdbl
