#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covdbl/doubling.hpp"
#include "covdbl/io.hpp"

namespace covdbl {

enum class Fault { None, PsiU, Embedding };

std::string fault_name(Fault f);

struct VerifyConfig {
  Family family = Family::Sp;
  int n = 1;
  int m = 1;
  int k = 1;
  std::uint32_t p = 5;
  int trials = 1000;
  std::uint64_t seed = 1;
  Fault fault = Fault::None;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  bool vacuous = false;
  std::vector<std::string> counterexamples;  // at most three

  std::string status() const { return vacuous ? "vacuous (U trivial)" : failures == 0 ? "pass" : "fail"; }
};

struct VerifyReport {
  VerifyConfig config;
  int r = 1;
  std::vector<SuiteResult> suites;

  int total_failures() const;
  bool passed() const { return total_failures() == 0; }
};

/// The faulty embedding of the negative control: mirrored blocks carry g1
/// instead of g1*, and the middle corners come from g1^T.
template <class Field>
Matrix<Field> embed_doubling_faulty(const Matrix<Field>& g1, const Matrix<Field>& g2, const DoublingData& d) {
  const auto n = static_cast<std::size_t>(d.H.size);
  Matrix<Field> out(g1.field(), n, n);
  const int chain = d.chain_length();
  for (int i = 0; i < chain; ++i) {
    out.set_block(static_cast<std::size_t>(d.Q.block_offsets[static_cast<std::size_t>(i)]),
                  static_cast<std::size_t>(d.Q.block_offsets[static_cast<std::size_t>(i)]), g1);
    const std::size_t mi = d.Q.mirror(static_cast<std::size_t>(i));
    out.set_block(static_cast<std::size_t>(d.Q.block_offsets[mi]), static_cast<std::size_t>(d.Q.block_offsets[mi]), g1);
  }
  const auto off = static_cast<std::size_t>(d.Q.block_offsets[static_cast<std::size_t>(chain)]);
  out.set_block(off, off, interleave_middle(g1.transpose(), g2));
  return out;
}

/// Membership, homomorphism, additivity (with commutator vanishing),
/// stabilization and coefficient-invariance suites for the symplectic
/// doubling data. Suite i draws from Rng(seed, i), so each suite is
/// reproducible on its own. Throws std::invalid_argument for non-Sp
/// families, even or out-of-range p, and for a psi_U fault when U is trivial.
VerifyReport run_verify(const VerifyConfig& cfg);

Json to_json(const VerifyReport& rep);
std::string to_text(const VerifyReport& rep);

}  // namespace covdbl
