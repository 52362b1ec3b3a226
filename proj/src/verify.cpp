#include "covdbl/verify.hpp"

#include <functional>
#include <sstream>

namespace covdbl {

namespace {

constexpr int kSteps = 24;  // root elements per random group element

using Embed = std::function<FpMatrix(const FpMatrix&, const FpMatrix&)>;

void note(SuiteResult& s, int trial, const std::string& what) {
  ++s.failures;
  if (s.counterexamples.size() < 3) s.counterexamples.push_back("trial " + std::to_string(trial) + ": " + what);
}

SuiteResult membership_suite(const DoublingData& d, const PrimeField& fp, const Embed& embed, const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "membership";
  s.trials = cfg.trials;
  const GroupSpec g(Family::Sp, 2 * d.n);
  Rng rng(cfg.seed, 0);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto g1 = random_element(g, fp, rng, kSteps);
    const auto g2 = random_element(g, fp, rng, kSteps);
    if (!is_member(embed(g1, g2), d.H)) note(s, t, "iota(g1, g2) is not in " + group_label(d.H.family) + "_" + std::to_string(d.H.size));
  }
  return s;
}

SuiteResult homomorphism_suite(const DoublingData& d, const PrimeField& fp, const Embed& embed, const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "homomorphism";
  s.trials = cfg.trials;
  const GroupSpec g(Family::Sp, 2 * d.n);
  Rng rng(cfg.seed, 1);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto g1 = random_element(g, fp, rng, kSteps);
    const auto g2 = random_element(g, fp, rng, kSteps);
    const auto h1 = random_element(g, fp, rng, kSteps);
    const auto h2 = random_element(g, fp, rng, kSteps);
    if (!(embed(g1 * h1, g2 * h2) == embed(g1, g2) * embed(h1, h2))) note(s, t, "iota(g h) != iota(g) iota(h)");
  }
  return s;
}

SuiteResult additivity_suite(const DoublingData& d, const PrimeField& fp, const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "additivity";
  s.trials = cfg.trials;
  if (d.unipotent_trivial()) {
    s.vacuous = true;
    return s;
  }
  Rng rng(cfg.seed, 2);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto u = random_radical_element(d.Q, fp, rng);
    const auto v = random_radical_element(d.Q, fp, rng);
    const auto sum = fp.add(psi_U_value(u, d), psi_U_value(v, d));
    if (psi_U_value(u * v, d) != sum) {
      note(s, t, "psi_U(uv) != psi_U(u) + psi_U(v)");
      continue;
    }
    const auto comm = u * v * inverse_or_throw(u) * inverse_or_throw(v);
    if (psi_U_value(comm, d) != 0) note(s, t, "psi_U does not vanish on [u, v]");
  }
  return s;
}

SuiteResult stabilization_suite(const DoublingData& d, const PrimeField& fp, const Embed& embed, const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "stabilization";
  s.trials = cfg.trials;
  if (d.unipotent_trivial()) {
    s.vacuous = true;
    return s;
  }
  const GroupSpec g(Family::Sp, 2 * d.n);
  Rng rng(cfg.seed, 3);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto g1 = random_element(g, fp, rng, kSteps);
    const auto g2 = random_element(g, fp, rng, kSteps);
    const auto u = random_radical_element(d.Q, fp, rng);
    const auto iota = embed(g1, g2);
    const auto inv = iota.inverse();
    if (!inv) {
      note(s, t, "iota(g1, g2) is singular");
      continue;
    }
    const auto conj = iota * u * *inv;
    if (!d.Q.in_radical_pattern(conj)) {
      note(s, t, "conjugate left U");
      continue;
    }
    const auto before = psi_U_value(u, d);
    const auto after = psi_U_value(conj, d);
    if (before != after) note(s, t, "psi_U " + std::to_string(before) + " -> " + std::to_string(after));
  }
  return s;
}

SuiteResult coefficient_suite(const DoublingData& d, const PrimeField& fp, const VerifyConfig& cfg) {
  SuiteResult s;
  s.name = "wss_invariance";
  s.trials = cfg.trials;
  const WssData w = build_wss(d.wss_type.first, d.wss_type.second);
  if (w.radical.radical_dim == 0) {
    s.vacuous = true;
    return s;
  }
  const GroupSpec gl(Family::GL, w.b);
  Rng rng(cfg.seed, 4);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto h = diagonal_embed(random_element(gl, fp, rng, kSteps), w.a);
    const auto v = random_radical_element(w.radical, fp, rng);
    const auto conj = h * v * inverse_or_throw(h);
    if (psi_ab_value(conj, w) != psi_ab_value(v, w)) note(s, t, "psi_{a,b} moved by diag(h)");
  }
  return s;
}

}  // namespace

std::string fault_name(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::PsiU: return "psiU";
    case Fault::Embedding: return "embedding";
  }
  return "none";
}

int VerifyReport::total_failures() const {
  int total = 0;
  for (const auto& s : suites) total += s.failures;
  return total;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  if (cfg.family != Family::Sp) throw std::invalid_argument("verification suites need the symplectic family (psi_U is unspecified otherwise)");
  if (cfg.p < 3 || cfg.p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const PrimeField fp(cfg.p);
  DoublingData d = doubling_parameters(cfg.family, cfg.n, cfg.m, cfg.k);
  if (cfg.fault == Fault::PsiU) d = with_perturbed_character(std::move(d));

  Embed embed;
  if (cfg.fault == Fault::Embedding) {
    embed = [&d](const FpMatrix& g1, const FpMatrix& g2) { return embed_doubling_faulty(g1, g2, d); };
  } else {
    embed = [&d](const FpMatrix& g1, const FpMatrix& g2) { return embed_doubling(g1, g2, d); };
  }

  VerifyReport rep;
  rep.config = cfg;
  rep.r = d.r;
  rep.suites.push_back(membership_suite(d, fp, embed, cfg));
  rep.suites.push_back(homomorphism_suite(d, fp, embed, cfg));
  rep.suites.push_back(additivity_suite(d, fp, cfg));
  rep.suites.push_back(stabilization_suite(d, fp, embed, cfg));
  rep.suites.push_back(coefficient_suite(d, fp, cfg));
  return rep;
}

Json to_json(const VerifyReport& rep) {
  const auto& c = rep.config;
  Json j;
  j["family"] = family_name(c.family);
  j["n"] = c.n;
  j["m"] = c.m;
  j["k"] = c.k;
  j["r"] = rep.r;
  j["p"] = c.p;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["fault"] = fault_name(c.fault);
  Json suites = Json::array();
  for (const auto& s : rep.suites) {
    Json e;
    e["name"] = s.name;
    e["status"] = s.status();
    e["trials"] = s.trials;
    e["failures"] = s.failures;
    e["counterexamples"] = s.counterexamples;
    suites.push_back(std::move(e));
  }
  j["suites"] = std::move(suites);
  j["total_failures"] = rep.total_failures();
  return j;
}

std::string to_text(const VerifyReport& rep) {
  const auto& c = rep.config;
  std::ostringstream os;
  os << "verify family=" << family_name(c.family) << " n=" << c.n << " m=" << c.m << " k=" << c.k << " r=" << rep.r
     << " p=" << c.p << " trials=" << c.trials << " seed=" << c.seed << " fault=" << fault_name(c.fault) << "\n";
  for (const auto& s : rep.suites) {
    os << "  " << s.name << ": " << s.status() << " (trials " << s.trials << ", failures " << s.failures << ")\n";
    for (const auto& ce : s.counterexamples) os << "    " << ce << "\n";
  }
  os << "total failures: " << rep.total_failures() << "\n";
  return os.str();
}

}  // namespace covdbl
