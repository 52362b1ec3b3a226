// covdbl: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parameter error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "covdbl/doubling.hpp"
#include "covdbl/io.hpp"
#include "covdbl/lfactors.hpp"
#include "covdbl/verify.hpp"
#include "covdbl/wss.hpp"

using namespace covdbl;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string family = "sp";
  int n = 1, m = 1, k = 1;
  std::uint32_t p = 5;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string mu, chi;
  std::string q = "2";
  std::string which = "tensor";
  std::string out = "json";
  std::string out_file;
  std::string fault = "none";
  int n_max = 6, k_max = 6;
  std::string m_list = "1,3,5";
  std::string kind = "wss";
  int a = 2, b = 2;
  unsigned threads = 1;
  std::uint64_t budget = kEnumerationBudget;
};

struct Output {
  std::string body;
  int code = kOk;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rational> parse_params(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const auto& x : split_commas(s)) out.push_back(parse_rational(x));
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Output cmd_data(const Options& o) {
  const DoublingData d = doubling_parameters(parse_family(o.family), o.n, o.m, o.k);
  if (o.out == "json") return {render(to_json(d))};
  std::ostringstream os;
  os << "G = " << family_name(d.family) << ", n = " << d.n << ", m = " << d.m << ", k = " << d.k << ", r = " << d.r
     << "\n";
  os << "H = " << group_label(d.H.family) << "_" << d.H.size << "\n";
  os << "P: gl blocks " << Json(d.P.gl_blocks).dump() << ", central " << d.P.central << ", dim U(P) = " << d.P.radical_dim
     << "\n";
  os << "Q: gl blocks " << Json(d.Q.gl_blocks).dump() << ", central " << d.Q.central << ", dim U = " << d.Q.radical_dim
     << "\n";
  os << "orbit " << d.orbit.str() << ", wss type (" << d.wss_type.first << "," << d.wss_type.second
     << "), alpha = " << d.alpha << "\n";
  if (d.psiU) {
    os << "psi_U terms (1-based):";
    for (const auto& t : d.psiU->terms) os << " (" << t.row + 1 << "," << t.col + 1 << ")";
    os << "\n";
  } else {
    os << "psi_U: unspecified\n";
  }
  return {os.str()};
}

Output cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.family = parse_family(o.family);
  cfg.n = o.n;
  cfg.m = o.m;
  cfg.k = o.k;
  cfg.p = o.p;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.fault = o.fault == "psiU" ? Fault::PsiU : o.fault == "embedding" ? Fault::Embedding : Fault::None;
  const VerifyReport rep = run_verify(cfg);
  return {o.out == "json" ? render(to_json(rep)) : to_text(rep), rep.passed() ? kOk : kCheckFailed};
}

Output cmd_dimeq(const Options& o) {
  if (o.n_max < 1 || o.k_max < 1) throw std::invalid_argument("--n-max and --k-max must be >= 1");
  std::vector<int> ms;
  for (const auto& s : split_commas(o.m_list)) {
    const int m = std::stoi(s);
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("--m-list takes odd positive integers");
    ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end());
  bool all_equal = true;
  Json rows = Json::array();
  std::ostringstream os;
  os << "n m k lhs rhs equal\n";
  for (int n = 1; n <= o.n_max; ++n)
    for (int m : ms)
      for (int k = 1; k <= o.k_max; ++k) {
        const DimensionReport r = check_dimension_equation(n, m, k);
        all_equal = all_equal && r.equal;
        rows.push_back({{"n", n}, {"m", m}, {"k", k}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}});
        os << n << " " << m << " " << k << " " << r.lhs << " " << r.rhs << " " << (r.equal ? "yes" : "NO") << "\n";
      }
  os << rows.size() << " rows, " << (all_equal ? "all equal" : "MISMATCH") << "\n";
  Json j;
  j["rows"] = rows;
  j["all_equal"] = all_equal;
  return {o.out == "json" ? render(j) : os.str(), all_equal ? kOk : kCheckFailed};
}

Output cmd_stabilizer(const Options& o) {
  StabilizerCount count;
  Integer expected;
  Json j;
  j["kind"] = o.kind;
  if (o.kind == "wss") {
    const WssData w = build_wss(o.a, o.b);
    count = levi_stabilizer_bruteforce(w, o.p, o.threads, o.budget);
    expected = group_order(GroupSpec(Family::GL, o.b), o.p);
    j["a"] = o.a;
    j["b"] = o.b;
  } else {
    const DoublingData d = doubling_parameters(parse_family(o.family), o.n, o.m, o.k);
    count = levi_stabilizer_bruteforce_sp(d, o.p, o.threads, o.budget);
    const Integer g = group_order(GroupSpec(Family::Sp, 2 * o.n), o.p);
    expected = g * g;
    j["n"] = o.n;
    j["m"] = o.m;
    j["k"] = o.k;
    j["r"] = d.r;
  }
  const bool match = Integer(static_cast<unsigned long>(count.stabilizer_order)) == expected;
  j["p"] = o.p;
  j["levi_order"] = count.levi_order;
  j["stabilizer_order"] = count.stabilizer_order;
  j["expected"] = expected.get_str();
  j["matches_expected"] = match;
  std::ostringstream os;
  os << o.kind << " stabilizer over F_" << o.p << ": Levi order " << count.levi_order << ", stabilizer order "
     << count.stabilizer_order << ", expected " << expected.get_str() << (match ? " (match)" : " (MISMATCH)") << "\n";
  return {o.out == "json" ? render(j) : os.str(), match ? kOk : kCheckFailed};
}

Output cmd_lfactor(const Options& o) {
  SatakeData sd;
  sd.mu = parse_params(o.mu);
  sd.chi = parse_params(o.chi);
  sd.q = parse_rational(o.q);
  sd.m = o.m;
  if (sd.chi.empty()) throw std::invalid_argument("--chi is required");
  if (o.which == "tensor" && sd.mu.empty()) throw std::invalid_argument("--mu is required for the tensor factor");
  FactorList f;
  if (o.which == "tensor") f = tensor_factors(sd);
  else if (o.which == "std") f = standard_factors(sd);
  else if (o.which == "ext2") f = ext_sq_factors(sd);
  else f = sym_sq_factors(sd);
  const UniPoly den = expand(f);
  Json j;
  j["which"] = o.which;
  j["m"] = o.m;
  j["factored"] = factored_str(f);
  j["denominator"] = den.str();
  j["degree"] = den.degree();
  std::ostringstream os;
  os << "L = 1 / " << factored_str(f) << "\n";
  os << "denominator: " << den.str() << "\n";
  return {o.out == "json" ? render(j) : os.str()};
}

Output cmd_rhs(const Options& o) {
  SatakeData sd;
  sd.mu = parse_params(o.mu);
  sd.chi = parse_params(o.chi);
  sd.q = parse_rational(o.q);
  sd.m = o.m;
  if (sd.mu.empty()) sd.mu.assign(static_cast<std::size_t>(o.n), Rational(1));
  if (sd.chi.empty()) sd.chi.assign(static_cast<std::size_t>(o.k), Rational(1));
  const RhsAssembly rhs = thloc1_assemble(sd, o.n, o.k);
  const bool audit = rhs.raw_num_degree == rhs.audit_num_degree && rhs.raw_den_degree == rhs.audit_den_degree;
  std::ostringstream os;
  os << "alpha = " << rhs.alpha << "\n";
  os << "numerator: " << rhs.value.numerator().str() << "\n";
  os << "denominator: " << rhs.value.denominator().str() << "\n";
  os << "unreduced degrees: num " << rhs.raw_num_degree << ", den " << rhs.raw_den_degree
     << (audit ? " (match closed form)" : " (CLOSED FORM MISMATCH)") << "\n";
  return {o.out == "json" ? render(to_json(rhs)) : os.str(), audit ? kOk : kCheckFailed};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubling-construction data, verification suites and local L-factors"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> families{"gl", "sp", "so_odd", "so_even"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out-file", o.out_file, "Write the report to this file instead of stdout");
  };
  auto shape = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Group family")->check(CLI::IsMember(families));
    sub->add_option("--n", o.n)->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "Cover degree")->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k)->check(CLI::PositiveNumber);
  };

  auto* data = app.add_subcommand("data", "Doubling data as JSON");
  shape(data);
  common(data);

  auto* verify = app.add_subcommand("verify", "Randomized verification suites over F_p");
  shape(verify);
  common(verify);
  verify->add_option("--p", o.p, "Odd prime");
  verify->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed);
  verify->add_option("--inject-fault", o.fault, "Negative control")->check(CLI::IsMember({"none", "psiU", "embedding"}));

  auto* dimeq = app.add_subcommand("dimeq", "Dimension-equation sweep (symplectic, odd m)");
  common(dimeq);
  dimeq->add_option("--n-max", o.n_max);
  dimeq->add_option("--k-max", o.k_max);
  dimeq->add_option("--m-list", o.m_list, "Comma-separated odd m values");

  auto* stab = app.add_subcommand("stabilizer", "Brute-force Levi stabilizer over F_p");
  shape(stab);
  common(stab);
  stab->add_option("--kind", o.kind)->check(CLI::IsMember({"wss", "doubling"}));
  stab->add_option("--a", o.a)->check(CLI::PositiveNumber);
  stab->add_option("--b", o.b)->check(CLI::PositiveNumber);
  stab->add_option("--p", o.p);
  stab->add_option("--threads", o.threads);
  stab->add_option("--budget", o.budget, "Maximum Levi order to enumerate");

  auto* lf = app.add_subcommand("lfactor", "Unramified Euler factor");
  common(lf);
  lf->add_option("--which", o.which)->check(CLI::IsMember({"tensor", "std", "ext2", "sym2"}));
  lf->add_option("--mu", o.mu, "Comma-separated rationals");
  lf->add_option("--chi", o.chi, "Comma-separated rationals");
  lf->add_option("--m", o.m)->check(CLI::PositiveNumber);
  lf->add_option("--q", o.q);

  auto* rhs = app.add_subcommand("rhs", "Unramified right-hand side as a rational function in t = q^-s");
  common(rhs);
  rhs->add_option("--n", o.n)->check(CLI::PositiveNumber);
  rhs->add_option("--m", o.m)->check(CLI::PositiveNumber);
  rhs->add_option("--k", o.k)->check(CLI::PositiveNumber);
  rhs->add_option("--mu", o.mu, "Comma-separated rationals (default all 1)");
  rhs->add_option("--chi", o.chi, "Comma-separated rationals (default all 1)");
  rhs->add_option("--q", o.q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output result;
  try {
    if (*data) result = cmd_data(o);
    else if (*verify) result = cmd_verify(o);
    else if (*dimeq) result = cmd_dimeq(o);
    else if (*stab) result = cmd_stabilizer(o);
    else if (*lf) result = cmd_lfactor(o);
    else result = cmd_rhs(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out_file.empty()) {
    std::cout << result.body;
  } else {
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out_file << "\n";
      return kUsage;
    }
    f << result.body;
  }
  return result.code;
}
