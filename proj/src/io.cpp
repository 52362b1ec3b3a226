#include "covdbl/io.hpp"

#include <stdexcept>

namespace covdbl {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("JSON field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, const char* key) {
  if (!v.is_array()) throw std::invalid_argument(std::string("JSON field '") + key + "' must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string("JSON field '") + key + "' must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const GroupSpec& g) {
  Json j;
  j["family"] = group_label(g.family);
  j["size"] = g.size;
  return j;
}

Json to_json(const ParabolicSpec& p) {
  Json j;
  j["ambient"] = to_json(p.ambient);
  j["gl_blocks"] = p.gl_blocks;
  j["central"] = p.central;
  j["radical_dim"] = p.radical_dim;
  return j;
}

Json to_json(const CharacterFunctional& psi) {
  Json arr = Json::array();
  for (const auto& t : psi.terms) {
    Json e;
    e["row"] = t.row + 1;
    e["col"] = t.col + 1;
    e["coef"] = to_string(t.coef);
    arr.push_back(std::move(e));
  }
  return arr;
}

Json to_json(const WssData& w) {
  Json j = to_json(w.radical);
  j["a"] = w.a;
  j["b"] = w.b;
  j["psi"] = to_json(w.psi);
  return j;
}

Json to_json(const DoublingData& d) {
  Json j;
  j["family"] = family_name(d.family);
  j["n"] = d.n;
  j["m"] = d.m;
  j["k"] = d.k;
  j["r"] = d.r;
  j["H"] = to_json(d.H);
  j["P"] = to_json(d.P);
  j["Q"] = to_json(d.Q);
  if (d.psiU) {
    j["psiU"] = to_json(*d.psiU);
  } else {
    j["psiU"] = "unspecified";
  }
  j["orbit"] = d.orbit.parts();
  j["wss_type"] = {d.wss_type.first, d.wss_type.second};
  j["alpha"] = d.alpha;
  return j;
}

GroupSpec group_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw std::invalid_argument("group family must be a string");
  const int size = int_field(j, "size");
  return GroupSpec(parse_family(fam.get<std::string>(), size), size);
}

ParabolicSpec parabolic_from_json(const Json& j) {
  ParabolicSpec p = parabolic(group_from_json(field(j, "ambient")), int_list(field(j, "gl_blocks"), "gl_blocks"),
                              int_field(j, "central"));
  if (j.contains("radical_dim") && int_field(j, "radical_dim") != p.radical_dim) {
    throw std::invalid_argument("stored radical_dim disagrees with the block structure");
  }
  return p;
}

CharacterFunctional character_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("character must be an array of terms");
  CharacterFunctional psi;
  for (const auto& e : j) {
    const Json& coef = field(e, "coef");
    if (!coef.is_string()) throw std::invalid_argument("character coefficient must be a string");
    const int row = int_field(e, "row");
    const int col = int_field(e, "col");
    if (row < 1 || col < 1) throw std::invalid_argument("character coordinates are 1-based");
    psi.terms.push_back({row - 1, col - 1, parse_rational(coef.get<std::string>())});
  }
  return psi;
}

WssData wss_from_json(const Json& j) {
  WssData w = build_wss(int_field(j, "a"), int_field(j, "b"));
  w.psi = character_from_json(field(j, "psi"));
  return w;
}

DoublingData doubling_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw std::invalid_argument("family must be a string");
  DoublingData d;
  d.family = parse_family(fam.get<std::string>());
  d.n = int_field(j, "n");
  d.m = int_field(j, "m");
  d.k = int_field(j, "k");
  d.r = int_field(j, "r");
  d.c = c_of_n(d.family, d.n);
  d.H = group_from_json(field(j, "H"));
  d.P = parabolic_from_json(field(j, "P"));
  d.Q = parabolic_from_json(field(j, "Q"));
  const Json& psi = field(j, "psiU");
  if (psi.is_string()) {
    if (psi.get<std::string>() != "unspecified") throw std::invalid_argument("psiU must be a term array or \"unspecified\"");
  } else {
    d.psiU = character_from_json(psi);
  }
  d.orbit = Partition(int_list(field(j, "orbit"), "orbit"));
  const auto wss = int_list(field(j, "wss_type"), "wss_type");
  if (wss.size() != 2) throw std::invalid_argument("wss_type must have two entries");
  d.wss_type = {wss[0], wss[1]};
  const Json& a = field(j, "alpha");
  if (!a.is_number_integer()) throw std::invalid_argument("alpha must be an integer");
  d.alpha = a.get<long>();
  return d;
}

Json to_json(const RhsAssembly& rhs) {
  Json j;
  j["numerator"] = rhs.value.numerator().str();
  j["denominator"] = rhs.value.denominator().str();
  j["alpha"] = rhs.alpha;
  j["degrees"] = {{"num", rhs.raw_num_degree}, {"den", rhs.raw_den_degree}};
  return j;
}

}  // namespace covdbl
