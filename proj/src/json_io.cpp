#include "k3/json_io.hpp"

#include <nlohmann/json.hpp>

namespace k3 {

json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::domain_error("expected rational as integer or \"p/q\" string");
}

json to_json(const UniPoly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_json(p.coeff(i)));
  return json{{"coeffs", arr}, {"string", p.str()}};
}

UniPoly unipoly_from_json(const json& j) {
  const json& arr = j.is_array() ? j : j.at("coeffs");
  std::vector<Rat> c;
  for (const auto& x : arr) c.push_back(rat_from_json(x));
  return UniPoly(std::move(c));
}

json to_json(const WeierstrassModel& m) {
  return json{{"a2", to_json(m.a2)}, {"a4", to_json(m.a4)}, {"a6", to_json(m.a6)},
              {"k", m.k}};
}

WeierstrassModel model_from_json(const json& j) {
  WeierstrassModel m(unipoly_from_json(j.at("a2")), unipoly_from_json(j.at("a4")),
                     unipoly_from_json(j.at("a6")));
  if (j.contains("k")) m.k = j.at("k").get<int>();
  return m;
}

json to_json(const FiberConfig& cfg) {
  json fibers = json::array();
  for (const auto& f : cfg.entries) {
    fibers.push_back(json{{"place", f.place.str()},
                          {"degree", f.place.deg()},
                          {"type", f.type.str()}});
  }
  return json{{"fibers", fibers},
              {"multiset", cfg.multiset_str()},
              {"euler", cfg.euler_sum()},
              {"mw_torsion", cfg.mw_torsion_order},
              {"mw_rank", cfg.mw_rank}};
}

namespace {

const char* family_name(ModuliFamily f) {
  switch (f) {
    case ModuliFamily::P: return "P";
    case ModuliFamily::PPrime: return "P'";
    case ModuliFamily::PSecond: return "P''";
    case ModuliFamily::PSecondRank13: return "P''-rank13";
  }
  return "?";
}

ModuliFamily family_from_name(const std::string& s) {
  if (s == "P") return ModuliFamily::P;
  if (s == "P'") return ModuliFamily::PPrime;
  if (s == "P''") return ModuliFamily::PSecond;
  if (s == "P''-rank13") return ModuliFamily::PSecondRank13;
  throw std::domain_error("unknown moduli family " + s);
}

}  // namespace

json to_json(const ModuliPoint& p) {
  json coords = json::array();
  for (const auto& c : p.coords) coords.push_back(to_json(c));
  return json{{"family", family_name(p.family)},
              {"weights", p.weights()},
              {"coords", coords},
              {"names", p.coord_names()},
              {"inside_moduli_space", p.inside_moduli_space()}};
}

ModuliPoint moduli_from_json(const json& j) {
  ModuliPoint p;
  p.family = family_from_name(j.at("family").get<std::string>());
  for (const auto& c : j.at("coords")) p.coords.push_back(rat_from_json(c));
  if (p.coords.size() != p.weights().size())
    throw std::domain_error("moduli point has the wrong number of coordinates");
  return p;
}

QuarticCoeffsP coeffsP_from_json(const json& j) {
  QuarticCoeffsP c;
  c.alpha = rat_from_json(j.at("alpha"));
  c.beta = rat_from_json(j.at("beta"));
  c.gamma = rat_from_json(j.at("gamma"));
  c.delta = rat_from_json(j.at("delta"));
  c.epsilon = rat_from_json(j.at("epsilon"));
  c.zeta = rat_from_json(j.at("zeta"));
  c.eta = rat_from_json(j.at("eta"));
  c.iota = rat_from_json(j.at("iota"));
  c.kappa = rat_from_json(j.at("kappa"));
  c.lambda = rat_from_json(j.at("lambda"));
  return c;
}

json to_json(const QuarticCoeffsP& c) {
  return json{{"alpha", to_json(c.alpha)},     {"beta", to_json(c.beta)},
              {"gamma", to_json(c.gamma)},     {"delta", to_json(c.delta)},
              {"epsilon", to_json(c.epsilon)}, {"zeta", to_json(c.zeta)},
              {"eta", to_json(c.eta)},         {"iota", to_json(c.iota)},
              {"kappa", to_json(c.kappa)},     {"lambda", to_json(c.lambda)}};
}

QuarticCoeffsPPrime coeffsPPrime_from_json(const json& j) {
  QuarticCoeffsPPrime c;
  c.f2 = rat_from_json(j.at("f2"));
  c.f1 = rat_from_json(j.at("f1"));
  c.f0 = rat_from_json(j.at("f0"));
  c.g0 = rat_from_json(j.at("g0"));
  c.h2 = rat_from_json(j.at("h2"));
  c.h1 = rat_from_json(j.at("h1"));
  c.h0 = rat_from_json(j.at("h0"));
  return c;
}

json to_json(const QuarticCoeffsPPrime& c) {
  return json{{"f2", to_json(c.f2)}, {"f1", to_json(c.f1)}, {"f0", to_json(c.f0)},
              {"g0", to_json(c.g0)}, {"h2", to_json(c.h2)}, {"h1", to_json(c.h1)},
              {"h0", to_json(c.h0)}};
}

VinbergCoeffs vinberg_from_json(const json& j) {
  VinbergCoeffs c;
  c.f12 = rat_from_json(j.at("f12"));
  c.f22 = rat_from_json(j.at("f22"));
  c.f13 = rat_from_json(j.at("f13"));
  c.f23 = rat_from_json(j.at("f23"));
  c.f33 = rat_from_json(j.at("f33"));
  c.g0 = rat_from_json(j.at("g0"));
  c.g1 = rat_from_json(j.at("g1"));
  c.g3 = rat_from_json(j.at("g3"));
  return c;
}

json to_json(const VinbergCoeffs& c) {
  return json{{"f12", to_json(c.f12)}, {"f22", to_json(c.f22)}, {"f13", to_json(c.f13)},
              {"f23", to_json(c.f23)}, {"f33", to_json(c.f33)}, {"g0", to_json(c.g0)},
              {"g1", to_json(c.g1)},   {"g3", to_json(c.g3)}};
}

SexticConfig sextic_from_json(const json& j) {
  SexticConfig c;
  c.mu = rat_from_json(j.at("mu"));
  c.nu = rat_from_json(j.at("nu"));
  c.c0 = rat_from_json(j.at("c0"));
  c.d2 = rat_from_json(j.at("d2"));
  c.d0 = rat_from_json(j.at("d0"));
  c.e2 = rat_from_json(j.at("e2"));
  c.e1 = rat_from_json(j.at("e1"));
  c.e0 = rat_from_json(j.at("e0"));
  return c;
}

json to_json(const SexticConfig& c) {
  return json{{"mu", to_json(c.mu)}, {"nu", to_json(c.nu)}, {"c0", to_json(c.c0)},
              {"d2", to_json(c.d2)}, {"d0", to_json(c.d0)}, {"e2", to_json(c.e2)},
              {"e1", to_json(c.e1)}, {"e0", to_json(c.e0)}};
}

}  // namespace k3
