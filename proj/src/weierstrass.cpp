#include "k3/weierstrass.hpp"

#include <algorithm>
#include <sstream>

namespace k3 {

namespace {

int min_chart_weight(const UniPoly& a2, const UniPoly& a4, const UniPoly& a6) {
  int k = 1;
  auto need = [&](const UniPoly& p, int w) {
    if (p.is_zero()) return 0;
    return (p.degree() + w - 1) / w;  // ceil(deg/w)
  };
  k = std::max({1, need(a2, 2), need(a4, 4), need(a6, 6)});
  return k;
}

}  // namespace

WeierstrassModel::WeierstrassModel(UniPoly a2_, UniPoly a4_, UniPoly a6_)
    : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)) {
  k = min_chart_weight(a2, a4, a6);
}

WeierstrassModel WeierstrassModel::rescaled(const Rat& l2) const {
  WeierstrassModel m(a2 * l2, a4 * l2 * l2, a6 * l2 * l2 * l2);
  return m;
}

ShortInvariants short_invariants(const WeierstrassModel& m) {
  const UniPoly &a2 = m.a2, &a4 = m.a4, &a6 = m.a6;
  UniPoly c4 = a2 * a2 * Rat(16) - a4 * Rat(48);
  UniPoly c6 = a2 * a2 * a2 * Rat(-64) + a2 * a4 * Rat(288) - a6 * Rat(864);
  UniPoly delta = (a2 * a2 * a2 * a6 * Rat(4) - a2 * a2 * a4 * a4 + a4 * a4 * a4 * Rat(4) +
                   a6 * a6 * Rat(27) - a2 * a4 * a6 * Rat(18)) *
                  Rat(-16);
  if (delta.is_zero())
    throw DegenerateModel("discriminant vanishes identically: a2=" + m.a2.str() +
                          ", a4=" + m.a4.str() + ", a6=" + m.a6.str());
  return {c4, c6, delta};
}

int KodairaType::euler() const {
  switch (tag) {
    case In: return n;
    case II: return 2;
    case III: return 3;
    case IV: return 4;
    case Instar: return n + 6;
    case IVstar: return 8;
    case IIIstar: return 9;
    case IIstar: return 10;
  }
  return 0;
}

int KodairaType::components() const {
  switch (tag) {
    case In: return n;  // n >= 1
    case II: return 1;
    case III: return 2;
    case IV: return 3;
    case Instar: return n + 5;
    case IVstar: return 7;
    case IIIstar: return 8;
    case IIstar: return 9;
  }
  return 0;
}

std::string KodairaType::str() const {
  switch (tag) {
    case In: return "I" + std::to_string(n);
    case II: return "II";
    case III: return "III";
    case IV: return "IV";
    case Instar: return "I" + std::to_string(n) + "*";
    case IVstar: return "IV*";
    case IIIstar: return "III*";
    case IIstar: return "II*";
  }
  return "?";
}

std::optional<KodairaType> KodairaType::parse(const std::string& s) {
  auto make = [](Tag t, int n = 0) { return KodairaType{t, n}; };
  if (s == "II") return make(II);
  if (s == "III") return make(III);
  if (s == "IV") return make(IV);
  if (s == "II*") return make(IIstar);
  if (s == "III*") return make(IIIstar);
  if (s == "IV*") return make(IVstar);
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string num = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    int n = std::stoi(num);
    return star ? make(Instar, n) : make(In, n);
  }
  return std::nullopt;
}

int FiberConfig::euler_sum() const {
  int e = 0;
  for (const auto& f : entries) e += f.place.deg() * f.type.euler();
  return e;
}

std::map<std::string, int> FiberConfig::type_multiset() const {
  std::map<std::string, int> out;
  for (const auto& f : entries) out[f.type.str()] += f.place.deg();
  return out;
}

std::string FiberConfig::multiset_str() const {
  // sorted by Euler number descending, then name
  std::vector<std::pair<KodairaType, int>> v;
  for (const auto& f : entries) {
    bool found = false;
    for (auto& [t, c] : v)
      if (t == f.type) { c += f.place.deg(); found = true; }
    if (!found) v.push_back({f.type, f.place.deg()});
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.euler() != b.first.euler()) return a.first.euler() > b.first.euler();
    return a.first < b.first;
  });
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << " + ";
    if (v[i].second != 1) os << v[i].second;
    os << v[i].first.str();
  }
  return os.str();
}

std::map<std::string, int> parse_multiset(const std::string& s) {
  std::map<std::string, int> out;
  std::string token;
  std::istringstream is(s);
  while (std::getline(is, token, '+')) {
    // strip blanks
    std::string t;
    for (char ch : token)
      if (!isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) continue;
    size_t i = 0;
    while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) ++i;
    int count = 1;
    std::string name = t;
    // a leading digit run is a multiplicity only if what follows parses as a type
    if (i > 0 && i < t.size() && KodairaType::parse(t.substr(i))) {
      count = std::stoi(t.substr(0, i));
      name = t.substr(i);
    }
    auto kt = KodairaType::parse(name);
    if (!kt) throw std::domain_error("parse_multiset: bad fiber token " + token);
    out[kt->str()] += count;
  }
  return out;
}

bool same_configuration(const FiberConfig& a, const FiberConfig& b) {
  return a.type_multiset() == b.type_multiset();
}

namespace {

struct Vals {
  int c4, c6, d;
};

std::optional<KodairaType> type_from_valuations(Vals v, int& reductions) {
  reductions = 0;
  while (v.c4 >= 4 && v.c6 >= 6 && v.d >= 12) {
    if (v.c4 < kValInfinity) v.c4 -= 4;
    if (v.c6 < kValInfinity) v.c6 -= 6;
    v.d -= 12;
    ++reductions;
  }
  if (v.d == 0) return std::nullopt;  // smooth
  using T = KodairaType;
  if (v.c4 == 0) return T{T::In, v.d};
  if (v.c6 == 1) return T{T::II, 0};
  if (v.c4 == 1) return T{T::III, 0};
  if (v.c6 == 2) return T{T::IV, 0};
  if (v.d == 6) return T{T::Instar, 0};
  if (v.c4 == 2 && v.c6 == 3) return T{T::Instar, v.d - 6};
  if (v.c6 == 4) return T{T::IVstar, 0};
  if (v.c4 == 3) return T{T::IIIstar, 0};
  if (v.c6 == 5) return T{T::IIstar, 0};
  throw std::logic_error("classify_fibers: inconsistent valuation triple (" +
                         std::to_string(v.c4) + "," + std::to_string(v.c6) + "," +
                         std::to_string(v.d) + ")");
}

}  // namespace

FiberConfig classify_fibers(const WeierstrassModel& m) {
  auto [c4, c6, delta] = short_invariants(m);
  FiberConfig cfg;
  cfg.mw_torsion_order = m.two_torsion_section() ? 2 : 1;

  for (auto& pc : refine_places(delta, {{"c4", c4}, {"c6", c6}, {"delta", delta}})) {
    int red = 0;
    auto t = type_from_valuations({pc.valuations["c4"], pc.valuations["c6"],
                                   pc.valuations["delta"]},
                                  red);
    if (!t) continue;
    cfg.entries.push_back({pc, *t, red});
  }

  // place at infinity via degree defect in the homogeneous chart of weight k
  auto vinf = [&](const UniPoly& p, int degh) {
    return p.is_zero() ? kValInfinity : degh - p.degree();
  };
  Vals vi{vinf(c4, 4 * m.k), vinf(c6, 6 * m.k), vinf(delta, 12 * m.k)};
  if (vi.d > 0) {
    int red = 0;
    auto t = type_from_valuations(vi, red);
    if (t) {
      PlaceComponent inf;
      inf.at_infinity = true;
      inf.valuations = {{"c4", vi.c4}, {"c6", vi.c6}, {"delta", vi.d}};
      cfg.entries.push_back({inf, *t, red});
    }
  }
  return cfg;
}

ConsistencyReport consistency_report(const FiberConfig& cfg, int target_picard,
                                     std::optional<Int> ns_disc_order) {
  ConsistencyReport r;
  r.euler = cfg.euler_sum();
  r.euler_ok = (r.euler == 24);
  int comps = 0;
  for (const auto& f : cfg.entries) comps += f.place.deg() * (f.type.components() - 1);
  r.picard_from_fibers = 2 + comps + cfg.mw_rank;
  r.shioda_tate_ok = (r.picard_from_fibers == target_picard);

  // |D(K^root)| = product over fibers of the root-lattice discriminants
  Int d(1);
  for (const auto& f : cfg.entries) {
    Int local(1);
    switch (f.type.tag) {
      case KodairaType::In: local = (f.type.n >= 2) ? Int(f.type.n) : Int(1); break;  // A_{n-1}
      case KodairaType::II: local = 1; break;
      case KodairaType::III: local = 2; break;          // A_1
      case KodairaType::IV: local = 3; break;           // A_2
      case KodairaType::Instar: local = 4; break;       // D_{n+4}
      case KodairaType::IVstar: local = 3; break;       // E_6
      case KodairaType::IIIstar: local = 2; break;      // E_7
      case KodairaType::IIstar: local = 1; break;       // E_8
    }
    for (int i = 0; i < f.place.deg(); ++i) d *= local;
  }
  r.root_disc_order = d;
  if (ns_disc_order) {
    Int w(cfg.mw_torsion_order);
    r.determinant_ok = (d == *ns_disc_order * w * w);
  }
  std::ostringstream os;
  os << "euler=" << r.euler << " picard=" << r.picard_from_fibers
     << " |D(Kroot)|=" << d.get_str();
  r.detail = os.str();
  return r;
}

}  // namespace k3
