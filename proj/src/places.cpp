#include "k3/places.hpp"

#include <stdexcept>

namespace k3 {

std::vector<PlaceComponent> refine_places(
    const UniPoly& base, const std::vector<std::pair<std::string, UniPoly>>& probes) {
  if (base.is_zero()) throw std::domain_error("refine_places: zero base");
  std::vector<UniPoly> comps;
  UniPoly s = squarefree_part(base);
  if (s.degree() > 0) comps.push_back(s);

  // split components along the squarefree factors of every probe
  for (const auto& [label, p] : probes) {
    if (p.is_zero()) continue;
    for (const auto& [f, mult] : squarefree_decompose(p)) {
      std::vector<UniPoly> next;
      for (const auto& c : comps) {
        UniPoly g = gcd_univariate(c, f);
        if (g.degree() > 0 && g.degree() < c.degree()) {
          next.push_back(g);
          next.push_back(c.exact_div(g).monic());
        } else {
          next.push_back(c);
        }
      }
      comps = std::move(next);
    }
  }

  std::vector<PlaceComponent> out;
  for (const auto& c : comps) {
    PlaceComponent pc;
    pc.poly = c;
    for (const auto& [label, p] : probes) {
      if (p.is_zero()) {
        pc.valuations[label] = kValInfinity;
        continue;
      }
      // after refinement the valuation is constant along c
      int v = 0;
      for (const auto& [f, mult] : squarefree_decompose(p)) {
        if (gcd_univariate(c, f).degree() == c.degree()) {
          v = mult;
          break;
        }
      }
      pc.valuations[label] = v;
    }
    out.push_back(std::move(pc));
  }
  return out;
}

}  // namespace k3
