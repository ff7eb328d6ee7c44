#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3/unipoly.hpp"

namespace k3 {

// valuation sentinel for an identically-zero probe
inline constexpr int kValInfinity = 1 << 20;

// A cluster of base points, represented without factoring over Q-bar: a monic
// squarefree polynomial (or the place at infinity) all of whose roots share
// the same valuation vector across the recorded probes.
struct PlaceComponent {
  UniPoly poly;  // monic squarefree; ignored when at_infinity
  bool at_infinity = false;
  std::map<std::string, int> valuations;

  int deg() const { return at_infinity ? 1 : poly.degree(); }
  std::string str() const { return at_infinity ? "inf" : poly.str(); }
};

// Splits the squarefree part of `base` into components fine enough that every
// probe has constant valuation on each component's roots.
std::vector<PlaceComponent> refine_places(
    const UniPoly& base, const std::vector<std::pair<std::string, UniPoly>>& probes);

}  // namespace k3
