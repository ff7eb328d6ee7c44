#pragma once

#include <array>

#include "k3/moduli.hpp"
#include "k3/multipoly.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

// y^2 = x^3 + a x^2 + b x: two-torsion at x = 0
struct TwoTorsionModel {
  UniPoly a, b;

  WeierstrassModel model() const { return WeierstrassModel(a, b, UniPoly::zero()); }
};

// Weierstrass-level quotient by translation by the two-torsion section:
// (a', b') = (-2a, a^2 - 4b)
TwoTorsionModel vgs_quotient(const TwoTorsionModel& m);

// Van Geemen-Sarti-Nikulin involution on the P'-moduli: closed-form route on
// the invariants
ModuliPoint iota_prime(const ModuliPoint& p);
// coefficient-level route: quotient model, rescale, base shift u -> -u + c2^2 v/20
ModuliPoint iota_prime_coefficient_route(const ModuliPoint& p);
// symbolic composition of the closed form with itself, in Q[J2..J20]
bool iota_prime_is_symbolic_involution();

// rank-18 involution (c0, d1, d0) -> (-c0, c0^2/4 - d1, d0); requires d0 != 0
std::array<Rat, 3> iota_rank18(const Rat& c0, const Rat& d1, const Rat& d0);

// fixed as a point of WP(2,4,8); the locus c0 = 0 is wp-fixed via Lambda^4 = -1
bool rank18_wp_fixed(const Rat& c0, const Rat& d1, const Rat& d0);

// alternate model of the rank-18 family: y^2 = x^3 + c0 u^2 v^2 x^2 + u^3 v^3 D(u,v) x
WeierstrassModel rank18_alternate_model(const Rat& c0, const Rat& d1, const Rat& d0);

// (J2, J10, J6^2 - 8 J12, J20) = 0
bool selfdual_check(const ModuliPoint& p);

// alternate model of a P'-moduli point (C, D read off the coordinates)
WeierstrassModel pprime_alternate_model(const ModuliPoint& p);

}  // namespace k3
