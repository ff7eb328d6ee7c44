#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3/quartics.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// normalized alternate-fibration data: A monic cubic with no t^2 term,
// B of degree <= 4
struct ABPair {
  UniPoly A, B;

  bool normalized() const {
    return A.degree() == 3 && A.lc() == 1 && A.coeff(2) == 0 && B.degree() <= 4;
  }
};

enum class ModuliFamily { P, PPrime, PSecond, PSecondRank13 };

// point of a weighted projective space attached to one of the families
struct ModuliPoint {
  ModuliFamily family;
  std::vector<Rat> coords;

  const std::vector<int>& weights() const;
  std::vector<std::string> coord_names() const;
  // the family's nonvanishing condition (inside the coarse moduli space)
  bool inside_moduli_space() const;
  std::string str() const;
};

// true iff q = Lambda^w * p for a scalar over the algebraic closure: same zero
// support and all cross-power ratios match
bool wp_equivalent(const ModuliPoint& p, const ModuliPoint& q);
// strict-rational mode: additionally demands a rational Lambda^g for
// g = gcd of the weights at nonzero coordinates
bool wp_equivalent_rational(const ModuliPoint& p, const ModuliPoint& q);

// (j4, j'4, j6, j'6, j8, j10, j12) from the alternate-fibration polynomials
ModuliPoint invariants_from_AB(const UniPoly& A, const UniPoly& B);

// same, from the quartic coefficients; the expansion route and the closed
// forms are computed independently and must agree
ModuliPoint invariants_P(const QuarticCoeffsP& c);

// intro normalization (J4, J'4, J6, J'6, J8, J10, J12) = (-a1/3, b4, -a0/2, -b3, b2, -b1, b0)
std::array<Rat, 7> intro_invariants(const UniPoly& A, const UniPoly& B);

// (J2, J6, J8, J10, J12, J16, J20)
ModuliPoint invariants_PPrime(const QuarticCoeffsPPrime& c);

// rank-13 point (j4,...,j18) with j14 = g0^2; drops j14 on the g0 = 0 locus
ModuliPoint invariants_Vinberg(const VinbergCoeffs& c);

// script-J normalization of the Vinberg invariants (weights 4,6,8,10,12,16,18)
std::array<Rat, 7> vinberg_script_invariants(const VinbergCoeffs& c);

// S(t) = (t^3 - 3 j4 t - 2 j6)^2 - 4 (j8 t^2 - j10 t + j12)
UniPoly satake_sextic(const Rat& j4, const Rat& j6, const Rat& j8, const Rat& j10,
                      const Rat& j12);

struct SatakePowerSums {
  Rat s4, s6, s8, s10, s12;  // s2 = 0 by definition
};

// direct route via the closed power-sum formulas
std::array<Rat, 5> power_sums_to_j(const SatakePowerSums& s);
// independent route through elementary symmetric functions (Newton identities)
std::array<Rat, 5> power_sums_to_j_symmetric(const SatakePowerSums& s);

// t -> at+b and (x,y)-rescaling making A monic with zero t^2 coefficient
ABPair gauge_normalize(const UniPoly& A_raw, const UniPoly& B_raw);

}  // namespace k3
