#pragma once

#include <array>
#include <optional>
#include <string>

#include "k3/multipoly.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

enum class Family { P, PPrime, PSecond };

enum class FibrationId { Alternate, Standard, BaseFiberDual, BaseFiberDualPrime, Maximal };

std::string fibration_name(FibrationId id);
std::optional<FibrationId> parse_fibration(const std::string& s);

// coefficients of the rank-14 quartic family P (alpha..lambda)
struct QuarticCoeffsP {
  Rat alpha, beta, gamma, delta, epsilon, zeta, eta, iota, kappa, lambda;

  // the four coefficient pairs must not vanish simultaneously
  bool valid() const;
  std::string offending_pair() const;
};

// rank-14 family P' in the gauge g1 = -h2
struct QuarticCoeffsPPrime {
  Rat f2, f1, f0, g0, h2, h1, h0;
};

// Vinberg family P'' (rank 13 for g0 != 0)
struct VinbergCoeffs {
  Rat f12, f22, f13, f23, f33, g0, g1, g3;

  bool valid() const;  // (f13,f23,f33,g0,g1,g3) != 0
};

// projective variable sets
const std::vector<std::string>& quartic_vars();      // W,X,Y,Z
const std::vector<std::string>& vinberg_vars();      // x0..x3
const std::vector<std::string>& pencil_vars();       // s,u,v,x,y,z  (s = formal sqrt(2))

MultiPoly quartic_equation(const QuarticCoeffsP& c, bool checked = true);
MultiPoly quartic_equation(const QuarticCoeffsPPrime& c);
MultiPoly quartic_equation(const VinbergCoeffs& c, bool checked = true);

// substitution [X:Y:Z:W] (resp. [x0:..:x3]) as polynomials in pencil_vars();
// sqrt(2) appears as the formal variable s with s^2 -> 2
std::array<MultiPoly, 4> pencil_substitution(Family f, FibrationId id, const QuarticCoeffsP& c);
std::array<MultiPoly, 4> pencil_substitution(Family f, FibrationId id, const QuarticCoeffsPPrime& c);
std::array<MultiPoly, 4> pencil_substitution(Family f, FibrationId id, const VinbergCoeffs& c);

// Weierstrass model of the fibration; closed coefficient forms where they
// exist, otherwise computed from the substitution
WeierstrassModel fibration_model(FibrationId id, const QuarticCoeffsP& c);
WeierstrassModel fibration_model(FibrationId id, const QuarticCoeffsPPrime& c);
WeierstrassModel fibration_model(FibrationId id, const VinbergCoeffs& c);

// expand the quartic along a parametrization and read off the Weierstrass
// data: F(phi) = cofactor * (c3 y^2 z - cubic)
struct ExtractedModel {
  WeierstrassModel model;
  MultiPoly cofactor;
  Rat c3;
};
ExtractedModel extract_model(const MultiPoly& quartic, const std::array<MultiPoly, 4>& images);

struct SubstitutionReport {
  bool holds = false;
  std::string cofactor;
  Rat lambda2 = 0;  // extracted = closed-form rescaled by lambda^2
  std::string note;
};

SubstitutionReport verify_pencil_substitution(FibrationId id, const QuarticCoeffsP& c);
SubstitutionReport verify_pencil_substitution(FibrationId id, const QuarticCoeffsPPrime& c);
SubstitutionReport verify_pencil_substitution(FibrationId id, const VinbergCoeffs& c);

// symmetries of the P family: a, b, c are the pair swaps, d the
// Lambda-rescaling
enum class SymmetryGen { a, b, c, d };
QuarticCoeffsP apply_symmetry(SymmetryGen g, const QuarticCoeffsP& c, const Rat& lambda = Rat(1));

// F(Psi) lies in (F) and Psi o Psi is the identity as a projective map
bool nikulin_involution_check(const QuarticCoeffsP& c);
bool nikulin_involution_check(const QuarticCoeffsPPrime& c);

// birational equivalence between the P family at (eta,iota)=(kappa,lambda)=(0,1)
// and the Vinberg quartic with matched coefficients
bool vinberg_birational_check(const QuarticCoeffsP& c);

// coefficient dictionary of the equivalence
VinbergCoeffs vinberg_coeffs_from_P(const QuarticCoeffsP& c);

}  // namespace k3
