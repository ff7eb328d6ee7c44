#pragma once

#include <optional>

#include "k3/moduli.hpp"
#include "k3/multipoly.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

// branch data of the double sextic: three concurrent lines and a cubic, in
// the normalization c1 = 1, d1 = 0; the remaining freedom is the scaling
// (mu,c0,e2) ~ L, (d0,e1) ~ L^2, e0 ~ L^3
struct SexticConfig {
  Rat mu, nu, c0, d2, d0, e2, e1, e0;

  // mu != nu, d2 != -1, and c0 + e2 = (1 + d2/2)(mu + nu)
  bool valid() const;
  bool cubic_tangent_to_l3() const { return d2 == 0; }        // at q0
  bool cubic_singular_at_q0() const { return d2 == 0 && e2 == 0; }
};

// degree-6 branch form (Z1 - Z2 + mu Z3)(Z1 - Z2 + nu Z3) Z3 C(Z1,Z2,Z3)
MultiPoly branch_sextic(const SexticConfig& cfg);

enum class YFibration { Standard, Alternate };

WeierstrassModel fibration_Y(const SexticConfig& cfg, YFibration which);

// (A, Q_{mu,mu}, Q_{nu,nu}) of the alternate fibration: A = Q_{mu,nu} monic
// with zero t^2 term, and A^2 - 4B = Q_{mu,mu} Q_{nu,nu}
std::array<UniPoly, 3> alternate_data(const SexticConfig& cfg);

struct FactorizationData {
  Rat sigma2, chi2;
  Rat rho2, rho4, rho6, sigma4, sigma6;
  UniPoly Q1, Q2;
};

// recover the branch configuration from an alternate-fibration (A, B) with a
// chosen monic cubic factor Q1 of the Satake sextic S = A^2 - 4B
std::pair<SexticConfig, FactorizationData> config_from_factorization(const UniPoly& A,
                                                                     const UniPoly& B,
                                                                     const UniPoly& Q1);

// the two redundancy identities expressing j10, j12 through sigma2, chi2
bool verify_sigma_chi_relations(const FactorizationData& fd, const Rat& j4, const Rat& j6,
                                const Rat& j8, const Rat& j10, const Rat& j12);

// coefficients of the general standard-fibration shape: X^2 coefficient
// (t+mu)(t+nu)(c1 t + c0), X coefficient (t+mu)^2 (t+nu)^2 (d2 t^2 + d1 t + d0),
// constant (t+mu)^3 (t+nu)^3 (e3 t^3 + e2 t^2 + e1 t + e0)
struct StandardShape {
  Rat mu, nu;
  Rat c1, c0;
  Rat d2, d1, d0;
  Rat e3, e2, e1, e0;

  WeierstrassModel model() const;
};

struct StandardRecovery {
  Rat c1, c0, d2, d1, d0, e2, e1, e0;   // recovered cubic data, c1 = +-sqrt(...)
  Rat rho = 0;                          // shift root used to kill e3
  std::optional<SexticConfig> cfg;      // set when (c1, d1) = (1, 0)
};

// inverse of the standard fibration: requires a rational root of
// z^3 + c1 z^2 + d2 z + e3 (caller may supply one) and a rational square root
// of c1^2 - 4 d2; throws with a description otherwise
StandardRecovery config_from_standard(const StandardShape& in,
                                      std::optional<Rat> rho_witness = std::nullopt);

// exact rational roots of a monic polynomial
std::vector<Rat> rational_roots_monic(const UniPoly& p);

}  // namespace k3
