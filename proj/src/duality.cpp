#include "k3/duality.hpp"

namespace k3 {

TwoTorsionModel vgs_quotient(const TwoTorsionModel& m) {
  if (m.b.is_zero()) throw DegenerateModel("vgs_quotient: b vanishes identically");
  UniPoly disc = m.a * m.a - m.b * Rat(4);
  if (disc.is_zero()) throw DegenerateModel("vgs_quotient: a^2 - 4b vanishes identically");
  return {m.a * Rat(-2), disc};
}

namespace {

// the closed-form involution on (J2, J6, J8, J10, J12, J16, J20), computed in
// any commutative ring through a small evaluator
template <class T>
std::array<T, 7> iota_formulas(const std::array<T, 7>& J) {
  const T &J2 = J[0], &J6 = J[1], &J8 = J[2], &J10 = J[3], &J12 = J[4], &J16 = J[5],
          &J20 = J[6];
  auto P = [](const T& b, int e) {
    T out = b;
    for (int i = 1; i < e; ++i) out = out * b;
    return out;
  };
  std::array<T, 7> o = {
      J2 * Rat(-1),
      J6 + P(J2, 3) * Rat(1, 10),
      J8 - J6 * J2 * Rat(1, 2) - P(J2, 4) * Rat(1, 40),
      J10 * Rat(-1) - J6 * P(J2, 2) * Rat(1, 20) - P(J2, 5) * Rat(1, 400),
      J12 * Rat(-1) + J10 * J2 * Rat(1, 2) - J8 * P(J2, 2) * Rat(3, 20) + P(J6, 2) * Rat(1, 4) +
          J6 * P(J2, 3) * Rat(3, 40) + P(J2, 6) * Rat(1, 400),
      // the J2^8 coefficient must be -3/32000: involutivity and the agreement
      // with the coefficient-level route both pin it
      J16 + J12 * P(J2, 2) * Rat(1, 10) - J10 * J6 * Rat(1, 2) - J10 * P(J2, 3) * Rat(1, 20) +
          J8 * P(J2, 4) * Rat(3, 400) - P(J6, 2) * P(J2, 2) * Rat(1, 40) -
          J6 * P(J2, 5) * Rat(3, 800) - P(J2, 8) * Rat(3, 32000),
      J20 * Rat(-1) - J16 * P(J2, 2) * Rat(1, 20) - J12 * P(J2, 4) * Rat(1, 400) +
          P(J10, 2) * Rat(1, 4) + J10 * J6 * P(J2, 2) * Rat(1, 40) +
          J10 * P(J2, 5) * Rat(1, 800) - J8 * P(J2, 6) * Rat(1, 8000) +
          P(J6, 2) * P(J2, 4) * Rat(1, 1600) + J6 * P(J2, 7) * Rat(1, 16000) +
          P(J2, 10) * Rat(1, 800000)};
  return o;
}

}  // namespace

ModuliPoint iota_prime(const ModuliPoint& p) {
  if (p.family != ModuliFamily::PPrime) throw std::domain_error("iota_prime: P' point expected");
  std::array<Rat, 7> in;
  for (int i = 0; i < 7; ++i) in[i] = p.coords[i];
  auto out = iota_formulas(in);
  return {ModuliFamily::PPrime, std::vector<Rat>(out.begin(), out.end())};
}

WeierstrassModel pprime_alternate_model(const ModuliPoint& p) {
  if (p.family != ModuliFamily::PPrime)
    throw std::domain_error("pprime_alternate_model: P' point expected");
  // (J2,J6,J8,J10,J12,J16,J20) = (c2,c1,d3,c0,d2,d1,d0): a2 = C(t), a4 = D(t)
  UniPoly C({p.coords[3], p.coords[1], p.coords[0]});
  UniPoly D({p.coords[6], p.coords[5], p.coords[4], p.coords[2], Rat(0), Rat(1)});
  WeierstrassModel m(C, D, UniPoly::zero());
  m.k = 2;  // homogeneous weights: a2 = v^2 C (deg 4), a4 = v^3 D (deg 8)
  return m;
}

ModuliPoint iota_prime_coefficient_route(const ModuliPoint& p) {
  if (p.family != ModuliFamily::PPrime)
    throw std::domain_error("iota_prime_coefficient_route: P' point expected");
  // C = c2 t^2 + c1 t + c0, D = t^5 + d3 t^3 + d2 t^2 + d1 t + d0
  UniPoly C({p.coords[3], p.coords[1], p.coords[0]});
  UniPoly D({p.coords[6], p.coords[5], p.coords[4], p.coords[2], Rat(0), Rat(1)});
  Rat c2 = p.coords[0];
  // quotient model: Ctilde = -C, Dtilde = -D + C^2/4 in the shifted base
  // u -> -u + c2^2/20
  Rat shift = c2 * c2 / 20;
  UniPoly Cs = C.compose_affine(Rat(-1), shift);
  UniPoly Ds = D.compose_affine(Rat(-1), shift);
  UniPoly Ct = -Cs;
  UniPoly Dt = -Ds + Cs * Cs / Rat(4);
  if (Dt.degree() != 5 || Dt.lc() != 1 || Dt.coeff(4) != 0)
    throw std::logic_error("iota_prime_coefficient_route: quintic not renormalized");
  return {ModuliFamily::PPrime,
          {Ct.coeff(2), Ct.coeff(1), Dt.coeff(3), Ct.coeff(0), Dt.coeff(2), Dt.coeff(1),
           Dt.coeff(0)}};
}

bool iota_prime_is_symbolic_involution() {
  std::vector<std::string> vars = {"J10", "J12", "J16", "J2", "J20", "J6", "J8"};
  std::array<MultiPoly, 7> J;
  const char* names[7] = {"J2", "J6", "J8", "J10", "J12", "J16", "J20"};
  std::array<MultiPoly, 7> gens;
  for (int i = 0; i < 7; ++i) gens[i] = MultiPoly::var(vars, names[i]);
  auto once = iota_formulas(gens);
  auto twice = iota_formulas(once);
  for (int i = 0; i < 7; ++i)
    if (twice[i] != gens[i]) return false;
  return true;
}

std::array<Rat, 3> iota_rank18(const Rat& c0, const Rat& d1, const Rat& d0) {
  if (d0 == 0) throw std::domain_error("iota_rank18: d0 = 0 lies outside the moduli space");
  // quotient, rescale by mu^2 = 1/4 and u -> -u: d1 picks up a sign, which
  // is what makes the map an involution
  return {-c0, c0 * c0 / 4 - d1, d0};
}

bool rank18_wp_fixed(const Rat& c0, const Rat& d1, const Rat& d0) {
  auto im = iota_rank18(c0, d1, d0);
  // weighted-projective equivalence in WP(2,4,8) over the closure
  ModuliPoint p{ModuliFamily::PPrime, {}};
  const int w[3] = {2, 4, 8};
  const Rat a[3] = {c0, d1, d0};
  for (int i = 0; i < 3; ++i)
    if ((a[i] == 0) != (im[i] == 0)) return false;
  for (int i = 0; i < 3; ++i) {
    if (a[i] == 0) continue;
    for (int j = i + 1; j < 3; ++j) {
      if (a[j] == 0) continue;
      if (pow_rat(a[i], w[j]) * pow_rat(im[j], w[i]) !=
          pow_rat(a[j], w[i]) * pow_rat(im[i], w[j]))
        return false;
    }
  }
  return true;
}

WeierstrassModel rank18_alternate_model(const Rat& c0, const Rat& d1, const Rat& d0) {
  // y^2 = x^3 + c0 u^2 v^2 x^2 + u^3 v^3 (u^2 + d1 uv + d0 v^2) x, dehomogenized at v=1
  UniPoly t = UniPoly::t();
  UniPoly a2 = t * t * c0;
  UniPoly a4 = t * t * t * UniPoly({d0, d1, Rat(1)});
  WeierstrassModel m(a2, a4, UniPoly::zero());
  m.k = 2;
  return m;
}

bool selfdual_check(const ModuliPoint& p) {
  if (p.family != ModuliFamily::PPrime)
    throw std::domain_error("selfdual_check: P' point expected");
  const Rat &J2 = p.coords[0], &J6 = p.coords[1], &J10 = p.coords[3], &J12 = p.coords[4],
            &J20 = p.coords[6];
  return J2 == 0 && J10 == 0 && J6 * J6 - 8 * J12 == 0 && J20 == 0;
}

}  // namespace k3
