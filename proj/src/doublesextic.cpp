#include "k3/doublesextic.hpp"

#include <algorithm>
#include <array>

namespace k3 {

namespace {

const std::vector<std::string> kSexticVars = {"Z1", "Z2", "Z3"};

}  // namespace

bool SexticConfig::valid() const {
  if (mu == nu || d2 == -1) return false;
  return c0 + e2 == (1 + d2 / 2) * (mu + nu);
}

MultiPoly branch_sextic(const SexticConfig& cfg) {
  if (!cfg.valid()) throw std::domain_error("branch_sextic: invalid configuration");
  MultiPoly Z1 = MultiPoly::var(kSexticVars, "Z1");
  MultiPoly Z2 = MultiPoly::var(kSexticVars, "Z2");
  MultiPoly Z3 = MultiPoly::var(kSexticVars, "Z3");
  MultiPoly l1 = Z1 - Z2 + Z3 * cfg.mu;
  MultiPoly l2 = Z1 - Z2 + Z3 * cfg.nu;
  MultiPoly C = (Z2 + Z3 * cfg.c0) * Z1 * Z1 + (Z2 * Z2 * cfg.d2 + Z3 * Z3 * cfg.d0) * Z1 +
                (Z2 * Z2 * cfg.e2 + Z2 * Z3 * cfg.e1 + Z3 * Z3 * cfg.e0) * Z3;
  return l1 * l2 * Z3 * C;
}

std::array<UniPoly, 3> alternate_data(const SexticConfig& cfg) {
  UniPoly C({cfg.c0, Rat(1)});
  UniPoly D({cfg.d0, Rat(0), cfg.d2});
  UniPoly E({cfg.e0, cfg.e1, cfg.e2});
  UniPoly F({-cfg.mu, Rat(1)}), G({-cfg.nu, Rat(1)});
  Rat unit = 1 + cfg.d2;
  UniPoly A = (E + C * F * G + D * (F + G) / Rat(2)) / unit;
  UniPoly Qmm = (C * F * F + D * F + E) / unit;
  UniPoly Qnn = (C * G * G + D * G + E) / unit;
  return {A, Qmm, Qnn};
}

WeierstrassModel fibration_Y(const SexticConfig& cfg, YFibration which) {
  if (!cfg.valid()) throw std::domain_error("fibration_Y: invalid configuration");
  UniPoly t = UniPoly::t();
  if (which == YFibration::Standard) {
    UniPoly lm({cfg.mu, Rat(1)}), ln({cfg.nu, Rat(1)});  // t + mu, t + nu
    Rat c1(1);
    UniPoly a2 = -(lm * ln * UniPoly({-(cfg.c0 + cfg.e2), c1 + 2 * cfg.d2}));
    UniPoly a4 = lm * lm * ln * ln * UniPoly({cfg.d0 + cfg.e1, -2 * cfg.e2, cfg.d2}) *
                 (c1 + cfg.d2);
    UniPoly a6 = lm.pow(3) * ln.pow(3) * UniPoly({cfg.e0, -cfg.e1, cfg.e2}) *
                 ((c1 + cfg.d2) * (c1 + cfg.d2));
    WeierstrassModel m(a2, a4, a6);
    m.k = 2;
    return m;
  }
  // alternate: y^2 = x^3 - 2 A x^2 + Q_mumu Q_nunu x with A = Q_munu
  UniPoly C({cfg.c0, Rat(1)});
  UniPoly D({cfg.d0, Rat(0), cfg.d2});
  UniPoly E({cfg.e0, cfg.e1, cfg.e2});
  UniPoly F({-cfg.mu, Rat(1)}), G({-cfg.nu, Rat(1)});
  Rat unit = 1 + cfg.d2;
  UniPoly A = (E + C * F * G + D * (F + G) / Rat(2)) / unit;
  UniPoly Qmm = (C * F * F + D * F + E) / unit;
  UniPoly Qnn = (C * G * G + D * G + E) / unit;
  if (!(A.degree() == 3 && A.lc() == 1 && A.coeff(2) == 0))
    throw std::logic_error("fibration_Y: A(t) = Q_{mu,nu} not normalized");
  WeierstrassModel m(A * Rat(-2), Qmm * Qnn, UniPoly::zero());
  m.k = 2;
  return m;
}

std::pair<SexticConfig, FactorizationData> config_from_factorization(const UniPoly& A,
                                                                     const UniPoly& B,
                                                                     const UniPoly& Q1) {
  if (!(A.degree() == 3 && A.lc() == 1 && A.coeff(2) == 0))
    throw std::domain_error("config_from_factorization: A not a normalized cubic");
  if (B.is_zero() || B.degree() > 4)
    throw std::domain_error("config_from_factorization: bad B");
  UniPoly S = A * A - B * Rat(4);
  if (!(Q1.degree() == 3 && Q1.lc() == 1))
    throw std::domain_error("config_from_factorization: Q1 not a monic cubic");
  auto [Q2, rem] = S.divrem(Q1);
  if (!rem.is_zero())
    throw std::domain_error("config_from_factorization: Q1 does not divide A^2 - 4B");
  FactorizationData fd;
  fd.Q1 = Q1;
  fd.Q2 = Q2;
  fd.sigma2 = -Q1.coeff(2);
  fd.sigma4 = Q1.coeff(1);
  fd.sigma6 = -Q1.coeff(0);
  fd.rho2 = -Q2.coeff(2);
  fd.rho4 = Q2.coeff(1);
  fd.rho6 = -Q2.coeff(0);
  if (fd.sigma2 == 0)
    throw std::domain_error("config_from_factorization: sigma2 = 0; redraw the partition");
  if (fd.rho2 != -fd.sigma2)
    throw std::logic_error("config_from_factorization: rho2 != -sigma2");
  fd.chi2 = (fd.rho4 - fd.sigma4) / fd.sigma2;

  Rat b4 = B.coeff(4), b3 = B.coeff(3);
  Rat s = fd.sigma2, chi = fd.chi2;
  Rat a1 = A.coeff(1), a0 = A.coeff(0);
  Rat denom = s * s - 4 * b4;  // p4 + q4 - 2 a1
  if (denom == 0)
    throw std::domain_error("config_from_factorization: sigma2^2 = 4 b4; redraw");
  // mu - nu solves (w + sigma2)^2 = 4 b4; the configuration is defined over
  // Q exactly when b4 is a rational square (rational data always produce one)
  auto r = sqrt_exact(b4);
  if (!r)
    throw std::domain_error(
        "config_from_factorization: b4 is not a rational square; the branch "
        "configuration lives over Q(sqrt(b4)) only; redraw");

  Rat p4 = Q1.coeff(1), q4 = Q2.coeff(1);
  Rat p6 = -Q1.coeff(0), q6 = -Q2.coeff(0);
  // normalization targets of the polynomial representative
  Rat wprint = s * (s + 2 * b4) * (s * s - (chi + 4 * b4) * s + 4 * b4 * b4);
  Rat mprint = 8 * s * b3;
  if (wprint == 0)
    throw std::domain_error(
        "config_from_factorization: polynomial normalization degenerates; redraw");

  std::optional<SexticConfig> fallback;
  for (int sign : {+1, -1}) {
    Rat w = -s + 2 * sign * *r;
    if (w == 0) continue;
    Rat m = (-4 * a0 - 2 * (p6 + q6) - (p4 - q4) * w) / denom;
    Rat mu = (m + w) / 2, nu = (m - w) / 2;
    UniPoly F({-mu, Rat(1)}), G({-nu, Rat(1)});
    UniPoly Cn = Q1 + Q2 - A * Rat(2);
    UniPoly Dn = (A * (F + G) - (F * Q1 + G * Q2)) * Rat(2);
    UniPoly En = F * F * Q1 + G * G * Q2 - A * F * G * Rat(2);
    Rat w2 = w * w;
    UniPoly C = Cn / w2, D = Dn / w2, E = En / w2;
    if (C.degree() != 1) continue;
    Rat c1 = C.coeff(1);
    C = C / c1;
    D = D / c1;
    E = E / c1;
    if (!(D.coeff(1) == 0 && D.degree() <= 2 && E.degree() <= 2)) continue;
    Rat Lam = wprint / w;
    Rat L2 = Lam * Lam, L3 = L2 * Lam;
    SexticConfig cfg;
    cfg.mu = mu * Lam;
    cfg.nu = nu * Lam;
    cfg.c0 = C.coeff(0) * Lam;
    cfg.d2 = D.coeff(2);
    cfg.d0 = D.coeff(0) * L2;
    cfg.e2 = E.coeff(2) * Lam;
    cfg.e1 = E.coeff(1) * L2;
    cfg.e0 = E.coeff(0) * L3;
    if (!cfg.valid()) continue;
    // prefer the branch matching the polynomial normalization of mu, nu
    if (cfg.mu - cfg.nu == wprint && cfg.mu + cfg.nu == mprint) return {cfg, fd};
    if (!fallback) fallback = cfg;
  }
  if (fallback) return {*fallback, fd};
  throw std::domain_error("config_from_factorization: no admissible branch; redraw");
}

bool verify_sigma_chi_relations(const FactorizationData& fd, const Rat& j4, const Rat& j6,
                                const Rat& j8, const Rat& j10, const Rat& j12) {
  const Rat &s = fd.sigma2, &x = fd.chi2;
  if (s == 0) throw std::domain_error("verify_sigma_chi_relations: sigma2 = 0");
  Rat s2 = s * s, s4 = s2 * s2;
  Rat lhs10 = s2 * x * x * x / 32 + (3 * s4 / 32 - 3 * s2 * j4 / 8 - j8 / 2) * x - s2 * j6 / 2;
  Rat core = s4 - 12 * j4 * s2 + 16 * j8;
  Rat lhs12 = s2 * x * x * x * x / 256 - (9 * s4 / 128 - 3 * s2 * j4 / 32 + j8 / 8) * x * x +
              s2 * j6 * x / 2 + core * core / (256 * s2);
  return lhs10 == j10 && lhs12 == j12;
}

WeierstrassModel StandardShape::model() const {
  UniPoly lm({mu, Rat(1)}), ln({nu, Rat(1)});
  UniPoly a2 = lm * ln * UniPoly({c0, c1});
  UniPoly a4 = lm * lm * ln * ln * UniPoly({d0, d1, d2});
  UniPoly a6 = lm.pow(3) * ln.pow(3) * UniPoly({e0, e1, e2, e3});
  WeierstrassModel m(a2, a4, a6);
  m.k = 2;
  return m;
}

std::vector<Rat> rational_roots_monic(const UniPoly& p) {
  if (p.degree() < 1) return {};
  // scale t = y / L to get integer coefficients, monic in y
  Int L(1);
  for (int i = 0; i < p.degree(); ++i) {
    Int den = p.coeff(i).get_den();
    L = L / gcd(L, den) * den;
  }
  // q(y) = L^n p(y / L): integer coefficients, monic
  int n = p.degree();
  std::vector<Int> q(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rat c = p.coeff(i) * pow_rat(Rat(L), n - i);
    q[i] = c.get_num();
  }
  std::vector<Rat> roots;
  Int c0 = q[0];
  if (c0 == 0) {
    roots.push_back(Rat(0));
  } else {
    // integer roots of q divide the constant term
    for (Int dv(1); dv * dv <= abs(c0); ++dv) {
      if (abs(c0) % dv != 0) continue;
      std::vector<Int> cands = {dv, Int(-dv), Int(abs(c0) / dv), Int(-(abs(c0) / dv))};
      for (const Int& cand : cands) {
        Rat val(0);
        for (int i = n; i >= 0; --i) val = val * Rat(cand) + Rat(q[i]);
        if (val == 0) roots.push_back(Rat(cand));
      }
    }
  }
  std::vector<Rat> out;
  for (const Rat& y : roots) {
    Rat root = y / Rat(L);
    if (p.eval(root) == 0 && std::find(out.begin(), out.end(), root) == out.end())
      out.push_back(root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StandardRecovery config_from_standard(const StandardShape& in, std::optional<Rat> rho_witness) {
  StandardShape cur = in;
  StandardRecovery out;
  if (cur.e3 != 0) {
    Rat rho;
    UniPoly resolvent({cur.e3, cur.d2, cur.c1, Rat(1)});
    if (rho_witness) {
      rho = *rho_witness;
      if (resolvent.eval(rho) != 0)
        throw std::domain_error("config_from_standard: supplied shift root is not a root");
    } else {
      auto roots = rational_roots_monic(resolvent);
      if (roots.empty())
        throw std::domain_error(
            "config_from_standard: no rational root of the shift cubic; supply a witness");
      rho = roots.front();
    }
    out.rho = rho;
    // X -> X + rho t (t+mu)(t+nu) on the full model, then re-read the shape
    UniPoly t = UniPoly::t();
    UniPoly T = t * UniPoly({cur.mu, Rat(1)}) * UniPoly({cur.nu, Rat(1)}) * rho;
    WeierstrassModel m = cur.model();
    UniPoly a2 = m.a2 + T * Rat(3);
    UniPoly a4 = m.a4 + T * m.a2 * Rat(2) + T * T * Rat(3);
    UniPoly a6 = m.a6 + T * m.a4 + T * T * m.a2 + T * T * T;
    UniPoly lm({cur.mu, Rat(1)}), ln({cur.nu, Rat(1)});
    UniPoly q2 = a2.exact_div(lm * ln);
    UniPoly q4 = a4.exact_div((lm * ln).pow(2));
    UniPoly q6 = a6.exact_div((lm * ln).pow(3));
    if (q2.degree() > 1 || q4.degree() > 2 || q6.degree() > 2)
      throw std::logic_error("config_from_standard: shift did not preserve the shape");
    cur.c1 = q2.coeff(1);
    cur.c0 = q2.coeff(0);
    cur.d2 = q4.coeff(2);
    cur.d1 = q4.coeff(1);
    cur.d0 = q4.coeff(0);
    cur.e3 = 0;
    cur.e2 = q6.coeff(2);
    cur.e1 = q6.coeff(1);
    cur.e0 = q6.coeff(0);
  }
  Rat disc = cur.c1 * cur.c1 - 4 * cur.d2;
  auto c1root = sqrt_exact(disc);
  if (!c1root)
    throw std::domain_error("config_from_standard: c1^2 - 4 d2 is not a rational square");
  std::vector<Rat> c1cands = {*c1root, Rat(-*c1root)};
  for (const Rat& c1 : c1cands) {
    Rat d2 = -(cur.c1 + c1) / 2;
    Rat unit = c1 + d2;  // = (c1 - c1tilde)/2
    if (unit == 0) continue;
    if (unit * d2 != cur.d2) continue;  // consistency of the quadratic relation
    Rat e2 = cur.e2 / (unit * unit);
    Rat d1 = -cur.d1 / unit - 2 * e2;
    Rat c0 = cur.c0 - d1 - e2;
    Rat e1 = -cur.e1 / (unit * unit);
    Rat d0 = cur.d0 / unit - e1;
    Rat e0 = cur.e0 / (unit * unit);
    // reconstruct the standard shape and demand exact equality with the input
    StandardShape rec;
    rec.mu = cur.mu;
    rec.nu = cur.nu;
    rec.c1 = -(c1 + 2 * d2);
    rec.c0 = c0 + d1 + e2;
    rec.d2 = unit * d2;
    rec.d1 = -unit * (d1 + 2 * e2);
    rec.d0 = unit * (d0 + e1);
    rec.e3 = 0;
    rec.e2 = unit * unit * e2;
    rec.e1 = -unit * unit * e1;
    rec.e0 = unit * unit * e0;
    bool match = rec.c1 == cur.c1 && rec.c0 == cur.c0 && rec.d2 == cur.d2 &&
                 rec.d1 == cur.d1 && rec.d0 == cur.d0 && rec.e2 == cur.e2 &&
                 rec.e1 == cur.e1 && rec.e0 == cur.e0;
    if (!match) continue;
    out.c1 = c1;
    out.c0 = c0;
    out.d2 = d2;
    out.d1 = d1;
    out.d0 = d0;
    out.e2 = e2;
    out.e1 = e1;
    out.e0 = e0;
    if (c1 == 1 && d1 == 0) {
      SexticConfig cfg{cur.mu, cur.nu, c0, d2, d0, e2, e1, e0};
      if (cfg.valid()) out.cfg = cfg;
    }
    return out;
  }
  throw std::domain_error("config_from_standard: no branch reconstructs the input");
}

}  // namespace k3
