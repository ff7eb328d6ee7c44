#include "k3/moduli.hpp"

#include <numeric>
#include <sstream>

namespace k3 {

namespace {

const std::vector<int> kWeightsP = {4, 4, 6, 6, 8, 10, 12};
const std::vector<int> kWeightsPPrime = {2, 6, 8, 10, 12, 16, 20};
const std::vector<int> kWeightsPSecond = {4, 6, 8, 10, 12, 16, 18};
const std::vector<int> kWeightsRank13 = {4, 6, 8, 10, 12, 14, 16, 18};

}  // namespace

const std::vector<int>& ModuliPoint::weights() const {
  switch (family) {
    case ModuliFamily::P: return kWeightsP;
    case ModuliFamily::PPrime: return kWeightsPPrime;
    case ModuliFamily::PSecond: return kWeightsPSecond;
    case ModuliFamily::PSecondRank13: return kWeightsRank13;
  }
  return kWeightsP;
}

std::vector<std::string> ModuliPoint::coord_names() const {
  switch (family) {
    case ModuliFamily::P: return {"j4", "j4'", "j6", "j6'", "j8", "j10", "j12"};
    case ModuliFamily::PPrime: return {"J2", "J6", "J8", "J10", "J12", "J16", "J20"};
    case ModuliFamily::PSecond: return {"j4", "j6", "j8", "j10", "j12", "j16", "j18"};
    case ModuliFamily::PSecondRank13:
      return {"j4", "j6", "j8", "j10", "j12", "j14", "j16", "j18"};
  }
  return {};
}

bool ModuliPoint::inside_moduli_space() const {
  auto nz = [&](std::initializer_list<int> idx) {
    for (int i : idx)
      if (coords[i] != 0) return true;
    return false;
  };
  switch (family) {
    case ModuliFamily::P: return nz({1, 3, 4, 5, 6});           // (j4',j6',j8,j10,j12)
    case ModuliFamily::PPrime: return nz({1, 2, 3, 4, 5, 6});   // (J6..J20)
    case ModuliFamily::PSecond: return nz({2, 3, 4, 5, 6});     // (j8..j18)
    case ModuliFamily::PSecondRank13: return nz({2, 3, 4, 5, 6, 7});
  }
  return false;
}

std::string ModuliPoint::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << " : ";
    os << to_string(coords[i]);
  }
  os << "]";
  return os.str();
}

bool wp_equivalent(const ModuliPoint& p, const ModuliPoint& q) {
  if (p.family != q.family) throw std::domain_error("wp_equivalent: family mismatch");
  const auto& w = p.weights();
  size_t n = p.coords.size();
  for (size_t i = 0; i < n; ++i)
    if ((p.coords[i] == 0) != (q.coords[i] == 0)) return false;
  for (size_t i = 0; i < n; ++i) {
    if (p.coords[i] == 0) continue;
    for (size_t k = i + 1; k < n; ++k) {
      if (p.coords[k] == 0) continue;
      // p_i^{w_k} q_k^{w_i} = p_k^{w_i} q_i^{w_k}
      if (pow_rat(p.coords[i], w[k]) * pow_rat(q.coords[k], w[i]) !=
          pow_rat(p.coords[k], w[i]) * pow_rat(q.coords[i], w[k]))
        return false;
    }
  }
  return true;
}

namespace {

std::optional<Rat> nth_root_exact(const Rat& r, int e) {
  if (e == 1) return r;
  if (r < 0 && e % 2 == 0) return std::nullopt;
  auto root = [&](Int v) -> std::optional<Int> {
    bool negate = v < 0;
    if (negate) v = -v;
    Int out;
    mpz_root(out.get_mpz_t(), v.get_mpz_t(), e);
    Int chk(1);
    for (int t = 0; t < e; ++t) chk *= out;
    if (chk != v) return std::nullopt;
    return negate ? Int(-out) : out;
  };
  auto a = root(Int(r.get_num())), b = root(Int(r.get_den()));
  if (!a || !b) return std::nullopt;
  return Rat(*a, *b);
}

}  // namespace

bool wp_equivalent_rational(const ModuliPoint& p, const ModuliPoint& q) {
  if (!wp_equivalent(p, q)) return false;
  const auto& w = p.weights();
  int g = 0;
  int first = -1;
  for (size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] != 0) {
      g = std::gcd(g, w[i]);
      if (first < 0) first = static_cast<int>(i);
    }
  if (first < 0) return true;  // both zero points
  // mu = Lambda^g must satisfy q_i = p_i * mu^{w_i/g} for all nonzero i
  Rat r0 = q.coords[first] / p.coords[first];
  auto root = nth_root_exact(r0, w[first] / g);
  if (!root) return false;
  std::vector<Rat> candidates = {*root};
  if ((w[first] / g) % 2 == 0) candidates.push_back(-*root);
  for (const Rat& mu : candidates) {
    bool ok = true;
    for (size_t i = 0; i < p.coords.size() && ok; ++i)
      if (p.coords[i] != 0 && q.coords[i] != p.coords[i] * pow_rat(mu, w[i] / g)) ok = false;
    if (ok) return true;
  }
  return false;
}

ModuliPoint invariants_from_AB(const UniPoly& A, const UniPoly& B) {
  if (A.degree() != 3 || !(A.lc() == 1) || A.coeff(2) != 0)
    throw std::domain_error("invariants_from_AB: A not a normalized cubic");
  Rat a1 = A.coeff(1), a0 = A.coeff(0);
  Rat b4 = B.coeff(4), b3 = B.coeff(3), b2 = B.coeff(2), b1 = B.coeff(1), b0 = B.coeff(0);
  Rat j4 = -a1 / 3 + Rat(2) * b4 / 3;
  Rat j6 = -a0 / 2 + b3;
  Rat j8 = b2 - a1 * b4 + b4 * b4;
  Rat j10 = a0 * b4 + a1 * b3 - b1 - 2 * b3 * b4;
  Rat j12 = b0 - a0 * b3 + b3 * b3;
  return {ModuliFamily::P, {j4, b4, j6, b3, j8, j10, j12}};
}

std::array<Rat, 7> intro_invariants(const UniPoly& A, const UniPoly& B) {
  return {-A.coeff(1) / 3, B.coeff(4), -A.coeff(0) / 2, -B.coeff(3),
          B.coeff(2),      -B.coeff(1), B.coeff(0)};
}

ModuliPoint invariants_P(const QuarticCoeffsP& c) {
  // expansion route
  UniPoly A({-2 * c.beta, -3 * c.alpha, Rat(0), Rat(1)});
  auto lin = [](const Rat& a, const Rat& b) { return UniPoly({-b, a}); };
  UniPoly B = lin(c.gamma, c.delta) * lin(c.epsilon, c.zeta) * lin(c.eta, c.iota) *
              lin(c.kappa, c.lambda);
  ModuliPoint p = invariants_from_AB(A, B);

  // closed forms, kept as an independent route
  const Rat &al = c.alpha, &be = c.beta, &ga = c.gamma, &de = c.delta, &ep = c.epsilon,
            &ze = c.zeta, &et = c.eta, &io = c.iota, &ka = c.kappa, &la = c.lambda;
  Rat gz_de = ga * ze + de * ep;     // gamma zeta + delta eps
  Rat el_ik = et * la + io * ka;     // eta lambda + iota kappa
  Rat geek = ga * ep * et * ka;
  Rat j4 = al + Rat(2) * geek / 3;
  Rat j6 = be - ga * ep * el_ik - gz_de * et * ka;
  Rat j8 = ga * ep * io * la + gz_de * el_ik + (3 * al * ga * ep + de * ze) * et * ka +
           geek * geek;
  Rat j10 = gz_de * io * la + (3 * al * ga * ep + de * ze) * el_ik +
            (3 * al * gz_de - 2 * be * ga * ep) * et * ka +
            2 * ga * ga * ep * ep * el_ik * et * ka + 2 * ga * ep * gz_de * et * et * ka * ka;
  Rat j12 = de * ze * io * la - 2 * be * ga * ep * el_ik +
            2 * (ga * ga * ep * ep * io * la - be * gz_de) * et * ka +
            ga * ga * ep * ep * (et * et * la * la + io * io * ka * ka) +
            2 * ga * ep * et * ka * gz_de * el_ik + gz_de * gz_de * et * et * ka * ka;
  Rat j4p = geek;
  Rat j6p = -ga * ep * el_ik - gz_de * et * ka;
  ModuliPoint q{ModuliFamily::P, {j4, j4p, j6, j6p, j8, j10, j12}};
  if (p.coords != q.coords)
    throw std::logic_error("invariants_P: expansion and closed forms disagree");
  return p;
}

ModuliPoint invariants_PPrime(const QuarticCoeffsPPrime& c) {
  Rat J2 = c.f2, J6 = c.f1, J8 = c.g0 + c.h1 - c.h2 * c.h2, J10 = c.f0;
  Rat J12 = c.g0 * c.h2 - c.h1 * c.h2 + c.h0;
  Rat J16 = c.g0 * c.h1 - c.h0 * c.h2;
  Rat J20 = c.g0 * c.h0;
  return {ModuliFamily::PPrime, {J2, J6, J8, J10, J12, J16, J20}};
}

ModuliPoint invariants_Vinberg(const VinbergCoeffs& c) {
  Rat j4 = -c.f12 / 3, j6 = -c.f22, j8 = c.g1, j10 = -2 * c.f13, j12 = 4 * c.f23;
  Rat j14 = c.g0 * c.g0, j16 = c.g3, j18 = c.f33;
  if (c.g0 == 0) return {ModuliFamily::PSecond, {j4, j6, j8, j10, j12, j16, j18}};
  return {ModuliFamily::PSecondRank13, {j4, j6, j8, j10, j12, j14, j16, j18}};
}

std::array<Rat, 7> vinberg_script_invariants(const VinbergCoeffs& c) {
  return {c.f12, c.f22, c.g1, c.f13, c.f23, c.g3, c.f33};
}

UniPoly satake_sextic(const Rat& j4, const Rat& j6, const Rat& j8, const Rat& j10,
                      const Rat& j12) {
  UniPoly cube({-2 * j6, -3 * j4, Rat(0), Rat(1)});
  UniPoly quad({j12, -j10, j8});
  return cube * cube - quad * Rat(4);
}

std::array<Rat, 5> power_sums_to_j(const SatakePowerSums& s) {
  Rat j4 = s.s4 / 12;
  Rat j6 = s.s6 / 12;
  Rat j8 = (4 * s.s8 - s.s4 * s.s4) / 64;
  Rat j10 = (5 * s.s4 * s.s6 - 12 * s.s10) / 240;
  Rat j12 = (3 * s.s4 * s.s4 * s.s4 - 18 * s.s4 * s.s8 - 4 * s.s6 * s.s6 + 24 * s.s12) / 576;
  return {j4, j6, j8, j10, j12};
}

std::array<Rat, 5> power_sums_to_j_symmetric(const SatakePowerSums& s) {
  // Newton's identities with p1 = s2 = 0 give the elementary symmetric e1..e6
  std::array<Rat, 7> p = {Rat(0), Rat(0), s.s4, s.s6, s.s8, s.s10, s.s12};
  std::array<Rat, 7> e;
  e[0] = 1;
  for (int k = 1; k <= 6; ++k) {
    Rat acc(0);
    for (int i = 1; i <= k; ++i) acc += (i % 2 ? p[i] : -p[i]) * e[k - i];
    e[k] = acc / k;
  }
  // S(t) = t^6 - e1 t^5 + e2 t^4 - ... + e6; compare with the closed form
  Rat c4 = e[2], c3 = -e[3], c2 = e[4], c1 = -e[5], c0 = e[6];
  Rat j4 = -c4 / 6;
  Rat j6 = -c3 / 4;
  Rat j8 = (9 * j4 * j4 - c2) / 4;
  Rat j10 = (c1 - 12 * j4 * j6) / 4;
  Rat j12 = (4 * j6 * j6 - c0) / 4;
  return {j4, j6, j8, j10, j12};
}

ABPair gauge_normalize(const UniPoly& A_raw, const UniPoly& B_raw) {
  if (A_raw.degree() != 3)
    throw std::domain_error("gauge_normalize: A must be a cubic");
  Rat lc = A_raw.lc();
  // t -> a t + b with a = lc kills nothing; b = -c2/(3 lc) * a ... the shift
  // that removes the t^2 coefficient of A(a t + b) is b = -c2/(3 lc)
  Rat a = lc;
  Rat b = -A_raw.coeff(2) / (3 * lc);
  Rat l2 = lc * lc;  // lambda = lc^2, lambda^2 = lc^4
  UniPoly A = A_raw.compose_affine(a, b) / (l2 * l2);
  UniPoly B = B_raw.compose_affine(a, b) / (l2 * l2 * l2 * l2);
  ABPair out{A, B};
  if (!out.normalized()) throw std::logic_error("gauge_normalize: normalization failed");
  return out;
}

}  // namespace k3
