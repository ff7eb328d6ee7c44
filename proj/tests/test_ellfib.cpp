#include <random>

#include "doctest.h"
#include "k3/lattices.hpp"
#include "k3/weierstrass.hpp"

using namespace k3;

namespace {

std::mt19937_64 rng(414213562);

Rat rnd(int range = 10) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

UniPoly t() { return UniPoly::t(); }

}  // namespace

TEST_CASE("short invariants of y^2 = x^3 + t") {
  WeierstrassModel m(UniPoly::zero(), UniPoly::zero(), t());
  auto [c4, c6, delta] = short_invariants(m);
  CHECK(c4.is_zero());
  CHECK(c6 == t() * Rat(-864));
  CHECK(delta == t() * t() * Rat(-432));
  CHECK(c4 * c4 * c4 - c6 * c6 == delta * Rat(1728));
}

TEST_CASE("short invariants oracle: two-torsion model with A = t^3 - 7t, B = 9") {
  UniPoly A({Rat(0), Rat(-7), Rat(0), Rat(1)});
  UniPoly B(Rat(9));
  WeierstrassModel m(A * Rat(-2), A * A - B * Rat(4), UniPoly::zero());
  auto [c4, c6, delta] = short_invariants(m);
  CHECK(c4 * c4 * c4 - c6 * c6 == delta * Rat(1728));
  // delta = 16 a4^2 (a2^2 - 4 a4) = 256 * B * (A^2-4B)^2
  UniPoly S = A * A - B * Rat(4);
  CHECK(delta == S * S * Rat(256 * 9));
}

TEST_CASE("c4^3 - c6^2 = 1728 delta on random models") {
  for (int i = 0; i < 25; ++i) {
    std::vector<Rat> a2c(3), a4c(5), a6c(7);
    for (auto& c : a2c) c = rnd();
    for (auto& c : a4c) c = rnd();
    for (auto& c : a6c) c = rnd();
    WeierstrassModel m{UniPoly(a2c), UniPoly(a4c), UniPoly(a6c)};
    try {
      auto [c4, c6, delta] = short_invariants(m);
      CHECK(c4 * c4 * c4 - c6 * c6 == delta * Rat(1728));
    } catch (const DegenerateModel&) {
    }
  }
}

TEST_CASE("classify y^2 = x^3 + t: II at t=0, II* at infinity") {
  WeierstrassModel m(UniPoly::zero(), UniPoly::zero(), t());
  auto cfg = classify_fibers(m);
  REQUIRE(cfg.entries.size() == 2);
  auto ms = cfg.type_multiset();
  CHECK(ms.at("II") == 1);
  CHECK(ms.at("II*") == 1);
  CHECK(cfg.euler_sum() == 12);  // rational elliptic surface
}

TEST_CASE("kodaira parse and euler numbers") {
  CHECK(KodairaType::parse("I4*")->euler() == 10);
  CHECK(KodairaType::parse("I1")->euler() == 1);
  CHECK(KodairaType::parse("IV*")->euler() == 8);
  CHECK(KodairaType::parse("III")->components() == 2);
  CHECK(parse_multiset("I4* + 4I2 + 6I1") ==
        std::map<std::string, int>{{"I4*", 1}, {"I2", 4}, {"I1", 6}});
  CHECK(parse_multiset("2III* + 2III") ==
        std::map<std::string, int>{{"III*", 2}, {"III", 2}});
}

TEST_CASE("classification invariant under admissible rescaling") {
  UniPoly A({Rat(2), Rat(-7), Rat(0), Rat(1)});
  UniPoly B({Rat(3), Rat(1), Rat(0), Rat(0), Rat(2)});
  WeierstrassModel m(A, B, UniPoly::zero());
  auto base = classify_fibers(m).type_multiset();
  for (Rat l2 : {Rat(4), Rat(9, 4), Rat(-2, 3), Rat(5)}) {
    WeierstrassModel r = m.rescaled(l2);
    r.k = m.k;
    CHECK(classify_fibers(r).type_multiset() == base);
  }
}

TEST_CASE("classification invariant under base Moebius maps") {
  // I4* + 4I2 + 6I1 representative of the alternate fibration
  UniPoly A({Rat(-2), Rat(-3), Rat(0), Rat(1)});
  UniPoly B = UniPoly({Rat(-1), Rat(1)}) * UniPoly({Rat(-3), Rat(1)}) *
              UniPoly({Rat(-4), Rat(1)}) * UniPoly({Rat(-5), Rat(1)});
  WeierstrassModel m(A, B, UniPoly::zero());
  m.k = 2;
  auto base = classify_fibers(m).type_multiset();
  // t -> (p t + q)/(r t + s): act on the homogeneous coefficients
  auto mobius = [&](const WeierstrassModel& in, long p, long q, long r, long s) {
    auto hom = [&](const UniPoly& f, int degh) {
      // f homogenized to degree degh, composed with (u,v) -> (p u + q v, r u + s v),
      // then dehomogenized at v = 1
      UniPoly out;
      for (int i = 0; i <= degh; ++i) {
        Rat c = f.coeff(i);
        if (c == 0) continue;
        UniPoly uu({Rat(q), Rat(p)});
        UniPoly vv({Rat(s), Rat(r)});
        out += uu.pow(i) * vv.pow(degh - i) * c;
      }
      return out;
    };
    WeierstrassModel o(hom(in.a2, 2 * in.k), hom(in.a4, 4 * in.k), hom(in.a6, 6 * in.k));
    o.k = in.k;
    return o;
  };
  for (auto [p, q, r, s] : {std::array<long, 4>{1, 1, 0, 1}, std::array<long, 4>{0, 1, 1, 0},
                            std::array<long, 4>{2, 3, 1, 2}}) {
    auto got = classify_fibers(mobius(m, p, q, r, s)).type_multiset();
    CHECK(got == base);
  }
}

TEST_CASE("consistency report arithmetics") {
  // I4* + 4I2 + 6I1 with MW = Z/2: euler 24, picard 14, determinant condition
  UniPoly A({Rat(-2), Rat(-3), Rat(0), Rat(1)});
  UniPoly B = UniPoly({Rat(-1), Rat(1)}) * UniPoly({Rat(-3), Rat(1)}) *
              UniPoly({Rat(-4), Rat(1)}) * UniPoly({Rat(-5), Rat(1)});
  WeierstrassModel m(A, B, UniPoly::zero());
  m.k = 2;
  auto cfg = classify_fibers(m);
  CHECK(cfg.multiset_str() == "I4* + 4I2 + 6I1");
  CHECK(cfg.mw_torsion_order == 2);
  IntLattice P = build_lattice("H + E8(-1) + A1(-1)^4");
  Int pd(1);
  for (auto& d : smith_normal_form(P.gram)) pd *= d;
  auto rep = consistency_report(cfg, 14, pd);
  CHECK(rep.euler_ok);
  CHECK(rep.shioda_tate_ok);
  CHECK(rep.determinant_ok);
  CHECK(rep.root_disc_order == 64);  // |D(D8 + A1^4)| = 4 * 2^4
}

TEST_CASE("smooth-only configuration fails euler") {
  FiberConfig cfg;
  auto rep = consistency_report(cfg, 14);
  CHECK_FALSE(rep.euler_ok);
}
