#include "doctest.h"
#include "k3/duality.hpp"
#include "k3/rng.hpp"

using namespace k3;

namespace {

UniPoly polyA(const QuarticCoeffsP& c) {
  return UniPoly({-2 * c.beta, -3 * c.alpha, Rat(0), Rat(1)});
}
UniPoly polyB(const QuarticCoeffsP& c) {
  auto lin = [](const Rat& a, const Rat& b) { return UniPoly({-b, a}); };
  return lin(c.gamma, c.delta) * lin(c.epsilon, c.zeta) * lin(c.eta, c.iota) *
         lin(c.kappa, c.lambda);
}

}  // namespace

TEST_CASE("vgs quotient formula and double quotient") {
  Draw draw(3001);
  QuarticCoeffsP c = draw.tupleP();
  TwoTorsionModel m{polyA(c), polyB(c)};
  TwoTorsionModel q = vgs_quotient(m);
  CHECK(q.a == m.a * Rat(-2));
  CHECK(q.b == m.a * m.a - m.b * Rat(4));
  // double quotient: (4a, 16b), isomorphic to the original via (x,y)->(4x,8y)
  TwoTorsionModel qq = vgs_quotient(q);
  CHECK(qq.a == m.a * Rat(4));
  CHECK(qq.b == m.b * Rat(16));
  WeierstrassModel back = qq.model().rescaled(Rat(1, 4));
  CHECK(back.a2 == m.a);
  CHECK(back.a4 == m.b);
}

TEST_CASE("vgs quotient swaps the fiber types of the paired rows") {
  Draw draw(3002);
  struct Row {
    int locus;  // 0: generic, 1: b4 = 0, 2: b3 = b4 = 0
    const char* x_side;
    const char* y_side;
  };
  const Row rows[] = {
      {0, "I4* + 4I2 + 6I1", "I2* + 6I2 + 4I1"},
      {1, "I6* + 3I2 + 6I1", "I3* + 6I2 + 3I1"},
      {2, "I8* + 2I2 + 6I1", "I4* + 6I2 + 2I1"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.x_side);
    auto mk = [&] {
      QuarticCoeffsP c = draw.tupleP();
      if (row.locus >= 1) { c.kappa = 0; c.lambda = 1; }
      if (row.locus >= 2) { c.eta = 0; c.iota = 1; }
      return c;
    };
    auto c = draw_generic(
        mk, [](const QuarticCoeffsP& t) { return TwoTorsionModel{polyA(t), polyB(t)}.model(); },
        row.x_side);
    REQUIRE(c.has_value());
    TwoTorsionModel m{polyA(*c), polyB(*c)};
    auto quot = classify_fibers(vgs_quotient(m).model());
    CHECK(quot.multiset_str() == row.y_side);
    CHECK(quot.euler_sum() == 24);
  }
}

TEST_CASE("iota_prime closed form on a unit coordinate point") {
  ModuliPoint p{ModuliFamily::PPrime,
                {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}};
  ModuliPoint q = iota_prime(p);
  CHECK(q.coords ==
        std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(1, 4), Rat(0), Rat(0)});
}

TEST_CASE("iota_prime is a symbolic involution") { CHECK(iota_prime_is_symbolic_involution()); }

TEST_CASE("iota_prime: invariant route agrees with the coefficient route") {
  Draw draw(3003);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> coords;
    for (int j = 0; j < 7; ++j) coords.push_back(draw.rat());
    ModuliPoint p{ModuliFamily::PPrime, coords};
    ModuliPoint a = iota_prime(p);
    ModuliPoint b = iota_prime_coefficient_route(p);
    CAPTURE(i);
    CHECK(a.coords == b.coords);
    ModuliPoint back = iota_prime(a);
    CHECK(back.coords == p.coords);
  }
}

TEST_CASE("selfdual locus is exactly the fixed locus") {
  Draw draw(3004);
  int on_locus = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Rat> coords;
    for (int j = 0; j < 7; ++j) coords.push_back(draw.rat(4));
    // half the samples get forced onto the locus
    if (i % 2 == 0) {
      coords[0] = 0;                      // J2
      coords[3] = 0;                      // J10
      coords[6] = 0;                      // J20
      coords[4] = coords[1] * coords[1] / 8;  // J12 = J6^2/8
    }
    ModuliPoint p{ModuliFamily::PPrime, coords};
    bool fixed = iota_prime(p).coords == p.coords;
    CHECK(fixed == selfdual_check(p));
    if (selfdual_check(p)) ++on_locus;
  }
  CHECK(on_locus >= 100);
  // a locus witness: (0, 2, J8, 0, 1/2, J16, 0)
  ModuliPoint w{ModuliFamily::PPrime,
                {Rat(0), Rat(2), Rat(5), Rat(0), Rat(1, 2), Rat(-3), Rat(0)}};
  CHECK(selfdual_check(w));
  ModuliPoint nw{ModuliFamily::PPrime,
                 {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}};
  CHECK_FALSE(selfdual_check(nw));
}

TEST_CASE("self-dual points have fibers III* + III + 4I2 + 4I1") {
  Draw draw(3005);
  auto mk = [&] {
    std::vector<Rat> coords = {Rat(0),      draw.nonzero(), draw.rat(), Rat(0),
                               Rat(0),      draw.rat(),     Rat(0)};
    coords[4] = coords[1] * coords[1] / 8;
    return ModuliPoint{ModuliFamily::PPrime, coords};
  };
  auto p = draw_generic(mk, [](const ModuliPoint& q) { return pprime_alternate_model(q); },
                        "III* + III + 4I2 + 4I1");
  CHECK(p.has_value());
}

TEST_CASE("rank-18 involution") {
  auto r = iota_rank18(Rat(2), Rat(0), Rat(1));
  CHECK(r == std::array<Rat, 3>{Rat(-2), Rat(1), Rat(1)});
  auto rr = iota_rank18(r[0], r[1], r[2]);
  CHECK(rr == std::array<Rat, 3>{Rat(2), Rat(0), Rat(1)});
  // c0 = 0 is fixed as a moduli point (Lambda^4 = -1 takes d1 to -d1)
  CHECK(rank18_wp_fixed(Rat(0), Rat(7), Rat(3)));
  CHECK_FALSE(rank18_wp_fixed(Rat(1), Rat(1), Rat(1)));
  CHECK_THROWS_AS(iota_rank18(Rat(1), Rat(1), Rat(0)), std::domain_error);
  // involutive on random points
  Draw draw(3006);
  for (int i = 0; i < 50; ++i) {
    Rat c0 = draw.rat(), d1 = draw.rat(), d0 = draw.nonzero();
    auto once = iota_rank18(c0, d1, d0);
    auto twice = iota_rank18(once[0], once[1], once[2]);
    CHECK(twice == std::array<Rat, 3>{c0, d1, d0});
  }
}

TEST_CASE("rank-18 fixed locus has fibers 2III* + 2III") {
  Draw draw(3007);
  auto mk = [&] { return std::array<Rat, 2>{draw.rat(), draw.nonzero()}; };
  auto p = draw_generic(
      mk, [](const std::array<Rat, 2>& t) { return rank18_alternate_model(Rat(0), t[0], t[1]); },
      "2III* + 2III");
  CHECK(p.has_value());
  // generic c0 != 0 gives 2III* + 2I2 + 2I1
  auto q = draw_generic(
      mk, [](const std::array<Rat, 2>& t) { return rank18_alternate_model(Rat(1), t[0], t[1]); },
      "2III* + 2I2 + 2I1");
  CHECK(q.has_value());
}

TEST_CASE("vgs quotient preserves euler number") {
  Draw draw(3008);
  for (int i = 0; i < 10; ++i) {
    QuarticCoeffsP c = draw.tupleP();
    TwoTorsionModel m{polyA(c), polyB(c)};
    try {
      CHECK(classify_fibers(m.model()).euler_sum() == 24);
      CHECK(classify_fibers(vgs_quotient(m).model()).euler_sum() == 24);
    } catch (const DegenerateModel&) {
    }
  }
}
