#include "doctest.h"
#include "k3/lattices.hpp"

using namespace k3;

namespace {

Int det_from_snf(const IntLattice& L) {
  Int d(1);
  for (auto& x : smith_normal_form(L.gram)) d *= x;
  return d;
}

}  // namespace

TEST_CASE("elementary lattices") {
  auto A1 = build_lattice("A1(-1)");
  CHECK(A1.rank() == 1);
  CHECK(A1.gram[0][0] == -2);
  auto H = build_lattice("H");
  auto invH = lattice_invariants(H);
  CHECK(invH.sig_pos == 1);
  CHECK(invH.sig_neg == 1);
  CHECK(invH.disc.invariant_factors.empty());

  auto P = build_lattice("H + E8(-1) + A1(-1)^4");
  CHECK(P.rank() == 14);
  CHECK(det_from_snf(P) == 16);

  auto invA1 = lattice_invariants(A1);
  REQUIRE(invA1.disc.invariant_factors.size() == 1);
  CHECK(invA1.disc.invariant_factors[0] == 2);
  // q = -1/2 mod 2Z
  CHECK(invA1.disc.q[0][0] == Rat(3, 2));  // -1/2 = 3/2 mod 2
  CHECK_FALSE(invA1.disc.even);
}

TEST_CASE("rank, signature and discriminant of the polarizing lattices") {
  struct Row {
    const char* expr;
    int rank;
    std::pair<int, int> sig;
    const char* group;
  };
  const Row rows[] = {
      {"H + E7(-1) + D6(-1)", 15, {1, 14}, "Z2^3"},
      {"H + E8(-1) + D4(-1)", 14, {1, 13}, "Z2^2"},
      {"H + D8(-1) + D4(-1)", 14, {1, 13}, "Z2^4"},
      {"H + E8(-1) + A1(-1)^4", 14, {1, 13}, "Z2^4"},
      {"H + E8(-1) + A3(-1)", 13, {1, 12}, "Z4"},
  };
  for (const auto& r : rows) {
    CAPTURE(r.expr);
    auto inv = lattice_invariants(build_lattice(r.expr));
    CHECK(inv.rank == r.rank);
    CHECK(inv.sig_pos == r.sig.first);
    CHECK(inv.sig_neg == r.sig.second);
    CHECK(inv.disc.group_str() == r.group);
  }
}

TEST_CASE("the two Z2^4 lattices differ by parity") {
  auto a = lattice_invariants(build_lattice("H + E8(-1) + A1(-1)^4"));
  auto b = lattice_invariants(build_lattice("H + D8(-1) + D4(-1)"));
  CHECK(a.disc.group_str() == "Z2^4");
  CHECK(b.disc.group_str() == "Z2^4");
  CHECK(a.two_elementary);
  CHECK(b.two_elementary);
  CHECK_FALSE(a.disc.even);  // A1(-1) summands carry half-integral q
  CHECK(b.disc.even);
  CHECK_FALSE(same_discriminant_form(a.disc, b.disc));
}

TEST_CASE("isometry chains share all computed invariants") {
  auto check_chain = [](std::initializer_list<const char*> exprs) {
    std::vector<LatticeInvariants> invs;
    for (const char* e : exprs) invs.push_back(lattice_invariants(build_lattice(e)));
    for (size_t i = 1; i < invs.size(); ++i) {
      CAPTURE(i);
      CHECK(invs[0].rank == invs[i].rank);
      CHECK(invs[0].sig_pos == invs[i].sig_pos);
      CHECK(invs[0].sig_neg == invs[i].sig_neg);
      CHECK(same_discriminant_form(invs[0].disc, invs[i].disc));
    }
  };
  // the four manifestations of P
  check_chain({"H + E8(-1) + A1(-1)^4", "H + E7(-1) + D4(-1) + A1(-1)",
               "H + D10(-1) + A1(-1)^2", "H + D6(-1)^2"});
  // rank 15
  check_chain({"H + E8(-1) + D4(-1) + A1(-1)", "H + E7(-1) + D6(-1)",
               "H + D12(-1) + A1(-1)"});
  // rank 16
  check_chain({"H + E8(-1) + D6(-1)", "H + E7(-1) + E7(-1)", "H + D14(-1)"});
}

TEST_CASE("snf properties") {
  auto P = build_lattice("H + D8(-1) + D4(-1)");
  auto snf = smith_normal_form(P.gram);
  Int prod(1);
  for (auto& d : snf) prod *= d;
  CHECK(prod == 16);
  // determinant of H + E8 + A3: |det| = 4
  CHECK(det_from_snf(build_lattice("H + E8(-1) + A3(-1)")) == 4);
}

TEST_CASE("root_lattice_of_config and frame consistency") {
  FiberConfig cfg;
  auto add = [&](const char* type, int count) {
    for (int i = 0; i < count; ++i) {
      FiberEntry f;
      f.place.poly = UniPoly({Rat(-i), Rat(1)});
      f.type = *KodairaType::parse(type);
      cfg.entries.push_back(f);
    }
  };
  add("I4*", 1);
  add("I2", 4);
  add("I1", 6);
  cfg.mw_torsion_order = 2;
  auto root = root_lattice_of_config(cfg);
  CHECK(root.rank() == 12);  // D8 + A1^4
  CHECK(det_from_snf(root) == 64);
  auto rep = frame_consistency(cfg, build_lattice("H + E8(-1) + A1(-1)^4"));
  CHECK(rep.determinant_ok);

  FiberConfig cfg2;
  auto add2 = [&](const char* type, int count) {
    for (int i = 0; i < count; ++i) {
      FiberEntry f;
      f.place.poly = UniPoly({Rat(-i - 1), Rat(1)});
      f.type = *KodairaType::parse(type);
      cfg2.entries.push_back(f);
    }
  };
  add2("I2*", 2);
  add2("I1", 8);
  cfg2.mw_torsion_order = 1;
  CHECK(root_lattice_of_config(cfg2).rank() == 12);  // D6 + D6
  CHECK(frame_consistency(cfg2, build_lattice("H + E8(-1) + A1(-1)^4")).determinant_ok);
}

TEST_CASE("every frame pair satisfies the determinant condition") {
  struct Row {
    const char* root;
    int torsion;
    const char* ns;
  };
  const Row rows[] = {
      // rank 15 cases
      {"E7(-1) + D6(-1)", 1, "H + E7(-1) + D6(-1)"},
      {"E8(-1) + D4(-1) + A1(-1)", 1, "H + E7(-1) + D6(-1)"},
      {"D12(-1) + A1(-1)", 1, "H + E7(-1) + D6(-1)"},
      {"D10(-1) + A1(-1)^3", 2, "H + E7(-1) + D6(-1)"},
      // P cases
      {"D6(-1)^2", 1, "H + E8(-1) + A1(-1)^4"},
      {"D10(-1) + A1(-1)^2", 1, "H + E8(-1) + A1(-1)^4"},
      {"E7(-1) + D4(-1) + A1(-1)", 1, "H + E8(-1) + A1(-1)^4"},
      {"E8(-1) + A1(-1)^4", 1, "H + E8(-1) + A1(-1)^4"},
      {"D8(-1) + A1(-1)^4", 2, "H + E8(-1) + A1(-1)^4"},
      // P' cases
      {"D8(-1) + D4(-1)", 1, "H + D8(-1) + D4(-1)"},
      {"E7(-1) + A1(-1)^5", 2, "H + D8(-1) + D4(-1)"},
      // P'' cases
      {"E8(-1) + D4(-1)", 1, "H + E8(-1) + D4(-1)"},
      {"D12(-1)", 1, "H + E8(-1) + D4(-1)"},
      // rank 13 (Vinberg) cases, D3 = A3
      {"E8(-1) + D3(-1)", 1, "H + E8(-1) + A3(-1)"},
      {"D11(-1)", 1, "H + E8(-1) + A3(-1)"},
  };
  for (const auto& r : rows) {
    CAPTURE(r.root);
    Int root_disc = det_from_snf(build_lattice(r.root));
    Int ns_disc = det_from_snf(build_lattice(r.ns));
    CHECK(root_disc == ns_disc * r.torsion * r.torsion);
  }
}

TEST_CASE("the rank-8 Nikulin lattice is kept as an opaque record") {
  const auto& n = nikulin_lattice();
  CHECK(n.rank == 8);
  CHECK(n.disc_group == "Z2^6");
}
