#include "doctest.h"
#include "k3/curvegraph.hpp"

using namespace k3;

namespace {

const GraphId kAll[] = {GraphId::P14, GraphId::Pprime14, GraphId::Psecond14, GraphId::P15,
                        GraphId::P16};

}  // namespace

TEST_CASE("graph shapes") {
  CHECK(builtin_graph(GraphId::P14).nodes.size() == 27);
  CHECK(builtin_graph(GraphId::Pprime14).nodes.size() == 20);
  CHECK(builtin_graph(GraphId::Psecond14).nodes.size() == 15);
  CHECK(builtin_graph(GraphId::P15).nodes.size() == 21);
  CHECK(builtin_graph(GraphId::P16).nodes.size() == 19);
  // P'' is a tree with no multiple edges
  for (const auto& [e, m] : builtin_graph(GraphId::Psecond14).edges) CHECK(m == 1);
  CHECK(builtin_graph(GraphId::Psecond14).edges.size() == 14);
  // six-fold edges present where the figures show them
  const CurveGraph& p14 = builtin_graph(GraphId::P14);
  CHECK(p14.mult(p14.index("R4"), p14.index("R5")) == 6);
  const CurveGraph& p15 = builtin_graph(GraphId::P15);
  CHECK(p15.mult(p15.index("R4"), p15.index("R5")) == 6);
}

TEST_CASE("graph lattices match the polarizing lattices") {
  for (GraphId id : kAll) {
    CAPTURE(graph_id_name(id));
    auto got = graph_lattice_invariants(builtin_graph(id));
    auto want = lattice_invariants(build_lattice(expected_lattice_expr(id)));
    CHECK(got.rank == want.rank);
    CHECK(got.sig_pos == want.sig_pos);
    CHECK(got.sig_neg == want.sig_neg);
    CHECK(same_discriminant_form(got.disc, want.disc));
  }
}

TEST_CASE("the two rank-14 Z2^4 graphs have opposite parity") {
  auto p = graph_lattice_invariants(builtin_graph(GraphId::P14));
  auto pp = graph_lattice_invariants(builtin_graph(GraphId::Pprime14));
  CHECK(p.disc.group_str() == "Z2^4");
  CHECK(pp.disc.group_str() == "Z2^4");
  CHECK_FALSE(p.disc.even);
  CHECK(pp.disc.even);
}

TEST_CASE("all transcribed class identities hold") {
  for (GraphId id : kAll) {
    const CurveGraph& g = builtin_graph(id);
    for (const auto& ident : builtin_identities(id)) {
      CAPTURE(graph_id_name(id));
      CAPTURE(ident.name);
      CHECK(class_identity_check(g, ident.lhs, ident.rhs));
    }
  }
  // a perturbed identity fails: F_alt = R1 + L3 + a1 is wrong
  const CurveGraph& g = builtin_graph(GraphId::P14);
  auto id0 = builtin_identities(GraphId::P14).front();
  DivisorClass bad = id0.rhs;
  bad[g.index("a1")] += 1;
  CHECK_FALSE(class_identity_check(g, id0.lhs, bad));
}

TEST_CASE("every fiber embedding passes") {
  for (GraphId id : kAll) {
    const CurveGraph& g = builtin_graph(id);
    for (const auto& emb : builtin_embeddings(id)) {
      CAPTURE(graph_id_name(id));
      CAPTURE(emb.name);
      auto rep = fiber_embedding_check(g, emb);
      CAPTURE(rep.first_failure);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("embedding multiplicities reproduce the affine kernel vectors") {
  const CurveGraph& g = builtin_graph(GraphId::P14);
  // the D8 fiber of the alternate fibration
  const auto& alt = builtin_embeddings(GraphId::P14).front();
  auto kv = fiber_multiplicities(g, alt.fibers[0]);
  REQUIRE(kv.has_value());
  // marks (1,1,2,2,2,2,2,1,1) in the listed order a2,L2,a3,a4,a5,a6,a7,L4,L1
  std::vector<Int> want = {Int(1), Int(1), Int(2), Int(2), Int(2),
                           Int(2), Int(2), Int(1), Int(1)};
  CHECK(*kv == want);
}

TEST_CASE("polarization pairings") {
  for (GraphId id : {GraphId::P14, GraphId::P15, GraphId::P16}) {
    const CurveGraph& g = builtin_graph(id);
    auto H = polarization_divisor(id);
    REQUIRE(H.has_value());
    CHECK(pairing(g, *H, *H) == 4);
    // H pairs to 0 with the exceptional curves and to 1 with the lines
    for (const auto& n : g.nodes) {
      DivisorClass d(g.nodes.size(), Int(0));
      d[g.index(n)] = 1;
      Int v = pairing(g, *H, d);
      if (n[0] == 'a' || n[0] == 'b') CHECK(v == 0);
      if (n[0] == 'L') CHECK(v == 1);
    }
  }
}

TEST_CASE("dot output is deterministic and renders highlights") {
  const CurveGraph& g = builtin_graph(GraphId::Psecond14);
  std::string a = emit_dot(g);
  std::string b = emit_dot(g);
  CHECK(a == b);
  CHECK(a.find("E15") != std::string::npos);
  const auto& emb = builtin_embeddings(GraphId::Psecond14).front();
  std::string c = emit_dot(g, &emb);
  CHECK(c.find("fillcolor=red") != std::string::npos);
  CHECK(c != a);
}
