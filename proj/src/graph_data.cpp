#include "k3/curvegraph.hpp"

// Dual-graph data for the five built-in configurations of smooth rational
// curves. Where different descriptions of an edge disagree, the variant
// consistent with the fiber-class identity system is kept (the test suite
// re-derives every fiber class from the affine Dynkin kernel vectors).

namespace k3 {

namespace {

struct EdgeSpec {
  const char* a;
  const char* b;
  int m;
};

CurveGraph make_graph(const std::string& id, std::vector<std::string> nodes,
                      const std::vector<EdgeSpec>& edges) {
  CurveGraph g;
  g.id = id;
  g.nodes = std::move(nodes);
  for (const auto& e : edges) {
    int i = g.index(e.a), j = g.index(e.b);
    if (i == j) throw std::logic_error("graph data: self loop");
    if (i > j) std::swap(i, j);
    if (g.edges.count({i, j})) throw std::logic_error("graph data: duplicate edge");
    g.edges[{i, j}] = e.m;
  }
  return g;
}

std::vector<std::string> names(std::initializer_list<const char*> lst) {
  std::vector<std::string> out;
  for (const char* s : lst) out.push_back(s);
  return out;
}

CurveGraph build_P14() {
  auto nodes = names({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "b1", "b2", "b3",
                      "L1", "L2", "L3", "L4", "L5", "R1", "R2", "R3", "R4", "R5",
                      "R6", "R7", "R8", "R9", "R10", "R11", "R12"});
  std::vector<EdgeSpec> edges = {
      // A7 and A3 chains from resolving P1, P2
      {"a1", "a2", 1}, {"a2", "a3", 1}, {"a3", "a4", 1}, {"a4", "a5", 1},
      {"a5", "a6", 1}, {"a6", "a7", 1}, {"b1", "b2", 1}, {"b2", "b3", 1},
      // lines through P1 (and P2 for L1)
      {"L1", "a7", 1}, {"L1", "b2", 1},
      {"L2", "a3", 1},
      {"L3", "a1", 1},
      {"L4", "a7", 1},
      {"L5", "a1", 1},
      // simple contacts of R-curves with the exceptional chains
      {"R1", "b2", 1}, {"R2", "a1", 1}, {"R3", "a1", 1}, {"R8", "b2", 1},
      // double lines
      {"L2", "R5", 2}, {"L2", "R7", 2}, {"L2", "R10", 2}, {"L2", "R12", 2},
      {"L3", "R1", 2}, {"L3", "R4", 2}, {"L3", "R7", 2}, {"L3", "R9", 2}, {"L3", "R11", 2},
      {"L4", "R4", 2}, {"L4", "R6", 2}, {"L4", "R9", 2}, {"L4", "R11", 2},
      {"L5", "R5", 2}, {"L5", "R6", 2}, {"L5", "R8", 2}, {"L5", "R9", 2}, {"L5", "R11", 2},
      // the R9..R12 contacts follow the unique solution of the fiber-class
      // identity system (see the identity tests)
      {"R1", "R5", 2}, {"R1", "R6", 2}, {"R1", "R10", 2}, {"R1", "R12", 2},
      {"R2", "b3", 2}, {"R2", "R4", 2}, {"R2", "R6", 2}, {"R2", "R9", 2}, {"R2", "R10", 2},
      {"R3", "b1", 2}, {"R3", "R4", 2}, {"R3", "R6", 2}, {"R3", "R11", 2}, {"R3", "R12", 2},
      {"R4", "R8", 2},
      {"R5", "b1", 2}, {"R5", "b3", 2},
      {"R7", "b1", 2}, {"R7", "b3", 2}, {"R7", "R8", 2},
      {"R8", "R10", 2}, {"R8", "R12", 2},
      {"R9", "b1", 2},
      {"R10", "b1", 2},
      {"R11", "b3", 2},
      {"R12", "b3", 2},
      // four-fold lines
      {"R4", "R7", 4}, {"R4", "R10", 4}, {"R4", "R12", 4},
      {"R5", "R6", 4}, {"R5", "R9", 4}, {"R5", "R11", 4},
      {"R6", "R10", 4}, {"R6", "R12", 4},
      {"R7", "R9", 4}, {"R7", "R11", 4},
      {"R9", "R10", 4}, {"R11", "R12", 4},
      // six-fold lines
      {"R4", "R5", 6}, {"R6", "R7", 6}, {"R9", "R12", 6}, {"R10", "R11", 6},
  };
  return make_graph("P14", nodes, edges);
}

CurveGraph build_P15() {
  auto nodes = names({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "b1", "b2",
                      "b3", "L1", "L2", "L3", "L4", "R1", "R2", "R3", "R4", "R5"});
  std::vector<EdgeSpec> edges = {
      {"a1", "a2", 1}, {"a2", "a3", 1}, {"a3", "a4", 1}, {"a4", "a5", 1}, {"a5", "a6", 1},
      {"a6", "a7", 1}, {"a7", "a8", 1}, {"a8", "a9", 1},
      {"b1", "b2", 1}, {"b2", "b3", 1},
      {"L1", "a9", 1}, {"L1", "b2", 1},
      {"L2", "a3", 1},
      {"L3", "a1", 1},
      {"L4", "a9", 1},
      {"R1", "b2", 1}, {"R2", "a1", 1}, {"R3", "a1", 1},
      {"R3", "b1", 2}, {"L3", "R1", 2}, {"b3", "R2", 2},
      {"R4", "R3", 2}, {"R4", "L3", 2}, {"R4", "R2", 2}, {"R4", "L4", 2},
      {"R5", "b1", 2}, {"R5", "R1", 2}, {"R5", "b3", 2}, {"R5", "L2", 2},
      {"R4", "R5", 6},
  };
  return make_graph("P15", nodes, edges);
}

CurveGraph build_P16() {
  auto nodes = names({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "b1", "b2",
                      "b3", "b4", "b5", "L1", "L2", "L3", "R1", "R2"});
  std::vector<EdgeSpec> edges = {
      {"a1", "a2", 1}, {"a2", "a3", 1}, {"a3", "a4", 1}, {"a4", "a5", 1}, {"a5", "a6", 1},
      {"a6", "a7", 1}, {"a7", "a8", 1}, {"a8", "a9", 1},
      {"b1", "b2", 1}, {"b2", "b3", 1}, {"b3", "b4", 1}, {"b4", "b5", 1},
      {"L1", "a9", 1}, {"L1", "b2", 1},
      {"L2", "a3", 1},
      {"L3", "a1", 1},
      {"R1", "b4", 1}, {"R2", "a1", 1},
      {"R2", "b5", 2}, {"L3", "R1", 2},
  };
  return make_graph("P16", nodes, edges);
}

CurveGraph build_Pprime14() {
  std::vector<std::string> nodes;
  for (int i = 1; i <= 20; ++i) nodes.push_back("E" + std::to_string(i));
  std::vector<EdgeSpec> edges = {
      {"E1", "E8", 1},  {"E1", "E2", 1},  {"E2", "E3", 1},  {"E3", "E4", 1},
      {"E1", "E5", 1},  {"E5", "E6", 1},  {"E6", "E7", 1},
      {"E9", "E12", 1}, {"E9", "E14", 1}, {"E9", "E16", 1}, {"E9", "E18", 1},
      {"E9", "E20", 1},
      {"E10", "E11", 1}, {"E10", "E13", 1}, {"E10", "E15", 1}, {"E10", "E17", 1},
      {"E10", "E19", 1},
      {"E4", "E10", 1}, {"E7", "E9", 1},
      {"E11", "E12", 2}, {"E13", "E14", 2}, {"E16", "E15", 2}, {"E17", "E18", 2},
      {"E20", "E19", 2},
  };
  return make_graph("Pprime14", nodes, edges);
}

CurveGraph build_Psecond14() {
  std::vector<std::string> nodes;
  for (int i = 1; i <= 15; ++i) nodes.push_back("E" + std::to_string(i));
  std::vector<EdgeSpec> edges = {
      {"E1", "E2", 1},  {"E2", "E3", 1},  {"E3", "E4", 1},  {"E4", "E5", 1},
      {"E5", "E6", 1},  {"E6", "E7", 1},  {"E1", "E8", 1},  {"E8", "E9", 1},
      {"E9", "E10", 1}, {"E10", "E11", 1}, {"E11", "E12", 1},
      {"E13", "E10", 1}, {"E14", "E6", 1}, {"E15", "E6", 1},
  };
  return make_graph("Psecond14", nodes, edges);
}

std::vector<std::string> nl(std::initializer_list<const char*> lst) {
  std::vector<std::string> out;
  for (auto* s : lst) out.push_back(s);
  return out;
}

std::vector<FibrationEmbedding> embeddings_P14() {
  std::vector<FibrationEmbedding> out;
  out.push_back({"alternate",
                 {{"D8^", nl({"a2", "L2", "a3", "a4", "a5", "a6", "a7", "L4", "L1"})},
                  {"A1^", nl({"b1", "R3"})},
                  {"A1^", nl({"R1", "L3"})},
                  {"A1^", nl({"b3", "R2"})},
                  {"A1^", nl({"R8", "L5"})}},
                 "b2",
                 "a1",
                 true});
  out.push_back({"standard (a)",
                 {{"D6^", nl({"L3", "L5", "a1", "a2", "a3", "L2", "a4"})},
                  {"D6^", nl({"b1", "b3", "b2", "L1", "a7", "L4", "a6"})}},
                 "a5",
                 "",
                 true});
  out.push_back({"standard (b)",
                 {{"D6^", nl({"R1", "R8", "b2", "L1", "a7", "L4", "a6"})},
                  {"D6^", nl({"R2", "R3", "a1", "a2", "a3", "L2", "a4"})}},
                 "a5",
                 "",
                 false});
  out.push_back({"base-fiber dual L3 (a)",
                 {{"E7^", nl({"L5", "a1", "a2", "a3", "L2", "a4", "a5", "a6"})},
                  {"D4^", nl({"R1", "b1", "b2", "b3", "L1"})},
                  {"A1^", nl({"R4", "L4"})}},
                 "a7",
                 "",
                 true});
  out.push_back({"base-fiber dual L3 (b)",
                 {{"E7^", nl({"R8", "b2", "L1", "a7", "L4", "a6", "a5", "a4"})},
                  {"D4^", nl({"R2", "R3", "a1", "L3", "a2"})},
                  {"A1^", nl({"R5", "L2"})}},
                 "a3",
                 "",
                 false});
  out.push_back({"base-fiber dual L5 (a)",
                 {{"E7^", nl({"L3", "a1", "a2", "a3", "L2", "a4", "a5", "a6"})},
                  {"D4^", nl({"R8", "b1", "b2", "b3", "L1"})},
                  {"A1^", nl({"R6", "L4"})}},
                 "a7",
                 "",
                 true});
  out.push_back({"base-fiber dual L5 (b)",
                 {{"E7^", nl({"R1", "b2", "L1", "a7", "L4", "a6", "a5", "a4"})},
                  {"D4^", nl({"R2", "R3", "a1", "L5", "a2"})},
                  {"A1^", nl({"R7", "L2"})}},
                 "a3",
                 "",
                 false});
  out.push_back({"base-fiber dual (3'a)",
                 {{"E8^", nl({"a1", "a2", "L2", "a3", "a4", "a5", "a6", "a7", "L1"})},
                  {"A1^", nl({"R4", "R8"})},
                  {"A1^", nl({"R6", "R1"})},
                  {"A1^", nl({"R9", "b1"})},
                  {"A1^", nl({"R11", "b3"})}},
                 "b2",
                 "",
                 false});
  out.push_back({"base-fiber dual (3'b)",
                 {{"E8^", nl({"b2", "L1", "L4", "a7", "a6", "a5", "a4", "a3", "a2"})},
                  {"A1^", nl({"R5", "L5"})},
                  {"A1^", nl({"R7", "L3"})},
                  {"A1^", nl({"R12", "R3"})},
                  {"A1^", nl({"R10", "R2"})}},
                 "a1",
                 "",
                 false});
  out.push_back({"maximal (a)",
                 {{"D10^", nl({"b1", "b3", "b2", "L1", "a7", "a6", "a5", "a4", "a3", "L2", "a2"})},
                  {"A1^", nl({"R4", "L3"})},
                  {"A1^", nl({"R6", "L5"})}},
                 "a1",
                 "",
                 true});
  out.push_back({"maximal (b)",
                 {{"D10^", nl({"R2", "R3", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "L4", "L1"})},
                  {"A1^", nl({"R5", "R1"})},
                  {"A1^", nl({"R7", "R8"})}},
                 "b2",
                 "",
                 false});
  return out;
}

std::vector<FibrationEmbedding> embeddings_P15() {
  std::vector<FibrationEmbedding> out;
  out.push_back({"alternate",
                 {{"D10^", nl({"a2", "L2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "L4", "L1"})},
                  {"A1^", nl({"b1", "R3"})},
                  {"A1^", nl({"R1", "L3"})},
                  {"A1^", nl({"b3", "R2"})}},
                 "b2",
                 "a1",
                 true});
  out.push_back({"standard (a)",
                 {{"E7^", nl({"L3", "a1", "a2", "a3", "L2", "a4", "a5", "a6"})},
                  {"D6^", nl({"b3", "b1", "b2", "L1", "a9", "L4", "a8"})}},
                 "a7",
                 "",
                 true});
  out.push_back({"standard (b)",
                 {{"E7^", nl({"R1", "b2", "L1", "a9", "L4", "a8", "a7", "a6"})},
                  {"D6^", nl({"R2", "R3", "a1", "a2", "a3", "L2", "a4"})}},
                 "a5",
                 "",
                 false});
  out.push_back({"base-fiber dual (a)",
                 {{"E8^", nl({"a1", "a2", "L2", "a3", "a4", "a5", "a6", "a7", "a8"})},
                  {"D4^", nl({"R1", "b1", "b2", "b3", "L1"})},
                  {"A1^", nl({"R4", "L4"})}},
                 "a9",
                 "",
                 true});
  out.push_back({"base-fiber dual (b)",
                 {{"E8^", nl({"b2", "L1", "L4", "a9", "a8", "a7", "a6", "a5", "a4"})},
                  {"D4^", nl({"R2", "R3", "a1", "L3", "a2"})},
                  {"A1^", nl({"R5", "L2"})}},
                 "a3",
                 "",
                 false});
  out.push_back({"maximal (a)",
                 {{"D12^",
                   nl({"b1", "b3", "b2", "L1", "a9", "a8", "a7", "a6", "a5", "a4", "a3", "L2",
                       "a2"})},
                  {"A1^", nl({"R4", "L3"})}},
                 "a1",
                 "",
                 true});
  out.push_back({"maximal (b)",
                 {{"D12^",
                   nl({"R2", "R3", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "L4",
                       "L1"})},
                  {"A1^", nl({"R5", "R1"})}},
                 "b2",
                 "",
                 false});
  return out;
}

std::vector<FibrationEmbedding> embeddings_P16() {
  std::vector<FibrationEmbedding> out;
  out.push_back({"alternate",
                 {{"D12^",
                   nl({"a2", "L2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "L1", "b1", "b2",
                       "b3"})},
                  {"A1^", nl({"b5", "R2"})},
                  {"A1^", nl({"R1", "L3"})}},
                 "b4",
                 "a1",
                 true});
  out.push_back({"standard (a)",
                 {{"E7^", nl({"L3", "a1", "a2", "a3", "L2", "a4", "a5", "a6"})},
                  {"E7^", nl({"b5", "b4", "b3", "b2", "b1", "L1", "a9", "a8"})}},
                 "a7",
                 "",
                 true});
  out.push_back({"standard (b)",
                 {{"E7^", nl({"R1", "b4", "b3", "b2", "b1", "L1", "a9", "a8"})},
                  {"E7^", nl({"R2", "a1", "a2", "a3", "L2", "a4", "a5", "a6"})}},
                 "a7",
                 "",
                 false});
  out.push_back({"base-fiber dual (a)",
                 {{"E8^", nl({"a1", "a2", "L2", "a3", "a4", "a5", "a6", "a7", "a8"})},
                  {"D6^", nl({"R1", "b5", "b4", "b3", "b2", "b1", "L1"})}},
                 "a9",
                 "",
                 true});
  out.push_back({"base-fiber dual (b)",
                 {{"E8^", nl({"b4", "b3", "b1", "b2", "L1", "a9", "a8", "a7", "a6"})},
                  {"D6^", nl({"R2", "L3", "a1", "a2", "a3", "L2", "a4"})}},
                 "a5",
                 "",
                 false});
  out.push_back({"maximal (a)",
                 {{"D14^",
                   nl({"R2", "L3", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "L1",
                       "b2", "b1", "b3"})}},
                 "b4",
                 "",
                 false});
  out.push_back({"maximal (b)",
                 {{"D14^",
                   nl({"b5", "R1", "b4", "b3", "b2", "L1", "a9", "a8", "a7", "a6", "a5", "a4",
                       "a3", "L2", "a2"})}},
                 "a1",
                 "",
                 false});
  return out;
}

std::vector<FibrationEmbedding> embeddings_Pprime14() {
  std::vector<FibrationEmbedding> out;
  out.push_back({"alternate",
                 {{"E7^", nl({"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"})},
                  {"A1^", nl({"E11", "E12"})},
                  {"A1^", nl({"E13", "E14"})},
                  {"A1^", nl({"E15", "E16"})},
                  {"A1^", nl({"E17", "E18"})},
                  {"A1^", nl({"E19", "E20"})}},
                 "E10",
                 "E9",
                 false});
  out.push_back({"standard",
                 {{"D8^", nl({"E1", "E2", "E3", "E4", "E5", "E8", "E10", "E11", "E13"})},
                  {"D4^", nl({"E7", "E9", "E16", "E18", "E20"})}},
                 "E6",
                 "",
                 false});
  return out;
}

std::vector<FibrationEmbedding> embeddings_Psecond14() {
  std::vector<FibrationEmbedding> out;
  out.push_back({"standard",
                 {{"E8^", nl({"E1", "E2", "E3", "E8", "E9", "E10", "E11", "E12", "E13"})},
                  {"D4^", nl({"E5", "E6", "E7", "E14", "E15"})}},
                 "E4",
                 "",
                 false});
  out.push_back({"alternate",
                 {{"D12^",
                   nl({"E1", "E2", "E3", "E4", "E5", "E6", "E8", "E9", "E10", "E11", "E13",
                       "E14", "E15"})}},
                 "E12",
                 "",
                 false});
  return out;
}

using Terms = std::vector<std::pair<int, std::string>>;

DivisorClass dv(const CurveGraph& g, const Terms& t) { return divisor(g, t); }

// fiber classes: multiplicity-weighted sums over the embedded affine
// diagrams, each cross-checked against the kernel-vector route in the tests
std::vector<ClassIdentity> identities_P14() {
  const CurveGraph& g = builtin_graph(GraphId::P14);
  std::vector<ClassIdentity> out;
  Terms Falt = {{1, "L1"}, {1, "L2"}, {1, "L4"}, {1, "a2"}, {2, "a3"},
                {2, "a4"}, {2, "a5"}, {2, "a6"}, {2, "a7"}};
  Terms H = {{2, "L2"}, {1, "L3"}, {1, "L5"}, {3, "a1"}, {4, "a2"},
             {5, "a3"}, {4, "a4"}, {3, "a5"}, {2, "a6"}, {1, "a7"}};
  auto add = [&](const std::string& name, const Terms& lhs, const Terms& rhs) {
    out.push_back({name, dv(g, lhs), dv(g, rhs)});
  };
  add("F_alt = R1+L3", Falt, {{1, "R1"}, {1, "L3"}});
  add("F_alt = R2+b3", Falt, {{1, "R2"}, {1, "b3"}});
  add("F_alt = R3+b1", Falt, {{1, "R3"}, {1, "b1"}});
  add("F_alt = R8+L5", Falt, {{1, "R8"}, {1, "L5"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Falt) lhs.push_back({-c, n});
    lhs.push_back({-1, "L1"});
    add("H-F_alt-L1", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"},
         {1, "b1"}, {2, "b2"}, {1, "b3"}});
  }
  Terms Fstd = {{1, "L2"}, {1, "L3"}, {1, "L5"}, {2, "a1"}, {2, "a2"}, {2, "a3"}, {1, "a4"}};
  add("F_std", Fstd,
      {{2, "L1"}, {1, "L4"}, {1, "a6"}, {2, "a7"}, {1, "b1"}, {2, "b2"}, {1, "b3"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fstd) lhs.push_back({-c, n});
    lhs.push_back({-1, "L2"});
    add("H-F_std-L2", lhs,
        {{1, "a1"}, {2, "a2"}, {3, "a3"}, {3, "a4"}, {3, "a5"}, {2, "a6"}, {1, "a7"}});
  }
  Terms Fstd2 = {{1, "R1"}, {1, "R8"}, {2, "L1"}, {1, "L4"}, {2, "a7"}, {1, "a6"}, {2, "b2"}};
  add("F_std(b)", Fstd2,
      {{1, "R2"}, {1, "R3"}, {1, "L2"}, {2, "a1"}, {2, "a2"}, {2, "a3"}, {1, "a4"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({3 * c, n});
    for (auto [c, n] : Fstd2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L2", "L3", "L5"}) lhs.push_back({-1, n});
    add("3H-F_std(b)-...", lhs,
        {{3, "a1"}, {4, "a2"}, {5, "a3"}, {5, "a4"}, {5, "a5"}, {4, "a6"}, {3, "a7"},
         {3, "b1"}, {4, "b2"}, {3, "b3"}});
  }
  Terms Fbfd = {{2, "L2"}, {1, "L5"}, {2, "a1"}, {3, "a2"}, {4, "a3"}, {3, "a4"},
                {2, "a5"}, {1, "a6"}};
  add("F_bfd = R1+L1+b1+2b2+b3", Fbfd,
      {{1, "R1"}, {1, "L1"}, {1, "b1"}, {2, "b2"}, {1, "b3"}});
  add("F_bfd = R4+L4", Fbfd, {{1, "R4"}, {1, "L4"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fbfd) lhs.push_back({-c, n});
    lhs.push_back({-1, "L3"});
    add("H-F_bfd-L3", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"}});
  }
  Terms Fbfd2 = {{1, "R8"}, {3, "L1"}, {2, "L4"}, {1, "a4"}, {2, "a5"}, {3, "a6"},
                 {4, "a7"}, {2, "b2"}};
  add("F_bfd(b)", Fbfd2, {{1, "R2"}, {1, "R3"}, {1, "L3"}, {2, "a1"}, {1, "a2"}});
  add("F_bfd(b) = R5+L2", Fbfd2, {{1, "R5"}, {1, "L2"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({3 * c, n});
    for (auto [c, n] : Fbfd2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L2", "L2", "L5"}) lhs.push_back({-1, n});
    add("3H-F_bfd(b)-...", lhs,
        {{3, "a1"}, {5, "a2"}, {7, "a3"}, {6, "a4"}, {5, "a5"}, {4, "a6"}, {3, "a7"},
         {3, "b1"}, {4, "b2"}, {3, "b3"}});
  }
  // the E8 kernel marks force the coefficient 3 on a6
  Terms Fbfdp = {{1, "L1"}, {3, "L2"}, {2, "a1"}, {4, "a2"}, {6, "a3"}, {5, "a4"},
                 {4, "a5"}, {3, "a6"}, {2, "a7"}};
  add("F'_bfd = R1+R6", Fbfdp, {{1, "R1"}, {1, "R6"}});
  add("F'_bfd = R4+R8", Fbfdp, {{1, "R4"}, {1, "R8"}});
  add("F'_bfd = R9+b1", Fbfdp, {{1, "R9"}, {1, "b1"}});
  add("F'_bfd = R11+b3", Fbfdp, {{1, "R11"}, {1, "b3"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({2 * c, n});
    for (auto [c, n] : Fbfdp) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L3", "L4", "L5"}) lhs.push_back({-1, n});
    add("2H-F'_bfd-...", lhs,
        {{2, "a1"}, {2, "a2"}, {2, "a3"}, {2, "a4"}, {2, "a5"}, {2, "a6"}, {2, "a7"},
         {1, "b1"}, {2, "b2"}, {1, "b3"}});
  }
  // the rank-14 kernel-vector class of the quotient E8 fiber
  Terms Fbfdp2 = {{1, "a2"}, {2, "a3"}, {3, "a4"}, {4, "a5"}, {5, "a6"}, {6, "a7"},
                  {4, "L1"}, {3, "L4"}, {2, "b2"}};
  add("F'_bfd(b) = R2+R10", Fbfdp2, {{1, "R2"}, {1, "R10"}});
  add("F'_bfd(b) = R3+R12", Fbfdp2, {{1, "R3"}, {1, "R12"}});
  add("F'_bfd(b) = R5+L5", Fbfdp2, {{1, "R5"}, {1, "L5"}});
  add("F'_bfd(b) = R7+L3", Fbfdp2, {{1, "R7"}, {1, "L3"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({3 * c, n});
    for (auto [c, n] : Fbfdp2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L2", "L2", "L2"}) lhs.push_back({-1, n});
    add("3H-F'_bfd(b)-...", lhs,
        {{3, "a1"}, {5, "a2"}, {7, "a3"}, {6, "a4"}, {5, "a5"}, {4, "a6"}, {3, "a7"},
         {3, "b1"}, {4, "b2"}, {3, "b3"}});
  }
  Terms Fmax = {{2, "L1"}, {1, "L2"}, {1, "a2"}, {2, "a3"}, {2, "a4"}, {2, "a5"},
                {2, "a6"}, {2, "a7"}, {1, "b1"}, {2, "b2"}, {1, "b3"}};
  add("F_max = R4+L3", Fmax, {{1, "R4"}, {1, "L3"}});
  add("F_max = R6+L5", Fmax, {{1, "R6"}, {1, "L5"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fmax) lhs.push_back({-c, n});
    lhs.push_back({-1, "L4"});
    add("H-F_max-L4", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"}});
  }
  // the D10 kernel marks force the 2a4 term
  Terms Fmax2 = {{1, "R2"}, {1, "R3"}, {1, "L1"}, {1, "L4"}, {2, "a1"}, {2, "a2"},
                 {2, "a3"}, {2, "a4"}, {2, "a5"}, {2, "a6"}, {2, "a7"}};
  add("F_max(b) = R1+R5", Fmax2, {{1, "R1"}, {1, "R5"}});
  add("F_max(b) = R7+R8", Fmax2, {{1, "R7"}, {1, "R8"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({4 * c, n});
    for (auto [c, n] : Fmax2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L1", "L2", "L2", "L2", "L3", "L5"}) lhs.push_back({-1, n});
    add("4H-F_max(b)-...", lhs,
        {{4, "a1"}, {6, "a2"}, {8, "a3"}, {7, "a4"}, {6, "a5"}, {5, "a6"}, {4, "a7"},
         {4, "b1"}, {6, "b2"}, {4, "b3"}});
  }
  return out;
}

std::vector<ClassIdentity> identities_P15() {
  const CurveGraph& g = builtin_graph(GraphId::P15);
  std::vector<ClassIdentity> out;
  auto add = [&](const std::string& name, const Terms& lhs, const Terms& rhs) {
    out.push_back({name, dv(g, lhs), dv(g, rhs)});
  };
  Terms H = {{3, "L2"}, {1, "L3"}, {3, "a1"}, {5, "a2"}, {7, "a3"}, {6, "a4"},
             {5, "a5"}, {4, "a6"}, {3, "a7"}, {2, "a8"}, {1, "a9"}};
  Terms Falt = {{1, "L1"}, {1, "L2"}, {1, "L4"}, {1, "a2"}, {2, "a3"}, {2, "a4"},
                {2, "a5"}, {2, "a6"}, {2, "a7"}, {2, "a8"}, {2, "a9"}};
  add("F_alt = R1+L3", Falt, {{1, "R1"}, {1, "L3"}});
  add("F_alt = R2+b3", Falt, {{1, "R2"}, {1, "b3"}});
  add("F_alt = R3+b1", Falt, {{1, "R3"}, {1, "b1"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Falt) lhs.push_back({-c, n});
    lhs.push_back({-1, "L1"});
    add("H-F_alt-L1", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"},
         {1, "a8"}, {1, "a9"}, {1, "b1"}, {2, "b2"}, {1, "b3"}});
  }
  Terms Fstd = {{2, "L2"}, {1, "L3"}, {2, "a1"}, {3, "a2"}, {4, "a3"}, {3, "a4"},
                {2, "a5"}, {1, "a6"}};
  add("F_std", Fstd,
      {{2, "L1"}, {1, "L4"}, {1, "a8"}, {2, "a9"}, {1, "b1"}, {2, "b2"}, {1, "b3"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fstd) lhs.push_back({-c, n});
    lhs.push_back({-1, "L2"});
    add("H-F_std-L2", lhs,
        {{1, "a1"}, {2, "a2"}, {3, "a3"}, {3, "a4"}, {3, "a5"}, {3, "a6"}, {3, "a7"},
         {2, "a8"}, {1, "a9"}});
  }
  // the E7 kernel marks force the 2b2 term
  Terms Fstd2 = {{1, "R1"}, {3, "L1"}, {2, "L4"}, {1, "a6"}, {2, "a7"}, {3, "a8"},
                 {4, "a9"}, {2, "b2"}};
  add("F_std(b)", Fstd2,
      {{1, "R2"}, {1, "R3"}, {1, "L2"}, {2, "a1"}, {2, "a2"}, {2, "a3"}, {1, "a4"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({3 * c, n});
    for (auto [c, n] : Fstd2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L2", "L2", "L3"}) lhs.push_back({-1, n});
    add("3H-F_std(b)-...", lhs,
        {{3, "a1"}, {5, "a2"}, {7, "a3"}, {7, "a4"}, {7, "a5"}, {6, "a6"}, {5, "a7"},
         {4, "a8"}, {3, "a9"}, {3, "b1"}, {4, "b2"}, {3, "b3"}});
  }
  Terms Fbfd = {{3, "L2"}, {2, "a1"}, {4, "a2"}, {6, "a3"}, {5, "a4"}, {4, "a5"},
                {3, "a6"}, {2, "a7"}, {1, "a8"}};
  add("F_bfd", Fbfd, {{1, "R1"}, {1, "L1"}, {1, "b1"}, {2, "b2"}, {1, "b3"}});
  add("F_bfd = R4+L4", Fbfd, {{1, "R4"}, {1, "L4"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fbfd) lhs.push_back({-c, n});
    lhs.push_back({-1, "L3"});
    add("H-F_bfd-L3", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"},
         {1, "a8"}, {1, "a9"}});
  }
  Terms Fbfd2 = {{4, "L1"}, {3, "L4"}, {1, "a4"}, {2, "a5"}, {3, "a6"}, {4, "a7"},
                 {5, "a8"}, {6, "a9"}, {2, "b2"}};
  add("F_bfd(b)", Fbfd2, {{1, "R2"}, {1, "R3"}, {1, "L3"}, {2, "a1"}, {1, "a2"}});
  add("F_bfd(b) = R5+L2", Fbfd2, {{1, "R5"}, {1, "L2"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({3 * c, n});
    for (auto [c, n] : Fbfd2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L2", "L2", "L2"}) lhs.push_back({-1, n});
    // the pairing in the quotient forces the 3a9 term
    add("3H-F_bfd(b)-...", lhs,
        {{3, "a1"}, {6, "a2"}, {9, "a3"}, {8, "a4"}, {7, "a5"}, {6, "a6"}, {5, "a7"},
         {4, "a8"}, {3, "a9"}, {3, "b1"}, {4, "b2"}, {3, "b3"}});
  }
  Terms Fmax = {{2, "L1"}, {1, "L2"}, {1, "a2"}, {2, "a3"}, {2, "a4"}, {2, "a5"}, {2, "a6"},
                {2, "a7"}, {2, "a8"}, {2, "a9"}, {1, "b1"}, {2, "b2"}, {1, "b3"}};
  add("F_max = R4+L3", Fmax, {{1, "R4"}, {1, "L3"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fmax) lhs.push_back({-c, n});
    lhs.push_back({-1, "L4"});
    add("H-F_max-L4", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"},
         {1, "a8"}, {1, "a9"}});
  }
  // the D12 kernel marks force the 2a4 term
  Terms Fmax2 = {{1, "R2"}, {1, "R3"}, {1, "L1"}, {1, "L4"}, {2, "a1"}, {2, "a2"},
                 {2, "a3"}, {2, "a4"}, {2, "a5"}, {2, "a6"}, {2, "a7"}, {2, "a8"}, {2, "a9"}};
  add("F_max(b) = R1+R5", Fmax2, {{1, "R1"}, {1, "R5"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({4 * c, n});
    for (auto [c, n] : Fmax2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L1", "L1", "L2", "L2", "L2", "L3"}) lhs.push_back({-1, n});
    add("4H-F_max(b)-...", lhs,
        {{1, "L2"}, {4, "a1"}, {7, "a2"}, {10, "a3"}, {9, "a4"}, {8, "a5"}, {7, "a6"},
         {6, "a7"}, {5, "a8"}, {4, "a9"}, {4, "b1"}, {6, "b2"}, {4, "b3"}});
  }
  return out;
}

std::vector<ClassIdentity> identities_P16() {
  const CurveGraph& g = builtin_graph(GraphId::P16);
  std::vector<ClassIdentity> out;
  auto add = [&](const std::string& name, const Terms& lhs, const Terms& rhs) {
    out.push_back({name, dv(g, lhs), dv(g, rhs)});
  };
  Terms H = {{3, "L1"}, {1, "L2"}, {1, "a1"}, {2, "a2"}, {3, "a3"}, {3, "a4"}, {3, "a5"},
             {3, "a6"}, {3, "a7"}, {3, "a8"}, {3, "a9"}, {2, "b1"}, {4, "b2"}, {3, "b3"},
             {2, "b4"}, {1, "b5"}};
  Terms Falt = {{2, "L1"}, {1, "L2"}, {1, "a2"}, {2, "a3"}, {2, "a4"}, {2, "a5"}, {2, "a6"},
                {2, "a7"}, {2, "a8"}, {2, "a9"}, {1, "b1"}, {2, "b2"}, {1, "b3"}};
  add("F_alt = R1+L3", Falt, {{1, "R1"}, {1, "L3"}});
  add("F_alt = R2+b5", Falt, {{1, "R2"}, {1, "b5"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Falt) lhs.push_back({-c, n});
    lhs.push_back({-1, "L1"});
    add("H-F_alt-L1", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"},
         {1, "a8"}, {1, "a9"}, {1, "b1"}, {2, "b2"}, {2, "b3"}, {2, "b4"}, {1, "b5"}});
  }
  Terms Fstd = {{2, "L2"}, {1, "L3"}, {2, "a1"}, {3, "a2"}, {4, "a3"}, {3, "a4"},
                {2, "a5"}, {1, "a6"}};
  add("F_std", Fstd,
      {{3, "L1"}, {1, "a8"}, {2, "a9"}, {2, "b1"}, {4, "b2"}, {3, "b3"}, {2, "b4"}, {1, "b5"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fstd) lhs.push_back({-c, n});
    lhs.push_back({-1, "L2"});
    add("H-F_std-L2", lhs,
        {{1, "a1"}, {2, "a2"}, {3, "a3"}, {3, "a4"}, {3, "a5"}, {3, "a6"}, {3, "a7"},
         {2, "a8"}, {1, "a9"}});
  }
  Terms Fstd2 = {{1, "R1"}, {3, "L1"}, {1, "a8"}, {2, "a9"}, {2, "b1"}, {4, "b2"},
                 {3, "b3"}, {2, "b4"}};
  add("F_std(b)", Fstd2,
      {{1, "R2"}, {2, "L2"}, {2, "a1"}, {3, "a2"}, {4, "a3"}, {3, "a4"}, {2, "a5"}, {1, "a6"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({2 * c, n});
    for (auto [c, n] : Fstd2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L2", "L3"}) lhs.push_back({-1, n});
    add("2H-F_std(b)-...", lhs,
        {{2, "a1"}, {3, "a2"}, {4, "a3"}, {4, "a4"}, {4, "a5"}, {4, "a6"}, {4, "a7"},
         {3, "a8"}, {2, "a9"}, {1, "b1"}, {2, "b2"}, {2, "b3"}, {2, "b4"}, {2, "b5"}});
  }
  Terms Fbfd = {{3, "L2"}, {2, "a1"}, {4, "a2"}, {6, "a3"}, {5, "a4"}, {4, "a5"},
                {3, "a6"}, {2, "a7"}, {1, "a8"}};
  add("F_bfd", Fbfd,
      {{1, "R1"}, {1, "L1"}, {1, "b1"}, {2, "b2"}, {2, "b3"}, {2, "b4"}, {1, "b5"}});
  {
    Terms lhs = H;
    for (auto [c, n] : Fbfd) lhs.push_back({-c, n});
    lhs.push_back({-1, "L3"});
    add("H-F_bfd-L3", lhs,
        {{1, "a1"}, {1, "a2"}, {1, "a3"}, {1, "a4"}, {1, "a5"}, {1, "a6"}, {1, "a7"},
         {1, "a8"}, {1, "a9"}});
  }
  // b-coefficients from the E8 kernel marks
  Terms Fbfd2 = {{5, "L1"}, {1, "a6"}, {2, "a7"}, {3, "a8"}, {4, "a9"}, {3, "b1"},
                 {6, "b2"}, {4, "b3"}, {2, "b4"}};
  add("F_bfd(b)", Fbfd2,
      {{1, "R2"}, {1, "L2"}, {1, "L3"}, {2, "a1"}, {2, "a2"}, {2, "a3"}, {1, "a4"}});
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({2 * c, n});
    for (auto [c, n] : Fbfd2) lhs.push_back({-c, n});
    for (auto* n : {"L1", "L2", "L2"}) lhs.push_back({-1, n});
    add("2H-F_bfd(b)-...", lhs,
        {{2, "a1"}, {4, "a2"}, {6, "a3"}, {6, "a4"}, {6, "a5"}, {5, "a6"}, {4, "a7"},
         {3, "a8"}, {2, "a9"}, {1, "b1"}, {2, "b2"}, {2, "b3"}, {2, "b4"}, {2, "b5"}});
  }
  Terms Fmax = {{1, "R2"}, {1, "L3"}, {2, "a1"}, {2, "a2"}, {2, "a3"}, {2, "a4"}, {2, "a5"},
                {2, "a6"}, {2, "a7"}, {2, "a8"}, {2, "a9"}, {2, "L1"}, {2, "b2"}, {1, "b1"},
                {1, "b3"}};
  {
    Terms lhs;
    for (auto [c, n] : H) lhs.push_back({2 * c, n});
    for (auto [c, n] : Fmax) lhs.push_back({-c, n});
    lhs.push_back({-1, "R1"});
    add("2H-F_max-R1", lhs, {{1, "b1"}, {2, "b2"}, {3, "b3"}, {4, "b4"}, {3, "b5"}});
  }
  // (the second maximal embedding's class R1+L2+2L1+a2+2a3+...+b5 belongs to
  // a different fibration, so no equality with F_max is asserted)
  return out;
}

}  // namespace

const CurveGraph& builtin_graph(GraphId id) {
  static const CurveGraph p14 = build_P14();
  static const CurveGraph pp14 = build_Pprime14();
  static const CurveGraph ps14 = build_Psecond14();
  static const CurveGraph p15 = build_P15();
  static const CurveGraph p16 = build_P16();
  switch (id) {
    case GraphId::P14: return p14;
    case GraphId::Pprime14: return pp14;
    case GraphId::Psecond14: return ps14;
    case GraphId::P15: return p15;
    case GraphId::P16: return p16;
  }
  throw std::domain_error("builtin_graph: bad id");
}

const std::vector<FibrationEmbedding>& builtin_embeddings(GraphId id) {
  static const auto p14 = embeddings_P14();
  static const auto pp14 = embeddings_Pprime14();
  static const auto ps14 = embeddings_Psecond14();
  static const auto p15 = embeddings_P15();
  static const auto p16 = embeddings_P16();
  switch (id) {
    case GraphId::P14: return p14;
    case GraphId::Pprime14: return pp14;
    case GraphId::Psecond14: return ps14;
    case GraphId::P15: return p15;
    case GraphId::P16: return p16;
  }
  throw std::domain_error("builtin_embeddings: bad id");
}

std::optional<DivisorClass> polarization_divisor(GraphId id) {
  const CurveGraph& g = builtin_graph(id);
  switch (id) {
    case GraphId::P14:
      return divisor(g, {{2, "L2"}, {1, "L3"}, {1, "L5"}, {3, "a1"}, {4, "a2"},
                         {5, "a3"}, {4, "a4"}, {3, "a5"}, {2, "a6"}, {1, "a7"}});
    case GraphId::P15:
      return divisor(g, {{3, "L2"}, {1, "L3"}, {3, "a1"}, {5, "a2"}, {7, "a3"}, {6, "a4"},
                         {5, "a5"}, {4, "a6"}, {3, "a7"}, {2, "a8"}, {1, "a9"}});
    case GraphId::P16:
      return divisor(g, {{3, "L1"}, {1, "L2"}, {1, "a1"}, {2, "a2"}, {3, "a3"}, {3, "a4"},
                         {3, "a5"}, {3, "a6"}, {3, "a7"}, {3, "a8"}, {3, "a9"}, {2, "b1"},
                         {4, "b2"}, {3, "b3"}, {2, "b4"}, {1, "b5"}});
    default:
      return std::nullopt;
  }
}

const std::vector<ClassIdentity>& builtin_identities(GraphId id) {
  static const auto p14 = identities_P14();
  static const auto p15 = identities_P15();
  static const auto p16 = identities_P16();
  static const std::vector<ClassIdentity> empty;
  switch (id) {
    case GraphId::P14: return p14;
    case GraphId::P15: return p15;
    case GraphId::P16: return p16;
    default: return empty;
  }
}

}  // namespace k3
