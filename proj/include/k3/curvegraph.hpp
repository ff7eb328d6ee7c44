#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3/lattices.hpp"

namespace k3 {

// dual graph of smooth rational curves: nodes are (-2)-curves, an m-fold edge
// records intersection number m
struct CurveGraph {
  std::string id;
  std::vector<std::string> nodes;
  std::map<std::pair<int, int>, int> edges;  // (i<j) -> multiplicity

  int index(const std::string& name) const;
  int mult(int i, int j) const;
  IntMat gram() const;  // -2 on the diagonal, m on edges
};

using DivisorClass = std::vector<Int>;  // coefficient per node

enum class GraphId { P14, Pprime14, Psecond14, P15, P16 };
std::optional<GraphId> parse_graph_id(const std::string& s);
std::string graph_id_name(GraphId id);

const CurveGraph& builtin_graph(GraphId id);

// divisor from (coefficient, node-name) pairs
DivisorClass divisor(const CurveGraph& g, const std::vector<std::pair<int, std::string>>& terms);

// equality in the nondegenerate quotient: Gram * (lhs - rhs) = 0
bool class_identity_check(const CurveGraph& g, const DivisorClass& lhs, const DivisorClass& rhs);

Int pairing(const CurveGraph& g, const DivisorClass& a, const DivisorClass& b);

// invariants of the span of node classes modulo the Gram radical
LatticeInvariants graph_lattice_invariants(const CurveGraph& g);

// one reducible fiber of an embedding record
struct EmbeddedFiber {
  std::string dynkin;               // "A1^", "D8^", "E7^" ... extended type
  std::vector<std::string> nodes;
};

struct FibrationEmbedding {
  std::string name;                     // e.g. "alternate", "standard (a)"
  std::vector<EmbeddedFiber> fibers;
  std::string section;
  std::string torsion_section;          // empty if none
  bool line_pencil = false;             // H.F = 3 asserted for these
};

// the catalogued fibration embeddings of each graph
const std::vector<FibrationEmbedding>& builtin_embeddings(GraphId id);

// polarizing divisor H where one is catalogued
std::optional<DivisorClass> polarization_divisor(GraphId id);

// pairs of equal divisor classes transcribed from the text
struct ClassIdentity {
  std::string name;
  DivisorClass lhs, rhs;
};
const std::vector<ClassIdentity>& builtin_identities(GraphId id);

struct EmbeddingReport {
  bool ok = false;
  std::string first_failure;
  std::vector<DivisorClass> fiber_classes;
};

// checks each fiber's induced sub-Gram is the extended Cartan matrix of the
// claimed type (corank-1 negative semidefinite with the standard kernel
// vector), F.F = 0, F.section = 1, fiber classes agree in the quotient, and
// the polarization identities H^2 = 4, H.F = 3 where applicable
EmbeddingReport fiber_embedding_check(const CurveGraph& g, const FibrationEmbedding& emb);

// kernel multiplicities of one embedded fiber (after type recognition)
std::optional<std::vector<Int>> fiber_multiplicities(const CurveGraph& g,
                                                     const EmbeddedFiber& fiber);

std::string emit_dot(const CurveGraph& g, const FibrationEmbedding* highlight = nullptr);

// named lattice each graph's quotient must reproduce
std::string expected_lattice_expr(GraphId id);

}  // namespace k3
