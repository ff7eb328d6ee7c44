#pragma once

#include <string>
#include <vector>

#include "k3/rational.hpp"
#include "k3/weierstrass.hpp"

namespace k3 {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

struct IntLattice {
  IntMat gram;
  std::string label;

  int rank() const { return static_cast<int>(gram.size()); }
};

// block-diagonal sum of named root lattices, grammar: term ("+" term)*,
// term = NAME ["(" INT ")"] ["^" INT], NAME in {H, A<n>, D<n>, E6, E7, E8}
IntLattice build_lattice(const std::string& expr);

IntLattice direct_sum(const IntLattice& a, const IntLattice& b);

// Smith normal form diagonal (nonnegative, divisibility chain) of an integer matrix
std::vector<Int> smith_normal_form(IntMat m);

// (positive, negative) inertia of a symmetric integer matrix; zeros dropped
std::pair<int, int> gram_inertia(const IntMat& g);

struct DiscriminantForm {
  std::vector<Int> invariant_factors;  // > 1, divisibility chain
  RatMat q;       // diagonal: q-values mod 2Z; off-diagonal: bilinear mod 1
  bool even = true;  // parity: true iff every q-value lies in Z mod 2Z

  Int group_order() const {
    Int o(1);
    for (const auto& f : invariant_factors) o *= f;
    return o;
  }
  // multiset of q(x) over all group elements, sorted; basis-independent
  std::vector<Rat> q_value_multiset() const;
  std::string group_str() const;  // e.g. "Z2^4" or "Z4"
};

// same group and same q-value multiset over all elements
bool same_discriminant_form(const DiscriminantForm& a, const DiscriminantForm& b);

struct LatticeInvariants {
  int rank = 0;
  int sig_pos = 0, sig_neg = 0;
  DiscriminantForm disc;
  bool two_elementary = false;
};

LatticeInvariants lattice_invariants(const IntLattice& L);

// fiber -> negated root lattice dictionary, degree-weighted
IntLattice root_lattice_of_config(const FiberConfig& cfg);

// the rank-8 Nikulin lattice, kept as an opaque named record (it enters only
// through its rank and discriminant data, never through a Gram matrix)
struct NamedLattice {
  std::string name;
  int rank;
  std::string disc_group;
};
const NamedLattice& nikulin_lattice();

struct FrameReport {
  bool determinant_ok = false;
  Int root_disc, ns_disc;
  int torsion = 1;
  std::string detail;
};

// |D(K^root)| = |D(NS)| * |W|^2 for a fiber configuration against a claimed NS lattice
FrameReport frame_consistency(const FiberConfig& cfg, const IntLattice& ns);

}  // namespace k3
