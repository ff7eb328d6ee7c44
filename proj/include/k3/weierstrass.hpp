#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3/places.hpp"
#include "k3/unipoly.hpp"

namespace k3 {

// y^2 = x^3 + a2(t) x^2 + a4(t) x + a6(t) over Q(t). The chart at infinity is
// t -> 1/s, (x,y) -> (x/s^{2k}, y/s^{3k}) with k the smallest integer making
// all coefficients polynomial, i.e. deg a_{2i} <= 2ik.
struct WeierstrassModel {
  UniPoly a2, a4, a6;
  int k = 0;  // computed minimal on construction unless set explicitly

  WeierstrassModel() = default;
  WeierstrassModel(UniPoly a2_, UniPoly a4_, UniPoly a6_);

  bool two_torsion_section() const { return a6.is_zero() && !a4.is_zero(); }
  // admissible rescaling (x,y) -> (l^2 x, l^3 y) on coefficients
  WeierstrassModel rescaled(const Rat& lambda2) const;
};

struct ShortInvariants {
  UniPoly c4, c6, delta;
};

// c4^3 - c6^2 = 1728*delta holds exactly; throws DegenerateModel on delta == 0
struct DegenerateModel : std::domain_error {
  explicit DegenerateModel(const std::string& what) : std::domain_error(what) {}
};

ShortInvariants short_invariants(const WeierstrassModel& m);

struct KodairaType {
  enum Tag { In, II, III, IV, Instar, IVstar, IIIstar, IIstar } tag = In;
  int n = 0;  // for In (n>=1) and Instar (n>=0)

  int euler() const;
  int components() const;  // m_v in Shioda-Tate
  std::string str() const;
  bool operator==(const KodairaType& o) const { return tag == o.tag && n == o.n; }
  bool operator<(const KodairaType& o) const {
    return tag != o.tag ? tag < o.tag : n < o.n;
  }
  static std::optional<KodairaType> parse(const std::string& s);
};

struct FiberEntry {
  PlaceComponent place;
  KodairaType type;
  int minimality_reductions = 0;  // local (4,6,12)-reductions applied
};

struct FiberConfig {
  std::vector<FiberEntry> entries;
  int mw_torsion_order = 1;
  int mw_rank = 0;

  int euler_sum() const;
  // multiset of fiber types counted with component degree, e.g. {I4*:1, I2:4, I1:6}
  std::map<std::string, int> type_multiset() const;
  std::string multiset_str() const;
};

// Kodaira types from the characteristic-zero valuation table, place by place,
// after local minimality reduction. Smooth places are omitted.
FiberConfig classify_fibers(const WeierstrassModel& m);

// same multiset of (degree-weighted) types?
bool same_configuration(const FiberConfig& a, const FiberConfig& b);
std::map<std::string, int> parse_multiset(const std::string& s);  // "I4*+4I2+6I1"

struct ConsistencyReport {
  bool euler_ok = false;
  int euler = 0;
  bool shioda_tate_ok = false;
  int picard_from_fibers = 0;
  bool determinant_ok = true;        // only checked when ns_disc_order is given
  Int root_disc_order = 1;           // |D(K^root)|
  std::string detail;
};

// Euler sum, Shioda-Tate 2 + sum(m_v - 1) + mw_rank = target_picard, and the
// condition |D(K^root)| = |D(NS)| * |MW_tors|^2 when |D(NS)| is supplied.
ConsistencyReport consistency_report(const FiberConfig& cfg, int target_picard,
                                     std::optional<Int> ns_disc_order = std::nullopt);

}  // namespace k3
