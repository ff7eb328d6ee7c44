#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Sparse multivariate polynomial over Q with a fixed ordered variable set.
// The variable order is fixed lexicographically by name at construction;
// terms are kept in a map keyed by exponent vector, so serialization is
// deterministic.
class MultiPoly {
 public:
  using Expo = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, const Rat& c);

  static MultiPoly var(const std::vector<std::string>& vars, const std::string& name);
  static MultiPoly constant(const std::vector<std::string>& vars, const Rat& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int var_index(const std::string& name) const;

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& s) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(int e) const;

  int degree(int var) const;
  int total_degree() const;
  // coefficient of var^e, as a polynomial in the same ring
  MultiPoly coeff_of(int var, int e) const;
  MultiPoly lc_in(int var) const { return coeff_of(var, degree(var)); }

  // substitute images[i] for variable i; all images share one ring
  MultiPoly subst(const std::vector<MultiPoly>& images) const;
  Rat eval(const std::vector<Rat>& point) const;

  // fold var^2 -> c (e.g. a formal square root); leaves var^{0,1}
  MultiPoly reduce_square(int var, const Rat& c) const;

  // exact division within the principal ideal; throws if not divisible
  MultiPoly exact_div(const MultiPoly& g) const;
  bool try_exact_div(const MultiPoly& g, MultiPoly& quot) const;

  void add_term(Expo e, const Rat& c);
  std::string str() const;

 private:
  void check_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::domain_error("MultiPoly: mixed variable sets");
  }
  std::vector<std::string> vars_;
  std::map<Expo, Rat> terms_;
};

// pseudo-remainder of f by g with respect to one variable:
// lc(g)^k * f = q*g + r with deg_var(r) < deg_var(g)
MultiPoly pseudo_reduce(const MultiPoly& f, const MultiPoly& g, int var);
MultiPoly pseudo_reduce(const MultiPoly& f, const MultiPoly& g, const std::string& var);

// fast path for large identities: evaluates at `trials` random rational
// points drawn from a documented range; a nonzero value certifies f != 0,
// while agreement on all trials bounds the false-zero probability by
// (total_degree / range)^trials (Schwartz-Zippel). The exact routes above
// stay the default for verification runs.
bool probably_zero(const MultiPoly& f, uint64_t seed, int trials = 8, long range = 1 << 30);

}  // namespace k3
