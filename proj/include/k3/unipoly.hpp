#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Dense univariate polynomial over Q. Coefficients indexed by exponent,
// no trailing zeros stored; the zero polynomial has degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(Rat(1)); }
  // c * t^e
  static UniPoly monomial(const Rat& c, int e);
  static UniPoly t() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int e) const {
    return (e >= 0 && e < static_cast<int>(c_.size())) ? c_[e] : Rat(0);
  }
  Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  UniPoly operator/(const Rat& s) const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly pow(int e) const;
  UniPoly derivative() const;
  Rat eval(const Rat& x) const;
  UniPoly monic() const;

  // quotient and remainder over Q; throws on division by zero
  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  // exact division; throws if the remainder is nonzero
  UniPoly exact_div(const UniPoly& d) const;
  bool divides(const UniPoly& p) const;

  // p(t) -> t^n * p(1/t) for n >= degree; used for the chart at infinity
  UniPoly reverse(int n) const;
  // p(a*t + b)
  UniPoly compose_affine(const Rat& a, const Rat& b) const;
  // p as q(t) with every coefficient scaled: p(s*t)
  UniPoly scale_arg(const Rat& s) const { return compose_affine(s, Rat(0)); }

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q);

// Yun's algorithm: p = lc * prod f_i^{m_i}, f_i monic squarefree pairwise coprime
std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p);

UniPoly squarefree_part(const UniPoly& p);

// valuation of p along a monic squarefree q (p != 0): largest k with q^k | p
int valuation_along(const UniPoly& p, const UniPoly& q);

}  // namespace k3
