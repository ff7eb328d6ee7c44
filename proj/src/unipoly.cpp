#include "k3/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace k3 {

UniPoly UniPoly::monomial(const Rat& c, int e) {
  if (c == 0) return UniPoly();
  std::vector<Rat> v(e + 1, Rat(0));
  v[e] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator/(const Rat& s) const {
  if (s == 0) throw std::domain_error("UniPoly: division by zero scalar");
  return *this * (Rat(1) / s);
}

UniPoly UniPoly::pow(int e) const {
  UniPoly out = one();
  UniPoly b = *this;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return UniPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat out(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
  return out;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this / lc();
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  UniPoly q, r = *this;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int e = r.degree() - d.degree();
    Rat c = r.lc() / d.lc();
    UniPoly m = monomial(c, e);
    q += m;
    r -= m * d;
  }
  return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

bool UniPoly::divides(const UniPoly& p) const {
  if (is_zero()) return p.is_zero();
  return p.divrem(*this).second.is_zero();
}

UniPoly UniPoly::reverse(int n) const {
  if (n < degree()) throw std::domain_error("UniPoly::reverse: n below degree");
  std::vector<Rat> v(n + 1, Rat(0));
  for (int i = 0; i <= degree(); ++i) v[n - i] = coeff(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::compose_affine(const Rat& a, const Rat& b) const {
  UniPoly arg({b, a});
  UniPoly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * arg + UniPoly(*it);
  return out;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    Rat c = coeff(e);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    bool unit = (a == 1) && e > 0;
    if (!unit) os << to_string(a);
    if (e > 0) {
      if (!unit) os << "*";
      os << var;
      if (e > 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = a.divrem(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decompose(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = gcd_univariate(f, fp);
  UniPoly b = f.exact_div(a);
  UniPoly c = fp.exact_div(a);
  UniPoly d = c - b.derivative();
  int m = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd_univariate(b, d);
    if (g.degree() > 0) out.emplace_back(g, m);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
    ++m;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly out = UniPoly::one();
  for (auto& [f, m] : squarefree_decompose(p)) out *= f;
  return out;
}

int valuation_along(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero()) throw std::domain_error("valuation_along: zero polynomial");
  int v = 0;
  UniPoly r = p;
  while (true) {
    auto [quo, rem] = r.divrem(q);
    if (!rem.is_zero()) return v;
    r = quo;
    ++v;
  }
}

}  // namespace k3
