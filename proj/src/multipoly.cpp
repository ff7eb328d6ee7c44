#include "k3/multipoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace k3 {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rat& c) : MultiPoly(std::move(vars)) {
  if (c != 0) terms_[Expo(vars_.size(), 0)] = c;
}

MultiPoly MultiPoly::var(const std::vector<std::string>& vars, const std::string& name) {
  MultiPoly p(vars);
  int i = p.var_index(name);
  Expo e(p.vars_.size(), 0);
  e[i] = 1;
  p.terms_[e] = Rat(1);
  return p;
}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Rat& c) {
  return MultiPoly(vars, c);
}

int MultiPoly::var_index(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name)
    throw std::domain_error("MultiPoly: unknown variable " + name);
  return static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(Expo e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_ring(o);
  MultiPoly out(vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(std::move(e), c1 * c2);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rat& s) const {
  MultiPoly out(vars_);
  if (s == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly out(vars_, Rat(1));
  MultiPoly b = *this;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

int MultiPoly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::coeff_of(int var, int deg) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != deg) continue;
    Expo e2 = e;
    e2[var] = 0;
    out.add_term(std::move(e2), c);
  }
  return out;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size())
    throw std::domain_error("MultiPoly::subst: wrong image count");
  if (images.empty()) throw std::domain_error("MultiPoly::subst: empty ring");
  MultiPoly out(images[0].vars());
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> pows(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    pows[i].push_back(MultiPoly(images[0].vars(), Rat(1)));
  auto power = [&](size_t i, int e) -> const MultiPoly& {
    while (static_cast<int>(pows[i].size()) <= e) pows[i].push_back(pows[i].back() * images[i]);
    return pows[i][e];
  };
  for (const auto& [e, c] : terms_) {
    MultiPoly term(images[0].vars(), c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw std::domain_error("MultiPoly::eval: wrong arity");
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow_rat(point[i], e[i]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::reduce_square(int var, const Rat& sq) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Expo e2 = e;
    int k = e2[var];
    e2[var] = k % 2;
    out.add_term(std::move(e2), c * pow_rat(sq, k / 2));
  }
  return out;
}

bool MultiPoly::try_exact_div(const MultiPoly& g, MultiPoly& quot) const {
  check_ring(g);
  if (g.is_zero()) return false;
  MultiPoly r(*this), q(vars_);
  // lex-leading term of g (map order is lex ascending, so rbegin is leading)
  const auto& glt = *g.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& rlt = *r.terms_.rbegin();
    Expo d(rlt.first.size());
    for (size_t i = 0; i < d.size(); ++i) {
      d[i] = rlt.first[i] - glt.first[i];
      if (d[i] < 0) return false;
    }
    MultiPoly m(vars_);
    m.terms_[d] = rlt.second / glt.second;
    q += m;
    r -= m * g;
  }
  quot = q;
  return true;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& g) const {
  MultiPoly q;
  if (!try_exact_div(g, q)) throw std::domain_error("MultiPoly: inexact division");
  return q;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending exponent order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& c = it->second;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    bool any = false;
    std::ostringstream mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (any) mono << "*";
      mono << vars_[i];
      if (it->first[i] > 1) mono << "^" << it->first[i];
      any = true;
    }
    if (!any || a != 1) {
      os << to_string(a);
      if (any) os << "*";
    }
    os << mono.str();
    first = false;
  }
  return os.str();
}

MultiPoly pseudo_reduce(const MultiPoly& f, const MultiPoly& g, int var) {
  int dg = g.degree(var);
  if (dg <= 0) throw std::domain_error("pseudo_reduce: divisor not positive degree in var");
  MultiPoly l = g.lc_in(var);
  MultiPoly r = f;
  while (!r.is_zero() && r.degree(var) >= dg) {
    int df = r.degree(var);
    MultiPoly lead = r.coeff_of(var, df);
    // r <- l*r - lead * var^(df-dg) * g
    MultiPoly shift(r.vars());
    MultiPoly::Expo e(r.vars().size(), 0);
    e[var] = df - dg;
    shift.add_term(e, Rat(1));
    r = l * r - lead * shift * g;
  }
  return r;
}

MultiPoly pseudo_reduce(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  return pseudo_reduce(f, g, f.var_index(var));
}

bool probably_zero(const MultiPoly& f, uint64_t seed, int trials, long range) {
  if (f.is_zero()) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-range, range);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> point;
    for (size_t i = 0; i < f.vars().size(); ++i) point.push_back(Rat(d(rng)));
    if (f.eval(point) != 0) return false;
  }
  return true;
}

}  // namespace k3
