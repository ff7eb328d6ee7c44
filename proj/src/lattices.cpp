#include "k3/lattices.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3 {

namespace {

IntMat cartan_A(int n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

IntMat cartan_D(int n) {
  // chain 0-1-...-(n-2), node n-1 attached to node n-3; D3 = A3
  if (n == 3) return cartan_A(3);
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) m[i][i + 1] = m[i + 1][i] = -1;
  m[n - 3][n - 1] = m[n - 1][n - 3] = -1;
  return m;
}

IntMat cartan_E(int n) {
  // chain 0-...-(n-2), node n-1 attached to node 2
  IntMat m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) m[i][i + 1] = m[i + 1][i] = -1;
  m[2][n - 1] = m[n - 1][2] = -1;
  return m;
}

void scale(IntMat& m, const Int& s) {
  for (auto& row : m)
    for (auto& x : row) x *= s;
}

// Diagonalization a la Smith with row transforms tracked: returns diagonal d
// (not necessarily a divisibility chain) together with Uinv such that the class
// group Z^n / G Z^n is the direct sum of Z/d[i] generated by column i of Uinv.
struct DiagResult {
  std::vector<Int> diag;
  IntMat uinv;
};

DiagResult diagonalize_with_transforms(IntMat g) {
  int n = g.size();
  IntMat uinv(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) uinv[i][i] = 1;

  auto swap_rows = [&](int a, int b) {
    std::swap(g[a], g[b]);
    for (int t = 0; t < n; ++t) std::swap(uinv[t][a], uinv[t][b]);
  };
  auto add_row = [&](int dst, int src, const Int& f) {
    // row_dst += f * row_src on g; column op uinv: col_src -= f * col_dst
    for (int t = 0; t < n; ++t) g[dst][t] += f * g[src][t];
    for (int t = 0; t < n; ++t) uinv[t][src] -= f * uinv[t][dst];
  };
  auto swap_cols = [&](int a, int b) {
    for (int t = 0; t < n; ++t) std::swap(g[t][a], g[t][b]);
  };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int t = 0; t < n; ++t) g[t][dst] += f * g[t][src];
  };

  for (int r = 0; r < n; ++r) {
    while (true) {
      int pi = -1, pj = -1;
      Int best(0);
      for (int i = r; i < n; ++i)
        for (int j = r; j < n; ++j)
          if (g[i][j] != 0 && (pi < 0 || abs(g[i][j]) < best)) {
            best = abs(g[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        pi = pj = r;  // remaining block zero
        break;
      }
      if (pi != r) swap_rows(r, pi);
      if (pj != r) swap_cols(r, pj);
      bool reduced = true;
      for (int i = r + 1; i < n; ++i)
        if (g[i][r] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), g[i][r].get_mpz_t(), g[r][r].get_mpz_t());
          add_row(i, r, -q);
          if (g[i][r] != 0) reduced = false;
        }
      for (int j = r + 1; j < n; ++j)
        if (g[r][j] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), g[r][j].get_mpz_t(), g[r][r].get_mpz_t());
          add_col(j, r, -q);
          if (g[r][j] != 0) reduced = false;
        }
      bool clean = reduced;
      for (int i = r + 1; i < n && clean; ++i)
        if (g[i][r] != 0) clean = false;
      for (int j = r + 1; j < n && clean; ++j)
        if (g[r][j] != 0) clean = false;
      if (clean) break;
    }
  }
  DiagResult out;
  out.diag.resize(n);
  for (int i = 0; i < n; ++i) out.diag[i] = abs(g[i][i]);
  out.uinv = std::move(uinv);
  return out;
}

// inertia of a symmetric rational matrix by congruence reduction
std::pair<int, int> inertia(RatMat a) {
  int n = a.size();
  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) { p = i; break; }
    if (p < 0) {
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i)
        if (!done[i])
          for (int j = 0; j < n; ++j)
            if (!done[j] && j != i && a[i][j] != 0) { bi = i; bj = j; break; }
      if (bi < 0) break;  // remaining block is zero
      for (int t = 0; t < n; ++t) a[bi][t] += a[bj][t];
      for (int t = 0; t < n; ++t) a[t][bi] += a[t][bj];
      p = bi;
    }
    Rat d = a[p][p];
    (d > 0 ? pos : neg)++;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      Rat f = a[i][p] / d;
      for (int t = 0; t < n; ++t) a[i][t] -= f * a[p][t];
      for (int t = 0; t < n; ++t) a[t][i] -= f * a[t][p];
    }
  }
  return {pos, neg};
}

// solve G x = b over Q for a nondegenerate integer matrix
std::vector<Rat> solve_gram(const IntMat& g, std::vector<Rat> b) {
  int n = g.size();
  RatMat a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(g[i][j]);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) { p = i; break; }
    if (p < 0) throw std::domain_error("lattice: degenerate gram matrix");
    std::swap(a[col], a[p]);
    std::swap(b[col], b[p]);
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Rat mod_ring(const Rat& x, long m) {
  Int num = x.get_num(), den = x.get_den();
  Int q;
  Int md = den * m;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), md.get_mpz_t());
  return x - Rat(q * m);
}

}  // namespace

IntLattice direct_sum(const IntLattice& a, const IntLattice& b) {
  int n = a.rank(), m = b.rank();
  IntMat g(n + m, std::vector<Int>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
  std::string label =
      a.label.empty() ? b.label : (b.label.empty() ? a.label : a.label + " + " + b.label);
  return {g, label};
}

IntLattice build_lattice(const std::string& expr) {
  IntLattice out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && isspace((unsigned char)expr[i])) ++i;
  };
  auto parse_int = [&]() -> long {
    skip_ws();
    size_t j = i;
    if (j < expr.size() && (expr[j] == '-' || expr[j] == '+')) ++j;
    size_t k = j;
    while (k < expr.size() && isdigit((unsigned char)expr[k])) ++k;
    if (k == j) throw std::domain_error("build_lattice: integer expected in " + expr);
    long v = std::stol(expr.substr(i, k - i));
    i = k;
    return v;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= expr.size()) break;
    if (!first) {
      if (expr[i] != '+') throw std::domain_error("build_lattice: '+' expected in " + expr);
      ++i;
      skip_ws();
    }
    first = false;
    if (i >= expr.size()) throw std::domain_error("build_lattice: dangling '+' in " + expr);
    char name = expr[i++];
    IntMat block;
    if (name == 'H') {
      block = {{Int(0), Int(1)}, {Int(1), Int(0)}};
    } else if (name == 'A' || name == 'D' || name == 'E') {
      long n = parse_int();
      if (name == 'A' && n >= 1) block = cartan_A((int)n);
      else if (name == 'D' && n >= 3) block = cartan_D((int)n);
      else if (name == 'E' && n >= 6 && n <= 8) block = cartan_E((int)n);
      else throw std::domain_error("build_lattice: unsupported factor in " + expr);
    } else {
      throw std::domain_error("build_lattice: unknown factor name in " + expr);
    }
    skip_ws();
    if (i < expr.size() && expr[i] == '(') {
      ++i;
      long s = parse_int();
      skip_ws();
      if (i >= expr.size() || expr[i] != ')')
        throw std::domain_error("build_lattice: ')' expected in " + expr);
      ++i;
      scale(block, Int(s));
    }
    skip_ws();
    long power = 1;
    if (i < expr.size() && expr[i] == '^') {
      ++i;
      power = parse_int();
    }
    for (long p = 0; p < power; ++p) out = direct_sum(out, {block, ""});
  }
  out.label = expr;
  return out;
}

std::vector<Int> smith_normal_form(IntMat m) {
  auto d = diagonalize_with_transforms(std::move(m)).diag;
  // enforce the divisibility chain
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 0 && d[j] != 0) std::swap(d[i], d[j]);
      if (d[i] != 0 && d[j] != 0 && d[j] % d[i] != 0) {
        Int g = gcd(d[i], d[j]);
        Int l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
      }
    }
  std::sort(d.begin(), d.end(), [](const Int& a, const Int& b) {
    if ((a == 0) != (b == 0)) return b == 0;  // zeros last
    return a < b;
  });
  return d;
}

std::pair<int, int> gram_inertia(const IntMat& g) {
  int n = g.size();
  RatMat a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(g[i][j]);
  return inertia(std::move(a));
}

std::vector<Rat> DiscriminantForm::q_value_multiset() const {
  std::vector<Rat> out;
  int m = invariant_factors.size();
  std::vector<long> radix(m), idx(m, 0);
  long total = 1;
  for (int i = 0; i < m; ++i) {
    radix[i] = invariant_factors[i].get_si();
    total *= radix[i];
  }
  if (total > 65536) throw std::domain_error("q_value_multiset: group too large");
  for (long k = 0; k < total; ++k) {
    Rat val(0);
    for (int i = 0; i < m; ++i) {
      if (idx[i] == 0) continue;
      val += Rat(idx[i]) * Rat(idx[i]) * q[i][i];
      for (int j = i + 1; j < m; ++j)
        if (idx[j]) val += Rat(2 * idx[i] * idx[j]) * q[i][j];
    }
    out.push_back(mod_ring(val, 2));
    for (int i = 0; i < m; ++i) {
      if (++idx[i] < radix[i]) break;
      idx[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DiscriminantForm::group_str() const {
  if (invariant_factors.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < invariant_factors.size();) {
    size_t j = i;
    while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
    if (i) os << " x ";
    os << "Z" << invariant_factors[i].get_str();
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

bool same_discriminant_form(const DiscriminantForm& a, const DiscriminantForm& b) {
  // compare against the canonical chain forms and full q-value multisets
  auto chain = [](std::vector<Int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return chain(a.invariant_factors) == chain(b.invariant_factors) &&
         a.q_value_multiset() == b.q_value_multiset();
}

LatticeInvariants lattice_invariants(const IntLattice& L) {
  LatticeInvariants inv;
  int n = L.rank();
  inv.rank = n;
  RatMat a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(L.gram[i][j]);
  auto [pos, neg] = inertia(a);
  if (pos + neg != n) throw std::domain_error("lattice_invariants: degenerate gram");
  inv.sig_pos = pos;
  inv.sig_neg = neg;

  // discriminant group Z^n / G Z^n with generators x_i = G^{-1} y_i in L*/L
  auto dr = diagonalize_with_transforms(L.gram);
  std::vector<std::pair<Int, std::vector<Rat>>> gens;
  for (int i = 0; i < n; ++i) {
    if (dr.diag[i] <= 1) continue;
    std::vector<Rat> y(n);
    for (int t = 0; t < n; ++t) y[t] = Rat(dr.uinv[t][i]);
    gens.push_back({dr.diag[i], solve_gram(L.gram, y)});
  }
  std::sort(gens.begin(), gens.end(),
            [](const auto& x, const auto& y2) { return x.first < y2.first; });
  int m = gens.size();
  inv.disc.invariant_factors.clear();
  for (auto& [d, x] : gens) inv.disc.invariant_factors.push_back(d);
  inv.disc.q = RatMat(m, std::vector<Rat>(m, Rat(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rat v(0);
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) v += gens[i].second[s] * Rat(L.gram[s][t]) * gens[j].second[t];
      inv.disc.q[i][j] = (i == j) ? mod_ring(v, 2) : mod_ring(v, 1);
    }
  inv.disc.even = true;
  if (m > 0)
    for (const Rat& v : inv.disc.q_value_multiset())
      if (v.get_den() != 1) inv.disc.even = false;
  inv.two_elementary = !inv.disc.invariant_factors.empty();
  for (const auto& f : inv.disc.invariant_factors)
    if (f != 2) inv.two_elementary = false;
  return inv;
}

IntLattice root_lattice_of_config(const FiberConfig& cfg) {
  IntLattice out;
  std::ostringstream label;
  bool first = true;
  auto add = [&](const std::string& name, int count) {
    if (count <= 0) return;
    IntLattice piece = build_lattice(name + "(-1)");
    for (int i = 0; i < count; ++i) out = direct_sum(out, {piece.gram, ""});
    if (!first) label << " + ";
    label << name << "(-1)";
    if (count > 1) label << "^" << count;
    first = false;
  };
  for (const auto& f : cfg.entries) {
    int d = f.place.deg();
    switch (f.type.tag) {
      case KodairaType::In:
        if (f.type.n >= 2) add("A" + std::to_string(f.type.n - 1), d);
        break;
      case KodairaType::II: break;
      case KodairaType::III: add("A1", d); break;
      case KodairaType::IV: add("A2", d); break;
      case KodairaType::Instar: add("D" + std::to_string(f.type.n + 4), d); break;
      case KodairaType::IVstar: add("E6", d); break;
      case KodairaType::IIIstar: add("E7", d); break;
      case KodairaType::IIstar: add("E8", d); break;
    }
  }
  out.label = label.str();
  return out;
}

const NamedLattice& nikulin_lattice() {
  static const NamedLattice n{"N", 8, "Z2^6"};
  return n;
}

FrameReport frame_consistency(const FiberConfig& cfg, const IntLattice& ns) {
  FrameReport r;
  IntLattice root = root_lattice_of_config(cfg);
  Int root_disc(1);
  for (const auto& d : smith_normal_form(root.gram)) root_disc *= d;
  Int ns_disc(1);
  for (const auto& d : smith_normal_form(ns.gram)) ns_disc *= d;
  r.root_disc = root_disc;
  r.ns_disc = ns_disc;
  r.torsion = cfg.mw_torsion_order;
  Int w(cfg.mw_torsion_order);
  r.determinant_ok = (root_disc == ns_disc * w * w);
  std::ostringstream os;
  os << "|D(Kroot)|=" << root_disc.get_str() << " |D(NS)|=" << ns_disc.get_str()
     << " |W|=" << cfg.mw_torsion_order;
  r.detail = os.str();
  return r;
}

}  // namespace k3
