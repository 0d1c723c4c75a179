#include <algorithm>
#include <numeric>
#include <tuple>

#include "supergrade/liesuper.hpp"

namespace supergrade {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Entry {
  int row;  // component m of the equation
  int var;
  Rational coef;
};

// Derivations of one parity P. Unknown D_{k,l} (coefficient of x_k in D x_l)
// lives at flat index k*n+l; only indices with |k|+|l| = P are unknowns.
std::vector<Vec> solve_parity(const LieSuperalgebra& g, const std::vector<Vec>& full, Parity P) {
  int n = g.dim();
  std::vector<int> var(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> flat_of;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (g.parity(k) + g.parity(l) == P) {
        var[static_cast<std::size_t>(k) * n + l] = static_cast<int>(flat_of.size());
        flat_of.push_back(k * n + l);
      }
  int nv = static_cast<int>(flat_of.size());
  auto v_of = [&](int k, int l) { return var[static_cast<std::size_t>(k) * n + l]; };

  // D[x_i,x_j] - [D x_i, x_j] - (-1)^{P|x_i|} [x_i, D x_j] = 0, component m.
  std::vector<Vec> equations;
  std::vector<Entry> buf;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      buf.clear();
      int s = koszul(P, g.parity(i));
      for (const auto& t : g.upper(i, j).terms())
        for (int m = 0; m < n; ++m) {
          int v = v_of(m, t.index);
          if (v >= 0) buf.push_back({m, v, t.value});
        }
      for (int l = 0; l < n; ++l) {
        int v = v_of(l, i);
        if (v >= 0)
          for (const auto& t : full[static_cast<std::size_t>(l) * n + j].terms()) buf.push_back({t.index, v, -t.value});
        int w = v_of(l, j);
        if (w >= 0)
          for (const auto& t : full[static_cast<std::size_t>(i) * n + l].terms()) {
            Rational c = -s * t.value;
            buf.push_back({t.index, w, std::move(c)});
          }
      }
      std::sort(buf.begin(), buf.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
      std::size_t a = 0;
      while (a < buf.size()) {
        std::size_t b = a;
        std::vector<Term> terms;
        while (b < buf.size() && buf[b].row == buf[a].row) {
          terms.push_back({buf[b].var, buf[b].coef});
          ++b;
        }
        Vec eq = Vec::from_pairs(std::move(terms));
        if (!eq.empty()) equations.push_back(std::move(eq));
        a = b;
      }
    }

  // The system splits into blocks of unknowns linked by some equation.
  UnionFind uf(nv);
  for (const auto& eq : equations) {
    int first = eq.leading();
    for (const auto& t : eq.terms()) uf.unite(first, t.index);
  }
  std::vector<std::vector<int>> comp_vars(nv);
  for (int v = 0; v < nv; ++v) comp_vars[uf.find(v)].push_back(v);
  std::vector<std::vector<const Vec*>> comp_eqs(nv);
  for (const auto& eq : equations) comp_eqs[uf.find(eq.leading())].push_back(&eq);

  std::vector<Vec> out;
  std::vector<int> local(nv, -1);
  for (int root = 0; root < nv; ++root) {
    const auto& vars = comp_vars[root];
    if (vars.empty()) continue;
    for (int k = 0; k < static_cast<int>(vars.size()); ++k) local[vars[k]] = k;
    Echelon e(static_cast<int>(vars.size()));
    for (const Vec* eq : comp_eqs[root]) {
      Vec r;
      for (const auto& t : eq->terms()) r.push_back_unchecked(local[t.index], t.value);
      e.add(r);
      if (e.full()) break;
    }
    for (const auto& ns : e.null_space()) {
      std::vector<Term> t;
      for (const auto& x : ns.terms()) t.push_back({flat_of[vars[x.index]], x.value});
      out.push_back(Vec::from_pairs(std::move(t)));
    }
  }
  return out;
}

}  // namespace

Subspace derivations(const LieSuperalgebra& g) {
  int n = g.dim();
  std::vector<Vec> full(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full[static_cast<std::size_t>(i) * n + j] = g.bracket_basis(i, j);
  std::vector<Vec> basis = solve_parity(g, full, Parity::Even);
  for (auto& v : solve_parity(g, full, Parity::Odd)) basis.push_back(std::move(v));
  return Subspace::span(endomorphism_space(g.space()), basis);
}

}  // namespace supergrade
