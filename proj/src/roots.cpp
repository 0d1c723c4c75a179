#include <algorithm>
#include <numeric>

#include "supergrade/catalog.hpp"

namespace supergrade {

namespace {

Vec weight_vec(const std::vector<Rational>& w) { return Vec::from_dense(w); }

std::vector<std::vector<Rational>> torus_weights(const LieSuperalgebra& g, const Torus& t) {
  std::vector<std::vector<Rational>> w(g.dim(), std::vector<Rational>(t.ops.size()));
  for (std::size_t s = 0; s < t.ops.size(); ++s)
    for (int i = 0; i < g.dim(); ++i) {
      const Vec& c = t.ops[s].column(i);
      if (c.size() > 1 || (c.size() == 1 && c.leading() != i)) throw Error("torus is not diagonal on the basis");
      w[i][s] = c.at(i);
    }
  return w;
}

bool all_zero(const std::vector<Rational>& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return is_zero(x); });
}

Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<Rational> neg(const std::vector<Rational>& a) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// Order simple roots along the diagram: by the symbols they involve, ranked by
// decreasing functional value; x_{k-1} - x_k precedes x_{k-1} + x_k.
std::vector<std::pair<int, Rational>> node_key(const std::vector<Rational>& w, const std::vector<int>& rank) {
  std::vector<std::pair<int, Rational>> key;
  for (std::size_t s = 0; s < w.size(); ++s)
    if (!is_zero(w[s])) key.push_back({rank[s], w[s]});
  std::sort(key.begin(), key.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return key;
}

}  // namespace

const char* color_name(NodeColor c) {
  switch (c) {
    case NodeColor::white:
      return "white";
    case NodeColor::gray:
      return "gray";
    case NodeColor::black:
      return "black";
  }
  return "?";
}

std::optional<int> RootDecomposition::find(const std::vector<Rational>& w) const {
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (roots[r].weight == w) return static_cast<int>(r);
  return std::nullopt;
}

RootDecomposition root_decomposition(const AlgebraId& id) {
  if (!id.basic()) throw Error(id.name() + " is not a basic algebra");
  const CatalogEntry& e = catalog_entry(id);
  RootDecomposition rd;
  rd.id = id;
  rd.algebra = e.algebra;
  rd.torus = e.torus;
  rd.basis_weight = torus_weights(e.algebra, e.torus);
  std::vector<Vec> h;
  for (int i = 0; i < e.algebra.dim(); ++i) {
    const auto& w = rd.basis_weight[i];
    if (all_zero(w)) {
      h.push_back(Vec::unit(i));
      continue;
    }
    if (rd.find(w)) throw Error("root space of dimension > 1 in " + id.name());
    rd.roots.push_back({w, i, e.algebra.parity(i)});
  }
  rd.cartan = Subspace::span(e.algebra.space(), h);
  return rd;
}

PositiveSystem system_from_order(const RootDecomposition& rd, const std::vector<std::string>& order,
                                 const std::string& name) {
  PositiveSystem ps;
  ps.functional.assign(rd.torus.symbols.size(), 0);
  int k = static_cast<int>(order.size());
  if (k != static_cast<int>(rd.torus.symbols.size())) throw Error("ordering must list every torus symbol once");
  for (int t = 0; t < k; ++t) {
    auto it = std::find(rd.torus.symbols.begin(), rd.torus.symbols.end(), order[t]);
    if (it == rd.torus.symbols.end()) throw Error("unknown torus symbol '" + order[t] + "'");
    Rational& slot = ps.functional[it - rd.torus.symbols.begin()];
    if (!is_zero(slot)) throw Error("symbol '" + order[t] + "' repeated");
    slot = k - t;
  }
  ps.name = name;
  if (ps.name.empty())
    for (int t = 0; t < k; ++t) ps.name += (t ? "," : "") + order[t];
  return ps;
}

DynkinDatum dynkin_datum(const RootDecomposition& rd, const PositiveSystem& ps) {
  const auto& g = rd.algebra;
  DynkinDatum dd;
  dd.system = ps;
  int R = static_cast<int>(rd.roots.size());
  dd.positive.resize(R);
  for (int r = 0; r < R; ++r) {
    Rational c = pair(ps.functional, rd.roots[r].weight);
    if (is_zero(c)) throw Error("functional vanishes on a root; not a positive system");
    dd.positive[r] = sgn(c) > 0;
  }
  // Simple roots: positive roots that are not sums of two positive roots.
  std::vector<int> simple;
  for (int r = 0; r < R; ++r) {
    if (!dd.positive[r]) continue;
    bool decomposable = false;
    for (int a = 0; a < R && !decomposable; ++a) {
      if (!dd.positive[a]) continue;
      auto rest = add(rd.roots[r].weight, neg(rd.roots[a].weight));
      auto b = rd.find(rest);
      // 2δ = δ + δ counts as decomposable.
      if (b && dd.positive[*b]) decomposable = true;
    }
    if (!decomposable) simple.push_back(r);
  }
  if (!ps.node_order.empty()) {
    std::vector<int> ordered;
    for (const auto& w : ps.node_order) {
      auto r = rd.find(w);
      if (!r || std::find(simple.begin(), simple.end(), *r) == simple.end())
        throw Error("node_order entry is not a simple root of this system");
      ordered.push_back(*r);
    }
    if (ordered.size() != simple.size()) throw Error("node_order does not list every simple root");
    simple = ordered;
  } else {
    std::vector<int> rank(ps.functional.size());
    std::vector<int> perm(ps.functional.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return ps.functional[a] > ps.functional[b]; });
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);
    std::stable_sort(simple.begin(), simple.end(), [&](int a, int b) {
      return node_key(rd.roots[a].weight, rank) < node_key(rd.roots[b].weight, rank);
    });
  }
  dd.simple = simple;
  int r = static_cast<int>(simple.size());

  // Coefficients of every root on the simple roots.
  std::vector<Vec> sv;
  for (int s : simple) sv.push_back(weight_vec(rd.roots[s].weight));
  SuperSpace wspace = SuperSpace::standard(static_cast<int>(ps.functional.size()), 0);
  CoordinateSystem cs(wspace, sv);
  if (cs.size() != r || cs.span().dim() != r) throw Error("simple roots are dependent");
  dd.coefficients.resize(R);
  for (int a = 0; a < R; ++a) {
    Vec c = cs.coordinates(weight_vec(rd.roots[a].weight));
    std::vector<long> co(r, 0);
    int sign = 0;
    for (const auto& t : c.terms()) {
      if (t.value.get_den() != 1) throw Error("root is not an integral combination of simple roots");
      co[t.index] = t.value.get_num().get_si();
      int s = sgn(t.value);
      if (sign && s != sign) throw Error("root has mixed-sign simple coefficients");
      sign = s;
    }
    if ((sign > 0) != dd.positive[a]) throw Error("positivity disagrees with simple-root expansion");
    dd.coefficients[a] = co;
  }

  // Cartan matrix a_ij = α_j(h_i), h_i = [e_i, f_i], rows normalized by color.
  dd.cartan_matrix.assign(r, std::vector<Rational>(r));
  dd.colors.resize(r);
  for (int i = 0; i < r; ++i) {
    const Root& ri = rd.roots[simple[i]];
    auto fi = rd.find(neg(ri.weight));
    if (!fi) throw Error("negative of a simple root is missing");
    Vec hi = g.bracket_basis(ri.index, rd.roots[*fi].index);
    std::vector<Rational> row(r);
    for (int j = 0; j < r; ++j) {
      int ej = rd.roots[simple[j]].index;
      Vec x = g.bracket(hi, Vec::unit(ej));
      if (x.size() > 1 || (x.size() == 1 && x.leading() != ej)) throw Error("h_i does not act diagonally");
      row[j] = x.at(ej);
    }
    Rational scale = 1;
    if (!is_odd(ri.parity)) {
      dd.colors[i] = NodeColor::white;
      if (is_zero(row[i])) throw Error("even simple root with a_ii = 0");
      scale = 2 / row[i];
    } else if (!is_zero(row[i])) {
      dd.colors[i] = NodeColor::black;
      scale = 1 / row[i];
    } else {
      dd.colors[i] = NodeColor::gray;
      for (int j = 0; j < r; ++j)
        if (j != i && !is_zero(row[j])) {
          scale = -1 / row[j];
          break;
        }
    }
    for (int j = 0; j < r; ++j) dd.cartan_matrix[i][j] = row[j] * scale;
  }

  // Marks: coefficients of the highest root, which must dominate every positive root.
  long best = -1;
  for (int a = 0; a < R; ++a) {
    if (!dd.positive[a]) continue;
    long h = std::accumulate(dd.coefficients[a].begin(), dd.coefficients[a].end(), 0L);
    if (h > best) {
      best = h;
      dd.highest = a;
    }
  }
  const auto& top = dd.coefficients[dd.highest];
  for (int a = 0; a < R; ++a)
    if (dd.positive[a])
      for (int i = 0; i < r; ++i)
        if (dd.coefficients[a][i] > top[i]) throw Error("highest root does not dominate");
  dd.marks.assign(top.begin(), top.end());
  return dd;
}

std::string diagram_string(const DynkinDatum& dd) {
  std::string s;
  for (std::size_t i = 0; i < dd.colors.size(); ++i) {
    if (i) s += "-";
    s += dd.colors[i] == NodeColor::white ? "o" : dd.colors[i] == NodeColor::gray ? "x" : "*";
    s += std::to_string(dd.marks[i]);
  }
  return s;
}

Grading grading_from_lambda(const RootDecomposition& rd, const DynkinDatum& dd, const std::vector<long>& lambda) {
  if (lambda.size() != dd.simple.size()) throw Error("lambda has the wrong length");
  std::vector<int> deg(rd.algebra.dim(), 0);
  for (std::size_t a = 0; a < rd.roots.size(); ++a) {
    long d = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) d += lambda[i] * dd.coefficients[a][i];
    deg[rd.roots[a].index] = static_cast<int>(d);
  }
  return Grading::from_degrees(rd.algebra, deg);
}

Grading grade_by_crossing(const RootDecomposition& rd, const DynkinDatum& dd, int crossed) {
  if (crossed < 0 || crossed >= static_cast<int>(dd.simple.size())) throw Error("no such node");
  if (dd.marks[crossed] != 1)
    throw Error("crossed node has mark " + std::to_string(dd.marks[crossed]) + "; depth would exceed one");
  std::vector<long> lambda(dd.simple.size(), 0);
  lambda[crossed] = 1;
  return grading_from_lambda(rd, dd, lambda);
}

std::optional<std::vector<Rational>> derivation_weight(const Torus& t, const LinearMap& d) {
  std::vector<Rational> w(t.ops.size());
  bool found = false;
  for (int j = 0; j < d.domain().dim(); ++j)
    for (const auto& term : d.column(j).terms()) {
      std::vector<Rational> here(t.ops.size());
      for (std::size_t s = 0; s < t.ops.size(); ++s) here[s] = t.ops[s].entry(term.index, term.index) - t.ops[s].entry(j, j);
      if (!found) {
        w = here;
        found = true;
      } else if (here != w) {
        return std::nullopt;
      }
    }
  if (!found) return std::nullopt;
  return w;
}

// ---- strange ----

std::vector<StrangeChoice> strange_rows(const AlgebraId& id) {
  int n = static_cast<int>(id.n());
  std::vector<StrangeChoice> rows;
  if (id.family == Family::psq) {
    for (int p = 1; p < n; ++p) rows.push_back({p, 0});
  } else if (id.family == Family::spe) {
    rows.push_back({0, -1});
    for (int p = 1; p < n; ++p) rows.push_back({p, 1});
    rows.push_back({0, 1});
    rows.push_back({1, 2});
  } else {
    throw Error("strange gradings need psq or spe");
  }
  return rows;
}

Grading strange_depth_one(const AlgebraId& id, const StrangeChoice& c) {
  auto rows = strange_rows(id);
  if (std::none_of(rows.begin(), rows.end(), [&](const StrangeChoice& r) { return r.crossed == c.crossed && r.k == c.k; }))
    throw Error("choice is not a row of the table");
  const CatalogEntry& e = catalog_entry(id);
  auto w = torus_weights(e.algebra, e.torus);
  std::vector<int> deg(e.algebra.dim(), 0);
  for (int i = 0; i < e.algebra.dim(); ++i) {
    Rational d;
    for (int t = 0; t < c.crossed; ++t) d += w[i][t];
    if (id.family == Family::spe) {
      int tt = c.k - (c.crossed >= 1 ? 2 : 0);
      d += tt * e.out.generators.at(0).map.entry(i, i);
    }
    if (d.get_den() != 1) throw Error("non-integral degree");
    deg[i] = static_cast<int>(d.get_num().get_si());
  }
  return Grading::from_degrees(e.algebra, deg);
}

// ---- Cartan ----

std::string CartanRow::to_string() const {
  return "(" + std::to_string(u_minus) + "," + std::to_string(u_zero) + "," + std::to_string(u_plus) + ")";
}

std::vector<CartanRow> cartan_rows(const AlgebraId& id) {
  int n = static_cast<int>(id.n());
  std::vector<CartanRow> rows;
  switch (id.family) {
    case Family::W:
    case Family::S:
      rows.push_back({1, n - 1, 0});
      for (int r = 0; r < n; ++r) rows.push_back({0, r, n - r});
      break;
    case Family::H:
      rows.push_back({0, 0, n});
      rows.push_back({1, n - 2, 1});
      if (n % 2 == 0) rows.push_back({0, n / 2, n / 2});
      break;
    default:
      throw Error("Cartan gradings need W, S or H");
  }
  return rows;
}

GradingTypeK cartan_row_type(const CartanRow& r) {
  std::vector<std::pair<int, int>> spec;
  if (r.u_minus) spec.push_back({-1, r.u_minus});
  if (r.u_zero) spec.push_back({0, r.u_zero});
  if (r.u_plus) spec.push_back({1, r.u_plus});
  return type_k(spec);
}

Grading cartan_depth_one(const AlgebraId& id, const CartanRow& r) {
  auto rows = cartan_rows(id);
  if (std::none_of(rows.begin(), rows.end(), [&](const CartanRow& x) {
        return x.u_minus == r.u_minus && x.u_zero == r.u_zero && x.u_plus == r.u_plus;
      }))
    throw Error("row " + r.to_string() + " is not in the table for " + id.name());
  const CatalogEntry& e = catalog_entry(id);
  auto fd = field_degrees(*e.w, cartan_row_type(r).generator_degrees());
  std::vector<int> deg;
  for (const auto& b : e.w_basis) {
    int d = fd[b.leading()];
    for (const auto& t : b.terms())
      if (fd[t.index] != d) throw Error("basis vector is not homogeneous");
    deg.push_back(d);
  }
  return Grading::from_degrees(e.algebra, deg);
}

// ---- case II ----

GenerAlgebra gener_algebra(const AlgebraId& s, const std::vector<int>& out_indices, bool with_euler) {
  const CatalogEntry& e = catalog_entry(s);
  auto ctx = build_lambda(1);
  IntermediateAlgebra smax = build_smax(e.algebra, e.out.maps(), ctx);
  std::vector<Vec> gens;
  for (int k : out_indices) {
    if (k < 0 || k >= static_cast<int>(e.out.generators.size())) throw Error("no such outer generator");
    gens.push_back(Vec::unit(smax.der_index(e.algebra.dim() + k, 0)));
  }
  if (with_euler) gens.push_back(Vec::unit(smax.w_index(smax.w.index(1, 0))));
  gens.push_back(Vec::unit(smax.w_index(smax.w.index(0, 0))));
  IntermediateAlgebra ia = build_intermediate(smax, gens);
  std::vector<int> der_deg(ia.der.dim(), 0);
  auto deg = smax_degrees(ia, der_deg, {-1});
  GradedIntermediate gi = graded_intermediate(ia, deg);
  return {std::move(ia), std::move(gi)};
}

std::vector<int> der_degrees(const Grading& s_grading, const OuterGenerators& out) {
  const auto& g = s_grading.algebra();
  std::vector<int> deg;
  for (int i = 0; i < g.dim(); ++i) {
    auto d = s_grading.degree_of(Vec::unit(i));
    if (!d) throw Error("grading is not diagonal on the basis");
    deg.push_back(*d);
  }
  for (const auto& o : out.generators) {
    auto d = s_grading.derivation_degree(o.map);
    if (!d) throw Error("outer generator " + o.label + " is not homogeneous");
    deg.push_back(*d);
  }
  return deg;
}

}  // namespace supergrade
