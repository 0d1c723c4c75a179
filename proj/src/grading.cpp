#include <algorithm>
#include <set>

#include "supergrade/liesuper.hpp"

namespace supergrade {

Grading::Grading(LieSuperalgebra g, std::map<int, Subspace> pieces, std::optional<std::vector<int>> degree,
                 std::optional<LinearMap> op)
    : g_(std::move(g)), degree_(std::move(degree)), op_(std::move(op)) {
  for (auto& [p, s] : pieces)
    if (!s.is_zero()) pieces_.emplace(p, std::move(s));
}

Grading Grading::from_degrees(const LieSuperalgebra& g, const std::vector<int>& degree) {
  if (static_cast<int>(degree.size()) != g.dim()) throw Error("degree vector has wrong length");
  std::map<int, std::vector<Vec>> by;
  for (int i = 0; i < g.dim(); ++i) by[degree[i]].push_back(Vec::unit(i));
  std::map<int, Subspace> pieces;
  for (auto& [p, v] : by) pieces.emplace(p, Subspace::span(g.space(), v));
  return Grading(g, std::move(pieces), degree);
}

Grading Grading::trivial(const LieSuperalgebra& g) { return from_degrees(g, std::vector<int>(g.dim(), 0)); }

Subspace Grading::piece(int p) const {
  auto it = pieces_.find(p);
  if (it == pieces_.end()) return Subspace::zero(g_.space());
  return it->second;
}

LinearMap Grading::operator_map() const {
  if (op_) return *op_;
  const SuperSpace& sp = g_.space();
  LinearMap d(sp, sp, Parity::Even);
  if (degree_) {
    for (int i = 0; i < sp.dim(); ++i) d.set_column(i, Vec::unit(i, (*degree_)[i]));
    return d;
  }
  std::vector<Vec> basis;
  std::vector<int> deg;
  for (const auto& [p, s] : pieces_)
    for (const auto& v : s.basis()) {
      basis.push_back(v);
      deg.push_back(p);
    }
  CoordinateSystem cs(sp, basis);
  for (int j = 0; j < sp.dim(); ++j) {
    Vec c = cs.coordinates(Vec::unit(j));
    Vec col;
    for (const auto& t : c.terms()) col.add_scaled(basis[t.index], t.value * deg[t.index]);
    d.set_column(j, std::move(col));
  }
  return d;
}

int Grading::min_degree() const {
  if (pieces_.empty()) throw Error("empty grading");
  return pieces_.begin()->first;
}

int Grading::max_degree() const {
  if (pieces_.empty()) throw Error("empty grading");
  return pieces_.rbegin()->first;
}

Subspace Grading::at_least(int p) const {
  std::vector<Vec> v;
  for (const auto& [q, s] : pieces_)
    if (q >= p) v.insert(v.end(), s.basis().begin(), s.basis().end());
  return Subspace::span(g_.space(), v);
}

std::optional<int> Grading::degree_of(const Vec& v) const {
  if (v.empty()) return std::nullopt;
  if (degree_) {
    int p = (*degree_)[v.leading()];
    for (const auto& t : v.terms())
      if ((*degree_)[t.index] != p) return std::nullopt;
    return p;
  }
  for (const auto& [p, s] : pieces_)
    if (s.contains(v)) return p;
  return std::nullopt;
}

std::optional<int> Grading::derivation_degree(const LinearMap& der) const {
  if (der.is_zero()) return std::nullopt;
  LinearMap d = operator_map();
  Vec c = flatten(d.compose(der) - der.compose(d));
  Vec x = flatten(der);
  const Term& lead = x.terms().front();
  Rational ratio = c.at(lead.index) / lead.value;
  if (ratio.get_den() != 1) return std::nullopt;
  Vec y = x;
  y *= ratio;
  if (!(y == c)) return std::nullopt;
  return static_cast<int>(ratio.get_num().get_si());
}

bool is_compatible(const Grading& G, std::string* why) {
  const LieSuperalgebra& g = G.algebra();
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  int total = 0;
  std::vector<Vec> all;
  for (const auto& [p, s] : G.pieces()) {
    total += s.dim();
    all.insert(all.end(), s.basis().begin(), s.basis().end());
    if (!s.is_homogeneous()) return fail("piece " + std::to_string(p) + " is not parity-homogeneous");
  }
  if (total != g.dim() || Subspace::span(g.space(), all).dim() != g.dim()) return fail("pieces do not partition the algebra");
  for (const auto& [p, a] : G.pieces())
    for (const auto& [q, b] : G.pieces()) {
      if (q < p) continue;
      Subspace target = G.piece(p + q);
      for (const auto& x : a.basis())
        for (const auto& y : b.basis())
          if (!target.contains(g.bracket(x, y)))
            return fail("[g^" + std::to_string(p) + ", g^" + std::to_string(q) + "] not in g^" + std::to_string(p + q));
    }
  return true;
}

Grading grading_from_operator(const LieSuperalgebra& g, const LinearMap& d) {
  if (d.parity() != Parity::Even || !d.respects_parity()) throw Error("grading operator must be even");
  if (!is_derivation(g, d)) throw Error("grading operator is not a derivation");
  int n = g.dim();
  bool diagonal = true;
  for (int j = 0; j < n && diagonal; ++j) {
    const Vec& c = d.column(j);
    if (c.size() > 1 || (c.size() == 1 && c.leading() != j)) diagonal = false;
  }
  if (diagonal) {
    std::vector<int> deg(n);
    for (int j = 0; j < n; ++j) {
      Rational v = d.column(j).at(j);
      if (v.get_den() != 1) throw Error("not a grading operator: non-integer eigenvalue");
      deg[j] = static_cast<int>(v.get_num().get_si());
    }
    Grading G = Grading::from_degrees(g, deg);
    return Grading(g, G.pieces(), deg, d);
  }
  std::vector<long> roots = integer_roots(charpoly(DenseMatrix::from_map(d)));
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::map<int, Subspace> pieces;
  int total = 0;
  for (long r : roots) {
    LinearMap shifted = d - LinearMap::identity(g.space()).scaled(r);
    Subspace k = kernel(shifted);
    total += k.dim();
    pieces.emplace(static_cast<int>(r), std::move(k));
  }
  if (total != n) throw Error("not a grading operator: eigenspaces do not exhaust the algebra");
  return Grading(g, std::move(pieces), std::nullopt, d);
}

Grading restrict_grading(const Grading& G, const LieSuperalgebra& sub, const std::vector<Vec>& sub_basis) {
  const LieSuperalgebra& g = G.algebra();
  CoordinateSystem cs(g.space(), sub_basis);
  std::map<int, Subspace> pieces;
  int total = 0;
  for (const auto& [p, s] : G.pieces()) {
    Subspace i = intersect(s, cs.span());
    if (i.is_zero()) continue;
    std::vector<Vec> v;
    for (const auto& b : i.basis()) v.push_back(cs.coordinates(b));
    total += i.dim();
    pieces.emplace(p, Subspace::span(sub.space(), v));
  }
  if (total != sub.dim()) throw Error("subalgebra is not graded by the ambient grading");
  // Keep the degree vector when each sub basis vector is degree-homogeneous.
  std::vector<int> deg;
  for (const auto& b : sub_basis) {
    auto d = G.degree_of(b);
    if (!d) return Grading(sub, std::move(pieces));
    deg.push_back(*d);
  }
  return Grading(sub, std::move(pieces), deg);
}

bool is_transitive(const Grading& G) {
  const LieSuperalgebra& g = G.algebra();
  Subspace m1 = G.piece(-1);
  if (m1.is_zero()) throw Error("is_transitive: grading has no negative piece");
  int n = g.dim();
  int k = m1.dim();
  for (const auto& [p, s] : G.pieces()) {
    if (p < 0) continue;
    Echelon e(n * k);
    for (const auto& x : s.basis()) {
      Vec stacked;
      for (int j = 0; j < k; ++j) {
        Vec b = g.bracket(x, m1.basis()[j]);
        for (const auto& t : b.terms()) stacked.push_back_unchecked(j * n + t.index, t.value);
      }
      if (!e.add(stacked)) return false;
    }
  }
  return true;
}

bool is_irreducible_Gtype(const std::vector<LinearMap>& action) {
  if (action.empty()) return false;
  const SuperSpace& m = action[0].domain();
  int d = m.dim();
  if (d == 0) return false;
  Echelon e(d * d);
  LinearMap id = LinearMap::identity(m);
  e.add(flatten(id));
  std::vector<LinearMap> frontier{id};
  for (int round = 0; round <= d * d && !frontier.empty() && !e.full(); ++round) {
    std::vector<LinearMap> next;
    for (const auto& w : frontier)
      for (const auto& a : action) {
        LinearMap p = a.compose(w);
        if (e.add(flatten(p))) next.push_back(std::move(p));
        if (e.full()) return true;
      }
    frontier = std::move(next);
  }
  return e.full();
}

std::vector<LinearMap> isotropy_action(const Grading& G) {
  const LieSuperalgebra& g = G.algebra();
  Subspace m1 = G.piece(-1);
  Subspace z = G.piece(0);
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (int k = 0; k < m1.dim(); ++k) {
    labels.push_back("m" + std::to_string(k));
    par.push_back(g.space().parity(m1.pivots()[k]));
  }
  SuperSpace sp(labels, par);
  std::vector<LinearMap> out;
  for (const auto& x : z.basis()) {
    LinearMap f(sp, sp, g.space().parity_of(x).value_or(Parity::Even));
    for (int k = 0; k < m1.dim(); ++k) {
      Vec b = g.bracket(x, m1.basis()[k]);
      if (!m1.contains(b)) throw Error("isotropy action leaves g^-1");
      f.set_column(k, m1.coordinates_vec(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool is_nonlinear(const Grading& G) { return !G.piece(1).is_zero(); }

std::pair<int, int> depth_height(const Grading& G) {
  return {std::max(0, -G.min_degree()), std::max(0, G.max_degree())};
}

FiltrationResult weisfeiler_filtration(const LieSuperalgebra& L, const Subspace& L0, int max_steps) {
  if (!is_subalgebra(L, L0)) throw Error("weisfeiler_filtration: L0 is not a subalgebra");
  FiltrationResult F;
  F.algebra = L;
  int n = L.dim();
  F.steps.emplace(-1, Subspace::full(L.space()));
  F.steps.emplace(0, L0);
  Subspace prev = L0;
  for (int p = 1; p <= max_steps && !prev.is_zero(); ++p) {
    Quotient q = quotient(L.space(), prev);
    int qd = q.space.dim();
    // x = sum c_k b_k with [x, e_j] in prev for every j.
    Echelon e(prev.dim());
    std::vector<std::vector<Term>> rows(static_cast<std::size_t>(n) * qd);
    for (int k = 0; k < prev.dim(); ++k)
      for (int j = 0; j < n; ++j) {
        Vec b = q.projection.apply(L.bracket(prev.basis()[k], Vec::unit(j)));
        for (const auto& t : b.terms()) rows[static_cast<std::size_t>(j) * qd + t.index].push_back({k, t.value});
      }
    for (auto& r : rows)
      if (!r.empty()) e.add(Vec::from_pairs(std::move(r)));
    std::vector<Vec> next;
    for (const auto& c : e.null_space()) {
      Vec x;
      for (const auto& t : c.terms()) x.add_scaled(prev.basis()[t.index], t.value);
      next.push_back(std::move(x));
    }
    Subspace np = Subspace::span(L.space(), next);
    if (np == prev) break;  // stabilized above zero
    F.steps.emplace(p, np);
    prev = std::move(np);
  }
  F.residual = prev;
  F.terminated = prev.is_zero();
  return F;
}

AssociatedGraded associated_graded(const FiltrationResult& F) {
  if (!F.terminated) throw Error("associated_graded: filtration did not terminate");
  const LieSuperalgebra& L = F.algebra;
  int top = F.steps.rbegin()->first;  // L_top = 0
  std::map<int, std::vector<Vec>> comp;
  for (int p = -1; p < top; ++p) {
    const Subspace& cur = F.steps.at(p);
    const Subspace& below = F.steps.at(p + 1);
    Echelon e(L.dim());
    for (const auto& v : below.basis()) e.add(v);
    std::vector<Vec> even, odd;
    for (const auto& v : cur.basis())
      if (e.add(v)) (is_odd(L.space().parity(v.leading())) ? odd : even).push_back(v);
    even.insert(even.end(), odd.begin(), odd.end());
    comp[p] = std::move(even);
  }
  AssociatedGraded out;
  std::vector<std::string> labels;
  std::vector<Parity> par;
  std::map<int, int> offset;
  for (const auto& [p, vs] : comp) {
    offset[p] = static_cast<int>(out.adapted_basis.size());
    for (const auto& v : vs) {
      int k = static_cast<int>(out.adapted_basis.size());
      labels.push_back(v.size() == 1 && v.terms().front().value == 1 ? L.space().label(v.leading()) : "gr" + std::to_string(k));
      par.push_back(L.space().parity(v.leading()));
      out.adapted_basis.push_back(v);
      out.degrees.push_back(p);
    }
  }
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      for (int k = 0; k < static_cast<int>(labels.size()); ++k) labels[k] = "gr" + std::to_string(k);
  }
  // Coordinates modulo L_{r+1} in the complement chosen for degree r.
  std::map<int, CoordinateSystem> coords;
  for (const auto& [r, vs] : comp) {
    std::vector<Vec> b = vs;
    const Subspace& below = F.steps.at(r + 1);
    b.insert(b.end(), below.basis().begin(), below.basis().end());
    coords.emplace(r, CoordinateSystem(L.space(), b));
  }
  SuperSpace sp(labels, par);
  TableBuilder tb(sp);
  int m = sp.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      int r = out.degrees[i] + out.degrees[j];
      if (r < -1 || r >= top) continue;
      Vec v = L.bracket(out.adapted_basis[i], out.adapted_basis[j]);
      const CoordinateSystem& cs = coords.at(r);
      if (!cs.span().contains(v)) throw Error("associated_graded: filtration is not compatible with the bracket");
      Vec c = cs.coordinates(v);
      Vec w;
      int nc = static_cast<int>(comp[r].size());
      for (const auto& t : c.terms())
        if (t.index < nc) w.push_back_unchecked(offset[r] + t.index, t.value);
      tb.set(i, j, std::move(w));
    }
  AlgebraInfo info;
  info.name = "gr(" + L.name() + ")";
  info.provenance = "associated graded of a filtration";
  out.algebra = tb.build(std::move(info));
  out.grading = Grading::from_degrees(out.algebra, out.degrees);
  return out;
}

}  // namespace supergrade
