#include "supergrade/liesuper.hpp"

#include <algorithm>

namespace supergrade {

LieSuperalgebra::LieSuperalgebra() : d_(std::make_shared<Data>()) {}

LieSuperalgebra::LieSuperalgebra(SuperSpace space, std::vector<Vec> upper, AlgebraInfo info) {
  int n = space.dim();
  if (static_cast<int>(upper.size()) != n * (n + 1) / 2) throw Error("bracket table has wrong size");
  auto d = std::make_shared<Data>();
  d->space = std::move(space);
  d->upper = std::move(upper);
  d->info = std::move(info);
  d_ = std::move(d);
}

LieSuperalgebra LieSuperalgebra::renamed(const std::string& name, const std::string& provenance) const {
  AlgebraInfo info = d_->info;
  info.name = name;
  if (!provenance.empty()) info.provenance = provenance;
  return with_info(std::move(info));
}

LieSuperalgebra LieSuperalgebra::with_info(AlgebraInfo info) const {
  LieSuperalgebra r;
  auto d = std::make_shared<Data>(*d_);
  d->info = std::move(info);
  r.d_ = std::move(d);
  return r;
}

Vec LieSuperalgebra::bracket_basis(int i, int j) const {
  if (i <= j) return upper(i, j);
  Vec v = upper(j, i);
  v *= -koszul(parity(i), parity(j));
  return v;
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  std::vector<Term> acc;
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      int i = a.index, j = b.index;
      const Vec& v = upper(std::min(i, j), std::max(i, j));
      if (v.empty()) continue;
      Rational c = a.value * b.value;
      if (i > j) c *= -koszul(parity(i), parity(j));
      for (const auto& t : v.terms()) {
        Rational w = c * t.value;
        acc.push_back({t.index, std::move(w)});
      }
    }
  }
  return Vec::from_pairs(std::move(acc));
}

LinearMap LieSuperalgebra::ad(const Vec& x) const {
  Parity p = space().parity_of(x).value_or(Parity::Even);
  LinearMap f(space(), space(), p);
  for (int j = 0; j < dim(); ++j) f.set_column(j, bracket(x, Vec::unit(j)));
  return f;
}

bool LieSuperalgebra::parity_additive() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      for (const auto& t : upper(i, j).terms())
        if (parity(t.index) != parity(i) + parity(j)) return false;
  return true;
}

bool LieSuperalgebra::is_abelian() const {
  for (const auto& v : d_->upper)
    if (!v.empty()) return false;
  return true;
}

TableBuilder::TableBuilder(SuperSpace space) : space_(std::move(space)), n_(space_.dim()) {
  upper_.resize(static_cast<std::size_t>(n_) * (n_ + 1) / 2);
}

void TableBuilder::set(int i, int j, Vec v) {
  int a = std::min(i, j), b = std::max(i, j);
  if (i > j) v *= -koszul(space_.parity(i), space_.parity(j));
  upper_[a * n_ - a * (a - 1) / 2 + (b - a)] = std::move(v);
}

LieSuperalgebra TableBuilder::build(AlgebraInfo info) const { return LieSuperalgebra(space_, upper_, std::move(info)); }

LieSuperalgebra abelian(const SuperSpace& space, const std::string& name) {
  return TableBuilder(space).build({name, "", {}, std::nullopt, "abelian"});
}

LieSuperalgebra from_brackets(const SuperSpace& space, const std::function<Vec(int, int)>& br, AlgebraInfo info) {
  TableBuilder tb(space);
  for (int i = 0; i < space.dim(); ++i)
    for (int j = i; j < space.dim(); ++j) tb.set(i, j, br(i, j));
  return tb.build(std::move(info));
}

JacobiReport check_jacobi(const LieSuperalgebra& g) {
  JacobiReport rep;
  rep.parity_ok = g.parity_additive();
  int n = g.dim();
  std::vector<Vec> full(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full[static_cast<std::size_t>(i) * n + j] = g.bracket_basis(i, j);
  auto left = [&](int a, const Vec& v) {  // [x_a, v]
    std::vector<Term> acc;
    for (const auto& t : v.terms())
      for (const auto& s : full[static_cast<std::size_t>(a) * n + t.index].terms()) {
        Rational w = t.value * s.value;
        acc.push_back({s.index, std::move(w)});
      }
    return Vec::from_pairs(std::move(acc));
  };
  auto right = [&](const Vec& v, int a) {  // [v, x_a]
    std::vector<Term> acc;
    for (const auto& t : v.terms())
      for (const auto& s : full[static_cast<std::size_t>(t.index) * n + a].terms()) {
        Rational w = t.value * s.value;
        acc.push_back({s.index, std::move(w)});
      }
    return Vec::from_pairs(std::move(acc));
  };
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Vec lhs = left(i, full[static_cast<std::size_t>(j) * n + k]);
        Vec rhs = right(full[static_cast<std::size_t>(i) * n + j], k);
        rhs.add_scaled(left(j, full[static_cast<std::size_t>(i) * n + k]), koszul(g.parity(i), g.parity(j)));
        lhs.add_scaled(rhs, -1);
        if (!lhs.empty()) rep.violations.push_back({i, j, k, std::move(lhs)});
      }
  return rep;
}

// ---- endomorphisms ----

SuperSpace endomorphism_space(const SuperSpace& v) {
  int n = v.dim();
  std::vector<std::string> labels;
  std::vector<Parity> par;
  labels.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      labels.push_back("E" + std::to_string(k) + "_" + std::to_string(l));
      par.push_back(v.parity(k) + v.parity(l));
    }
  return SuperSpace(std::move(labels), std::move(par));
}

Vec flatten(const LinearMap& f) {
  int n = f.codomain().dim();
  std::vector<Term> t;
  for (int l = 0; l < f.domain().dim(); ++l)
    for (const auto& s : f.column(l).terms()) t.push_back({s.index * n + l, s.value});
  return Vec::from_pairs(std::move(t));
}

LinearMap unflatten(const SuperSpace& v, const Vec& flat, Parity p) {
  int n = v.dim();
  std::vector<std::vector<Term>> cols(n);
  for (const auto& t : flat.terms()) cols[t.index % n].push_back({t.index / n, t.value});
  std::vector<Vec> c;
  c.reserve(n);
  for (auto& x : cols) c.push_back(Vec::from_pairs(std::move(x)));
  return LinearMap(v, v, p, std::move(c));
}

Parity endomorphism_parity(const SuperSpace& v, const Vec& flat) {
  if (flat.empty()) return Parity::Even;
  int n = v.dim();
  int i = flat.leading();
  return v.parity(i / n) + v.parity(i % n);
}

bool is_derivation(const LieSuperalgebra& g, const LinearMap& d) {
  int n = g.dim();
  std::vector<Vec> img(n);
  for (int i = 0; i < n; ++i) img[i] = d.column(i);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec lhs = d.apply(g.upper(i, j));
      Vec rhs = g.bracket(img[i], Vec::unit(j));
      rhs.add_scaled(g.bracket(Vec::unit(i), img[j]), koszul(d.parity(), g.parity(i)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Subspace inner_derivations(const LieSuperalgebra& g) {
  std::vector<Vec> v;
  for (int i = 0; i < g.dim(); ++i) v.push_back(flatten(g.ad_basis(i)));
  return Subspace::span(endomorphism_space(g.space()), v);
}

DerivationSplit inner_outer_split(const LieSuperalgebra& g, const std::optional<std::vector<LinearMap>>& canonical_out) {
  DerivationSplit s;
  s.full = derivations(g);
  s.inner = inner_derivations(g);
  const SuperSpace& es = s.full.ambient();
  if (!s.full.contains(s.inner)) throw Error("inner derivations not contained in derivation solve");
  if (canonical_out) {
    std::vector<Vec> v;
    for (const auto& d : *canonical_out) {
      if (!is_derivation(g, d)) throw Error("canonical outer generator is not a derivation");
      v.push_back(flatten(d));
    }
    s.outer_complement = Subspace::span(es, v);
    if (!intersect(s.outer_complement, s.inner).is_zero() ||
        s.inner.dim() + s.outer_complement.dim() != s.full.dim())
      throw Error("canonical outer derivations are not complementary to the inner ones");
    s.canonical = true;
  } else {
    Echelon e(es.dim());
    for (const auto& r : s.inner.basis()) e.add(r);
    std::vector<Vec> comp;
    for (const auto& r : s.full.basis())
      if (e.add(r)) comp.push_back(r);
    s.outer_complement = Subspace::span(es, comp);
  }
  auto f = s.full.sdim(), i = s.inner.sdim();
  s.out_dim = {f.first - i.first, f.second - i.second};
  return s;
}

// ---- subalgebras and ideals ----

Subspace bracket_span(const LieSuperalgebra& g, const Subspace& a, const Subspace& b) {
  Echelon e(g.dim());
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      e.add(g.bracket(x, y));
      if (e.full()) break;
    }
  return Subspace::from_rref(g.space(), e.rref());
}

bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const LieSuperalgebra& g, const Subspace& s) {
  for (int i = 0; i < g.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(g.bracket(Vec::unit(i), v))) return false;
  return true;
}

Subspace ideal_generated(const LieSuperalgebra& g, const Subspace& s) {
  Echelon e(g.dim());
  std::vector<Vec> accepted, frontier;
  for (const auto& v : s.basis())
    if (e.add(v)) frontier.push_back(v);
  accepted = frontier;
  while (!frontier.empty() && !e.full()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (int i = 0; i < g.dim(); ++i) {
        Vec w = g.bracket(Vec::unit(i), v);
        if (e.add(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return Subspace::from_rref(g.space(), e.rref());
}

Subspace subalgebra_generated(const LieSuperalgebra& g, const std::vector<Vec>& gens) {
  Echelon e(g.dim());
  std::vector<Vec> accepted;
  std::size_t done = 0;
  for (const auto& v : gens)
    if (e.add(v)) accepted.push_back(v);
  while (done < accepted.size() && !e.full()) {
    Vec v = accepted[done];
    for (std::size_t k = 0; k <= done; ++k) {
      Vec w = g.bracket(accepted[k], v);
      if (e.add(w)) accepted.push_back(std::move(w));
    }
    ++done;
  }
  return Subspace::from_rref(g.space(), e.rref());
}

Subspace center(const LieSuperalgebra& g) {
  Echelon e(g.dim());
  for (int j = 0; j < g.dim() && !e.full(); ++j)
    for (const auto& r : g.ad_basis(j).rows()) {
      e.add(r);
      if (e.full()) break;
    }
  return Subspace::span(g.space(), e.null_space());
}

Subspace derived_subalgebra(const LieSuperalgebra& g) {
  Subspace all = Subspace::full(g.space());
  return bracket_span(g, all, all);
}

bool is_solvable(const LieSuperalgebra& g, const Subspace& s) {
  Subspace cur = s;
  while (!cur.is_zero()) {
    Subspace next = bracket_span(g, cur, cur);
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
  return true;
}

std::vector<Vec> graded_basis(const Subspace& s) {
  std::vector<Vec> b = homogeneous_basis(s, Parity::Even);
  for (auto& v : homogeneous_basis(s, Parity::Odd)) b.push_back(std::move(v));
  return b;
}

static std::string default_label(const SuperSpace& amb, const Vec& v, int k) {
  if (v.size() == 1 && v.terms().front().value == 1) return amb.label(v.leading());
  return "b" + std::to_string(k);
}

LieSuperalgebra restrict_to(const LieSuperalgebra& g, const std::vector<Vec>& basis, const std::vector<std::string>& labels,
                            const std::string& name) {
  std::vector<Parity> par;
  std::vector<std::string> lab;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    auto p = g.space().parity_of(basis[k]);
    if (!p) throw Error("restrict_to: basis vector is zero or not homogeneous");
    par.push_back(*p);
    lab.push_back(labels.empty() ? default_label(g.space(), basis[k], k) : labels[k]);
  }
  // Unit-vector labels may still collide with generated ones.
  {
    std::vector<std::string> sorted = lab;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      for (int k = 0; k < static_cast<int>(lab.size()); ++k) lab[k] = "b" + std::to_string(k);
  }
  SuperSpace sp(std::move(lab), std::move(par));
  CoordinateSystem cs(g.space(), basis);
  TableBuilder tb(sp);
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = i; j < sp.dim(); ++j) {
      Vec v = g.bracket(basis[i], basis[j]);
      if (!cs.span().contains(v)) throw Error("restrict_to: basis does not span a subalgebra");
      tb.set(i, j, cs.coordinates(v));
    }
  AlgebraInfo info;
  info.name = name.empty() ? g.name() + "|sub" : name;
  info.provenance = "subalgebra of " + g.name();
  return tb.build(std::move(info));
}

LieSuperalgebra quotient_algebra(const LieSuperalgebra& g, const Subspace& ideal, const std::string& name) {
  if (!is_ideal(g, ideal)) throw Error("quotient_algebra: subspace is not an ideal");
  Quotient q = quotient(g.space(), ideal);
  TableBuilder tb(q.space);
  const auto& r = q.representatives;
  for (int a = 0; a < q.space.dim(); ++a)
    for (int b = a; b < q.space.dim(); ++b) tb.set(a, b, q.projection.apply(g.bracket_basis(r[a], r[b])));
  AlgebraInfo info;
  info.name = name.empty() ? g.name() + "/ideal" : name;
  info.provenance = "quotient of " + g.name();
  return tb.build(std::move(info));
}

LieSuperalgebra algebra_of_maps(const std::vector<LinearMap>& maps, const std::vector<std::string>& labels,
                                const std::string& name) {
  if (maps.empty()) return abelian(SuperSpace(), name);
  const SuperSpace& v = maps[0].domain();
  SuperSpace es = endomorphism_space(v);
  std::vector<Vec> flat;
  std::vector<Parity> par;
  for (const auto& m : maps) {
    flat.push_back(flatten(m));
    par.push_back(m.parity());
  }
  CoordinateSystem cs(es, flat);
  SuperSpace sp(labels, par);
  TableBuilder tb(sp);
  for (int i = 0; i < sp.dim(); ++i)
    for (int j = i; j < sp.dim(); ++j) {
      Vec c = flatten(maps[i].supercommutator(maps[j]));
      if (!cs.span().contains(c)) throw Error("algebra_of_maps: maps not closed under supercommutator");
      tb.set(i, j, cs.coordinates(c));
    }
  return tb.build({name, "", {}, std::nullopt, "linear maps"});
}

LieSuperalgebra semidirect_sum(const LieSuperalgebra& ideal, const LieSuperalgebra& sub, const std::vector<LinearMap>& action,
                               const std::string& name) {
  int a = ideal.dim(), b = sub.dim();
  if (static_cast<int>(action.size()) != b) throw Error("semidirect_sum: one action map per subalgebra basis vector");
  for (int k = 0; k < b; ++k) {
    if (action[k].parity() != sub.parity(k) && !action[k].is_zero())
      throw Error("semidirect_sum: action map parity mismatch");
    if (!is_derivation(ideal, action[k])) throw Error("semidirect_sum: action is not by derivations");
  }
  for (int k = 0; k < b; ++k)
    for (int l = k; l < b; ++l) {
      LinearMap lhs(ideal.space(), ideal.space(), sub.parity(k) + sub.parity(l));
      for (const auto& t : sub.upper(k, l).terms()) lhs = lhs + action[t.index].scaled(t.value);
      if (!(flatten(lhs) == flatten(action[k].supercommutator(action[l]))))
        throw Error("semidirect_sum: action is not a homomorphism");
    }
  std::vector<std::string> lab = ideal.space().labels();
  std::vector<Parity> par = ideal.space().parities();
  for (int k = 0; k < b; ++k) {
    std::string l = sub.space().label(k);
    while (ideal.space().index_of(l)) l += "'";
    lab.push_back(l);
    par.push_back(sub.parity(k));
  }
  SuperSpace sp(std::move(lab), std::move(par));
  TableBuilder tb(sp);
  for (int i = 0; i < a; ++i)
    for (int j = i; j < a; ++j) tb.set(i, j, ideal.upper(i, j));
  for (int k = 0; k < b; ++k) {
    for (int l = k; l < b; ++l) {
      Vec v;
      for (const auto& t : sub.upper(k, l).terms()) v.push_back_unchecked(t.index + a, t.value);
      tb.set(a + k, a + l, std::move(v));
    }
    for (int i = 0; i < a; ++i) tb.set(a + k, i, action[k].column(i));
  }
  AlgebraInfo info;
  info.name = name.empty() ? ideal.name() + "+" + sub.name() : name;
  info.provenance = "semidirect sum";
  return tb.build(std::move(info));
}

}  // namespace supergrade
