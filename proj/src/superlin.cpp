#include "supergrade/superlin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>

namespace supergrade {

// ---- Vec ----

Vec Vec::unit(int i, const Rational& c) {
  Vec v;
  if (!is_zero(c)) v.terms_.push_back({i, c});
  return v;
}

Vec Vec::from_pairs(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  Vec v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().index == t.index) {
      v.terms_.back().value += t.value;
    } else {
      if (!v.terms_.empty() && is_zero(v.terms_.back().value)) v.terms_.pop_back();
      v.terms_.push_back(std::move(t));
    }
  }
  if (!v.terms_.empty() && is_zero(v.terms_.back().value)) v.terms_.pop_back();
  return v;
}

Vec Vec::from_dense(const std::vector<Rational>& dense) {
  Vec v;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i)
    if (!is_zero(dense[i])) v.terms_.push_back({i, dense[i]});
  return v;
}

Rational Vec::at(int i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, int k) { return t.index < k; });
  if (it != terms_.end() && it->index == i) return it->value;
  return 0;
}

void Vec::add_scaled(const Vec& x, const Rational& a) {
  if (is_zero(a) || x.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + x.terms_.size());
  auto i = terms_.begin();
  auto j = x.terms_.begin();
  while (i != terms_.end() || j != x.terms_.end()) {
    if (j == x.terms_.end() || (i != terms_.end() && i->index < j->index)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == terms_.end() || j->index < i->index) {
      Rational v = a * j->value;
      out.push_back({j->index, std::move(v)});
      ++j;
    } else {
      Rational v = i->value + a * j->value;
      if (!is_zero(v)) out.push_back({i->index, std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Vec& Vec::operator*=(const Rational& a) {
  if (is_zero(a)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.value *= a;
  return *this;
}

std::vector<Rational> Vec::dense(int n) const {
  std::vector<Rational> d(n);
  for (const auto& t : terms_) d[t.index] = t.value;
  return d;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  r.add_scaled(b, 1);
  return r;
}
Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  r.add_scaled(b, -1);
  return r;
}
Vec operator*(const Rational& a, const Vec& v) {
  Vec r = v;
  r *= a;
  return r;
}
bool operator==(const Vec& a, const Vec& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].index != b.terms_[k].index || a.terms_[k].value != b.terms_[k].value) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& t : v.terms()) {
    if (!first) os << ", ";
    first = false;
    os << t.index << ":" << to_string(t.value);
  }
  os << "}";
  return os.str();
}

// ---- SuperSpace ----

SuperSpace::SuperSpace() : d_(std::make_shared<Data>()) {}

SuperSpace::SuperSpace(std::vector<std::string> labels, std::vector<Parity> parities) {
  if (labels.size() != parities.size()) throw Error("label/parity count mismatch");
  auto d = std::make_shared<Data>();
  d->labels = std::move(labels);
  d->parities = std::move(parities);
  for (int i = 0; i < static_cast<int>(d->labels.size()); ++i) {
    if (!d->index.emplace(d->labels[i], i).second) throw Error("duplicate basis label '" + d->labels[i] + "'");
    if (!is_odd(d->parities[i])) ++d->even;
  }
  d_ = std::move(d);
}

SuperSpace SuperSpace::standard(int even, int odd) {
  std::vector<std::string> l;
  std::vector<Parity> p;
  for (int i = 0; i < even; ++i) {
    l.push_back("e" + std::to_string(i));
    p.push_back(Parity::Even);
  }
  for (int i = 0; i < odd; ++i) {
    l.push_back("o" + std::to_string(i));
    p.push_back(Parity::Odd);
  }
  return SuperSpace(std::move(l), std::move(p));
}

std::optional<int> SuperSpace::index_of(const std::string& label) const {
  auto it = d_->index.find(label);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::optional<Parity> SuperSpace::parity_of(const Vec& v) const {
  if (v.empty()) return std::nullopt;
  Parity p = parity(v.terms().front().index);
  for (const auto& t : v.terms())
    if (parity(t.index) != p) return std::nullopt;
  return p;
}

bool operator==(const SuperSpace& a, const SuperSpace& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->parities == b.d_->parities && a.d_->labels == b.d_->labels;
}

std::string dim_string(std::pair<int, int> sd) {
  return "(" + std::to_string(sd.first) + "|" + std::to_string(sd.second) + ")";
}

SuperSpace parity_shift(const SuperSpace& v) {
  std::vector<Parity> p = v.parities();
  for (auto& x : p) x = flip(x);
  return SuperSpace(v.labels(), std::move(p));
}

SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
  std::vector<std::string> l;
  std::vector<Parity> p;
  l.reserve(static_cast<std::size_t>(v.dim()) * w.dim());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      l.push_back(v.label(i) + "*" + w.label(j));
      p.push_back(v.parity(i) + w.parity(j));
    }
  return SuperSpace(std::move(l), std::move(p));
}

// ---- LinearMap ----

LinearMap::LinearMap(SuperSpace domain, SuperSpace codomain, Parity parity)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity), cols_(domain_.dim()) {}

LinearMap::LinearMap(SuperSpace domain, SuperSpace codomain, Parity parity, std::vector<Vec> columns)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity), cols_(std::move(columns)) {
  if (static_cast<int>(cols_.size()) != domain_.dim()) throw Error("column count does not match domain");
}

LinearMap LinearMap::identity(const SuperSpace& v) {
  LinearMap f(v, v, Parity::Even);
  for (int i = 0; i < v.dim(); ++i) f.cols_[i] = Vec::unit(i);
  return f;
}

LinearMap LinearMap::zero(const SuperSpace& domain, const SuperSpace& codomain, Parity p) {
  return LinearMap(domain, codomain, p);
}

Vec LinearMap::apply(const Vec& x) const {
  std::vector<Term> acc;
  for (const auto& t : x.terms()) {
    if (t.index >= domain_.dim()) throw Error("vector index outside map domain");
    for (const auto& s : cols_[t.index].terms()) {
      Rational v = t.value * s.value;
      acc.push_back({s.index, std::move(v)});
    }
  }
  return Vec::from_pairs(std::move(acc));
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.codomain_.dim() != domain_.dim()) throw Error("compose: dimension mismatch");
  LinearMap r(inner.domain_, codomain_, parity_ + inner.parity_);
  for (int j = 0; j < inner.domain_.dim(); ++j) r.cols_[j] = apply(inner.cols_[j]);
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  LinearMap r = *this;
  for (int j = 0; j < domain_.dim(); ++j) r.cols_[j].add_scaled(o.cols_[j], 1);
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  LinearMap r = *this;
  for (int j = 0; j < domain_.dim(); ++j) r.cols_[j].add_scaled(o.cols_[j], -1);
  return r;
}

LinearMap LinearMap::scaled(const Rational& a) const {
  LinearMap r = *this;
  for (auto& c : r.cols_) c *= a;
  return r;
}

LinearMap LinearMap::supercommutator(const LinearMap& o) const {
  LinearMap ab = compose(o);
  LinearMap ba = o.compose(*this);
  int s = koszul(parity_, o.parity_);
  for (int j = 0; j < domain_.dim(); ++j) ab.cols_[j].add_scaled(ba.cols_[j], -s);
  return ab;
}

bool LinearMap::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool LinearMap::respects_parity() const {
  for (int j = 0; j < domain_.dim(); ++j)
    for (const auto& t : cols_[j].terms())
      if (codomain_.parity(t.index) != domain_.parity(j) + parity_) return false;
  return true;
}

std::vector<Vec> LinearMap::rows() const {
  std::vector<std::vector<Term>> r(codomain_.dim());
  for (int j = 0; j < domain_.dim(); ++j)
    for (const auto& t : cols_[j].terms()) r[t.index].push_back({j, t.value});
  std::vector<Vec> out;
  out.reserve(r.size());
  for (auto& terms : r) out.push_back(Vec::from_pairs(std::move(terms)));
  return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.parity_ == b.parity_ && a.domain_.dim() == b.domain_.dim() && a.codomain_.dim() == b.codomain_.dim() &&
         a.cols_ == b.cols_;
}

// ---- Echelon ----

Echelon::Echelon(int ncols) : n_(ncols), pivot_row_(ncols, -1), scratch_(ncols), touched_(ncols, 0) {}

Vec Echelon::reduce_impl(const Vec& v, bool stop_at_new_pivot) const {
  if (v.empty()) return v;
  // Dense sweep once the stored rows are more than half full; otherwise a
  // heap of touched columns keeps the work proportional to fill-in.
  std::size_t stored = 0;
  for (const auto& r : rows_) stored += r.size();
  bool dense = !rows_.empty() && 2 * stored > rows_.size() * static_cast<std::size_t>(n_);

  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  for (const auto& t : v.terms()) {
    if (t.index < 0 || t.index >= n_) throw Error("vector index outside ambient dimension");
    scratch_[t.index] = t.value;
    touched_[t.index] = 1;
    if (!dense) heap.push(t.index);
  }
  std::vector<int> cols;  // touched columns, in case of dense sweep
  if (dense) cols.reserve(n_);

  std::vector<Term> out;
  auto eliminate = [&](int c) {
    const Vec& row = rows_[pivot_row_[c]];
    Rational f = scratch_[c];
    for (const auto& t : row.terms()) {
      if (t.index == c) continue;
      if (!touched_[t.index]) {
        touched_[t.index] = 1;
        if (!dense) heap.push(t.index);
      }
      scratch_[t.index] -= f * t.value;
    }
    scratch_[c] = 0;
  };

  if (dense) {
    for (int c = v.leading(); c < n_; ++c) {
      if (!touched_[c]) continue;
      touched_[c] = 0;
      if (is_zero(scratch_[c])) continue;
      if (pivot_row_[c] >= 0) {
        eliminate(c);
      } else {
        out.push_back({c, scratch_[c]});
        scratch_[c] = 0;
        if (stop_at_new_pivot) {
          for (int d = c + 1; d < n_; ++d) {
            if (!touched_[d]) continue;
            touched_[d] = 0;
            if (!is_zero(scratch_[d])) out.push_back({d, scratch_[d]});
            scratch_[d] = 0;
          }
          break;
        }
      }
    }
  } else {
    while (!heap.empty()) {
      int c = heap.top();
      heap.pop();
      touched_[c] = 0;
      if (is_zero(scratch_[c])) continue;
      if (pivot_row_[c] >= 0) {
        eliminate(c);
      } else {
        out.push_back({c, scratch_[c]});
        scratch_[c] = 0;
        if (stop_at_new_pivot) {
          while (!heap.empty()) {
            int d = heap.top();
            heap.pop();
            touched_[d] = 0;
            if (!is_zero(scratch_[d])) out.push_back({d, scratch_[d]});
            scratch_[d] = 0;
          }
        }
      }
    }
  }
  Vec r;
  for (auto& t : out) r.push_back_unchecked(t.index, std::move(t.value));
  return r;
}

Vec Echelon::reduce(const Vec& v) const { return reduce_impl(v, false); }

bool Echelon::add(const Vec& row) {
  if (full()) return false;
  Vec r = reduce_impl(row, true);
  if (r.empty()) return false;
  Rational inv = 1 / r.terms().front().value;
  r *= inv;
  pivot_row_[r.leading()] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  reduced_ = false;
  return true;
}

std::vector<Vec> Echelon::rref() {
  std::vector<int> piv;
  for (int c = 0; c < n_; ++c)
    if (pivot_row_[c] >= 0) piv.push_back(c);
  if (!reduced_) {
    // Back-substitute from the last pivot upwards.
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      Vec& row = rows_[pivot_row_[*it]];
      Vec acc = row;
      for (const auto& t : row.terms()) {
        if (t.index == *it || pivot_row_[t.index] < 0) continue;
        acc.add_scaled(rows_[pivot_row_[t.index]], -t.value);
      }
      row = std::move(acc);
    }
    reduced_ = true;
  }
  std::vector<Vec> out;
  out.reserve(piv.size());
  for (int c : piv) out.push_back(rows_[pivot_row_[c]]);
  return out;
}

std::vector<Vec> Echelon::null_space() {
  std::vector<Vec> rr = rref();
  std::vector<std::vector<Term>> acc(n_);
  for (const auto& row : rr) {
    int p = row.leading();
    for (const auto& t : row.terms())
      if (t.index != p) acc[t.index].push_back({p, -t.value});
  }
  std::vector<Vec> out;
  for (int c = 0; c < n_; ++c) {
    if (pivot_row_[c] >= 0) continue;
    acc[c].push_back({c, 1});
    out.push_back(Vec::from_pairs(std::move(acc[c])));
  }
  return out;
}

// ---- Subspace ----

Subspace Subspace::zero(const SuperSpace& ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(const SuperSpace& ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (int i = 0; i < ambient.dim(); ++i) {
    s.rows_.push_back(Vec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const SuperSpace& ambient, const std::vector<Vec>& vectors) {
  Echelon e(ambient.dim());
  for (const auto& v : vectors) {
    e.add(v);
    if (e.full()) break;
  }
  return from_rref(ambient, e.rref());
}

Subspace Subspace::from_rref(const SuperSpace& ambient, std::vector<Vec> rows) {
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = std::move(rows);
  for (const auto& r : s.rows_) s.pivots_.push_back(r.leading());
  return s;
}

std::pair<int, int> Subspace::sdim() const {
  int even = 0;
  for (int p : pivots_)
    if (!is_odd(ambient_.parity(p))) ++even;
  return {even, dim() - even};
}

bool Subspace::is_homogeneous() const {
  for (const auto& r : rows_)
    if (!ambient_.parity_of(r)) return false;
  return true;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (const auto& t : v.terms()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), t.index);
    if (it != pivots_.end() && *it == t.index) r.add_scaled(rows_[it - pivots_.begin()], -t.value);
  }
  return r;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<Rational> Subspace::coordinates(const Vec& v) const {
  std::vector<Rational> c(dim());
  for (int r = 0; r < dim(); ++r) c[r] = v.at(pivots_[r]);
  return c;
}

Vec Subspace::coordinates_vec(const Vec& v) const {
  Vec c;
  for (const auto& t : v.terms()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), t.index);
    if (it != pivots_.end() && *it == t.index) c.push_back_unchecked(static_cast<int>(it - pivots_.begin()), t.value);
  }
  return c;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> f;
  std::size_t k = 0;
  for (int c = 0; c < ambient_.dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    f.push_back(c);
  }
  return f;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_.dim() == b.ambient_.dim() && a.rows_ == b.rows_; }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient().dim() != b.ambient().dim()) throw Error("sum: ambient mismatch");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient().dim() != b.ambient().dim()) throw Error("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient());
  int n = a.ambient().dim();
  // Zassenhaus: rows (a, a) and (b, 0); rows with zero left half span A ∩ B.
  Echelon e(2 * n);
  for (const auto& v : a.basis()) {
    Vec w = v;
    for (const auto& t : v.terms()) w.push_back_unchecked(t.index + n, t.value);
    e.add(w);
  }
  for (const auto& v : b.basis()) e.add(v);
  std::vector<Vec> out;
  for (const auto& r : e.rref()) {
    if (r.leading() < n) continue;
    Vec w;
    for (const auto& t : r.terms()) w.push_back_unchecked(t.index - n, t.value);
    out.push_back(std::move(w));
  }
  return Subspace::from_rref(a.ambient(), std::move(out));
}

Subspace kernel(const LinearMap& f) {
  Echelon e(f.domain().dim());
  for (const auto& r : f.rows()) {
    e.add(r);
    if (e.full()) break;
  }
  return Subspace::span(f.domain(), e.null_space());
}

Subspace image(const LinearMap& f) { return Subspace::span(f.codomain(), f.columns()); }

Subspace image(const LinearMap& f, const Subspace& s) {
  std::vector<Vec> v;
  for (const auto& b : s.basis()) v.push_back(f.apply(b));
  return Subspace::span(f.codomain(), v);
}

Subspace preimage(const LinearMap& f, const Subspace& target) {
  Quotient q = quotient(f.codomain(), target);
  return kernel(q.projection.compose(f));
}

Quotient quotient(const SuperSpace& ambient, const Subspace& sub) {
  if (sub.ambient().dim() != ambient.dim()) throw Error("quotient: subspace not contained in ambient");
  std::vector<int> fc = sub.free_columns();
  std::vector<int> pos(ambient.dim(), -1);
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (int k = 0; k < static_cast<int>(fc.size()); ++k) {
    pos[fc[k]] = k;
    labels.push_back(ambient.label(fc[k]));
    par.push_back(ambient.parity(fc[k]));
  }
  SuperSpace qs(std::move(labels), std::move(par));
  LinearMap p(ambient, qs, Parity::Even);
  for (int j = 0; j < ambient.dim(); ++j) {
    Vec r = sub.reduce(Vec::unit(j));
    Vec w;
    for (const auto& t : r.terms()) w.push_back_unchecked(pos[t.index], t.value);
    p.set_column(j, std::move(w));
  }
  return {qs, p, fc};
}

std::vector<Vec> homogeneous_basis(const Subspace& s, Parity p) {
  std::vector<Vec> out;
  for (const auto& r : s.basis())
    if (s.ambient().parity(r.leading()) == p) out.push_back(r);
  return out;
}

// ---- CoordinateSystem ----

CoordinateSystem::CoordinateSystem(const SuperSpace& ambient, std::vector<Vec> basis) : basis_(std::move(basis)) {
  int n = ambient.dim();
  int k = size();
  Echelon e(n + k);
  for (int i = 0; i < k; ++i) {
    Vec w = basis_[i];
    w.push_back_unchecked(n + i, 1);
    e.add(w);
  }
  std::vector<Vec> left;
  for (const auto& r : e.rref()) {
    if (r.leading() >= n) throw Error("coordinate basis is linearly dependent");
    Vec a, t;
    for (const auto& term : r.terms()) {
      if (term.index < n)
        a.push_back_unchecked(term.index, term.value);
      else
        t.push_back_unchecked(term.index - n, term.value);
    }
    left.push_back(std::move(a));
    transform_.push_back(std::move(t));
  }
  span_ = Subspace::from_rref(ambient, std::move(left));
}

Vec CoordinateSystem::coordinates(const Vec& v) const {
  if (!span_.contains(v)) throw Error("vector outside coordinate span");
  Vec c;
  const auto& piv = span_.pivots();
  for (const auto& t : v.terms()) {
    auto it = std::lower_bound(piv.begin(), piv.end(), t.index);
    if (it != piv.end() && *it == t.index) c.add_scaled(transform_[it - piv.begin()], t.value);
  }
  return c;
}

Vec CoordinateSystem::combine(const Vec& coords) const {
  Vec r;
  for (const auto& t : coords.terms()) r.add_scaled(basis_[t.index], t.value);
  return r;
}

// ---- dense / charpoly ----

DenseMatrix DenseMatrix::from_map(const LinearMap& f) {
  DenseMatrix m(f.codomain().dim(), f.domain().dim());
  for (int j = 0; j < f.domain().dim(); ++j)
    for (const auto& t : f.column(j).terms()) m(t.index, j) = t.value;
  return m;
}

std::vector<Rational> charpoly(const DenseMatrix& a) {
  int n = a.rows();
  if (a.cols() != n) throw Error("charpoly: matrix not square");
  DenseMatrix h = a;
  // Hessenberg reduction by similarity.
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      for (int j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (int j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Rational piv = h(m, m - 1);
    for (int r = m + 1; r < n; ++r) {
      if (is_zero(h(r, m - 1))) continue;
      Rational u = h(r, m - 1) / piv;
      for (int j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (int j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (int m = 0; m < n; ++m) {
    std::vector<Rational> next(m + 2);
    for (int k = 0; k <= m; ++k) {
      next[k + 1] += p[m][k];
      next[k] -= h(m, m) * p[m][k];
    }
    Rational prod = 1;
    for (int i = m - 1; i >= 0; --i) {
      prod *= h(i + 1, i);
      if (is_zero(prod)) break;
      Rational c = prod * h(i, m);
      if (is_zero(c)) continue;
      for (int k = 0; k <= i; ++k) next[k] -= c * p[i][k];
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

std::vector<long> integer_roots(std::vector<Rational> p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  if (p.empty()) throw Error("integer_roots: zero polynomial");
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  std::vector<mpz_class> a;
  for (const auto& c : p) {
    mpq_class s = c * l;
    a.push_back(s.get_num());
  }
  std::vector<long> roots;
  while (a.size() > 1 && a[0] == 0) {
    roots.push_back(0);
    a.erase(a.begin());
  }
  auto bound = [&]() {
    // Fujiwara bound on root magnitudes.
    int n = static_cast<int>(a.size()) - 1;
    double lead = std::fabs(a[n].get_d());
    double b = 0;
    for (int i = 1; i <= n; ++i) {
      double r = std::fabs(a[n - i].get_d()) / lead;
      if (i == n) r /= 2;
      b = std::max(b, std::pow(r, 1.0 / i));
    }
    return static_cast<long>(std::ceil(2 * b)) + 1;
  };
  auto eval = [&](long r) {
    mpz_class acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + *it;
    return acc;
  };
  long lim = a.size() > 1 ? bound() : 0;
  for (long m = 1; m <= lim && a.size() > 1; ++m) {
    for (long r : {m, -m}) {
      while (a.size() > 1 && mpz_divisible_ui_p(a[0].get_mpz_t(), static_cast<unsigned long>(m)) && eval(r) == 0) {
        // Synthetic division by (t - r).
        std::size_t n = a.size() - 1;
        std::vector<mpz_class> q(n);
        mpz_class c = a[n];
        q[n - 1] = c;
        for (std::size_t k = n - 1; k-- > 0;) {
          c = a[k + 1] + r * c;
          q[k] = c;
        }
        a = std::move(q);
        roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace supergrade
