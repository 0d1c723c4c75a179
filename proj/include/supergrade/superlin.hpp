#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supergrade/rational.hpp"

namespace supergrade {

struct Term {
  int index;
  Rational value;
};

// Sparse vector: terms sorted by index, no stored zeros.
class Vec {
 public:
  Vec() = default;
  static Vec unit(int i, const Rational& c = 1);
  // Sorts and combines duplicates.
  static Vec from_pairs(std::vector<Term> terms);
  static Vec from_dense(const std::vector<Rational>& dense);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational at(int i) const;
  int leading() const { return terms_.empty() ? -1 : terms_.front().index; }
  int max_index() const { return terms_.empty() ? -1 : terms_.back().index; }

  // this += a * x
  void add_scaled(const Vec& x, const Rational& a);
  Vec& operator*=(const Rational& a);
  void push_back_unchecked(int i, Rational v) { terms_.push_back({i, std::move(v)}); }
  std::vector<Rational> dense(int n) const;

  friend Vec operator+(const Vec& a, const Vec& b);
  friend Vec operator-(const Vec& a, const Vec& b);
  friend Vec operator*(const Rational& a, const Vec& v);
  friend bool operator==(const Vec& a, const Vec& b);

 private:
  std::vector<Term> terms_;
};

std::string to_string(const Vec& v);

class SuperSpace {
 public:
  SuperSpace();
  SuperSpace(std::vector<std::string> labels, std::vector<Parity> parities);
  // Even basis e0..e{p-1}, then odd basis o0..o{q-1}.
  static SuperSpace standard(int even, int odd);

  int dim() const { return static_cast<int>(d_->parities.size()); }
  std::pair<int, int> sdim() const { return {d_->even, dim() - d_->even}; }
  Parity parity(int i) const { return d_->parities[i]; }
  const std::string& label(int i) const { return d_->labels[i]; }
  const std::vector<Parity>& parities() const { return d_->parities; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  std::optional<int> index_of(const std::string& label) const;

  // Parity of a homogeneous vector; nullopt for zero or mixed vectors.
  std::optional<Parity> parity_of(const Vec& v) const;

  bool same_as(const SuperSpace& o) const { return d_ == o.d_; }
  friend bool operator==(const SuperSpace& a, const SuperSpace& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<Parity> parities;
    std::unordered_map<std::string, int> index;
    int even = 0;
  };
  std::shared_ptr<const Data> d_;
};

std::string dim_string(std::pair<int, int> sd);

SuperSpace parity_shift(const SuperSpace& v);
// Basis ordered pairs (i, j), row-major over (v, w).
SuperSpace tensor(const SuperSpace& v, const SuperSpace& w);

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(SuperSpace domain, SuperSpace codomain, Parity parity);
  LinearMap(SuperSpace domain, SuperSpace codomain, Parity parity, std::vector<Vec> columns);
  static LinearMap identity(const SuperSpace& v);
  static LinearMap zero(const SuperSpace& domain, const SuperSpace& codomain, Parity p = Parity::Even);

  const SuperSpace& domain() const { return domain_; }
  const SuperSpace& codomain() const { return codomain_; }
  Parity parity() const { return parity_; }
  const Vec& column(int j) const { return cols_[j]; }
  const std::vector<Vec>& columns() const { return cols_; }
  void set_column(int j, Vec v) { cols_[j] = std::move(v); }
  Rational entry(int i, int j) const { return cols_[j].at(i); }

  Vec apply(const Vec& x) const;
  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Rational& a) const;
  // Super commutator [A,B] = AB - (-1)^{|A||B|} BA (endomorphisms only).
  LinearMap supercommutator(const LinearMap& o) const;
  bool is_zero() const;
  // Entrywise parity check.
  bool respects_parity() const;
  // Rows as sparse vectors over the domain.
  std::vector<Vec> rows() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  SuperSpace domain_, codomain_;
  Parity parity_ = Parity::Even;
  std::vector<Vec> cols_;
};

// Incremental row echelon form. Rows are added one at a time and kept
// forward-reduced (unit leading entry); finalize() back-substitutes to RREF.
class Echelon {
 public:
  explicit Echelon(int ncols);
  int ncols() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Returns true when the row increased the rank.
  bool add(const Vec& row);
  // Reduces v against the current rows; result has no entry at a pivot.
  Vec reduce(const Vec& v) const;
  bool full() const { return rank() == n_; }
  // Back-substitutes and returns RREF rows sorted by pivot.
  std::vector<Vec> rref();
  // Null space of the row system, one vector per free column.
  std::vector<Vec> null_space();

 private:
  Vec reduce_impl(const Vec& v, bool stop_at_new_pivot) const;
  int n_;
  std::vector<int> pivot_row_;  // column -> row index or -1
  std::vector<Vec> rows_;
  bool reduced_ = false;
  mutable std::vector<Rational> scratch_;
  mutable std::vector<char> touched_;
};

class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const SuperSpace& ambient);
  static Subspace full(const SuperSpace& ambient);
  static Subspace span(const SuperSpace& ambient, const std::vector<Vec>& vectors);
  // Rows must already be in RREF.
  static Subspace from_rref(const SuperSpace& ambient, std::vector<Vec> rows);

  const SuperSpace& ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  // Parity split, counted by pivot parity (exact for homogeneous subspaces).
  std::pair<int, int> sdim() const;
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_homogeneous() const;

  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& o) const;
  // Coordinates in the RREF basis; requires contains(v).
  std::vector<Rational> coordinates(const Vec& v) const;
  Vec coordinates_vec(const Vec& v) const;
  // Free (non-pivot) columns; a basis of a complement.
  std::vector<int> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  SuperSpace ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
// Image of a subspace under f.
Subspace image(const LinearMap& f, const Subspace& s);
// Preimage f^{-1}(target).
Subspace preimage(const LinearMap& f, const Subspace& target);

struct Quotient {
  SuperSpace space;
  LinearMap projection;
  std::vector<int> representatives;  // ambient columns used as quotient basis
};
Quotient quotient(const SuperSpace& ambient, const Subspace& sub);

// Even parts and odd parts of a homogeneous subspace, as vector lists.
std::vector<Vec> homogeneous_basis(const Subspace& s, Parity p);

// Expresses vectors in a fixed independent (not necessarily RREF) basis.
class CoordinateSystem {
 public:
  CoordinateSystem() = default;
  CoordinateSystem(const SuperSpace& ambient, std::vector<Vec> basis);
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }
  // Throws if v lies outside the span.
  Vec coordinates(const Vec& v) const;
  Vec combine(const Vec& coords) const;

 private:
  std::vector<Vec> basis_;
  Subspace span_;
  std::vector<Vec> transform_;  // RREF row r = sum_j transform_[r][j] basis_j
};

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static DenseMatrix from_map(const LinearMap& f);
  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

// Characteristic polynomial det(tI - A), coefficients low degree first.
std::vector<Rational> charpoly(const DenseMatrix& a);
// Integer roots of p with multiplicity, ascending.
std::vector<long> integer_roots(std::vector<Rational> p);

}  // namespace supergrade
