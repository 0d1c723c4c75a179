#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supergrade/superlin.hpp"

namespace supergrade {

struct AlgebraInfo {
  std::string name;
  std::string family;  // catalog family, empty for ad hoc algebras
  std::vector<long> params;
  std::optional<Rational> alpha;
  std::string provenance;
};

class LieSuperalgebra {
 public:
  LieSuperalgebra();
  // upper[tri(i,j)] = [x_i, x_j] for i <= j.
  LieSuperalgebra(SuperSpace space, std::vector<Vec> upper, AlgebraInfo info);

  const SuperSpace& space() const { return d_->space; }
  int dim() const { return d_->space.dim(); }
  std::pair<int, int> sdim() const { return d_->space.sdim(); }
  Parity parity(int i) const { return d_->space.parity(i); }
  const AlgebraInfo& info() const { return d_->info; }
  const std::string& name() const { return d_->info.name; }
  LieSuperalgebra renamed(const std::string& name, const std::string& provenance = {}) const;
  LieSuperalgebra with_info(AlgebraInfo info) const;

  // Stored entry [x_i, x_j], i <= j.
  const Vec& upper(int i, int j) const { return d_->upper[tri(i, j)]; }
  // [x_i, x_j] for any order.
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  LinearMap ad(const Vec& x) const;
  LinearMap ad_basis(int i) const { return ad(Vec::unit(i)); }
  // Index into the upper-triangular table.
  int tri(int i, int j) const { return i * dim() - i * (i - 1) / 2 + (j - i); }
  // Parity additivity of every stored constant.
  bool parity_additive() const;
  bool is_abelian() const;

 private:
  struct Data {
    SuperSpace space;
    std::vector<Vec> upper;
    AlgebraInfo info;
  };
  std::shared_ptr<const Data> d_;
};

// Accumulates brackets [x_i, x_j] in either order and fills in the other
// half by super-antisymmetry.
class TableBuilder {
 public:
  explicit TableBuilder(SuperSpace space);
  const SuperSpace& space() const { return space_; }
  void set(int i, int j, Vec v);
  LieSuperalgebra build(AlgebraInfo info) const;

 private:
  SuperSpace space_;
  std::vector<Vec> upper_;
  int n_;
};

LieSuperalgebra abelian(const SuperSpace& space, const std::string& name = "abelian");
// Structure constants computed from a bracket callback on basis indices.
LieSuperalgebra from_brackets(const SuperSpace& space, const std::function<Vec(int, int)>& br, AlgebraInfo info);

struct JacobiViolation {
  int i, j, k;
  Vec defect;
};
struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool parity_ok = true;
  bool ok() const { return violations.empty() && parity_ok; }
};
JacobiReport check_jacobi(const LieSuperalgebra& g);

// ---- linear maps on g as vectors in gl(g) ----

// Basis E_{k,l} at index k*dim+l with parity |k|+|l|.
SuperSpace endomorphism_space(const SuperSpace& v);
Vec flatten(const LinearMap& f);
LinearMap unflatten(const SuperSpace& v, const Vec& flat, Parity p);
// Parity of a homogeneous endomorphism vector.
Parity endomorphism_parity(const SuperSpace& v, const Vec& flat);

bool is_derivation(const LieSuperalgebra& g, const LinearMap& d);
// All derivations, as a homogeneous subspace of endomorphism_space(g.space()).
Subspace derivations(const LieSuperalgebra& g);
Subspace inner_derivations(const LieSuperalgebra& g);

struct DerivationSplit {
  Subspace full;
  Subspace inner;
  Subspace outer_complement;
  std::pair<int, int> out_dim;
  bool canonical = false;
};
// canonical_out, when given, must consist of derivations complementary to ad(g).
DerivationSplit inner_outer_split(const LieSuperalgebra& g, const std::optional<std::vector<LinearMap>>& canonical_out = std::nullopt);

// ---- subalgebras, ideals ----

Subspace bracket_span(const LieSuperalgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s);
bool is_ideal(const LieSuperalgebra& g, const Subspace& s);
Subspace ideal_generated(const LieSuperalgebra& g, const Subspace& s);
Subspace subalgebra_generated(const LieSuperalgebra& g, const std::vector<Vec>& gens);
Subspace center(const LieSuperalgebra& g);
Subspace derived_subalgebra(const LieSuperalgebra& g);
// Derived series of a subalgebra reaches zero.
bool is_solvable(const LieSuperalgebra& g, const Subspace& s);
// Homogeneous basis of s with even vectors first.
std::vector<Vec> graded_basis(const Subspace& s);

// Subalgebra on the given homogeneous independent basis (closure is checked).
// When the basis spans g this is a change of basis.
LieSuperalgebra restrict_to(const LieSuperalgebra& g, const std::vector<Vec>& basis,
                            const std::vector<std::string>& labels = {}, const std::string& name = {});
LieSuperalgebra quotient_algebra(const LieSuperalgebra& g, const Subspace& ideal, const std::string& name = {});

// Closed span of homogeneous linear maps with the supercommutator.
LieSuperalgebra algebra_of_maps(const std::vector<LinearMap>& maps, const std::vector<std::string>& labels,
                                const std::string& name);

// ideal ⋉ sub, where action[k] is the derivation of ideal given by sub basis k.
// Result basis: ideal basis then sub basis.
LieSuperalgebra semidirect_sum(const LieSuperalgebra& ideal, const LieSuperalgebra& sub,
                               const std::vector<LinearMap>& action, const std::string& name = {});

// ---- gradings ----

class Grading {
 public:
  Grading() = default;
  Grading(LieSuperalgebra g, std::map<int, Subspace> pieces, std::optional<std::vector<int>> degree = std::nullopt,
          std::optional<LinearMap> op = std::nullopt);
  // Basis vector i has degree degree[i].
  static Grading from_degrees(const LieSuperalgebra& g, const std::vector<int>& degree);
  static Grading trivial(const LieSuperalgebra& g);

  const LieSuperalgebra& algebra() const { return g_; }
  const std::map<int, Subspace>& pieces() const { return pieces_; }
  // Zero subspace when p is unoccupied.
  Subspace piece(int p) const;
  std::pair<int, int> sdim(int p) const { return piece(p).sdim(); }
  const std::optional<std::vector<int>>& degree() const { return degree_; }
  // Grading operator, built from the pieces when not stored.
  LinearMap operator_map() const;
  int min_degree() const;
  int max_degree() const;
  // ⊕_{i >= p} g^i
  Subspace at_least(int p) const;
  // Degree of a homogeneous vector, nullopt if it mixes degrees.
  std::optional<int> degree_of(const Vec& v) const;
  // Eigenvalue of ad(D) on a derivation, nullopt if not homogeneous.
  std::optional<int> derivation_degree(const LinearMap& der) const;

 private:
  LieSuperalgebra g_;
  std::map<int, Subspace> pieces_;
  std::optional<std::vector<int>> degree_;
  std::optional<LinearMap> op_;
};

// Pieces are independent, exhaust g, and satisfy [g^p, g^q] ⊆ g^{p+q}.
bool is_compatible(const Grading& G, std::string* why = nullptr);
Grading grading_from_operator(const LieSuperalgebra& g, const LinearMap& d);
// Induced grading on a graded subalgebra (basis given in g coordinates).
Grading restrict_grading(const Grading& G, const LieSuperalgebra& sub, const std::vector<Vec>& sub_basis);

bool is_transitive(const Grading& G);
// Burnside test: the associative envelope of the maps is all of End(M).
bool is_irreducible_Gtype(const std::vector<LinearMap>& action);
// ad of g^0 restricted to g^{-1}.
std::vector<LinearMap> isotropy_action(const Grading& G);
bool is_nonlinear(const Grading& G);
std::pair<int, int> depth_height(const Grading& G);

struct FiltrationResult {
  LieSuperalgebra algebra;
  std::map<int, Subspace> steps;  // p >= -1
  bool terminated = false;
  Subspace residual;
};
FiltrationResult weisfeiler_filtration(const LieSuperalgebra& L, const Subspace& L0, int max_steps = 64);

struct AssociatedGraded {
  LieSuperalgebra algebra;
  Grading grading;
  std::vector<Vec> adapted_basis;  // in L coordinates, ordered by degree
  std::vector<int> degrees;
};
AssociatedGraded associated_graded(const FiltrationResult& F);

}  // namespace supergrade
