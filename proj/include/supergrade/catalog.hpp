#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supergrade/grassmann.hpp"
#include "supergrade/liesuper.hpp"

namespace supergrade {

enum class Family { gl, sl, psl, osp, spe, pe, psq, pq, W, S, CS, H, Hfull, osp4_2_alpha };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// Parameters, by family:
//   gl, sl   (m, n)   gl(m|n), sl(m|n)
//   psl      (n)      psl(n|n)
//   osp      (m, n)   osp(m|2n)
//   spe, pe, psq, pq, W, S, CS, H, Hfull   (n)
//   osp4_2_alpha      alpha
struct AlgebraId {
  Family family = Family::sl;
  std::vector<long> params;
  std::optional<Rational> alpha;

  static AlgebraId sl(long m, long n) { return {Family::sl, {m, n}, std::nullopt}; }
  static AlgebraId gl(long m, long n) { return {Family::gl, {m, n}, std::nullopt}; }
  static AlgebraId psl(long n) { return {Family::psl, {n}, std::nullopt}; }
  static AlgebraId osp(long m, long n) { return {Family::osp, {m, n}, std::nullopt}; }
  static AlgebraId of(Family f, long n) { return {f, {n}, std::nullopt}; }
  static AlgebraId osp42(const Rational& a) { return {Family::osp4_2_alpha, {}, a}; }
  // Accepts "sl(2|1)", "psl(2|2)", "osp(3|2)", "spe(3)", "W(3)", "osp(4|2;2)"
  // and the compact forms "spe3", "psl22", "osp12".
  static AlgebraId parse(const std::string& text);

  // Throws Error naming the violated constraint.
  void validate() const;
  std::string name() const;
  bool basic() const;
  bool cartan() const;
  long n() const { return params.empty() ? 0 : params.back(); }
};

// Natural-module realization: the algebra is span(basis) modulo span(null).
struct MatrixModel {
  SuperSpace v;
  std::vector<LinearMap> basis;
  std::vector<std::string> labels;
  std::vector<LinearMap> null;
};
LieSuperalgebra algebra_from_model(const MatrixModel& m, AlgebraInfo info);
// ad(M) as a map on the algebra of the model; M must normalize it.
LinearMap model_ad(const MatrixModel& m, const SuperSpace& g_space, const LinearMap& M);

struct Torus {
  std::vector<std::string> symbols;
  std::vector<LinearMap> ops;  // even derivations, diagonal on the basis
};

struct OuterGenerator {
  std::string label;
  LinearMap map;
  std::string degree_rule;
};
struct OuterGenerators {
  std::vector<OuterGenerator> generators;
  std::vector<LinearMap> maps() const;
  std::pair<int, int> out_dim() const;
};

struct CatalogEntry {
  AlgebraId id;
  LieSuperalgebra algebra;
  Torus torus;
  OuterGenerators out;
  std::optional<MatrixModel> model;
  // Cartan families: the embedding into W(n) and W itself.
  std::optional<WContext> w;
  std::vector<Vec> w_basis;
};

// Cached, immutable entries.
const CatalogEntry& catalog_entry(const AlgebraId& id);
LieSuperalgebra construct(const AlgebraId& id);
OuterGenerators outer_generators(const AlgebraId& id);

// The table-of-outer-derivations dimension, when the family has one.
std::optional<std::pair<int, int>> expected_out_dim(const AlgebraId& id);

// ---- roots ----

struct Root {
  std::vector<Rational> weight;
  int index;  // basis vector spanning the root space
  Parity parity;
};
struct RootDecomposition {
  AlgebraId id;
  LieSuperalgebra algebra;
  Torus torus;
  Subspace cartan;
  std::vector<Root> roots;
  std::vector<std::vector<Rational>> basis_weight;
  std::optional<int> find(const std::vector<Rational>& w) const;
};
RootDecomposition root_decomposition(const AlgebraId& id);

enum class NodeColor { white, gray, black };
const char* color_name(NodeColor c);

struct PositiveSystem {
  std::string name;
  std::vector<Rational> functional;
  // Simple roots in diagram order; derived from the functional when empty.
  std::vector<std::vector<Rational>> node_order;
};
// c(x_t) = k - t + 1 along the given symbol order.
PositiveSystem system_from_order(const RootDecomposition& rd, const std::vector<std::string>& order,
                                 const std::string& name = {});

struct DynkinDatum {
  PositiveSystem system;
  std::vector<int> simple;  // indices into rd.roots
  std::vector<std::vector<Rational>> cartan_matrix;
  std::vector<NodeColor> colors;
  std::vector<int> marks;
  int highest = -1;
  // Simple-root coefficients of every root (same order as rd.roots).
  std::vector<std::vector<long>> coefficients;
  std::vector<bool> positive;
};
DynkinDatum dynkin_datum(const RootDecomposition& rd, const PositiveSystem& ps);
std::string diagram_string(const DynkinDatum& dd);

// Grading with deg(α_i) = lambda_i, operator in the torus span.
Grading grading_from_lambda(const RootDecomposition& rd, const DynkinDatum& dd, const std::vector<long>& lambda);
Grading grade_by_crossing(const RootDecomposition& rd, const DynkinDatum& dd, int crossed);
// Weight of a derivation that is a torus eigenvector.
std::optional<std::vector<Rational>> derivation_weight(const Torus& t, const LinearMap& d);

// ---- strange and Cartan depth-one gradings ----

struct StrangeChoice {
  int crossed = 0;  // 0 = none, else node p of the sl(n) diagram
  int k = 0;        // spe only: degree of the highest weight vector of S^2
};
std::vector<StrangeChoice> strange_rows(const AlgebraId& id);
Grading strange_depth_one(const AlgebraId& id, const StrangeChoice& c);

struct CartanRow {
  int u_minus, u_zero, u_plus;  // dim U^{-1}, U^0, U^1
  std::string to_string() const;
};
std::vector<CartanRow> cartan_rows(const AlgebraId& id);
GradingTypeK cartan_row_type(const CartanRow& r);
Grading cartan_depth_one(const AlgebraId& id, const CartanRow& r);

// ---- the algebra of case II ----

// g = s⊗ξ ⊕ (s ⋉ F̃) ⊕ C∂_ξ inside s_max with n = 1. F̃ is spanned by the listed
// outer generators of s and, when with_euler is set, ξ∂_ξ.
struct GenerAlgebra {
  IntermediateAlgebra ia;
  GradedIntermediate graded;
};
GenerAlgebra gener_algebra(const AlgebraId& s, const std::vector<int>& out_indices, bool with_euler);

// Grading operator of a grading of s, as degrees of der(s) = s ⋉ out(s).
std::vector<int> der_degrees(const Grading& s_grading, const OuterGenerators& out);

}  // namespace supergrade
