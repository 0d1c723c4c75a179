#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergrade/liesuper.hpp"

namespace supergrade {

// Λ(n) on monomials ξ^S, S ⊆ {0..n-1} stored as bitmasks, ordered by
// (|S|, lexicographic).
class GrassmannContext {
 public:
  GrassmannContext() = default;
  explicit GrassmannContext(int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(masks_.size()); }
  const SuperSpace& space() const { return space_; }
  const Subspace& lambda_plus() const { return plus_; }
  unsigned mask(int i) const { return masks_[i]; }
  int index(unsigned mask) const { return index_[mask]; }
  int generator(int a) const { return index_[1u << a]; }
  int top() const { return dim() - 1; }
  const std::string& label(int i) const { return space_.label(i); }

  // ξ^A ξ^B = sign ξ^{A∪B}; sign 0 when A∩B ≠ ∅.
  std::pair<int, int> multiply_basis(int a, int b) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  // Left derivative ∂/∂ξ^a of a basis monomial.
  std::pair<int, int> derive_basis(int a, int mono) const;
  Vec derive(int a, const Vec& f) const;

 private:
  int n_ = 0;
  std::vector<unsigned> masks_;
  std::vector<int> index_;
  SuperSpace space_;
  Subspace plus_;
};

GrassmannContext build_lambda(int n);

struct WContext {
  GrassmannContext ctx;
  LieSuperalgebra algebra;     // basis ξ^S∂_a at index mono*n + a
  Subspace constant_fields;    // ∂_V
  Subspace positive_part;      // Λ⁺∂_V
  int index(int mono, int a) const { return mono * ctx.n() + a; }
  // The field as an operator on Λ.
  LinearMap action(const Vec& field) const;
  // Coefficient functions f_a of a field Σ f_a ∂_a.
  std::vector<Vec> coefficients(const Vec& field) const;
  Vec field(const std::vector<Vec>& coeffs) const;
  // Σ (-1)^{p(f_a)} ∂_a f_a
  Vec divergence(const Vec& field) const;
  Vec euler() const;
};

WContext build_W(int n);

struct GradingTypeK {
  std::vector<std::pair<int, int>> spectrum;  // (k_i, n_i), k strictly increasing
  int n() const;
  // Degree of each generator in order.
  std::vector<int> generator_degrees() const;
  std::string to_string() const;
};
GradingTypeK type_k(std::vector<std::pair<int, int>> spectrum);

struct TypeKGrading {
  std::vector<int> lambda_degree;
  Grading w;
};
TypeKGrading grading_type_k(const WContext& w, const GradingTypeK& k);
// Degree of each monomial and of each basis field for given generator degrees.
std::vector<int> lambda_degrees(const GrassmannContext& ctx, const std::vector<int>& gen);
std::vector<int> field_degrees(const WContext& w, const std::vector<int>& gen);

int depth_lambda(const GradingTypeK& k);
int depth_W(const GradingTypeK& k);

// F must be a subalgebra of W.
bool is_admissible(const WContext& w, const Subspace& F);

LieSuperalgebra tensor_s_lambda(const LieSuperalgebra& s, const GrassmannContext& ctx);

// s_max = der(s)⊗Λ ⋉ 1⊗W, with der(s) = s ⋉ out(s) spanned by the s basis
// followed by out_generators (derivations of s, closed under bracket).
struct IntermediateAlgebra {
  LieSuperalgebra s;
  LieSuperalgebra der;
  std::vector<LinearMap> out_generators;
  WContext w;
  LieSuperalgebra socle;
  LieSuperalgebra smax;
  Subspace socle_in_smax;
  Subspace out_in_smax;  // out(s)⊗Λ ⊕ 1⊗W
  Subspace g;
  LinearMap projection_to_W;   // smax → W
  LinearMap projection_to_dV;  // smax → W, image in ∂_V
  bool admissible = true;

  int n() const { return w.ctx.n(); }
  int der_index(int d, int mono) const { return d * w.ctx.dim() + mono; }
  int w_index(int k) const { return der.dim() * w.ctx.dim() + k; }
  // Part of a smax vector inside out(s^Λ).
  Subspace F() const { return intersect(g, out_in_smax); }
};

IntermediateAlgebra build_smax(const LieSuperalgebra& s, const std::vector<LinearMap>& out_generators,
                               const GrassmannContext& ctx);
// g = s⊗Λ ⊕ F with F ⊆ out(s^Λ) given by generators in smax coordinates.
// The generators are closed under bracket first.
IntermediateAlgebra build_intermediate(const IntermediateAlgebra& smax, const std::vector<Vec>& F_gens,
                                       bool close = true);

// g as a standalone algebra on a basis adapted to the given smax degrees.
struct GradedIntermediate {
  LieSuperalgebra algebra;
  Grading grading;
  std::vector<Vec> basis;  // smax coordinates
};
GradedIntermediate graded_intermediate(const IntermediateAlgebra& ia, const std::vector<int>& smax_degree);
// Degrees on smax from degrees on der(s) and generator degrees on Λ.
std::vector<int> smax_degrees(const IntermediateAlgebra& ia, const std::vector<int>& der_degree,
                              const std::vector<int>& gen_degree);

struct MinimalityReport {
  bool is_ideal = false;
  bool minimal = false;
  bool positive_part_is_ideal = false;  // s⊗Λ⁺ ideal of g
};
MinimalityReport socle_minimality_check(const IntermediateAlgebra& ia);

}  // namespace supergrade
