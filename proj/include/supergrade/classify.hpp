#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supergrade/catalog.hpp"

namespace supergrade {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool overall() const;
  // pass iff expected == computed
  void add(std::string name, std::string expected, std::string computed);
  void add(std::string name, std::string expected, std::string computed, bool pass);
  void expect(std::string name, bool expected, bool computed);
  void merge(const VerificationReport& o, const std::string& prefix = {});
};

std::string dims(std::pair<int, int> sd);

// ---- cases of the main theorem ----

enum class CaseTag { case_I, case_II, neither };
const char* case_name(CaseTag t);
std::optional<CaseTag> case_from_name(const std::string& s);

struct GradingCase {
  CaseTag tag = CaseTag::neither;
  std::string witness;
};

// The grading must be diagonal on the socle basis x_i⊗ξ^S; throws otherwise.
GradingCase classify_grading(const IntermediateAlgebra& ia, const GradedIntermediate& gi);

// (a) transitive, (b) depth one, (c) G-type irreducible isotropy, (d) nonlinear.
VerificationReport check_four_properties(const Grading& G);

// Structure-preserving round trip through the filtration g_p = ⊕_{i≥p} g^i.
VerificationReport check_filtration_round_trip(const Grading& G);

// ---- named depth-one gradings of catalog algebras ----

struct NamedGrading {
  std::string name;
  std::string system;  // positive system or table row it came from
  std::string row;     // table row kind, e.g. "first", "last", "p=1,k=1"
  Grading grading;
};
std::vector<NamedGrading> depth_one_gradings(const AlgebraId& id);
NamedGrading named_grading(const AlgebraId& id, const std::string& name);

// Generator subsets of out(s) spanning a subalgebra graded in nonnegative degrees.
std::vector<std::vector<int>> nonnegative_out_subalgebras(const AlgebraId& id, const Grading& G);

// s ⋉ span(listed outer generators) with the grading induced by G.
GradedIntermediate extend_by_out(const AlgebraId& id, const Grading& G, const std::vector<int>& out_indices);

// ---- the converse construction ----

// F mini-language, terms joined by '+':
//   full-out              out(s)⊗Λ ⋉ W
//   out:<l1>,<l2>         named outer generators ⊗ 1
//   section:identity      ∂_V
//   section:euler         ∂_V and the Euler field
//   section:<i>:<f>       ∂_i + f∂_i, f a monomial label such as x1x2
//   lambda-plus           Λ⁺∂_V (not admissible)
//   basis:<k1>,<k2>       s_max basis vectors, taken as-is (must already be closed)
struct FSpec {
  std::vector<Vec> generators;  // s_max coordinates
  bool close = true;
};
FSpec parse_f_spec(const IntermediateAlgebra& smax, const AlgebraId& s, const std::string& text);

struct TheoremOptions {
  AlgebraId s;
  int n = 1;
  CaseTag target = CaseTag::case_I;
  std::string F = "section:identity";
  std::string s_grading;  // case I: a name from depth_one_gradings
  bool force = false;     // build even when F is not admissible
};
VerificationReport verify_theorem_main1(const TheoremOptions& o);

// Semisimplicity versus admissibility for s^Λ ⋉ F.
VerificationReport verify_block(const AlgebraId& s, int n, const std::string& F);

VerificationReport verify_lemmetto(const AlgebraId& s, const std::string& grading);

// The exact sequences relating F to F' ⊆ W (or W(E)) and F'' ⊆ out(s).
VerificationReport report_extensions(const IntermediateAlgebra& ia, CaseTag c);

// Replace F by F ∩ (out(s)⊗Λ ⊕ Λ⁺∂_V).
std::vector<Vec> non_admissible_variant(const IntermediateAlgebra& ia);

// ---- tables ----

const std::vector<std::string>& table_ids();
// Default instances per table when params is empty.
VerificationReport verify_table(const std::string& table, const std::vector<AlgebraId>& params = {});
// Rows for families outside the build (ab(3), ag(2)); reported, never verified.
std::vector<std::string> documented_only_rows(const std::string& family);

}  // namespace supergrade
