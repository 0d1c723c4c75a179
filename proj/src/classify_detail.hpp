#pragma once

#include <string>
#include <vector>

#include "supergrade/classify.hpp"

namespace supergrade::detail {

// sl(M|N) or psl(n|n): the grading by C^{M-p|N-q} ⊗ (C^{p|q})*.
Grading sl_crossing(const AlgebraId& id, int p, int q);

// Symbol orders of the positive systems used for an orthosymplectic algebra.
std::vector<std::pair<std::string, std::vector<std::string>>> osp_systems(const AlgebraId& id);

// "first" (ε1 type), "last" (gl(m|n) type) or "other", from the grading operator in the torus.
std::string osp_row_kind(const RootDecomposition& rd, const Grading& G);

std::vector<PositiveSystem> osp42_systems();

std::string strange_name(const AlgebraId& id, const StrangeChoice& c);

}  // namespace supergrade::detail
