#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <climits>

#include "supergrade/grassmann.hpp"

using namespace supergrade;

namespace {

LieSuperalgebra sl2() {
  SuperSpace sp({"e", "h", "f"}, {Parity::Even, Parity::Even, Parity::Even});
  TableBuilder tb(sp);
  tb.set(1, 0, Vec::unit(0, 2));
  tb.set(1, 2, Vec::unit(2, -2));
  tb.set(0, 2, Vec::unit(1));
  return tb.build({"sl2", "", {}, std::nullopt, "test"});
}

// Enumerates every spectrum with at most max_m blocks, |k| <= kmax, total n.
void spectra(int n, int max_m, int kmax, std::vector<std::pair<int, int>>& cur, int next_k,
             std::vector<GradingTypeK>& out) {
  int used = 0;
  for (const auto& [k, m] : cur) used += m;
  if (used == n && !cur.empty()) out.push_back({cur});
  if (used == n || static_cast<int>(cur.size()) == max_m) return;
  for (int k = next_k; k <= kmax; ++k)
    for (int m = 1; used + m <= n; ++m) {
      cur.push_back({k, m});
      spectra(n, max_m, kmax, cur, k + 1, out);
      cur.pop_back();
    }
}

int min_or_zero(const std::vector<int>& d) {
  if (d.empty()) return 0;
  return std::max(0, -*std::min_element(d.begin(), d.end()));
}

}  // namespace

TEST(Lambda, Dimensions) {
  EXPECT_EQ(build_lambda(0).space().sdim(), std::make_pair(1, 0));
  for (int n = 1; n <= 4; ++n) {
    auto L = build_lambda(n);
    EXPECT_EQ(L.space().sdim(), std::make_pair(1 << (n - 1), 1 << (n - 1)));
    EXPECT_EQ(L.lambda_plus().dim(), (1 << n) - 1);
  }
}

TEST(Lambda, SignRule) {
  auto L = build_lambda(2);
  Vec x1 = Vec::unit(L.generator(0)), x2 = Vec::unit(L.generator(1));
  Vec x12 = L.multiply(x1, x2);
  EXPECT_EQ(x12, Vec::unit(L.top()));
  EXPECT_EQ(L.multiply(x2, x1), Vec::unit(L.top(), -1));
  EXPECT_TRUE(L.multiply(x1, x1).empty());
  EXPECT_EQ(L.label(L.top()), "x1x2");
}

TEST(Lambda, Associative) {
  auto L = build_lambda(4);
  for (int a = 0; a < L.dim(); ++a)
    for (int b = 0; b < L.dim(); ++b)
      for (int c = 0; c < L.dim(); ++c) {
        Vec A = Vec::unit(a), B = Vec::unit(b), C = Vec::unit(c);
        ASSERT_EQ(L.multiply(L.multiply(A, B), C), L.multiply(A, L.multiply(B, C)));
      }
}

TEST(W, Dimensions) {
  auto w1 = build_W(1);
  EXPECT_EQ(w1.algebra.sdim(), std::make_pair(1, 1));
  EXPECT_EQ(w1.algebra.space().label(0), "d1");
  EXPECT_EQ(w1.algebra.parity(0), Parity::Odd);
  EXPECT_EQ(w1.algebra.space().label(1), "x1.d1");
  EXPECT_EQ(build_W(2).algebra.sdim(), std::make_pair(4, 4));
  EXPECT_EQ(build_W(3).algebra.sdim(), std::make_pair(12, 12));
  EXPECT_EQ(build_W(4).algebra.dim(), 64);
}

TEST(W, LeibnizExample) {
  auto w = build_W(2);
  // [∂1, ξ1∂2] = ∂2
  int d1 = w.index(0, 0), x1d2 = w.index(w.ctx.generator(0), 1), d2 = w.index(0, 1);
  EXPECT_EQ(w.algebra.bracket_basis(d1, x1d2), Vec::unit(d2));
}

TEST(W, BracketIsCommutatorOfDerivations) {
  for (int n = 1; n <= 3; ++n) {
    auto w = build_W(n);
    EXPECT_TRUE(check_jacobi(w.algebra).ok());
    int N = w.algebra.dim();
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        LinearMap lhs = w.action(w.algebra.bracket_basis(i, j));
        LinearMap rhs = w.action(Vec::unit(i)).supercommutator(w.action(Vec::unit(j)));
        ASSERT_EQ(flatten(lhs), flatten(rhs)) << i << "," << j;
      }
  }
}

TEST(W, SplitIsComplementary) {
  auto w = build_W(3);
  EXPECT_EQ(w.constant_fields.dim() + w.positive_part.dim(), w.algebra.dim());
  EXPECT_TRUE(intersect(w.constant_fields, w.positive_part).is_zero());
}

TEST(TypeK, Principal) {
  auto w = build_W(3);
  auto G = grading_type_k(w, type_k({{1, 3}}));
  for (int m = 0; m < w.ctx.dim(); ++m)
    EXPECT_EQ(G.lambda_degree[m], std::popcount(w.ctx.mask(m)));
  EXPECT_TRUE(is_compatible(G.w));
  EXPECT_EQ(G.w.min_degree(), -1);
}

TEST(TypeK, Zero) {
  auto w = build_W(2);
  auto G = grading_type_k(w, type_k({{0, 2}}));
  EXPECT_EQ(G.w.pieces().size(), 1u);
  EXPECT_EQ(G.w.piece(0).dim(), w.algebra.dim());
}

TEST(TypeK, CaseTwoShape) {
  auto w = build_W(2);
  auto G = grading_type_k(w, type_k({{-1, 1}, {0, 1}}));
  int even = 0, odd = 0;
  for (int m = 0; m < w.ctx.dim(); ++m)
    if (G.lambda_degree[m] == -1) (w.ctx.space().parity(m) == Parity::Even ? even : odd)++;
  EXPECT_EQ(std::make_pair(even, odd), std::make_pair(1, 1));
  EXPECT_TRUE(is_compatible(G.w));
}

TEST(TypeK, SizeMismatchThrows) {
  auto w = build_W(2);
  EXPECT_THROW(grading_type_k(w, type_k({{1, 3}})), Error);
  EXPECT_THROW(type_k({{1, 1}, {0, 1}}), Error);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_lambda(type_k({{1, 3}})), 0);
  EXPECT_EQ(depth_lambda(type_k({{-1, 1}, {0, 1}})), 1);
  EXPECT_EQ(depth_lambda(type_k({{-1, 2}})), 2);
  EXPECT_EQ(depth_W(type_k({{0, 2}})), 0);
  EXPECT_EQ(depth_W(type_k({{1, 2}})), 1);
  EXPECT_EQ(depth_W(type_k({{0, 1}, {1, 1}})), 1);
  EXPECT_EQ(depth_W(type_k({{-1, 1}, {0, 1}})), 1);
}

TEST(Depth, SweepAgainstScan) {
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    auto w = build_W(n);
    std::vector<GradingTypeK> all;
    std::vector<std::pair<int, int>> cur;
    spectra(n, 3, 2, cur, -2, all);
    for (const auto& k : all) {
      auto gen = k.generator_degrees();
      EXPECT_EQ(depth_lambda(k), min_or_zero(lambda_degrees(w.ctx, gen))) << k.to_string();
      EXPECT_EQ(depth_W(k), min_or_zero(field_degrees(w, gen))) << k.to_string();
      int k1 = k.spectrum.front().first;
      // Depth one of Λ exactly for k = (-1, ...) with a single generator in degree -1.
      EXPECT_EQ(depth_lambda(k) == 1, k1 == -1 && k.spectrum.front().second == 1) << k.to_string();
      if (depth_lambda(k) == 1) EXPECT_EQ(depth_W(k), k.spectrum.back().first + 1);
      EXPECT_EQ(depth_lambda(k) == 0, k1 >= 0);
      if (k1 >= 0) {
        EXPECT_EQ(depth_W(k) == 0, k.spectrum == (std::vector<std::pair<int, int>>{{0, n}}));
        bool listed = k.spectrum == std::vector<std::pair<int, int>>{{1, n}} ||
                      (k.spectrum.size() == 2 && k.spectrum[0].first == 0 && k.spectrum[1].first == 1);
        EXPECT_EQ(depth_W(k) == 1, listed) << k.to_string();
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Admissible, Basic) {
  auto w = build_W(3);
  EXPECT_TRUE(is_admissible(w, Subspace::full(w.algebra.space())));
  EXPECT_FALSE(is_admissible(w, w.positive_part));
  EXPECT_TRUE(is_admissible(w, w.constant_fields));
  const auto& L = w.ctx;
  Subspace notclosed = Subspace::span(w.algebra.space(), {Vec::unit(w.index(0, 0)), Vec::unit(w.index(L.index(0b011u), 1))});
  EXPECT_THROW(is_admissible(w, notclosed), Error);
}

TEST(Admissible, SectionExample) {
  auto w = build_W(3);
  const auto& L = w.ctx;
  // ∂1 + ξ2ξ3∂2, ∂2, ∂3
  Vec phi1 = Vec::unit(w.index(0, 0)) + Vec::unit(w.index(L.index(0b110u), 1));
  Subspace F = subalgebra_generated(w.algebra, {phi1, Vec::unit(w.index(0, 1)), Vec::unit(w.index(0, 2))});
  EXPECT_TRUE(is_admissible(w, F));
}

TEST(Tensor, DimensionsAndJacobi) {
  auto s = sl2();
  EXPECT_EQ(tensor_s_lambda(s, build_lambda(0)).sdim(), std::make_pair(3, 0));
  auto t = tensor_s_lambda(s, build_lambda(2));
  EXPECT_EQ(t.sdim(), std::make_pair(6, 6));
  EXPECT_TRUE(check_jacobi(t).ok());
}

TEST(Tensor, RadicalIsPositivePart) {
  auto s = sl2();
  auto L = build_lambda(2);
  auto t = tensor_s_lambda(s, L);
  std::vector<Vec> plus;
  for (int x = 0; x < 3; ++x)
    for (int m = 1; m < L.dim(); ++m) plus.push_back(Vec::unit(x * L.dim() + m));
  Subspace r = Subspace::span(t.space(), plus);
  EXPECT_TRUE(is_ideal(t, r));
  EXPECT_TRUE(is_solvable(t, r));
  EXPECT_FALSE(is_solvable(t, Subspace::full(t.space())));
}

TEST(Smax, Sl2OneGenerator) {
  auto ia = build_smax(sl2(), {}, build_lambda(1));
  EXPECT_EQ(ia.smax.sdim(), std::make_pair(4, 4));
  EXPECT_TRUE(check_jacobi(ia.smax).ok());
  EXPECT_TRUE(is_ideal(ia.smax, ia.socle_in_smax));
  // Restriction to the socle is the tensor bracket.
  for (int i = 0; i < ia.socle.dim(); ++i)
    for (int j = 0; j < ia.socle.dim(); ++j) ASSERT_EQ(ia.smax.bracket_basis(i, j), ia.socle.bracket_basis(i, j));
}

TEST(Smax, ProjectionToWIsHomomorphism) {
  auto ia = build_smax(sl2(), {}, build_lambda(2));
  const auto& P = ia.projection_to_W;
  for (int i = 0; i < ia.smax.dim(); ++i)
    for (int j = 0; j < ia.smax.dim(); ++j)
      ASSERT_EQ(P.apply(ia.smax.bracket_basis(i, j)),
                ia.w.algebra.bracket(P.apply(Vec::unit(i)), P.apply(Vec::unit(j))));
}

TEST(Smax, NZeroIsDer) {
  auto ia = build_smax(sl2(), {}, build_lambda(0));
  EXPECT_EQ(ia.smax.dim(), 3);
  EXPECT_EQ(socle_minimality_check(ia).minimal, true);
}

TEST(Intermediate, AdmissibleVersusNot) {
  auto base = build_smax(sl2(), {}, build_lambda(1));
  int d = base.w_index(0), xd = base.w_index(1);
  auto full = build_intermediate(base, {Vec::unit(d), Vec::unit(xd)});
  EXPECT_TRUE(full.admissible);
  auto rep = socle_minimality_check(full);
  EXPECT_TRUE(rep.is_ideal);
  EXPECT_TRUE(rep.minimal);
  EXPECT_FALSE(rep.positive_part_is_ideal);

  auto bad = build_intermediate(base, {Vec::unit(xd)});
  EXPECT_FALSE(bad.admissible);
  auto r2 = socle_minimality_check(bad);
  EXPECT_TRUE(r2.is_ideal);
  EXPECT_FALSE(r2.minimal);
  EXPECT_TRUE(r2.positive_part_is_ideal);
  EXPECT_THROW(build_intermediate(base, {Vec::unit(0)}), Error);
}
