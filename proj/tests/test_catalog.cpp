#include <gtest/gtest.h>

#include <functional>

#include "supergrade/catalog.hpp"

using namespace supergrade;

namespace {

using SD = std::pair<int, int>;

std::vector<SD> pieces(const Grading& G) {
  std::vector<SD> out;
  for (int p = G.min_degree(); p <= G.max_degree(); ++p) out.push_back(G.sdim(p));
  return out;
}

DynkinDatum datum(const RootDecomposition& rd, std::vector<std::string> order) {
  return dynkin_datum(rd, system_from_order(rd, order));
}

}  // namespace

TEST(AlgebraId, ParseAndName) {
  EXPECT_EQ(AlgebraId::parse("sl(2|1)").name(), "sl(2|1)");
  EXPECT_EQ(AlgebraId::parse("psl22").name(), "psl(2|2)");
  EXPECT_EQ(AlgebraId::parse("osp(3|2)").params, (std::vector<long>{3, 1}));
  EXPECT_EQ(AlgebraId::parse("osp12").name(), "osp(1|2)");
  EXPECT_EQ(AlgebraId::parse("spe3").name(), "spe(3)");
  EXPECT_EQ(AlgebraId::parse("osp(4|2;2)").name(), "osp(4|2;2)");
  EXPECT_EQ(AlgebraId::parse("H(5)").family, Family::H);
  EXPECT_THROW(AlgebraId::parse("foo(3)"), Error);
  EXPECT_THROW(AlgebraId::parse("osp(3|3)"), Error);
}

TEST(AlgebraId, Validate) {
  try {
    AlgebraId::parse("spe(2)").validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "spe requires n>=3");
  }
  EXPECT_THROW(AlgebraId::osp42(-1).validate(), Error);
  EXPECT_THROW(AlgebraId::osp42(frac(-1, 2)).validate(), Error);
  EXPECT_THROW(AlgebraId::sl(2, 2).validate(), Error);
  EXPECT_NO_THROW(AlgebraId::osp42(2).validate());
}

struct DimCase {
  const char* id;
  SD dim;
};

class Construct : public ::testing::TestWithParam<DimCase> {};

TEST_P(Construct, DimensionAndJacobi) {
  const auto& c = GetParam();
  LieSuperalgebra g = construct(AlgebraId::parse(c.id));
  EXPECT_EQ(g.sdim(), c.dim);
  EXPECT_TRUE(check_jacobi(g).ok());
}

INSTANTIATE_TEST_SUITE_P(Catalog, Construct,
                         ::testing::Values(DimCase{"sl(2|1)", {4, 4}}, DimCase{"psl(2|2)", {6, 8}},
                                           DimCase{"gl(2|1)", {5, 4}}, DimCase{"osp(1|2)", {3, 2}},
                                           DimCase{"osp(3|2)", {6, 6}}, DimCase{"osp(4|2)", {9, 8}},
                                           DimCase{"osp(2|4)", {11, 8}}, DimCase{"spe(3)", {8, 9}},
                                           DimCase{"pe(3)", {9, 9}}, DimCase{"psq(3)", {8, 8}},
                                           DimCase{"pq(3)", {8, 9}}, DimCase{"W(3)", {12, 12}},
                                           DimCase{"S(4)", {25, 24}}, DimCase{"CS(4)", {26, 24}},
                                           DimCase{"H(5)", {15, 15}}, DimCase{"Hfull(5)", {15, 16}},
                                           DimCase{"osp(4|2;2)", {9, 8}}));

TEST(Catalog, OutMatchesDerivationSolve) {
  for (const char* s : {"sl(2|1)", "psl(2|2)", "psl(3|3)", "osp(3|2)", "spe(3)", "psq(3)", "W(3)", "S(4)", "H(5)",
                        "H(6)", "osp(4|2;2)"}) {
    AlgebraId id = AlgebraId::parse(s);
    const auto& e = catalog_entry(id);
    auto split = inner_outer_split(e.algebra, e.out.maps());
    EXPECT_TRUE(split.canonical) << s;
    EXPECT_EQ(split.out_dim, e.out.out_dim()) << s;
    EXPECT_EQ(e.out.out_dim(), expected_out_dim(id).value()) << s;
  }
}

TEST(Catalog, Psl22OuterIsSl2) {
  const auto& e = catalog_entry(AlgebraId::psl(2));
  ASSERT_EQ(e.out.generators.size(), 3u);
  const auto& Z = e.out.generators[0].map;
  const auto& Zp = e.out.generators[1].map;
  const auto& Zm = e.out.generators[2].map;
  EXPECT_EQ(Zp.supercommutator(Zm), Z);
  EXPECT_EQ(Z.supercommutator(Zp), Zp.scaled(2));
  EXPECT_EQ(Z.supercommutator(Zm), Zm.scaled(-2));
}

TEST(Catalog, OddDerivationOfPsq) {
  const auto& e = catalog_entry(AlgebraId::of(Family::psq, 3));
  const auto& D = e.out.generators.at(0).map;
  EXPECT_EQ(D.parity(), Parity::Odd);
  // D maps the odd part isomorphically onto the even part.
  std::vector<Vec> img;
  for (int i = 0; i < e.algebra.dim(); ++i)
    if (is_odd(e.algebra.parity(i))) img.push_back(D.column(i));
  EXPECT_EQ(Subspace::span(e.algebra.space(), img).sdim(), SD(8, 0));
}

TEST(Roots, OneDimensionalRootSpaces) {
  auto rd = root_decomposition(AlgebraId::sl(2, 1));
  int even = 0, odd = 0;
  for (const auto& r : rd.roots) (is_odd(r.parity) ? odd : even)++;
  EXPECT_EQ(even, 2);
  EXPECT_EQ(odd, 4);
  auto rd2 = root_decomposition(AlgebraId::psl(2));
  EXPECT_EQ(rd2.roots.size(), 12u);
  EXPECT_EQ(rd2.cartan.dim(), 2);
  auto rd3 = root_decomposition(AlgebraId::osp(3, 1));
  EXPECT_EQ(static_cast<int>(rd3.roots.size()) + rd3.cartan.dim(), 12);
  EXPECT_THROW(root_decomposition(AlgebraId::of(Family::spe, 3)), Error);
}

TEST(Dynkin, Marks) {
  auto sl = root_decomposition(AlgebraId::sl(2, 3));
  auto d = datum(sl, {"e1", "e2", "d1", "d2", "d3"});
  EXPECT_EQ(d.marks, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(d.colors[1], NodeColor::gray);

  auto osp = root_decomposition(AlgebraId::osp(5, 2));
  auto o = datum(osp, {"e1", "e2", "d1", "d2"});
  EXPECT_EQ(o.marks, (std::vector<int>{1, 2, 2, 2}));
  EXPECT_EQ(o.colors.back(), NodeColor::black);
  auto ob = datum(osp, {"e1", "d1", "d2", "e2"});
  EXPECT_EQ(ob.colors.back(), NodeColor::white);

  auto psl = root_decomposition(AlgebraId::psl(2));
  for (auto order : std::vector<std::vector<std::string>>{
           {"e1", "e2", "d1", "d2"}, {"e1", "d1", "d2", "e2"}, {"e1", "d1", "e2", "d2"}})
    EXPECT_EQ(datum(psl, order).marks, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(diagram_string(datum(psl, {"e1", "e2", "d1", "d2"})), "o1-x1-o1");
  EXPECT_EQ(diagram_string(datum(psl, {"e1", "d1", "e2", "d2"})), "x1-x1-x1");
}

TEST(Dynkin, CartanMatrixDiagonal) {
  auto rd = root_decomposition(AlgebraId::osp(3, 1));
  auto d = datum(rd, {"e1", "d1"});
  EXPECT_EQ(d.cartan_matrix[0][0], 0);
  EXPECT_EQ(d.cartan_matrix[1][1], 1);
  auto a = root_decomposition(AlgebraId::osp42(2));
  auto da = dynkin_datum(a, {"c311", {3, 1, 1}, {{0, 2, 0}, {1, -1, -1}, {0, 0, 2}}});
  EXPECT_EQ(da.marks, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(da.cartan_matrix[0][0], 2);
  EXPECT_EQ(da.cartan_matrix[1][1], 0);
  EXPECT_EQ(da.cartan_matrix[2][2], 2);
}

TEST(Dynkin, RejectsDegenerateFunctional) {
  auto rd = root_decomposition(AlgebraId::sl(2, 1));
  EXPECT_THROW(dynkin_datum(rd, {"bad", {1, 1, 0}, {}}), Error);
}

TEST(Crossing, SlRows) {
  auto rd = root_decomposition(AlgebraId::sl(2, 3));
  auto d = datum(rd, {"e1", "e2", "d1", "d2", "d3"});
  // p = 1, q = 0: C^{1|3} ⊗ (C^{1|0})*
  auto G = grade_by_crossing(rd, d, 0);
  EXPECT_EQ(pieces(G), (std::vector<SD>{{1, 3}, {10, 6}, {1, 3}}));
  EXPECT_EQ(depth_height(G), std::make_pair(1, 1));
}

TEST(Crossing, OspFirstNode) {
  auto rd = root_decomposition(AlgebraId::osp(3, 1));
  auto d = datum(rd, {"e1", "d1"});
  EXPECT_EQ(pieces(grade_by_crossing(rd, d, 0)), (std::vector<SD>{{1, 2}, {4, 2}, {1, 2}}));
  EXPECT_THROW(grade_by_crossing(rd, d, 1), Error);
}

TEST(Crossing, Psl22DegreeOfZplus) {
  auto rd = root_decomposition(AlgebraId::psl(2));
  const auto& e = catalog_entry(AlgebraId::psl(2));
  const auto& Zp = e.out.generators[1].map;
  struct Row {
    std::vector<std::string> order;
    std::function<long(long, long, long)> deg;
  };
  std::vector<Row> rows = {{{"e1", "e2", "d1", "d2"}, [](long a, long b, long c) { return a + 2 * b + c; }},
                           {{"e1", "d1", "d2", "e2"}, [](long a, long, long c) { return a - c; }},
                           {{"e1", "d1", "e2", "d2"}, [](long a, long, long c) { return a + c; }}};
  for (const auto& row : rows) {
    auto d = datum(rd, row.order);
    for (long l1 : {0, 1})
      for (long l2 : {0, 1})
        for (long l3 : {0, 1}) {
          Grading G = grading_from_lambda(rd, d, {l1, l2, l3});
          EXPECT_EQ(G.derivation_degree(Zp), row.deg(l1, l2, l3));
        }
  }
  auto d = datum(rd, {"e1", "e2", "d1", "d2"});
  EXPECT_EQ(pieces(grade_by_crossing(rd, d, 0)), (std::vector<SD>{{1, 2}, {4, 4}, {1, 2}}));
  EXPECT_EQ(pieces(grade_by_crossing(rd, d, 1)), (std::vector<SD>{{0, 4}, {6, 0}, {0, 4}}));
}

TEST(Crossing, Osp42) {
  auto rd = root_decomposition(AlgebraId::osp42(2));
  for (const PositiveSystem& ps : {PositiveSystem{"c311", {3, 1, 1}, {{0, 2, 0}, {1, -1, -1}, {0, 0, 2}}},
                                   PositiveSystem{"c131", {1, 3, 1}, {{0, 0, 2}, {-1, 1, -1}, {2, 0, 0}}}}) {
    auto d = dynkin_datum(rd, ps);
    EXPECT_EQ(d.marks, (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(pieces(grade_by_crossing(rd, d, 0)), (std::vector<SD>{{2, 2}, {5, 4}, {2, 2}}));
    EXPECT_EQ(pieces(grade_by_crossing(rd, d, 2)), (std::vector<SD>{{2, 2}, {5, 4}, {2, 2}}));
  }
}

TEST(Strange, SpeRows) {
  auto id = AlgebraId::of(Family::spe, 3);
  EXPECT_EQ(pieces(strange_depth_one(id, {0, -1})), (std::vector<SD>{{0, 6}, {8, 0}, {0, 3}}));
  EXPECT_EQ(pieces(strange_depth_one(id, {1, 2})), (std::vector<SD>{{2, 2}, {4, 4}, {2, 2}, {0, 1}}));
  EXPECT_EQ(pieces(strange_depth_one(id, {1, 1})), (std::vector<SD>{{2, 3}, {4, 4}, {2, 2}}));
  EXPECT_THROW(strange_depth_one(id, {1, 3}), Error);
  for (auto c : strange_rows(id)) EXPECT_TRUE(is_compatible(strange_depth_one(id, c)));
}

TEST(Strange, PsqRows) {
  auto id = AlgebraId::of(Family::psq, 4);
  EXPECT_EQ(strange_rows(id).size(), 3u);
  EXPECT_EQ(pieces(strange_depth_one(id, {2, 0})), (std::vector<SD>{{4, 4}, {7, 7}, {4, 4}}));
  EXPECT_EQ(pieces(strange_depth_one(AlgebraId::of(Family::psq, 3), {1, 0})),
            (std::vector<SD>{{2, 2}, {4, 4}, {2, 2}}));
}

TEST(Cartan, Rows) {
  auto w3 = AlgebraId::of(Family::W, 3);
  auto G = cartan_depth_one(w3, {1, 2, 0});
  EXPECT_EQ(G.sdim(-1), SD(4, 4));
  EXPECT_EQ(G.sdim(0), SD(6, 6));
  auto h6 = AlgebraId::of(Family::H, 6);
  auto H = cartan_depth_one(h6, {0, 3, 3});
  EXPECT_EQ(H.sdim(-1), SD(3, 4));
  EXPECT_EQ(H.sdim(0), SD(12, 12));
  auto h5 = cartan_depth_one(AlgebraId::of(Family::H, 5), {0, 0, 5});
  EXPECT_EQ(h5.sdim(-1), SD(0, 5));
  EXPECT_EQ(h5.sdim(0), SD(10, 0));
  EXPECT_THROW(cartan_depth_one(w3, {0, 3, 0}), Error);
}

TEST(Cartan, VolumeFieldDegrees) {
  for (int n : {5, 6}) {
    auto id = AlgebraId::of(Family::H, n);
    const auto& top = catalog_entry(id).out.generators.at(1).map;
    EXPECT_EQ(cartan_depth_one(id, {0, 0, n}).derivation_degree(top), n - 2);
    EXPECT_EQ(cartan_depth_one(id, {1, n - 2, 1}).derivation_degree(top), 0);
    if (n % 2 == 0) EXPECT_EQ(cartan_depth_one(id, {0, n / 2, n / 2}).derivation_degree(top), n / 2 - 1);
  }
}

TEST(Gener, Osp12WithEuler) {
  auto ga = gener_algebra(AlgebraId::osp(1, 1), {}, true);
  const auto& G = ga.graded.grading;
  EXPECT_EQ(pieces(G), (std::vector<SD>{{2, 3}, {4, 2}, {0, 1}}));
  EXPECT_TRUE(check_jacobi(ga.graded.algebra).ok());
  EXPECT_TRUE(is_transitive(G));
  EXPECT_TRUE(is_nonlinear(G));
}

TEST(Gener, WithoutF) {
  auto ga = gener_algebra(AlgebraId::osp(1, 1), {}, false);
  const auto& G = ga.graded.grading;
  EXPECT_EQ(G.sdim(1), SD(0, 1));
  EXPECT_TRUE(is_transitive(G));
  EXPECT_TRUE(is_nonlinear(G));
}

TEST(DerDegrees, SpeOuterHasDegreeZero) {
  auto id = AlgebraId::of(Family::spe, 3);
  auto G = strange_depth_one(id, {1, 2});
  auto d = der_degrees(G, catalog_entry(id).out);
  EXPECT_EQ(d.size(), 18u);
  EXPECT_EQ(d.back(), 0);
}
