#include <gtest/gtest.h>

#include "supergrade/classify.hpp"

using namespace supergrade;

namespace {

bool has_check(const VerificationReport& r, const std::string& name, const std::string& computed) {
  for (const auto& c : r.checks)
    if (c.name == name && c.computed == computed) return true;
  return false;
}

TheoremOptions opts(const char* s, int n, CaseTag c, const char* F) {
  TheoremOptions o;
  o.s = AlgebraId::parse(s);
  o.n = n;
  o.target = c;
  o.F = F;
  return o;
}

}  // namespace

TEST(Report, OverallIsConjunction) {
  VerificationReport r;
  EXPECT_FALSE(r.overall());
  r.add("x", "1", "1");
  EXPECT_TRUE(r.overall());
  r.expect("y", true, false);
  EXPECT_FALSE(r.overall());
  VerificationReport q;
  q.merge(r, "p");
  EXPECT_EQ(q.checks[1].name, "p/y");
}

TEST(Classify, SpeDepthOneGradingIsCaseI) {
  auto id = AlgebraId::of(Family::spe, 3);
  const auto& e = catalog_entry(id);
  auto smax = build_smax(e.algebra, e.out.maps(), build_lambda(1));
  auto ia = build_intermediate(smax, {Vec::unit(smax.w_index(smax.w.index(0, 0)))});
  auto G = named_grading(id, "p=1,k=1").grading;
  auto gi = graded_intermediate(ia, smax_degrees(ia, der_degrees(G, e.out), {0}));
  EXPECT_EQ(classify_grading(ia, gi).tag, CaseTag::case_I);
}

TEST(Classify, GenerAlgebraIsCaseII) {
  auto ga = gener_algebra(AlgebraId::osp(1, 1), {}, true);
  EXPECT_EQ(classify_grading(ga.ia, ga.graded).tag, CaseTag::case_II);
}

TEST(Classify, DepthTwoShapeIsNeither) {
  auto id = AlgebraId::sl(2, 1);
  const auto& e = catalog_entry(id);
  auto smax = build_smax(e.algebra, e.out.maps(), build_lambda(2));
  std::vector<Vec> gens;
  for (int a = 0; a < 2; ++a) gens.push_back(Vec::unit(smax.w_index(smax.w.index(0, a))));
  auto ia = build_intermediate(smax, gens);
  auto G = depth_one_gradings(id).front().grading;
  auto gi = graded_intermediate(ia, smax_degrees(ia, der_degrees(G, e.out), {-1, 0}));
  auto c = classify_grading(ia, gi);
  EXPECT_EQ(c.tag, CaseTag::neither);
  EXPECT_NE(c.witness.find("d(s)=1"), std::string::npos);
}

TEST(FourProperties, TrivialGradingFails) {
  auto g = construct(AlgebraId::osp(1, 1));
  auto r = check_four_properties(Grading::trivial(g));
  EXPECT_FALSE(r.overall());
  EXPECT_TRUE(has_check(r, "a:transitive", "vacuous"));
  EXPECT_TRUE(has_check(r, "d:nonlinear", "false"));
}

TEST(FourProperties, NegativelyGradedOuterPartFails) {
  auto id = AlgebraId::psl(2);
  auto G = named_grading(id, "oxo:first").grading;
  EXPECT_EQ(G.derivation_degree(catalog_entry(id).out.generators[2].map), -1);
  EXPECT_FALSE(check_four_properties(extend_by_out(id, G, {2}).grading).overall());
  EXPECT_TRUE(check_four_properties(extend_by_out(id, G, {0, 1}).grading).overall());
}

TEST(FourProperties, OutSubalgebrasOfPsl22) {
  auto id = AlgebraId::psl(2);
  auto subsets = nonnegative_out_subalgebras(id, named_grading(id, "oxo:first").grading);
  EXPECT_EQ(subsets, (std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}}));
  // xxx middle node: all of sl(2) sits in degree zero
  EXPECT_EQ(nonnegative_out_subalgebras(id, named_grading(id, "xxx:mid").grading).size(), 7u);
}

TEST(RoundTrip, HeightTwoGrading) {
  auto r = check_filtration_round_trip(named_grading(AlgebraId::of(Family::spe, 3), "p=1,k=2").grading);
  EXPECT_TRUE(r.overall());
}

TEST(Main1, Osp12CaseII) {
  EXPECT_TRUE(verify_theorem_main1(opts("osp(1|2)", 1, CaseTag::case_II, "section:identity")).overall());
}

TEST(Main1, SpeWithOuterDerivation) {
  auto o = opts("spe(3)", 0, CaseTag::case_I, "out:D");
  o.s_grading = "none,k=-1";
  EXPECT_TRUE(verify_theorem_main1(o).overall());
}

TEST(Main1, SectionWithNilpotentCoefficient) {
  auto r = verify_theorem_main1(opts("sl(2|1)", 2, CaseTag::case_I, "section:1:x1x2"));
  EXPECT_TRUE(r.overall());
}

TEST(Main1, Preconditions) {
  try {
    verify_theorem_main1(opts("spe(3)", 1, CaseTag::case_I, "lambda-plus"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not admissible"), std::string::npos);
  }
  try {
    verify_theorem_main1(opts("psl(2|2)", 1, CaseTag::case_I, "full-out"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("negative degree"), std::string::npos);
  }
  try {
    verify_theorem_main1(opts("sl(2|1)", 1, CaseTag::case_I, "basis:0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("F_spec"), std::string::npos);
  }
  EXPECT_THROW(verify_theorem_main1(opts("sl(2|1)", 1, CaseTag::case_I, "bogus")), Error);
  EXPECT_THROW(verify_theorem_main1(opts("sl(2|1)", 2, CaseTag::case_I, "section:1:x1")), Error);
}

TEST(Main1, ForcedNonAdmissibleFails) {
  auto o = opts("spe(3)", 1, CaseTag::case_I, "lambda-plus");
  o.force = true;
  auto r = verify_theorem_main1(o);
  EXPECT_FALSE(r.overall());
  EXPECT_TRUE(has_check(r, "c:irreducible_Gtype", "false"));
}

TEST(Block, LambdaPlusIsExpectedFail) {
  auto r = verify_block(AlgebraId::parse("spe3"), 1, "lambda-plus");
  EXPECT_TRUE(r.overall());
  EXPECT_TRUE(has_check(r, "admissible", "not_admissible"));
  EXPECT_TRUE(verify_block(AlgebraId::parse("spe3"), 1, "section:identity").overall());
}

TEST(Lemmetto, Psl22MiddleNode) {
  auto r = verify_lemmetto(AlgebraId::psl(2), "mid");
  EXPECT_TRUE(r.overall());
  EXPECT_TRUE(has_check(r, "iv:d(der)", "d(der)=2"));
}

TEST(Lemmetto, OspAndSpe) {
  EXPECT_TRUE(verify_lemmetto(AlgebraId::osp(3, 1), "first").overall());
  for (const auto& ng : depth_one_gradings(AlgebraId::of(Family::spe, 4)))
    EXPECT_TRUE(verify_lemmetto(AlgebraId::of(Family::spe, 4), ng.name).overall()) << ng.name;
}

TEST(Extensions, GenerNonAdmissibleVariantLosesDxi) {
  auto ga = gener_algebra(AlgebraId::osp(1, 1), {}, true);
  auto v = non_admissible_variant(ga.ia);
  auto smax = build_smax(ga.ia.s, ga.ia.out_generators, build_lambda(1));
  auto ia = build_intermediate(smax, v);
  EXPECT_FALSE(ia.admissible);
  auto gi = graded_intermediate(ia, smax_degrees(ia, std::vector<int>(ia.der.dim(), 0), {-1}));
  EXPECT_FALSE(check_four_properties(gi.grading).overall());
}

TEST(Extensions, FullOutCaseI) {
  auto r = verify_theorem_main1(opts("spe(3)", 1, CaseTag::case_I, "full-out"));
  EXPECT_TRUE(r.overall());
  EXPECT_TRUE(has_check(r, "ext/F_cap_out(s)xL", "(1|1)"));
  EXPECT_TRUE(has_check(r, "ext/F'", "(1|1)"));
  EXPECT_TRUE(has_check(r, "ext/F''", "(1|0)"));
}

TEST(Tables, AllRowsAgree) {
  for (const auto& t : table_ids()) {
    auto r = verify_table(t);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << t << " " << c.name << " " << c.expected << " vs " << c.computed;
  }
  EXPECT_THROW(verify_table("nope"), Error);
  EXPECT_FALSE(documented_only_rows("ab3").empty());
  EXPECT_TRUE(documented_only_rows("sl").empty());
}

TEST(Tables, SpeFourRowsIncludeHeightTwo) {
  auto r = verify_table("primatab35", {AlgebraId::of(Family::spe, 3)});
  EXPECT_GE(r.checks.size(), 4u);
  EXPECT_TRUE(r.overall());
}
