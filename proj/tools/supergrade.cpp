#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "supergrade/io.hpp"

using namespace supergrade;

namespace {

struct AlgebraArgs {
  std::string family;
  long m = -1, n = -1;
  std::string alpha;
};

void add_algebra_options(CLI::App* c, AlgebraArgs& a) {
  c->add_option("family", a.family, "family name (sl, psl, osp, spe, psq, W, S, H, osp42) or an id such as sl(2|1)")
      ->required();
  c->add_option("--m", a.m, "first parameter");
  c->add_option("--n", a.n, "second parameter");
  c->add_option("--alpha", a.alpha, "osp(4|2;alpha)");
}

// sl/psl/gl follow A(m,n) = sl(m+1|n+1); osp takes (m, n) for osp(m|2n).
AlgebraId resolve(const AlgebraArgs& a) {
  auto f = family_from_name(a.family);
  if (!f) return AlgebraId::parse(a.family);
  auto need = [&](long v, const char* flag) {
    if (v < 0) throw Error(a.family + " needs " + flag);
    return v;
  };
  AlgebraId id;
  switch (*f) {
    case Family::gl:
    case Family::sl:
      id = {*f, {need(a.m, "--m") + 1, need(a.n, "--n") + 1}, std::nullopt};
      break;
    case Family::psl:
      if (need(a.m, "--m") != need(a.n, "--n")) throw Error("psl requires m=n");
      id = AlgebraId::psl(a.n + 1);
      break;
    case Family::osp:
      id = AlgebraId::osp(need(a.m, "--m"), need(a.n, "--n"));
      break;
    case Family::osp4_2_alpha:
      if (a.alpha.empty()) throw Error("osp42 needs --alpha");
      id = AlgebraId::osp42(parse_rational(a.alpha));
      break;
    default:
      id = AlgebraId::of(*f, need(a.n, "--n"));
  }
  id.validate();
  return id;
}

int max_n() {
  const char* env = std::getenv("SUPERGRADE_MAX_N");
  if (!env || !*env) return 4;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 0) throw Error(std::string("SUPERGRADE_MAX_N must be a nonnegative integer, got '") + env + "'");
  return static_cast<int>(v);
}

void cap_n(int n) {
  if (n < 0) throw Error("--n must be nonnegative");
  int cap = max_n();
  if (n > cap) throw Error("n=" + std::to_string(n) + " exceeds SUPERGRADE_MAX_N=" + std::to_string(cap));
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

int emit(VerificationReport r, const std::string& subject, const std::string& report_path) {
  if (r.subject.empty()) r.subject = subject;
  auto text = render_report(r);
  std::cout << text;
  if (!report_path.empty()) write_file(report_path, text);
  return r.overall() ? 0 : 1;
}

std::string table_for(const AlgebraId& id) {
  switch (id.family) {
    case Family::psl:
      return id.n() == 2 ? "TABSL22" : "importanttab";
    case Family::sl:
    case Family::osp:
    case Family::osp4_2_alpha:
      return "importanttab";
    case Family::psq:
      return "primatab34";
    case Family::spe:
      return "primatab35";
    case Family::W:
    case Family::S:
    case Family::H:
      return "ultimatavoletta";
    default:
      throw Error(std::string("no depth-one table for family ") + family_name(id.family));
  }
}

int cmd_construct(const AlgebraArgs& a, const std::string& out, const std::string& grading) {
  auto id = resolve(a);
  auto g = construct(id);
  std::optional<std::vector<int>> deg;
  if (!grading.empty()) deg = named_grading(id, grading).grading.degree();
  if (!grading.empty() && !deg) throw Error("grading '" + grading + "' is not diagonal on the basis");
  bool ok = check_jacobi(g).ok();
  std::string summary = "dim " + dims(g.sdim()) + " JACOBI " + (ok ? "PASS" : "FAIL");
  auto text = serialize_algebra(g, deg);
  if (out.empty()) {
    std::cout << text << "# " << summary << "\n";
  } else {
    write_file(out, text);
    std::cout << g.name() << ' ' << summary << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_check(const std::string& path, const std::string& report_path) {
  auto text = read_file(path);
  if (ends_with(path, ".srpt")) {
    auto f = parse_report(text);
    VerificationReport r;
    r.subject = f.report.subject;
    r.add("checks", "-", std::to_string(f.report.checks.size()), true);
    r.expect("trailer_consistent", true, f.consistent());
    return emit(r, path, report_path);
  }
  auto f = parse_algebra(text);
  const auto& g = f.algebra;
  VerificationReport r;
  r.subject = g.name();
  r.add("dim", "-", dims(g.sdim()), true);
  r.expect("parity_additive", true, g.parity_additive());
  r.add("jacobi_violations", "0", std::to_string(check_jacobi(g).violations.size()));
  r.expect("round_trip", true, serialize_algebra(parse_algebra(serialize_algebra(g, f.degrees)).algebra, f.degrees) ==
                                   serialize_algebra(g, f.degrees));
  if (f.degrees) {
    auto G = Grading::from_degrees(g, *f.degrees);
    std::string why;
    bool ok = is_compatible(G, &why);
    r.add("grading_compatible", "true", ok ? "true" : "false:" + why, ok);
    if (ok) {
      auto [d, l] = depth_height(G);
      r.add("depth_height", "-", "(" + std::to_string(d) + "," + std::to_string(l) + ")", true);
    }
  }
  return emit(r, path, report_path);
}

int cmd_derivations(const std::string& path, const std::string& report_path) {
  auto f = parse_algebra(read_file(path));
  const auto& g = f.algebra;
  auto split = inner_outer_split(g);
  auto id = algebra_id(g.info());
  std::optional<std::pair<int, int>> want;
  if (id && same_algebra(g, construct(*id))) want = expected_out_dim(*id);

  VerificationReport r;
  r.subject = g.name();
  r.add("der", "-", dims(split.full.sdim()), true);
  r.add("inner", "-", dims(split.inner.sdim()), true);
  std::string got = dims(split.out_dim);
  std::string verdict = "UNFIXTURED";
  if (want) {
    r.add("out", dims(*want), got);
    verdict = r.overall() ? "PASS" : "FAIL";
  } else {
    r.add("out", "-", got, true);
  }
  std::cout << g.name() << " der=" << dims(split.full.sdim()) << " inner=" << dims(split.inner.sdim()) << " out=" << got
            << ' ' << verdict << "\n";
  return emit(r, path, report_path);
}

int cmd_gradings(const AlgebraArgs& a, int depth, const std::string& report_path) {
  if (depth != 1) throw Error("only --depth 1 is tabulated");
  auto doc = documented_only_rows(a.family);
  if (!doc.empty()) {
    for (const auto& row : doc) std::cout << "DOCUMENTED-ONLY " << row << "\n";
    return 0;
  }
  auto id = resolve(a);
  auto table = table_for(id);
  auto r = verify_table(table, {id});
  r.subject = id.name() + ":" + table;
  return emit(r, r.subject, report_path);
}

int cmd_filtration(const std::string& source, const AlgebraArgs& a, const std::string& grading,
                   const std::string& report_path) {
  Grading G;
  std::string subject;
  if (ends_with(source, ".slsa")) {
    auto f = parse_algebra(read_file(source));
    if (!f.degrees) throw Error(source + ": no deg lines");
    G = Grading::from_degrees(f.algebra, *f.degrees);
    std::string why;
    if (!is_compatible(G, &why)) throw Error(source + ": deg lines are not a grading: " + why);
    subject = f.algebra.name();
  } else {
    AlgebraArgs b = a;
    b.family = source;
    auto id = resolve(b);
    auto ng = grading.empty() ? depth_one_gradings(id).front() : named_grading(id, grading);
    G = ng.grading;
    subject = id.name() + ":" + ng.name;
  }
  return emit(check_filtration_round_trip(G), subject, report_path);
}

struct TheoremArgs {
  std::string name, s, c, F, grading, report;
  int n = 1;
  bool force = false;
  bool n_set = false, F_set = false, c_set = false;
};

int cmd_theorem(const TheoremArgs& t) {
  if (t.s.empty()) throw Error("theorem needs --s");
  auto id = AlgebraId::parse(t.s);
  id.validate();
  std::string subject = t.name + ":" + id.name();
  if (t.name == "lemmetto") {
    if (t.grading.empty()) throw Error("lemmetto needs --grading");
    return emit(verify_lemmetto(id, t.grading), subject + ":" + t.grading, t.report);
  }
  cap_n(t.n);
  if (t.name == "block") return emit(verify_block(id, t.n, t.F), subject, t.report);

  TheoremOptions o;
  o.s = id;
  o.n = t.n;
  o.F = t.F;
  o.s_grading = t.grading;
  o.force = t.force;
  if (t.c_set) {
    auto c = case_from_name(t.c);
    if (!c || *c == CaseTag::neither) throw Error("--case must be I or II");
    o.target = *c;
  }
  if (t.name == "importantcase") {
    if (t.n_set && t.n != 0) throw Error("importantcase is the n=0 case");
    o.n = 0;
    o.target = CaseTag::case_I;
    if (!t.F_set) o.F = "full-out";
    return emit(verify_theorem_main1(o), subject, t.report);
  }
  if (t.name == "main1") return emit(verify_theorem_main1(o), subject, t.report);
  if (t.name == "firsthm") {
    // The classification step alone: admissibility, (a)-(d) and the case.
    auto full = verify_theorem_main1(o);
    VerificationReport r;
    r.subject = full.subject;
    for (const auto& c : full.checks)
      if (c.name.find('/') == std::string::npos && c.name != "F_recovered") r.checks.push_back(c);
    return emit(r, subject, t.report);
  }
  throw Error("unknown theorem '" + t.name + "' (main1, importantcase, firsthm, lemmetto, block)");
}

int cmd_tables(std::vector<std::string> ids, const std::string& report_path) {
  if (ids.empty()) ids = table_ids();
  VerificationReport r;
  r.subject = "tables";
  for (const auto& t : ids) r.merge(verify_table(t), t);
  return emit(r, "tables", report_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supergrade: exact computations with Lie superalgebras and their depth-one gradings"};
  app.require_subcommand(1);
  std::function<int()> run;

  AlgebraArgs alg;
  std::string out, grading, path, report;
  int depth = 1;

  auto* c = app.add_subcommand("construct", "build a catalog algebra and write it as .slsa");
  add_algebra_options(c, alg);
  c->add_option("-o,--out", out, "output .slsa path (stdout when omitted)");
  c->add_option("--grading", grading, "append deg lines for a named depth-one grading");
  c->callback([&] { run = [&] { return cmd_construct(alg, out, grading); }; });

  auto* k = app.add_subcommand("check", "verify a .slsa algebra or the trailer of a .srpt report");
  k->add_option("file", path)->required();
  k->add_option("--report", report, "also write the report here");
  k->callback([&] { run = [&] { return cmd_check(path, report); }; });

  auto* d = app.add_subcommand("derivations", "der, inner and outer derivation dimensions of a .slsa algebra");
  d->add_option("file", path)->required();
  d->add_option("--report", report);
  d->callback([&] { run = [&] { return cmd_derivations(path, report); }; });

  auto* g = app.add_subcommand("gradings", "compare depth-one gradings with the tabulated pieces");
  add_algebra_options(g, alg);
  g->add_option("--depth", depth);
  g->add_option("--report", report);
  g->callback([&] { run = [&] { return cmd_gradings(alg, depth, report); }; });

  auto* f = app.add_subcommand("filtration", "filtration and associated graded round trip");
  std::string source;
  f->add_option("source", source, ".slsa file with deg lines, or a family")->required();
  f->add_option("--m", alg.m);
  f->add_option("--n", alg.n);
  f->add_option("--alpha", alg.alpha);
  f->add_option("--grading", grading, "named depth-one grading (default: the first one)");
  f->add_option("--report", report);
  f->callback([&] { run = [&] { return cmd_filtration(source, alg, grading, report); }; });

  TheoremArgs th;
  auto* t = app.add_subcommand("theorem", "verify main1, importantcase, firsthm, lemmetto or block");
  t->add_option("name", th.name)->required();
  t->add_option("--s", th.s, "socle, e.g. osp(1|2), spe3, psl22");
  auto* nopt = t->add_option("--n", th.n, "number of odd Grassmann generators");
  auto* copt = t->add_option("--case", th.c, "I or II");
  th.F = "section:identity";
  auto* fopt = t->add_option("--F", th.F, "F specification");
  t->add_option("--grading", th.grading, "named depth-one grading of s");
  t->add_flag("--force", th.force, "build even when F is not admissible");
  t->add_option("--report", th.report);
  t->callback([&] {
    th.n_set = nopt->count() > 0;
    th.c_set = copt->count() > 0;
    th.F_set = fopt->count() > 0;
    run = [&] { return cmd_theorem(th); };
  });

  std::vector<std::string> tables;
  auto* tb = app.add_subcommand("tables", "verify tabulated data (all tables when none given)");
  tb->add_option("ids", tables);
  tb->add_option("--report", report);
  tb->callback([&] { run = [&] { return cmd_tables(tables, report); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
