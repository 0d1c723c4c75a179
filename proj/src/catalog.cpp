#include "supergrade/catalog.hpp"

#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <regex>

namespace supergrade {

namespace {

const std::vector<std::pair<Family, const char*>> kFamilies = {
    {Family::gl, "gl"},   {Family::sl, "sl"},   {Family::psl, "psl"}, {Family::osp, "osp"},
    {Family::spe, "spe"}, {Family::pe, "pe"},   {Family::psq, "psq"}, {Family::pq, "pq"},
    {Family::W, "W"},     {Family::S, "S"},     {Family::CS, "CS"},   {Family::H, "H"},
    {Family::Hfull, "Hfull"}, {Family::osp4_2_alpha, "osp4_2_alpha"}};

}  // namespace

const char* family_name(Family f) {
  for (const auto& [g, s] : kFamilies)
    if (g == f) return s;
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  for (const auto& [g, n] : kFamilies)
    if (s == n) return g;
  if (s == "H'") return Family::Hfull;
  if (s == "osp42") return Family::osp4_2_alpha;
  return std::nullopt;
}

AlgebraId AlgebraId::parse(const std::string& text) {
  std::smatch m;
  static const std::regex alpha_re(R"(osp\(4\|2;\s*(-?[0-9]+(/[0-9]+)?)\))");
  static const std::regex pair_re(R"(([A-Za-z]+)\((\d+)\|(\d+)\))");
  static const std::regex one_re(R"(([A-Za-z]+'?)\((\d+)\))");
  static const std::regex compact_re(R"(([A-Za-z]+?)(\d+))");
  if (std::regex_match(text, m, alpha_re)) return osp42(parse_rational(m[1].str()));
  auto fam = [&](const std::string& s) {
    auto f = family_from_name(s);
    if (!f) throw Error("unknown family '" + s + "'");
    return *f;
  };
  auto build_pair = [&](Family f, long a, long b) -> AlgebraId {
    switch (f) {
      case Family::gl:
      case Family::sl:
        return {f, {a, b}, std::nullopt};
      case Family::psl:
        if (a != b) throw Error("psl needs equal sizes");
        return psl(a);
      case Family::osp:
        if (b % 2) throw Error("osp(m|2n) needs an even odd dimension");
        return osp(a, b / 2);
      default:
        throw Error(std::string(family_name(f)) + " takes one parameter");
    }
  };
  if (std::regex_match(text, m, pair_re)) return build_pair(fam(m[1].str()), std::stol(m[2].str()), std::stol(m[3].str()));
  if (std::regex_match(text, m, one_re)) {
    Family f = fam(m[1].str());
    if (f == Family::gl || f == Family::sl || f == Family::psl || f == Family::osp)
      throw Error(std::string(family_name(f)) + " takes two parameters");
    return of(f, std::stol(m[2].str()));
  }
  if (std::regex_match(text, m, compact_re)) {
    Family f = fam(m[1].str());
    std::string d = m[2].str();
    if (f == Family::gl || f == Family::sl || f == Family::psl || f == Family::osp) {
      if (d.size() != 2) throw Error("compact form needs two digits: " + text);
      return build_pair(f, d[0] - '0', d[1] - '0');
    }
    return of(f, std::stol(d));
  }
  throw Error("cannot parse algebra '" + text + "'");
}

void AlgebraId::validate() const {
  std::string f = family_name(family);
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw Error(f + " takes " + std::to_string(k) + " parameter(s)");
  };
  auto min_n = [&](long lo) {
    need(1);
    if (params[0] < lo) throw Error(f + " requires n>=" + std::to_string(lo));
  };
  switch (family) {
    case Family::gl:
      need(2);
      if (params[0] < 0 || params[1] < 0 || params[0] + params[1] < 1) throw Error("gl requires m,n>=0 and m+n>=1");
      break;
    case Family::sl:
      need(2);
      if (params[0] < 1 || params[1] < 1) throw Error("sl requires m,n>=1");
      if (params[0] == params[1]) throw Error("sl requires m!=n (use psl)");
      break;
    case Family::psl:
      min_n(2);
      break;
    case Family::osp:
      need(2);
      if (params[0] < 1 || params[1] < 1) throw Error("osp requires m>=1 and n>=1");
      break;
    case Family::spe:
    case Family::pe:
    case Family::psq:
    case Family::pq:
    case Family::W:
      min_n(3);
      break;
    case Family::S:
    case Family::CS:
      min_n(4);
      break;
    case Family::H:
    case Family::Hfull:
      min_n(5);
      break;
    case Family::osp4_2_alpha: {
      if (!alpha) throw Error("osp4_2_alpha requires alpha");
      const Rational& a = *alpha;
      if (a == 0 || a == 1 || a == -1 || a == -2 || a == frac(-1, 2))
        throw Error("osp4_2_alpha requires alpha not in {0,1,-1,-2,-1/2}");
      break;
    }
  }
}

std::string AlgebraId::name() const {
  auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
  switch (family) {
    case Family::gl:
    case Family::sl:
      return std::string(family_name(family)) + "(" + p(0) + "|" + p(1) + ")";
    case Family::psl:
      return "psl(" + p(0) + "|" + p(0) + ")";
    case Family::osp:
      return "osp(" + p(0) + "|" + std::to_string(2 * params.at(1)) + ")";
    case Family::osp4_2_alpha:
      return "osp(4|2;" + (alpha ? to_string(*alpha) : std::string("?")) + ")";
    default:
      return std::string(family_name(family)) + "(" + p(0) + ")";
  }
}

bool AlgebraId::basic() const {
  return family == Family::sl || family == Family::psl || family == Family::osp || family == Family::osp4_2_alpha;
}

bool AlgebraId::cartan() const {
  return family == Family::W || family == Family::S || family == Family::CS || family == Family::H ||
         family == Family::Hfull;
}

// ---- matrix models ----

namespace {

LinearMap unit_matrix(const SuperSpace& v, int a, int b, const Rational& c = 1) {
  LinearMap f(v, v, v.parity(a) + v.parity(b));
  f.set_column(b, Vec::unit(a, c));
  return f;
}

LinearMap diag(const SuperSpace& v, const std::vector<Rational>& d) {
  LinearMap f(v, v, Parity::Even);
  for (int i = 0; i < v.dim(); ++i)
    if (!is_zero(d[i])) f.set_column(i, Vec::unit(i, d[i]));
  return f;
}

CoordinateSystem model_coordinates(const MatrixModel& m) {
  std::vector<Vec> flat;
  for (const auto& b : m.basis) flat.push_back(flatten(b));
  for (const auto& b : m.null) flat.push_back(flatten(b));
  return CoordinateSystem(endomorphism_space(m.v), flat);
}

Vec truncate(const Vec& c, int n) {
  std::vector<Term> t;
  for (const auto& x : c.terms())
    if (x.index < n) t.push_back(x);
  return Vec::from_pairs(std::move(t));
}

std::string idx(int i) { return std::to_string(i + 1); }

// Supertraceless diagonal combinations h_k, k < count.
std::vector<LinearMap> cartan_h(const SuperSpace& v, int count) {
  std::vector<LinearMap> out;
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> d(v.dim(), 0);
    d[k] = is_odd(v.parity(k)) ? -1 : 1;
    d[k + 1] = is_odd(v.parity(k + 1)) ? 1 : -1;
    out.push_back(diag(v, d));
  }
  return out;
}

MatrixModel gl_model(int m, int n, bool traceless, int h_count) {
  MatrixModel mm;
  mm.v = SuperSpace::standard(m, n);
  int N = m + n;
  if (traceless) {
    auto hs = cartan_h(mm.v, h_count);
    for (int k = 0; k < h_count; ++k) {
      mm.basis.push_back(hs[k]);
      mm.labels.push_back("h" + idx(k));
    }
  } else {
    for (int a = 0; a < N; ++a) {
      mm.basis.push_back(unit_matrix(mm.v, a, a));
      mm.labels.push_back("E" + idx(a) + "_" + idx(a));
    }
  }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (a != b) {
        mm.basis.push_back(unit_matrix(mm.v, a, b));
        mm.labels.push_back("E" + idx(a) + "_" + idx(b));
      }
  return mm;
}

// Form on C^{m|2n}: antidiagonal ones on the even block, on the odd block
// +1 at (j, 2n-1-j) for j < n and -1 for j >= n.
MatrixModel osp_model(int m, int n) {
  MatrixModel mm;
  mm.v = SuperSpace::standard(m, 2 * n);
  int N = m + 2 * n;
  auto form = [&](int u, int w) -> int {
    if (u < m && w < m) return u + w == m - 1 ? 1 : 0;
    if (u >= m && w >= m) {
      int j = u - m, k = w - m;
      if (j + k != 2 * n - 1) return 0;
      return j < n ? 1 : -1;
    }
    return 0;
  };
  for (Parity P : {Parity::Even, Parity::Odd}) {
    std::vector<int> var(N * N, -1);
    std::vector<std::pair<int, int>> ent;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (mm.v.parity(a) + mm.v.parity(b) == P) {
          var[a * N + b] = static_cast<int>(ent.size());
          ent.push_back({a, b});
        }
    Echelon e(static_cast<int>(ent.size()));
    // B(Xu, w) + (-1)^{|X||u|} B(u, Xw) = 0
    for (int u = 0; u < N; ++u)
      for (int w = 0; w < N; ++w) {
        std::vector<Term> row;
        int s = koszul(P, mm.v.parity(u));
        for (int a = 0; a < N; ++a) {
          if (int f = form(a, w); f && var[a * N + u] >= 0) row.push_back({var[a * N + u], f});
          if (int f = form(u, a); f && var[a * N + w] >= 0) row.push_back({var[a * N + w], s * f});
        }
        e.add(Vec::from_pairs(std::move(row)));
      }
    for (const auto& ns : e.null_space()) {
      LinearMap x(mm.v, mm.v, P);
      for (const auto& t : ns.terms()) {
        auto [a, b] = ent[t.index];
        x.set_column(b, x.column(b) + Vec::unit(a, t.value));
      }
      mm.basis.push_back(std::move(x));
      mm.labels.push_back("b" + std::to_string(mm.labels.size() + 1));
    }
  }
  return mm;
}

MatrixModel spe_model(int n, bool full) {
  MatrixModel mm;
  mm.v = SuperSpace::standard(n, n);
  const auto& v = mm.v;
  auto add = [&](LinearMap x, std::string l) {
    mm.basis.push_back(std::move(x));
    mm.labels.push_back(std::move(l));
  };
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<Rational> d(2 * n, 0);
    d[k] = 1;
    d[k + 1] = -1;
    d[n + k] = -1;
    d[n + k + 1] = 1;
    add(diag(v, d), "h" + idx(k));
  }
  if (full) {
    std::vector<Rational> d(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      d[i] = 1;
      d[n + i] = -1;
    }
    add(diag(v, d), "z");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) add(unit_matrix(v, i, j) - unit_matrix(v, n + j, n + i), "a" + idx(i) + "_" + idx(j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      add(i == j ? unit_matrix(v, i, n + i) : unit_matrix(v, i, n + j) + unit_matrix(v, j, n + i),
          "s" + idx(i) + "_" + idx(j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) add(unit_matrix(v, n + i, j) - unit_matrix(v, n + j, i), "c" + idx(i) + "_" + idx(j));
  return mm;
}

// [[A,B],[B,A]] with A, B traceless, modulo the identity.
MatrixModel psq_model(int n, bool full) {
  MatrixModel mm;
  mm.v = SuperSpace::standard(n, n);
  const auto& v = mm.v;
  auto even = [&](int i, int j, const Rational& c) { return unit_matrix(v, i, j, c) + unit_matrix(v, n + i, n + j, c); };
  auto odd = [&](int i, int j, const Rational& c) { return unit_matrix(v, i, n + j, c) + unit_matrix(v, n + i, j, c); };
  for (int pass = 0; pass < 2; ++pass) {
    auto mk = [&](int i, int j, const Rational& c) { return pass == 0 ? even(i, j, c) : odd(i, j, c); };
    std::string pre = pass == 0 ? "a" : "b";
    for (int k = 0; k + 1 < n; ++k) {
      mm.basis.push_back(mk(k, k, 1) + mk(k + 1, k + 1, -1));
      mm.labels.push_back(pre + "h" + idx(k));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          mm.basis.push_back(mk(i, j, 1));
          mm.labels.push_back(pre + idx(i) + "_" + idx(j));
        }
  }
  if (full) {
    LinearMap J(v, v, Parity::Odd);
    for (int i = 0; i < n; ++i) J = J + odd(i, i, 1);
    mm.basis.push_back(J);
    mm.labels.push_back("J");
  }
  mm.null.push_back(LinearMap::identity(v));
  return mm;
}

// ---- osp(4|2; alpha) ----

LieSuperalgebra osp42_algebra(const Rational& alpha) {
  // Even: e_i, h_i, f_i (i = 1..3); odd: v_{a1 a2 a3}, a = 0 (+) or 1 (-).
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (int i = 0; i < 3; ++i)
    for (const char* x : {"e", "h", "f"}) {
      labels.push_back(std::string(x) + idx(i));
      par.push_back(Parity::Even);
    }
  for (int s = 0; s < 8; ++s) {
    std::string l = "v";
    for (int i = 0; i < 3; ++i) l += (s >> (2 - i) & 1) ? "-" : "+";
    labels.push_back(l);
    par.push_back(Parity::Odd);
  }
  SuperSpace sp(labels, par);
  auto bit_of = [](int s, int i) { return s >> (2 - i) & 1; };
  // sl2 on C^2 with basis (+, -): matrices indexed [row][col].
  auto sl2_mat = [](int which, int r, int c) -> int {
    if (which == 0) return r == 0 && c == 1;    // e
    if (which == 1) return r == c ? (r == 0 ? 1 : -1) : 0;  // h
    return r == 1 && c == 0;                    // f
  };
  auto psi = [](int a, int b) { return a == 0 && b == 1 ? 1 : (a == 1 && b == 0 ? -1 : 0); };
  Rational sigma[3] = {-(1 + alpha), Rational(1), alpha};
  auto br = [&](int i, int j) -> Vec {
    std::vector<Term> acc;
    if (i < 9 && j < 9) {
      int fi = i / 3, fj = j / 3;
      if (fi != fj) return {};
      int a = i % 3, b = j % 3, o = 3 * fi;
      if (a == 0 && b == 1) acc.push_back({o, -2});
      if (a == 0 && b == 2) acc.push_back({o + 1, 1});
      if (a == 1 && b == 2) acc.push_back({o + 2, -2});
    } else if (i < 9) {
      int f = i / 3, x = i % 3, s = j - 9, a = bit_of(s, f);
      for (int r = 0; r < 2; ++r)
        if (int c = sl2_mat(x, r, a)) acc.push_back({9 + ((s & ~(1 << (2 - f))) | (r << (2 - f))), c});
    } else {
      int u = i - 9, w = j - 9;
      for (int f = 0; f < 3; ++f) {
        int pr = 1;
        for (int g = 0; g < 3; ++g)
          if (g != f) pr *= psi(bit_of(u, g), bit_of(w, g));
        if (!pr) continue;
        int a = bit_of(u, f), b = bit_of(w, f);
        // p(a,b) x = psi(a,x) b + psi(b,x) a
        int M[2][2] = {{0, 0}, {0, 0}};
        for (int x = 0; x < 2; ++x) {
          M[b][x] += psi(a, x);
          M[a][x] += psi(b, x);
        }
        Rational c = sigma[f] * pr;
        if (M[0][1]) acc.push_back({3 * f, c * M[0][1]});
        if (M[0][0]) acc.push_back({3 * f + 1, c * M[0][0]});
        if (M[1][0]) acc.push_back({3 * f + 2, c * M[1][0]});
      }
    }
    return Vec::from_pairs(std::move(acc));
  };
  AlgebraId id = AlgebraId::osp42(alpha);
  return from_brackets(sp, br, {id.name(), "osp4_2_alpha", {}, alpha, "sl2^3 + C2*C2*C2"});
}

// ---- Cartan algebras inside W(n) ----

Vec hamiltonian(const WContext& w, const Vec& f) {
  int n = w.ctx.n();
  std::vector<Vec> c(n);
  for (const auto& t : f.terms()) {
    bool odd = std::popcount(w.ctx.mask(t.index)) % 2;
    Rational s = odd ? t.value : Rational(-t.value);  // -(-1)^{p(f)}
    for (int a = 0; a < n; ++a) {
      Vec d = w.ctx.derive(a, Vec::unit(t.index));
      c[n - 1 - a].add_scaled(d, s);
    }
  }
  return w.field(c);
}

// ad of a W vector restricted to a subalgebra given by its W basis.
LinearMap restricted_ad(const WContext& w, const LieSuperalgebra& g, const std::vector<Vec>& basis, const Vec& x) {
  CoordinateSystem cs(w.algebra.space(), basis);
  LinearMap f(g.space(), g.space(), w.algebra.space().parity_of(x).value_or(Parity::Even));
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) f.set_column(k, cs.coordinates(w.algebra.bracket(x, basis[k])));
  return f;
}

struct CartanBuild {
  LieSuperalgebra algebra;
  std::vector<Vec> basis;
};

CartanBuild cartan_algebra(const WContext& w, Family f) {
  int n = w.ctx.n();
  const auto& W = w.algebra;
  std::vector<Vec> basis;
  std::vector<std::string> labels;
  auto units_labels = [&] {
    for (const auto& b : basis) labels.push_back(b.size() == 1 && b.terms()[0].value == 1 ? W.space().label(b.leading())
                                                                                        : "b" + std::to_string(labels.size() + 1));
  };
  switch (f) {
    case Family::W:
      for (int k = 0; k < W.dim(); ++k) basis.push_back(Vec::unit(k));
      units_labels();
      break;
    case Family::S:
    case Family::CS: {
      LinearMap div(W.space(), w.ctx.space(), Parity::Even);
      for (int k = 0; k < W.dim(); ++k) div.set_column(k, w.divergence(Vec::unit(k)));
      basis = kernel(div).basis();
      units_labels();
      if (f == Family::CS) {
        basis.push_back(w.euler());
        labels.push_back("E");
      }
      break;
    }
    case Family::H:
    case Family::Hfull:
      for (int m = 1; m < w.ctx.dim(); ++m) {
        if (m == w.ctx.top() && f == Family::H) continue;
        basis.push_back(hamiltonian(w, Vec::unit(m)));
        labels.push_back("H" + w.ctx.label(m));
      }
      break;
    default:
      throw Error("not a Cartan family");
  }
  AlgebraId id = AlgebraId::of(f, n);
  LieSuperalgebra g = restrict_to(W, basis, labels, id.name());
  g = g.with_info({id.name(), family_name(f), {n}, std::nullopt, "inside W(" + std::to_string(n) + ")"});
  return {g, basis};
}

CatalogEntry build_entry(const AlgebraId& id) {
  id.validate();
  CatalogEntry e;
  e.id = id;
  AlgebraInfo info{id.name(), family_name(id.family), id.params, id.alpha, "matrix model"};
  auto add_out = [&](std::string label, LinearMap map, std::string rule) {
    e.out.generators.push_back({std::move(label), std::move(map), std::move(rule)});
  };
  auto model_torus = [&](const std::vector<std::string>& sym, const std::vector<std::vector<Rational>>& diags) {
    for (std::size_t t = 0; t < sym.size(); ++t) {
      e.torus.symbols.push_back(sym[t]);
      e.torus.ops.push_back(model_ad(*e.model, e.algebra.space(), diag(e.model->v, diags[t])));
    }
  };
  switch (id.family) {
    case Family::gl:
    case Family::sl:
    case Family::psl: {
      int m = id.params[0], n = id.family == Family::psl ? m : id.params[1];
      if (id.family == Family::gl)
        e.model = gl_model(m, n, false, 0);
      else
        e.model = gl_model(m, n, true, id.family == Family::psl ? m + n - 2 : m + n - 1);
      if (id.family == Family::psl) e.model->null.push_back(LinearMap::identity(e.model->v));
      e.algebra = algebra_from_model(*e.model, info);
      std::vector<std::string> sym;
      std::vector<std::vector<Rational>> d;
      for (int t = 0; t < m + n; ++t) {
        sym.push_back(t < m ? "e" + idx(t) : "d" + idx(t - m));
        std::vector<Rational> x(m + n, 0);
        x[t] = 1;
        d.push_back(x);
      }
      model_torus(sym, d);
      if (id.family == Family::psl) {
        std::vector<Rational> z(2 * m, 0);
        for (int t = 0; t < m; ++t) z[t] = 1;
        LinearMap Z = model_ad(*e.model, e.algebra.space(), diag(e.model->v, z));
        add_out("Z", Z, "0");
        if (m == 2) {
          // Z_± have torus weight ±(e1+e2-d1-d2); Z_+ maps the lower odd block to the upper one.
          Subspace der = derivations(e.algebra);
          auto weight_part = [&](int sign) {
            std::vector<Vec> units;
            int N = e.algebra.dim();
            for (int k = 0; k < N; ++k)
              for (int l = 0; l < N; ++l) {
                bool ok = true;
                for (int t = 0; t < 4 && ok; ++t) {
                  Rational mu = sign * (t < 2 ? 1 : -1);
                  ok = e.torus.ops[t].entry(k, k) - e.torus.ops[t].entry(l, l) == mu;
                }
                if (ok) units.push_back(Vec::unit(k * N + l));
              }
            Subspace s = intersect(der, Subspace::span(der.ambient(), units));
            if (s.dim() != 1) throw Error("psl(2|2): expected a one-dimensional weight space of derivations");
            return unflatten(e.algebra.space(), s.basis()[0], Parity::Even);
          };
          LinearMap Zp = weight_part(1), Zm = weight_part(-1);
          LinearMap c = Zp.supercommutator(Zm);
          // c = lambda Z
          Rational lambda;
          for (int j = 0; j < c.domain().dim() && is_zero(lambda); ++j)
            if (!Z.column(j).empty()) lambda = c.entry(Z.column(j).leading(), j) / Z.column(j).terms()[0].value;
          if (is_zero(lambda) || !(flatten(c) == flatten(Z.scaled(lambda)))) throw Error("psl(2|2): [Z+,Z-] is not a multiple of Z");
          Zm = Zm.scaled(1 / lambda);
          add_out("Z+", Zp, "l1+2l2+l3 | l1-l3 | l1+l3");
          add_out("Z-", Zm, "-deg(Z+)");
        }
      }
      break;
    }
    case Family::osp: {
      int m = id.params[0], n = id.params[1];
      e.model = osp_model(m, n);
      e.algebra = algebra_from_model(*e.model, info);
      int k = m / 2, N = m + 2 * n;
      std::vector<std::string> sym;
      std::vector<std::vector<Rational>> d;
      for (int t = 0; t < k; ++t) {
        sym.push_back("e" + idx(t));
        std::vector<Rational> x(N, 0);
        x[t] = 1;
        x[m - 1 - t] = -1;
        d.push_back(x);
      }
      for (int t = 0; t < n; ++t) {
        sym.push_back("d" + idx(t));
        std::vector<Rational> x(N, 0);
        x[m + t] = 1;
        x[m + 2 * n - 1 - t] = -1;
        d.push_back(x);
      }
      model_torus(sym, d);
      break;
    }
    case Family::spe:
    case Family::pe: {
      int n = id.params[0];
      e.model = spe_model(n, id.family == Family::pe);
      e.algebra = algebra_from_model(*e.model, info);
      std::vector<std::string> sym;
      std::vector<std::vector<Rational>> d;
      for (int t = 0; t < n; ++t) {
        sym.push_back("e" + idx(t));
        std::vector<Rational> x(2 * n, 0);
        x[t] = 1;
        x[n + t] = -1;
        d.push_back(x);
      }
      model_torus(sym, d);
      if (id.family == Family::spe) {
        std::vector<Rational> z(2 * n, 0);
        for (int t = 0; t < n; ++t) {
          z[t] = frac(1, 2);
          z[n + t] = frac(-1, 2);
        }
        add_out("D", model_ad(*e.model, e.algebra.space(), diag(e.model->v, z)), "0");
      }
      break;
    }
    case Family::psq:
    case Family::pq: {
      int n = id.params[0];
      e.model = psq_model(n, id.family == Family::pq);
      e.algebra = algebra_from_model(*e.model, info);
      std::vector<std::string> sym;
      std::vector<std::vector<Rational>> d;
      for (int t = 0; t < n; ++t) {
        sym.push_back("e" + idx(t));
        std::vector<Rational> x(2 * n, 0);
        x[t] = 1;
        x[n + t] = 1;
        d.push_back(x);
      }
      model_torus(sym, d);
      if (id.family == Family::psq) {
        LinearMap J(e.model->v, e.model->v, Parity::Odd);
        for (int i = 0; i < n; ++i) J = J + unit_matrix(e.model->v, i, n + i) + unit_matrix(e.model->v, n + i, i);
        add_out("D", model_ad(*e.model, e.algebra.space(), J.scaled(frac(1, 2))), "0");
      }
      break;
    }
    case Family::osp4_2_alpha: {
      e.algebra = osp42_algebra(*id.alpha);
      for (int t = 0; t < 3; ++t) {
        e.torus.symbols.push_back("e" + idx(t));
        e.torus.ops.push_back(e.algebra.ad_basis(3 * t + 1));
      }
      break;
    }
    case Family::W:
    case Family::S:
    case Family::CS:
    case Family::H:
    case Family::Hfull: {
      int n = id.params[0];
      e.w = build_W(n);
      auto cb = cartan_algebra(*e.w, id.family);
      e.algebra = cb.algebra;
      e.w_basis = cb.basis;
      const auto& w = *e.w;
      auto field_of = [&](int a, int b, int sign) {  // ξ^a∂_a + sign ξ^b∂_b
        Vec v = Vec::unit(w.index(w.ctx.generator(a), a));
        if (sign) v = v + Vec::unit(w.index(w.ctx.generator(b), b), sign);
        return v;
      };
      bool ham = id.family == Family::H || id.family == Family::Hfull;
      if (!ham) {
        for (int a = 0; a < n; ++a) {
          e.torus.symbols.push_back("e" + idx(a));
          e.torus.ops.push_back(restricted_ad(w, e.algebra, e.w_basis, field_of(a, a, 0)));
        }
      } else {
        for (int a = 0; a < n / 2; ++a) {
          e.torus.symbols.push_back("e" + idx(a));
          e.torus.ops.push_back(restricted_ad(w, e.algebra, e.w_basis, field_of(a, n - 1 - a, -1)));
        }
      }
      if (id.family == Family::S) add_out("E", restricted_ad(w, e.algebra, e.w_basis, w.euler()), "0");
      if (id.family == Family::H) {
        add_out("E", restricted_ad(w, e.algebra, e.w_basis, w.euler()), "0");
        add_out("Htop", restricted_ad(w, e.algebra, e.w_basis, hamiltonian(w, Vec::unit(w.ctx.top()))), "computed");
      }
      break;
    }
  }
  for (const auto& g : e.out.generators)
    if (!is_derivation(e.algebra, g.map)) throw Error("outer generator " + g.label + " is not a derivation");
  return e;
}

}  // namespace

LieSuperalgebra algebra_from_model(const MatrixModel& m, AlgebraInfo info) {
  CoordinateSystem cs = model_coordinates(m);
  int n = static_cast<int>(m.basis.size());
  std::vector<Parity> par;
  for (const auto& b : m.basis) par.push_back(b.parity());
  SuperSpace sp(m.labels, par);
  TableBuilder tb(sp);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tb.set(i, j, truncate(cs.coordinates(flatten(m.basis[i].supercommutator(m.basis[j]))), n));
  return tb.build(std::move(info));
}

LinearMap model_ad(const MatrixModel& m, const SuperSpace& g_space, const LinearMap& M) {
  CoordinateSystem cs = model_coordinates(m);
  int n = static_cast<int>(m.basis.size());
  LinearMap f(g_space, g_space, M.parity());
  for (int j = 0; j < n; ++j) f.set_column(j, truncate(cs.coordinates(flatten(M.supercommutator(m.basis[j]))), n));
  return f;
}

std::vector<LinearMap> OuterGenerators::maps() const {
  std::vector<LinearMap> out;
  for (const auto& g : generators) out.push_back(g.map);
  return out;
}

std::pair<int, int> OuterGenerators::out_dim() const {
  int e = 0, o = 0;
  for (const auto& g : generators) (is_odd(g.map.parity()) ? o : e)++;
  return {e, o};
}

const CatalogEntry& catalog_entry(const AlgebraId& id) {
  static std::mutex mu;
  static std::map<std::string, CatalogEntry> cache;
  std::string key = id.name();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CatalogEntry e = build_entry(id);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(e)).first->second;
}

LieSuperalgebra construct(const AlgebraId& id) { return catalog_entry(id).algebra; }

OuterGenerators outer_generators(const AlgebraId& id) { return catalog_entry(id).out; }

std::optional<std::pair<int, int>> expected_out_dim(const AlgebraId& id) {
  switch (id.family) {
    case Family::psl:
      return id.params[0] == 2 ? std::make_pair(3, 0) : std::make_pair(1, 0);
    case Family::S:
    case Family::spe:
      return std::make_pair(1, 0);
    case Family::psq:
      return std::make_pair(0, 1);
    case Family::H:
      return id.params[0] % 2 ? std::make_pair(1, 1) : std::make_pair(2, 0);
    case Family::sl:
    case Family::osp:
    case Family::osp4_2_alpha:
    case Family::W:
      return std::make_pair(0, 0);
    default:
      return std::nullopt;
  }
}

}  // namespace supergrade
