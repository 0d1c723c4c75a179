#include "supergrade/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace supergrade {

namespace {

std::string monomial_label(unsigned m) {
  if (m == 0) return "1";
  std::string s;
  for (int a = 0; m >> a; ++a)
    if (m >> a & 1u) s += "x" + std::to_string(a + 1);
  return s;
}

int popcount(unsigned m) { return std::popcount(m); }

}  // namespace

GrassmannContext::GrassmannContext(int n) : n_(n) {
  if (n < 0 || n > 16) throw Error("Grassmann algebra needs 0 <= n <= 16");
  unsigned total = 1u << n;
  masks_.resize(total);
  std::iota(masks_.begin(), masks_.end(), 0u);
  // (|S|, lex on sorted elements): compare element lists directly.
  auto elems = [](unsigned m) {
    std::vector<int> e;
    for (int a = 0; m >> a; ++a)
      if (m >> a & 1u) e.push_back(a);
    return e;
  };
  std::sort(masks_.begin(), masks_.end(), [&](unsigned a, unsigned b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return elems(a) < elems(b);
  });
  index_.assign(total, -1);
  std::vector<std::string> labels;
  std::vector<Parity> par;
  std::vector<Vec> plus;
  for (unsigned i = 0; i < total; ++i) {
    index_[masks_[i]] = static_cast<int>(i);
    labels.push_back(monomial_label(masks_[i]));
    par.push_back(popcount(masks_[i]) % 2 ? Parity::Odd : Parity::Even);
    if (i > 0) plus.push_back(Vec::unit(static_cast<int>(i)));
  }
  space_ = SuperSpace(std::move(labels), std::move(par));
  plus_ = Subspace::span(space_, plus);
}

GrassmannContext build_lambda(int n) { return GrassmannContext(n); }

std::pair<int, int> GrassmannContext::multiply_basis(int a, int b) const {
  unsigned A = masks_[a], B = masks_[b];
  if (A & B) return {0, -1};
  int inv = 0;
  for (int t = 0; B >> t; ++t)
    if (B >> t & 1u) inv += popcount(A >> (t + 1));
  return {inv % 2 ? -1 : 1, index_[A | B]};
}

Vec GrassmannContext::multiply(const Vec& x, const Vec& y) const {
  std::vector<Term> acc;
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) {
      auto [sg, k] = multiply_basis(s.index, t.index);
      if (sg == 0) continue;
      Rational c = s.value * t.value;
      if (sg < 0) c = -c;
      acc.push_back({k, std::move(c)});
    }
  return Vec::from_pairs(std::move(acc));
}

std::pair<int, int> GrassmannContext::derive_basis(int a, int mono) const {
  unsigned S = masks_[mono];
  if (!(S >> a & 1u)) return {0, -1};
  int below = popcount(S & ((1u << a) - 1u));
  return {below % 2 ? -1 : 1, index_[S & ~(1u << a)]};
}

Vec GrassmannContext::derive(int a, const Vec& f) const {
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    auto [sg, k] = derive_basis(a, t.index);
    if (sg == 0) continue;
    acc.push_back({k, sg > 0 ? t.value : Rational(-t.value)});
  }
  return Vec::from_pairs(std::move(acc));
}

// ---- W(n) ----

std::vector<Vec> WContext::coefficients(const Vec& field) const {
  int n = ctx.n();
  std::vector<std::vector<Term>> c(n);
  for (const auto& t : field.terms()) c[t.index % n].push_back({t.index / n, t.value});
  std::vector<Vec> out;
  for (auto& v : c) out.push_back(Vec::from_pairs(std::move(v)));
  return out;
}

Vec WContext::field(const std::vector<Vec>& coeffs) const {
  std::vector<Term> acc;
  for (int a = 0; a < static_cast<int>(coeffs.size()); ++a)
    for (const auto& t : coeffs[a].terms()) acc.push_back({index(t.index, a), t.value});
  return Vec::from_pairs(std::move(acc));
}

LinearMap WContext::action(const Vec& field) const {
  Parity p = algebra.space().parity_of(field).value_or(Parity::Even);
  auto c = coefficients(field);
  LinearMap f(ctx.space(), ctx.space(), p);
  for (int m = 0; m < ctx.dim(); ++m) {
    Vec col;
    for (int a = 0; a < ctx.n(); ++a) {
      if (c[a].empty()) continue;
      Vec d = ctx.derive(a, Vec::unit(m));
      if (!d.empty()) col = col + ctx.multiply(c[a], d);
    }
    f.set_column(m, std::move(col));
  }
  return f;
}

Vec WContext::divergence(const Vec& field) const {
  auto c = coefficients(field);
  Vec out;
  for (int a = 0; a < ctx.n(); ++a)
    for (const auto& t : c[a].terms()) {
      Vec d = ctx.derive(a, Vec::unit(t.index));
      bool odd = popcount(ctx.mask(t.index)) % 2;
      out.add_scaled(d, odd ? Rational(-t.value) : t.value);
    }
  return out;
}

Vec WContext::euler() const {
  std::vector<Vec> c;
  for (int a = 0; a < ctx.n(); ++a) c.push_back(Vec::unit(ctx.generator(a)));
  return field(c);
}

WContext build_W(int n) {
  WContext w;
  w.ctx = GrassmannContext(n);
  const auto& L = w.ctx;
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (int m = 0; m < L.dim(); ++m)
    for (int a = 0; a < n; ++a) {
      std::string d = "d" + std::to_string(a + 1);
      labels.push_back(m == 0 ? d : L.label(m) + "." + d);
      par.push_back(flip(L.space().parity(m)));
    }
  SuperSpace sp(std::move(labels), std::move(par));
  // [ξ^S∂_a, ξ^T∂_b] = ξ^S(∂_a ξ^T)∂_b − (−1)^{|X||Y|} ξ^T(∂_b ξ^S)∂_a
  auto br = [&](int i, int j) {
    int S = i / n, a = i % n, T = j / n, b = j % n;
    std::vector<Term> acc;
    auto [s1, k1] = L.derive_basis(a, T);
    if (s1) {
      auto [s2, k2] = L.multiply_basis(S, k1);
      if (s2) acc.push_back({k2 * n + b, s1 * s2});
    }
    auto [s3, k3] = L.derive_basis(b, S);
    if (s3) {
      auto [s4, k4] = L.multiply_basis(T, k3);
      if (s4) acc.push_back({k4 * n + a, -koszul(sp.parity(i), sp.parity(j)) * s3 * s4});
    }
    return Vec::from_pairs(std::move(acc));
  };
  w.algebra = from_brackets(sp, br, {"W(" + std::to_string(n) + ")", "W", {n}, std::nullopt, "vector fields"});
  std::vector<Vec> cf, pp;
  for (int k = 0; k < sp.dim(); ++k) (k < n ? cf : pp).push_back(Vec::unit(k));
  w.constant_fields = Subspace::span(sp, cf);
  w.positive_part = Subspace::span(sp, pp);
  return w;
}

// ---- type-k gradings ----

int GradingTypeK::n() const {
  int s = 0;
  for (const auto& [k, m] : spectrum) s += m;
  return s;
}

std::vector<int> GradingTypeK::generator_degrees() const {
  std::vector<int> d;
  for (const auto& [k, m] : spectrum) d.insert(d.end(), m, k);
  return d;
}

std::string GradingTypeK::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spectrum[i].first) + "^" + std::to_string(spectrum[i].second);
  }
  return s + ")";
}

GradingTypeK type_k(std::vector<std::pair<int, int>> spectrum) {
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i].second < 1) throw Error("type-k multiplicities must be positive");
    if (i && spectrum[i].first <= spectrum[i - 1].first) throw Error("type-k spectrum must be strictly increasing");
  }
  return {std::move(spectrum)};
}

std::vector<int> lambda_degrees(const GrassmannContext& ctx, const std::vector<int>& gen) {
  if (static_cast<int>(gen.size()) != ctx.n()) throw Error("spectrum size does not match n");
  std::vector<int> d(ctx.dim(), 0);
  for (int m = 0; m < ctx.dim(); ++m)
    for (int a = 0; a < ctx.n(); ++a)
      if (ctx.mask(m) >> a & 1u) d[m] += gen[a];
  return d;
}

std::vector<int> field_degrees(const WContext& w, const std::vector<int>& gen) {
  auto ld = lambda_degrees(w.ctx, gen);
  std::vector<int> d;
  for (int m = 0; m < w.ctx.dim(); ++m)
    for (int a = 0; a < w.ctx.n(); ++a) d.push_back(ld[m] - gen[a]);
  return d;
}

TypeKGrading grading_type_k(const WContext& w, const GradingTypeK& k) {
  if (k.n() != w.ctx.n()) throw Error("spectrum size does not match n");
  auto gen = k.generator_degrees();
  return {lambda_degrees(w.ctx, gen), Grading::from_degrees(w.algebra, field_degrees(w, gen))};
}

int depth_lambda(const GradingTypeK& k) {
  int d = 0;
  for (const auto& [ki, ni] : k.spectrum)
    if (ki < 0) d += -ki * ni;
  return d;
}

int depth_W(const GradingTypeK& k) {
  if (k.spectrum.empty()) return 0;
  return std::max(0, k.spectrum.back().first + depth_lambda(k));
}

bool is_admissible(const WContext& w, const Subspace& F) {
  if (!is_subalgebra(w.algebra, F)) throw Error("F is not a subalgebra of W");
  int n = w.ctx.n();
  Echelon e(n);
  for (const auto& b : F.basis()) {
    std::vector<Term> t;
    for (const auto& x : b.terms())
      if (x.index < n) t.push_back(x);
    e.add(Vec::from_pairs(std::move(t)));
  }
  return e.rank() == n;
}

// ---- s ⊗ Λ and s_max ----

LieSuperalgebra tensor_s_lambda(const LieSuperalgebra& s, const GrassmannContext& ctx) {
  int D = ctx.dim();
  SuperSpace sp = tensor(s.space(), ctx.space());
  auto br = [&](int i, int j) {
    int x = i / D, a = i % D, y = j / D, b = j % D;
    auto [sg, m] = ctx.multiply_basis(a, b);
    if (sg == 0) return Vec();
    sg *= koszul(ctx.space().parity(a), s.parity(y));
    std::vector<Term> acc;
    Vec xy = s.bracket_basis(x, y);
    for (const auto& t : xy.terms()) acc.push_back({t.index * D + m, sg * t.value});
    return Vec::from_pairs(std::move(acc));
  };
  AlgebraInfo info;
  info.name = s.name() + "*L(" + std::to_string(ctx.n()) + ")";
  info.provenance = "tensor with Grassmann algebra";
  return from_brackets(sp, br, info);
}

IntermediateAlgebra build_smax(const LieSuperalgebra& s, const std::vector<LinearMap>& out_generators,
                               const GrassmannContext& ctx) {
  IntermediateAlgebra ia;
  ia.s = s;
  ia.out_generators = out_generators;
  std::vector<std::string> olab;
  for (std::size_t k = 0; k < out_generators.size(); ++k) olab.push_back("out" + std::to_string(k + 1));
  if (out_generators.empty()) {
    ia.der = s;
  } else {
    LieSuperalgebra outalg = algebra_of_maps(out_generators, olab, "out(" + s.name() + ")");
    ia.der = semidirect_sum(s, outalg, out_generators, "der(" + s.name() + ")");
  }
  ia.w = build_W(ctx.n());
  ia.socle = tensor_s_lambda(s, ctx);

  const auto& L = ia.w.ctx;
  const auto& W = ia.w.algebra;
  const auto& der = ia.der;
  int D = L.dim(), nd = der.dim(), base = nd * D;

  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (int d = 0; d < nd; ++d)
    for (int m = 0; m < D; ++m) {
      labels.push_back(der.space().label(d) + "*" + L.label(m));
      par.push_back(der.parity(d) + L.space().parity(m));
    }
  for (int k = 0; k < W.dim(); ++k) {
    labels.push_back(W.space().label(k));
    par.push_back(W.parity(k));
  }
  SuperSpace sp(std::move(labels), std::move(par));

  std::vector<LinearMap> act;
  for (int k = 0; k < W.dim(); ++k) act.push_back(ia.w.action(Vec::unit(k)));

  auto br = [&](int i, int j) -> Vec {
    std::vector<Term> acc;
    if (j < base) {  // both in der(s)⊗Λ
      int d1 = i / D, a = i % D, d2 = j / D, b = j % D;
      auto [sg, m] = L.multiply_basis(a, b);
      if (sg == 0) return {};
      sg *= koszul(L.space().parity(a), der.parity(d2));
      Vec c = der.bracket_basis(d1, d2);
      for (const auto& t : c.terms()) acc.push_back({t.index * D + m, sg * t.value});
    } else if (i < base) {  // [D⊗a, X] = −(−1)^{|D⊗a||X|}(−1)^{|X||D|} D⊗X(a)
      int d = i / D, a = i % D, k = j - base;
      int sg = -koszul(sp.parity(i), sp.parity(j)) * koszul(sp.parity(j), der.parity(d));
      for (const auto& t : act[k].column(a).terms()) acc.push_back({d * D + t.index, sg * t.value});
    } else {
      for (const auto& t : W.upper(i - base, j - base).terms()) acc.push_back({t.index + base, t.value});
    }
    return Vec::from_pairs(std::move(acc));
  };
  AlgebraInfo info;
  info.name = "smax(" + s.name() + "," + std::to_string(ctx.n()) + ")";
  info.provenance = "der(s)*L + W";
  ia.smax = from_brackets(sp, br, info);

  std::vector<Vec> soc, out;
  for (int d = 0; d < nd; ++d)
    for (int m = 0; m < D; ++m) (d < s.dim() ? soc : out).push_back(Vec::unit(d * D + m));
  for (int k = 0; k < W.dim(); ++k) out.push_back(Vec::unit(base + k));
  ia.socle_in_smax = Subspace::span(sp, soc);
  ia.out_in_smax = Subspace::span(sp, out);
  ia.g = Subspace::full(sp);

  ia.projection_to_W = LinearMap(sp, W.space(), Parity::Even);
  ia.projection_to_dV = LinearMap(sp, W.space(), Parity::Even);
  for (int k = 0; k < W.dim(); ++k) {
    ia.projection_to_W.set_column(base + k, Vec::unit(k));
    if (k < L.n()) ia.projection_to_dV.set_column(base + k, Vec::unit(k));
  }
  ia.admissible = true;
  return ia;
}

IntermediateAlgebra build_intermediate(const IntermediateAlgebra& smax, const std::vector<Vec>& F_gens, bool close) {
  IntermediateAlgebra ia = smax;
  for (const auto& f : F_gens)
    if (!smax.out_in_smax.contains(f)) throw Error("F is not inside out(s^L)");
  Subspace F = close ? subalgebra_generated(smax.smax, F_gens) : Subspace::span(smax.smax.space(), F_gens);
  if (!is_subalgebra(smax.smax, F)) throw Error("F is not a subalgebra");
  ia.g = sum(smax.socle_in_smax, F);
  if (!is_subalgebra(smax.smax, ia.g)) throw Error("s^L + F is not a subalgebra");
  ia.admissible = image(smax.projection_to_dV, F).dim() == smax.n();
  return ia;
}

std::vector<int> smax_degrees(const IntermediateAlgebra& ia, const std::vector<int>& der_degree,
                              const std::vector<int>& gen_degree) {
  if (static_cast<int>(der_degree.size()) != ia.der.dim()) throw Error("one degree per der(s) basis vector");
  auto ld = lambda_degrees(ia.w.ctx, gen_degree);
  auto fd = field_degrees(ia.w, gen_degree);
  std::vector<int> d;
  for (int x = 0; x < ia.der.dim(); ++x)
    for (int m = 0; m < ia.w.ctx.dim(); ++m) d.push_back(der_degree[x] + ld[m]);
  d.insert(d.end(), fd.begin(), fd.end());
  return d;
}

GradedIntermediate graded_intermediate(const IntermediateAlgebra& ia, const std::vector<int>& smax_degree) {
  Grading G = Grading::from_degrees(ia.smax, smax_degree);
  GradedIntermediate out;
  std::vector<Vec> basis;
  int total = 0;
  for (const auto& [p, piece] : G.pieces()) {
    Subspace part = intersect(piece, ia.g);
    total += part.dim();
    for (auto& v : graded_basis(part)) basis.push_back(std::move(v));
  }
  if (total != ia.g.dim()) throw Error("g is not graded by the given degrees");
  out.algebra = restrict_to(ia.smax, basis, {}, "g<" + ia.smax.name() + ">");
  out.grading = restrict_grading(G, out.algebra, basis);
  out.basis = std::move(basis);
  return out;
}

MinimalityReport socle_minimality_check(const IntermediateAlgebra& ia) {
  MinimalityReport r;
  const auto& L = ia.smax;
  r.is_ideal = ia.g.contains(ia.socle_in_smax) &&
               ia.socle_in_smax.contains(bracket_span(L, ia.g, ia.socle_in_smax));
  // Adjoint action of g on s⊗Λ.
  const auto& soc = ia.socle_in_smax;
  std::vector<std::string> labels;
  std::vector<Parity> par;
  for (int k = 0; k < soc.dim(); ++k) {
    labels.push_back("m" + std::to_string(k));
    par.push_back(L.space().parity(soc.pivots()[k]));
  }
  SuperSpace m(labels, par);
  std::vector<LinearMap> action;
  for (const auto& x : graded_basis(ia.g)) {
    LinearMap f(m, m, L.space().parity_of(x).value_or(Parity::Even));
    for (int k = 0; k < soc.dim(); ++k) f.set_column(k, soc.coordinates_vec(L.bracket(x, soc.basis()[k])));
    if (!f.is_zero()) action.push_back(std::move(f));
  }
  r.minimal = r.is_ideal && is_irreducible_Gtype(action);
  // s⊗Λ⁺
  std::vector<Vec> plus;
  int D = ia.w.ctx.dim();
  for (int x = 0; x < ia.s.dim(); ++x)
    for (int a = 1; a < D; ++a) plus.push_back(Vec::unit(x * D + a));
  Subspace sp = Subspace::span(L.space(), plus);
  r.positive_part_is_ideal = !sp.is_zero() && sp.contains(bracket_span(L, ia.g, sp));
  return r;
}

}  // namespace supergrade
