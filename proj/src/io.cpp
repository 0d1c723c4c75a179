#include "supergrade/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace supergrade {

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Remainder of the line after the keyword, trimmed.
std::string rest(const std::string& line, const std::string& key) {
  auto s = line.substr(line.find(key) + key.size());
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

long to_long(int ln, const std::string& w, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(w, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != w.size() || w.empty()) throw ParseError(ln, std::string("bad ") + what + " '" + w + "'");
  return v;
}

Rational scalar(int ln, const std::string& w) {
  Rational q;
  try {
    q = parse_rational(w);
  } catch (const Error& e) {
    throw ParseError(ln, e.what());
  }
  if (q.get_str() != w) throw ParseError(ln, "scalar '" + w + "' not in reduced form");
  return q;
}

std::string field(std::string s) {
  if (s.empty()) return "-";
  for (auto& c : s)
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  return s;
}

}  // namespace

std::string serialize_algebra(const LieSuperalgebra& g, const std::optional<std::vector<int>>& degrees) {
  const auto& info = g.info();
  std::ostringstream out;
  out << "# supergrade algebra " << dims(g.sdim()) << "\n";
  out << "name " << info.name << "\n";
  if (!info.family.empty()) out << "family " << info.family << "\n";
  if (!info.params.empty()) {
    out << "params";
    for (long p : info.params) out << ' ' << p;
    out << "\n";
  }
  if (info.alpha) out << "alpha " << to_string(*info.alpha) << "\n";
  if (!info.provenance.empty()) out << "provenance " << info.provenance << "\n";
  out << "field Q\n";
  for (int i = 0; i < g.dim(); ++i) out << "basis " << i << ' ' << parity_name(g.parity(i)) << ' ' << g.space().label(i) << "\n";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      const Vec& v = g.upper(i, j);
      if (v.empty()) continue;
      out << "bracket " << i << ' ' << j;
      for (const auto& t : v.terms()) out << ' ' << t.index << ':' << to_string(t.value);
      out << "\n";
    }
  if (degrees) {
    if (static_cast<int>(degrees->size()) != g.dim()) throw Error("degree list does not match the basis");
    for (int i = 0; i < g.dim(); ++i) out << "deg " << i << ' ' << (*degrees)[i] << "\n";
  }
  return out.str();
}

AlgebraFile parse_algebra(std::string_view text) {
  AlgebraInfo info;
  bool have_name = false, have_field = false;
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  struct Line {
    int line;
    int i, j;
    Vec v;
  };
  std::vector<Line> brackets;
  std::map<int, int> deg;
  std::set<std::pair<long, long>> seen;

  std::istringstream in{std::string(text)};
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto w = words(line);
    if (w.empty()) continue;
    const auto& key = w[0];
    if (key == "name") {
      info.name = rest(line, "name");
      if (info.name.empty()) throw ParseError(ln, "empty name");
      have_name = true;
    } else if (key == "family") {
      if (w.size() != 2) throw ParseError(ln, "family takes one word");
      info.family = w[1];
    } else if (key == "params") {
      for (std::size_t k = 1; k < w.size(); ++k) info.params.push_back(to_long(ln, w[k], "parameter"));
    } else if (key == "alpha") {
      if (w.size() != 2) throw ParseError(ln, "alpha takes one scalar");
      info.alpha = scalar(ln, w[1]);
    } else if (key == "provenance") {
      info.provenance = rest(line, "provenance");
    } else if (key == "field") {
      if (w.size() != 2 || w[1] != "Q") throw ParseError(ln, "only field Q is supported");
      have_field = true;
    } else if (key == "basis") {
      if (w.size() != 4) throw ParseError(ln, "basis line needs index, parity, label");
      if (!brackets.empty()) throw ParseError(ln, "basis line after bracket lines");
      long i = to_long(ln, w[1], "basis index");
      if (i != static_cast<long>(labels.size())) throw ParseError(ln, "basis index " + w[1] + " out of sequence");
      if (w[2] == "even")
        parities.push_back(Parity::Even);
      else if (w[2] == "odd")
        parities.push_back(Parity::Odd);
      else
        throw ParseError(ln, "parity must be even or odd, got '" + w[2] + "'");
      labels.push_back(w[3]);
    } else if (key == "bracket") {
      if (w.size() < 4) throw ParseError(ln, "bracket line needs i, j and at least one term");
      long i = to_long(ln, w[1], "index"), j = to_long(ln, w[2], "index");
      long n = static_cast<long>(labels.size());
      if (i < 0 || j < 0 || i >= n || j >= n) throw ParseError(ln, "bracket index out of range");
      if (i > j) throw ParseError(ln, "bracket lines need i <= j");
      if (seen.count({i, j})) throw ParseError(ln, "duplicate bracket " + w[1] + " " + w[2]);
      seen.insert({i, j});
      std::vector<Term> terms;
      long last = -1;
      for (std::size_t k = 3; k < w.size(); ++k) {
        auto c = w[k].find(':');
        if (c == std::string::npos) throw ParseError(ln, "term '" + w[k] + "' is not index:scalar");
        long idx = to_long(ln, w[k].substr(0, c), "term index");
        if (idx < 0 || idx >= n) throw ParseError(ln, "term index out of range");
        if (idx <= last) throw ParseError(ln, "term indices must increase");
        last = idx;
        Rational q = scalar(ln, w[k].substr(c + 1));
        if (is_zero(q)) throw ParseError(ln, "zero coefficient");
        terms.push_back({static_cast<int>(idx), q});
      }
      brackets.push_back({ln, static_cast<int>(i), static_cast<int>(j), Vec::from_pairs(std::move(terms))});
    } else if (key == "deg") {
      if (w.size() != 3) throw ParseError(ln, "deg line needs index and degree");
      long i = to_long(ln, w[1], "index");
      if (i < 0 || i >= static_cast<long>(labels.size())) throw ParseError(ln, "deg index out of range");
      if (deg.count(static_cast<int>(i))) throw ParseError(ln, "duplicate deg " + w[1]);
      deg[static_cast<int>(i)] = static_cast<int>(to_long(ln, w[2], "degree"));
    } else {
      throw ParseError(ln, "unknown keyword '" + key + "'");
    }
  }
  if (!have_name) throw ParseError(0, "missing name line");
  if (!have_field) throw ParseError(0, "missing field line");

  SuperSpace space(labels, parities);
  int n = space.dim();
  std::vector<Vec> upper(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (const auto& b : brackets) {
    auto p = space.parity_of(b.v);
    if (!p || *p != space.parity(b.i) + space.parity(b.j)) throw ParseError(b.line, "bracket breaks parity");
    upper[b.i * n - b.i * (b.i - 1) / 2 + (b.j - b.i)] = b.v;
  }
  AlgebraFile f{LieSuperalgebra(space, std::move(upper), info), std::nullopt};
  if (!deg.empty()) {
    if (static_cast<int>(deg.size()) != n) throw ParseError(0, "deg lines must cover every basis vector");
    std::vector<int> d(n);
    for (auto [i, v] : deg) d[i] = v;
    f.degrees = d;
  }
  return f;
}

std::optional<AlgebraId> algebra_id(const AlgebraInfo& info) {
  auto f = family_from_name(info.family);
  if (!f) return std::nullopt;
  AlgebraId id{*f, info.params, info.alpha};
  try {
    id.validate();
  } catch (const Error&) {
    return std::nullopt;
  }
  return id;
}

bool same_algebra(const LieSuperalgebra& a, const LieSuperalgebra& b) {
  if (!(a.space() == b.space())) return false;
  const auto &x = a.info(), &y = b.info();
  if (x.name != y.name || x.family != y.family || x.params != y.params || x.provenance != y.provenance) return false;
  if (x.alpha.has_value() != y.alpha.has_value() || (x.alpha && *x.alpha != *y.alpha)) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (!(a.upper(i, j) == b.upper(i, j))) return false;
  return true;
}

std::string render_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "SUBJECT " << field(r.subject) << "\n";
  for (const auto& c : r.checks)
    out << "CHECK " << field(c.name) << " expected=" << field(c.expected) << " computed=" << field(c.computed) << ' '
        << (c.pass ? "PASS" : "FAIL") << "\n";
  out << "OVERALL " << (r.overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

ReportFile parse_report(std::string_view text) {
  ReportFile f;
  bool trailer = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto w = words(line);
    if (w.empty()) continue;
    if (trailer) throw ParseError(ln, "content after OVERALL");
    if (w[0] == "SUBJECT" && w.size() == 2) {
      f.report.subject = w[1];
    } else if (w[0] == "CHECK" && w.size() == 5) {
      if (w[2].rfind("expected=", 0) != 0 || w[3].rfind("computed=", 0) != 0 || (w[4] != "PASS" && w[4] != "FAIL"))
        throw ParseError(ln, "malformed CHECK line");
      f.report.checks.push_back({w[1], w[2].substr(9), w[3].substr(9), w[4] == "PASS"});
    } else if (w[0] == "OVERALL" && w.size() == 2 && (w[1] == "PASS" || w[1] == "FAIL")) {
      f.trailer_pass = w[1] == "PASS";
      trailer = true;
    } else {
      throw ParseError(ln, "unrecognized report line");
    }
  }
  if (!trailer) throw ParseError(0, "missing OVERALL trailer");
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace supergrade
