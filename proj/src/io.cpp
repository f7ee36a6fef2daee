#include "trop/io.hpp"

#include <fstream>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

namespace {

// line-oriented reader with comment stripping and position reporting
struct Lines {
  std::vector<std::string> rows;
  size_t at = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) {
        rows.push_back("");
        continue;
      }
      size_t b = line.find_last_not_of(" \t\r");
      rows.push_back(line.substr(a, b - a + 1));
    }
  }
  bool done() {
    while (at < rows.size() && rows[at].empty()) ++at;
    return at >= rows.size();
  }
  std::string next() {
    if (done()) throw ParseError("unexpected end of input");
    return rows[at++];
  }
  std::string peek() {
    if (done()) return "";
    return rows[at];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at line " + std::to_string(at + 1));
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Vec parse_tuple(const std::string& token) {
  // (a,b,c) with rational entries
  if (token.size() < 2 || token.front() != '(' || token.back() != ')')
    throw ParseError("expected a tuple like (a,b): got '" + token + "'");
  std::string body = token.substr(1, token.size() - 2);
  std::vector<Rational> entries;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      entries.push_back(Rational::parse(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) entries.push_back(Rational::parse(cur));
  Vec v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

std::string print_tuple(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v(i);
  }
  os << ')';
  return os.str();
}

std::vector<int> sorted_indices(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

int chart_by_ray_indices(const Fan& fan, const std::vector<int>& idxs) {
  auto want = sorted_indices(idxs);
  for (int i = 0; i < fan.num_cones(); ++i)
    if (sorted_indices(fan.ray_indices(i)) == want) return i;
  throw ParseError("no fan cone has the listed ray indices");
}

}  // namespace

Fan parse_fan(const std::string& text) {
  Lines in(text);
  auto header = split_ws(in.next());
  if (header.size() != 2 || header[0] != "rank") in.fail("expected 'rank n'");
  int rank = std::stoi(header[1]);
  std::vector<Vec> rays;
  std::vector<std::vector<int>> cones;
  while (!in.done()) {
    auto words = split_ws(in.next());
    if (words[0] == "ray") {
      Vec r(rank);
      if (static_cast<int>(words.size()) != rank + 1) in.fail("ray arity mismatch");
      for (int i = 0; i < rank; ++i) r(i) = Rational::parse(words[static_cast<size_t>(i) + 1]);
      rays.push_back(r);
    } else if (words[0] == "cone") {
      std::vector<int> idxs;
      for (size_t i = 1; i < words.size(); ++i) idxs.push_back(std::stoi(words[i]));
      cones.push_back(idxs);
    } else {
      in.fail("expected 'ray' or 'cone', got '" + words[0] + "'");
    }
  }
  return Fan(rank, rays, cones);
}

std::string print_fan(const Fan& fan) {
  std::ostringstream os;
  os << "rank " << fan.rank() << "\n";
  for (int j = 0; j < fan.num_rays(); ++j) {
    os << "ray";
    for (int i = 0; i < fan.rank(); ++i) os << ' ' << fan.ray_matrix()(i, j);
    os << "\n";
  }
  for (int m : fan.maximal()) {
    if (fan.cone(m).is_zero()) continue;
    os << "cone";
    for (int i : fan.ray_indices(m)) os << ' ' << i;
    os << "\n";
  }
  return os.str();
}

ExtendedPoint parse_point(const std::string& text, const Fan& fan) {
  Lines in(text);
  auto chart_words = split_ws(in.next());
  if (chart_words[0] != "chart") in.fail("expected 'chart ...'");
  std::vector<int> idxs;
  for (size_t i = 1; i < chart_words.size(); ++i) idxs.push_back(std::stoi(chart_words[i]));
  int chart = chart_by_ray_indices(fan, idxs);
  const auto& basis = fan.chart_monoid(chart).hilbert;
  std::vector<std::optional<ExtRat>> values(basis.size());
  while (!in.done()) {
    auto words = split_ws(in.next());
    if (words[0] != "value") in.fail("expected 'value ...'");
    auto eq = std::find(words.begin(), words.end(), "=");
    if (eq == words.end() || eq + 2 != words.end()) in.fail("expected 'value u = q'");
    Vec u(fan.rank());
    if (std::distance(words.begin(), eq) != fan.rank() + 1) in.fail("value arity mismatch");
    for (int i = 0; i < fan.rank(); ++i) u(i) = Rational::parse(words[static_cast<size_t>(i) + 1]);
    ExtRat val = ExtRat::parse(*(eq + 1));
    bool found = false;
    for (size_t k = 0; k < basis.size(); ++k)
      if (same(basis[k], u)) {
        values[k] = val;
        found = true;
      }
    if (!found) in.fail("value line does not match a Hilbert basis element");
  }
  std::vector<ExtRat> table;
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!values[k]) throw ParseError("missing value for a Hilbert basis element");
    table.push_back(*values[k]);
  }
  return ExtendedPoint::from_values(fan, chart, table);
}

std::string print_point(const ExtendedPoint& p) {
  std::ostringstream os;
  os << "chart";
  for (int i : p.fan().ray_indices(p.chart())) os << ' ' << i;
  os << "\n";
  const auto& basis = p.fan().chart_monoid(p.chart()).hilbert;
  for (size_t k = 0; k < basis.size(); ++k) {
    os << "value";
    for (Eigen::Index i = 0; i < basis[k].size(); ++i) os << ' ' << basis[k](i);
    os << " = " << p.values()[k] << "\n";
  }
  return os.str();
}

namespace {

Polyhedron parse_cell_line(const std::vector<std::string>& words, int rank, Lines& in) {
  std::vector<Vec> verts, rays;
  enum { None, V, R } mode = None;
  for (size_t i = 1; i < words.size(); ++i) {
    if (words[i] == "v") {
      mode = V;
    } else if (words[i] == "r") {
      mode = R;
    } else if (mode == V) {
      verts.push_back(parse_tuple(words[i]));
    } else if (mode == R) {
      rays.push_back(parse_tuple(words[i]));
    } else {
      in.fail("cell entries must follow a 'v' or 'r' marker");
    }
  }
  for (const auto& v : verts)
    if (v.size() != rank) in.fail("vertex arity mismatch");
  for (const auto& r : rays)
    if (r.size() != rank) in.fail("ray arity mismatch");
  return Polyhedron::from_vrep(rank, verts, rays);
}

std::string print_cell(const Polyhedron& cell) {
  std::ostringstream os;
  os << "cell v";
  for (const auto& v : cell.vertices()) os << ' ' << print_tuple(v);
  auto rays = cell.recession_rays();
  const Mat& lin = cell.homog().lineality();
  if (!rays.empty() || lin.cols() > 0) {
    os << " r";
    for (const auto& r : rays) os << ' ' << print_tuple(r);
    for (Eigen::Index j = 0; j < lin.cols(); ++j) {
      Vec l = lin.col(j).head(cell.rank());
      os << ' ' << print_tuple(l) << ' ' << print_tuple(Vec(-l));
    }
  }
  return os.str();
}

}  // namespace

PolyComplex parse_complex(const std::string& text) {
  Lines in(text);
  auto header = split_ws(in.next());
  if (header.size() != 2 || header[0] != "rank") in.fail("expected 'rank n'");
  PolyComplex out;
  out.rank = std::stoi(header[1]);
  while (!in.done()) {
    auto words = split_ws(in.next());
    if (words[0] != "cell") in.fail("expected 'cell ...'");
    out.add_cell(parse_cell_line(words, out.rank, in));
  }
  return out;
}

std::string print_complex(const PolyComplex& c) {
  std::ostringstream os;
  os << "rank " << c.rank << "\n";
  for (const auto& cell : c.cells) os << print_cell(cell) << "\n";
  return os.str();
}

std::string print_stratified(const StratifiedTrop& st) {
  std::ostringstream os;
  const Fan& fan = *st.fan;
  for (int i = 0; i < fan.num_cones(); ++i) {
    os << "stratum [";
    const auto& idxs = fan.ray_indices(i);
    for (size_t k = 0; k < idxs.size(); ++k) os << (k ? " " : "") << idxs[k];
    os << "] ";
    switch (st.kinds[static_cast<size_t>(i)]) {
      case StratumKind::Empty:
        os << "empty\n";
        break;
      case StratumKind::Full:
        os << "full\n";
        break;
      case StratumKind::Complex:
        os << "cells\n";
        for (const auto& cell : st.complexes[static_cast<size_t>(i)].cells)
          os << print_cell(cell) << "\n";
        break;
    }
  }
  return os.str();
}

StratifiedTrop parse_stratified(const std::string& text, const Fan& fan) {
  Lines in(text);
  StratifiedTrop st;
  st.fan = &fan;
  st.kinds.assign(static_cast<size_t>(fan.num_cones()), StratumKind::Empty);
  st.complexes.resize(static_cast<size_t>(fan.num_cones()));
  st.restrictions.resize(static_cast<size_t>(fan.num_cones()));
  std::vector<bool> seen(static_cast<size_t>(fan.num_cones()), false);
  while (!in.done()) {
    auto line = in.next();
    auto words = split_ws(line);
    if (words[0] != "stratum") in.fail("expected 'stratum [...] kind'");
    auto lb = line.find('['), rb = line.find(']');
    if (lb == std::string::npos || rb == std::string::npos) in.fail("expected '[ray indices]'");
    std::vector<int> idxs;
    for (const auto& w : split_ws(line.substr(lb + 1, rb - lb - 1))) idxs.push_back(std::stoi(w));
    int cone = chart_by_ray_indices(fan, idxs);
    std::string kind = split_ws(line.substr(rb + 1)).at(0);
    seen[static_cast<size_t>(cone)] = true;
    if (kind == "empty") {
      st.kinds[static_cast<size_t>(cone)] = StratumKind::Empty;
    } else if (kind == "full") {
      st.kinds[static_cast<size_t>(cone)] = StratumKind::Full;
    } else if (kind == "cells") {
      st.kinds[static_cast<size_t>(cone)] = StratumKind::Complex;
      PolyComplex c;
      c.rank = static_cast<int>(fan.cone(cone).quotient().rows());
      while (!in.done() && split_ws(in.peek())[0] == "cell")
        c.add_cell(parse_cell_line(split_ws(in.next()), c.rank, in));
      st.complexes[static_cast<size_t>(cone)] = std::move(c);
    } else {
      in.fail("unknown stratum kind '" + kind + "'");
    }
  }
  for (bool s : seen)
    if (!s) throw ParseError("stratified record misses a cone of the fan");
  return st;
}

ExtendedMonoidMap parse_monoid_map(const std::string& text, const Fan& src, const Fan& dst) {
  Lines in(text);
  auto src_words = split_ws(in.next());
  if (src_words[0] != "src-chart") in.fail("expected 'src-chart ...'");
  std::vector<int> sidx;
  for (size_t i = 1; i < src_words.size(); ++i) sidx.push_back(std::stoi(src_words[i]));
  auto dst_words = split_ws(in.next());
  if (dst_words[0] != "dst-chart") in.fail("expected 'dst-chart ...'");
  std::vector<int> didx;
  for (size_t i = 1; i < dst_words.size(); ++i) didx.push_back(std::stoi(dst_words[i]));
  int src_chart = chart_by_ray_indices(src, sidx);
  int dst_chart = chart_by_ray_indices(dst, didx);
  const auto& basis = dst.chart_monoid(dst_chart).hilbert;
  std::vector<std::optional<std::optional<Vec>>> table(basis.size());
  while (!in.done()) {
    auto words = split_ws(in.next());
    if (words[0] != "send") in.fail("expected 'send u = w'");
    auto eq = std::find(words.begin(), words.end(), "=");
    if (eq == words.end()) in.fail("expected 'send u = w'");
    if (std::distance(words.begin(), eq) != dst.rank() + 1) in.fail("send arity mismatch");
    Vec u(dst.rank());
    for (int i = 0; i < dst.rank(); ++i) u(i) = Rational::parse(words[static_cast<size_t>(i) + 1]);
    std::optional<Vec> image;
    if (eq + 2 == words.end() && *(eq + 1) == "inf") {
      image = std::nullopt;
    } else {
      if (std::distance(eq + 1, words.end()) != src.rank()) in.fail("send image arity mismatch");
      Vec w(src.rank());
      for (int i = 0; i < src.rank(); ++i) w(i) = Rational::parse(*(eq + 1 + i));
      image = w;
    }
    bool found = false;
    for (size_t k = 0; k < basis.size(); ++k)
      if (same(basis[k], u)) {
        table[k] = image;
        found = true;
      }
    if (!found) in.fail("send line does not match a Hilbert basis element");
  }
  std::vector<std::optional<Vec>> final_table;
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!table[k]) throw ParseError("missing send line for a Hilbert basis element");
    final_table.push_back(*table[k]);
  }
  return ExtendedMonoidMap(src, src_chart, dst, dst_chart, std::move(final_table));
}

std::string print_monoid_map(const ExtendedMonoidMap& m) {
  std::ostringstream os;
  os << "src-chart";
  for (int i : m.src_fan().ray_indices(m.src_chart())) os << ' ' << i;
  os << "\ndst-chart";
  for (int i : m.dst_fan().ray_indices(m.dst_chart())) os << ' ' << i;
  os << "\n";
  const auto& basis = m.dst_fan().chart_monoid(m.dst_chart()).hilbert;
  for (size_t k = 0; k < basis.size(); ++k) {
    os << "send";
    for (Eigen::Index i = 0; i < basis[k].size(); ++i) os << ' ' << basis[k](i);
    os << " =";
    if (!m.table()[k]) {
      os << " inf";
    } else {
      for (Eigen::Index i = 0; i < m.table()[k]->size(); ++i) os << ' ' << (*m.table()[k])(i);
    }
    os << "\n";
  }
  return os.str();
}

DiagramFile parse_diagram(const std::string& text) {
  Lines in(text);
  std::vector<std::string> vars;
  std::vector<LaurentPoly> relations;
  std::vector<Presentation::Chart> charts;
  bool trivial = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> node_specs;
  struct EdgeSpec {
    std::string src, dst;
    std::vector<std::string> exprs;
  };
  std::vector<EdgeSpec> edge_specs;

  auto split_semis = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == ';') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  };

  while (!in.done()) {
    std::string line = in.next();
    auto words = split_ws(line);
    const std::string& key = words[0];
    if (key == "mode") {
      trivial = words.at(1) == "trivial";
    } else if (key == "var") {
      for (size_t i = 1; i < words.size(); ++i) vars.push_back(words[i]);
    } else if (key == "relation") {
      if (vars.empty()) in.fail("relations must follow the var line");
      relations.push_back(
          LaurentPoly::parse(line.substr(line.find("relation") + 8), static_cast<int>(vars.size()), trivial));
    } else if (key == "chart") {
      // chart free <names> : <bound-name> = <expr> ; ...
      auto colon = line.find(':');
      if (words.size() < 3 || words[1] != "free" || colon == std::string::npos)
        in.fail("expected 'chart free <vars> : name = expr ; ...'");
      Presentation::Chart chart;
      auto head = split_ws(line.substr(0, colon));
      for (size_t i = 2; i < head.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), head[i]);
        if (it == vars.end()) in.fail("unknown free variable '" + head[i] + "'");
        chart.free.push_back(static_cast<int>(it - vars.begin()));
      }
      for (const auto& item : split_semis(line.substr(colon + 1))) {
        auto eq = item.find('=');
        if (eq == std::string::npos) in.fail("expected 'name = expr'");
        auto name = split_ws(item.substr(0, eq));
        if (name.size() != 1) in.fail("expected a single bound variable name");
        auto it = std::find(vars.begin(), vars.end(), name[0]);
        if (it == vars.end()) in.fail("unknown bound variable '" + name[0] + "'");
        chart.bound.emplace(static_cast<int>(it - vars.begin()),
                            LaurentPoly::parse(item.substr(eq + 1),
                                               static_cast<int>(chart.free.size()), trivial));
      }
      charts.push_back(std::move(chart));
    } else if (key == "node") {
      auto colon = line.find(':');
      if (words.size() < 2 || colon == std::string::npos) in.fail("expected 'node name : exprs'");
      std::vector<std::string> exprs;
      for (const auto& e : split_semis(line.substr(colon + 1))) exprs.push_back(e);
      node_specs.emplace_back(words[1], std::move(exprs));
    } else if (key == "edge") {
      auto colon = line.find(':');
      if (words.size() < 3 || colon == std::string::npos)
        in.fail("expected 'edge src dst : monomials'");
      EdgeSpec e;
      e.src = words[1];
      e.dst = words[2];
      for (const auto& m : split_semis(line.substr(colon + 1))) e.exprs.push_back(m);
      edge_specs.push_back(std::move(e));
    } else {
      in.fail("unknown record '" + key + "'");
    }
  }

  DiagramFile out;
  out.presentation = std::make_shared<Presentation>(vars, relations, charts, trivial);
  std::vector<EmbeddingNode> nodes;
  std::map<std::string, int> index;
  for (const auto& [name, exprs] : node_specs) {
    EmbeddingNode n;
    n.name = name;
    for (const auto& e : exprs)
      n.gens.push_back(LaurentPoly::parse(e, static_cast<int>(vars.size()), trivial));
    index.emplace(name, static_cast<int>(nodes.size()));
    nodes.push_back(std::move(n));
  }
  std::vector<DiagramEdge> edges;
  for (const auto& spec : edge_specs) {
    if (!index.count(spec.src) || !index.count(spec.dst))
      throw ParseError("edge references an unknown node");
    DiagramEdge e;
    e.src = index.at(spec.src);
    e.dst = index.at(spec.dst);
    int src_arity = static_cast<int>(nodes[static_cast<size_t>(e.src)].gens.size());
    for (const auto& m : spec.exprs) {
      LaurentPoly mono = LaurentPoly::parse(m, src_arity, trivial);
      if (!mono.is_monomial())
        throw ParseError("edge coordinate '" + m + "' is not a monomial");
      MonomialExpr expr;
      expr.coeff = mono.terms().begin()->second;
      expr.exponents = mono.terms().begin()->first;
      e.exprs.push_back(std::move(expr));
    }
    edges.push_back(std::move(e));
  }
  out.diagram = std::make_shared<EmbeddingDiagram>(*out.presentation, nodes, edges);
  return out;
}

std::string print_diagram(const Presentation& p, const EmbeddingDiagram& d) {
  std::ostringstream os;
  os << "mode " << (p.trivial() ? "trivial" : "puiseux") << "\n";
  os << "var";
  for (const auto& v : p.vars()) os << ' ' << v;
  os << "\n";
  for (const auto& r : p.relations()) os << "relation " << r.str() << "\n";
  for (int c = 0; c < p.num_charts(); ++c) {
    os << "chart free";
    for (int i : p.chart(c).free) os << ' ' << p.vars()[static_cast<size_t>(i)];
    os << " :";
    bool first = true;
    for (const auto& [i, expr] : p.chart(c).bound) {
      os << (first ? " " : " ; ") << p.vars()[static_cast<size_t>(i)] << " = " << expr.str();
      first = false;
    }
    os << "\n";
  }
  for (int i = 0; i < d.num_nodes(); ++i) {
    os << "node " << d.node(i).name << " :";
    for (size_t k = 0; k < d.node(i).gens.size(); ++k)
      os << (k ? " ; " : " ") << d.node(i).gens[k].str();
    os << "\n";
  }
  for (const auto& e : d.edges()) {
    os << "edge " << d.node(e.src).name << ' ' << d.node(e.dst).name << " :";
    for (size_t k = 0; k < e.exprs.size(); ++k) {
      os << (k ? " ; " : " ")
         << LaurentPoly::term(e.exprs[k].exponents, e.exprs[k].coeff).str();
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace trop
