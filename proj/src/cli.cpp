#include "trop/cli.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

namespace {

Vec parse_inline_tuple(const std::string& text, int rank) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced tuple: " + text);
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> entries;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) entries.push_back(Rational::parse(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (static_cast<int>(entries.size()) != rank)
    throw ParseError("expected a tuple of " + std::to_string(rank) + " rationals");
  Vec v(rank);
  for (int i = 0; i < rank; ++i) v(i) = entries[static_cast<size_t>(i)];
  return v;
}

const std::string& need(const std::map<std::string, std::string>& m, const std::string& key,
                        const char* what) {
  auto it = m.find(key);
  if (it == m.end()) throw ParseError(std::string("missing required input: ") + what);
  return it->second;
}

LaurentPoly input_poly(const JobSpec& spec) {
  return LaurentPoly::parse(need(spec.inputs, "poly", "--poly"), spec.rank, spec.trivial);
}

int grid_verify(const TropHypersurface& trop, const JobSpec& spec, std::ostream& out) {
  const LaurentPoly& f = trop.source;
  long points = 0, bad = 0;
  for (Rational a = spec.box[0]; a <= spec.box[1]; a += spec.grid_step)
    for (Rational b = spec.box[2]; b <= spec.box[3]; b += spec.grid_step) {
      Vec w = make_vec({a, b});
      ++points;
      if (trop.complex.support_contains(w) != contains(f, w)) ++bad;
    }
  out << "grid-check: " << points << " points, " << bad << " discrepancies\n";
  return bad == 0 ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int run_trop(const JobSpec& spec, std::ostream& out) {
  auto texts = split_list(need(spec.inputs, "poly", "--poly"), ';');
  std::vector<TropHypersurface> trops;
  for (const auto& text : texts) {
    LaurentPoly f = LaurentPoly::parse(text, spec.rank, spec.trivial);
    trops.push_back(spec.trivial ? trivial_trop(f) : trop_hypersurface(f));
    if (trops.back().has_monomial_factor)
      out << "note: input carries a monomial factor x^" << f.monomial_factor().transpose()
          << " (kept, not stripped)\n";
  }
  if (trops.size() == 1) {
    out << print_complex(trops[0].complex);
    if (spec.verify_grid && spec.rank == 2) return grid_verify(trops[0], spec, out);
    return 0;
  }
  // several generators: treat them as a user-asserted tropical basis and
  // intersect hypersurface-wise
  out << "assumed tropical basis: intersecting " << trops.size()
      << " hypersurface tropicalizations\n";
  PolyComplex meet = trops[0].complex;
  for (size_t i = 1; i < trops.size(); ++i) meet = intersect_complexes(meet, trops[i].complex);
  out << print_complex(meet);
  if (spec.verify_grid && spec.rank == 2) {
    long points = 0, bad = 0;
    for (Rational a = spec.box[0]; a <= spec.box[1]; a += spec.grid_step)
      for (Rational b = spec.box[2]; b <= spec.box[3]; b += spec.grid_step) {
        Vec w = make_vec({a, b});
        bool member = true;
        for (const auto& t : trops) member = member && contains(t.source, w);
        ++points;
        if (meet.support_contains(w) != member) ++bad;
      }
    out << "grid-check: " << points << " points, " << bad << " discrepancies\n";
    return bad == 0 ? 0 : 1;
  }
  return 0;
}

int run_init(const JobSpec& spec, std::ostream& out) {
  LaurentPoly f = input_poly(spec);
  Vec v = parse_inline_tuple(need(spec.inputs, "v", "--at"), spec.rank);
  ResiduePoly init = f.initial_form(v);
  out << init.str() << "\n";
  out << (init.is_monomial() ? "monomial\n" : "not monomial\n");
  return 0;
}

int run_member(const JobSpec& spec, std::ostream& out) {
  LaurentPoly f = input_poly(spec);
  Vec v = parse_inline_tuple(need(spec.inputs, "v", "--at"), spec.rank);
  out << (contains(f, v) ? "true" : "false") << "\n";
  return 0;
}

int run_extend(const JobSpec& spec, std::ostream& out) {
  Fan fan = parse_fan(read_file(need(spec.paths, "fan", "--fan")));
  LaurentPoly f = LaurentPoly::parse(need(spec.inputs, "poly", "--poly"), fan.rank(), spec.trivial);
  out << print_stratified(extended_trop(f, fan));
  return 0;
}

int run_map(const JobSpec& spec, std::ostream& out) {
  Fan src = parse_fan(read_file(need(spec.paths, "src-fan", "--src-fan")));
  Fan dst = parse_fan(read_file(need(spec.paths, "dst-fan", "--dst-fan")));
  ExtendedMonoidMap phi = parse_monoid_map(read_file(need(spec.paths, "map", "--map")), src, dst);
  ExtendedPoint p = parse_point(read_file(need(spec.paths, "point", "--point")), src);
  out << print_point(trop_morphism(phi, p));
  return 0;
}

int run_moment(const JobSpec& spec, std::ostream& out) {
  Fan fan = parse_fan(read_file(need(spec.paths, "fan", "--fan")));
  ExtendedPoint p = parse_point(read_file(need(spec.paths, "point", "--point")), fan);
  std::vector<Vec> chars;
  std::string text = need(spec.inputs, "chars", "--characters");
  std::string cur;
  for (char ch : text + ";") {
    if (ch == ';') {
      if (!cur.empty()) chars.push_back(parse_inline_tuple(cur, fan.rank()));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  PolarizedFan pol = make_polarized(fan, chars);
  Vecd mu = moment_map(p, pol);
  std::ostringstream os;
  os.precision(12);
  for (Eigen::Index i = 0; i < mu.size(); ++i) os << (i ? " " : "") << mu(i);
  out << os.str() << "\n";
  return 0;
}

int run_cox(const JobSpec& spec, std::ostream& out) {
  Fan fan = parse_fan(read_file(need(spec.paths, "fan", "--fan")));
  CoxData cox = cox_data(fan);
  out << "cox fan:\n" << print_fan(cox.fan);
  out << "projection:\n";
  for (Eigen::Index i = 0; i < cox.projection.rows(); ++i) {
    for (Eigen::Index j = 0; j < cox.projection.cols(); ++j)
      out << (j ? " " : "") << cox.projection(i, j);
    out << "\n";
  }
  if (spec.paths.count("point")) {
    ExtendedPoint p = parse_point(read_file(spec.paths.at("point")), fan);
    ExtendedPoint up = cox_preimage(p, cox);
    out << "preimage:\n" << print_point(up);
    auto down = trop_morphism(cox_projection_map(cox, fan, p.chart(), up.chart()), up);
    out << "round-trip: " << (glue_equal(down, p) ? "ok" : "MISMATCH") << "\n";
    if (!glue_equal(down, p)) return 1;
  }
  return 0;
}

int run_trivial(const JobSpec& spec, std::ostream& out) {
  LaurentPoly f = LaurentPoly::parse(need(spec.inputs, "poly", "--poly"), spec.rank, true);
  out << print_complex(trivial_trop(f).complex);
  return 0;
}

int run_basechange(const JobSpec& spec, std::ostream& out) {
  LaurentPoly f = LaurentPoly::parse(need(spec.inputs, "poly", "--poly"), spec.rank, true);
  bool ok = base_change_check(f);
  out << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int run_project(const JobSpec& spec, std::ostream& out) {
  PolyComplex c = parse_complex(read_file(need(spec.paths, "complex", "--complex")));
  LatticeSurjection phi = generic_projection(c);
  out << "projection:\n";
  for (Eigen::Index i = 0; i < phi.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < phi.matrix.cols(); ++j) out << (j ? " " : "") << phi.matrix(i, j);
    out << "\n";
  }
  out << "certificate: maximal cells keep dimension " << c.dim()
      << ", pairwise image intersections have dimension <= " << c.dim() - 1 << "\n";
  return 0;
}

int run_plot(const JobSpec& spec, std::ostream& out) {
  Fan fan = parse_fan(read_file(need(spec.paths, "fan", "--fan")));
  StratifiedTrop st;
  if (spec.paths.count("stratified")) {
    st = parse_stratified(read_file(spec.paths.at("stratified")), fan);
  } else {
    LaurentPoly f =
        LaurentPoly::parse(need(spec.inputs, "poly", "--poly"), fan.rank(), spec.trivial);
    st = extended_trop(f, fan);
  }
  Window w{spec.box[0], spec.box[1], spec.box[2], spec.box[3]};
  std::string svg = render_svg(st, w);
  if (spec.output_path.empty()) {
    out << svg;
  } else {
    write_file(spec.output_path, svg);
    out << "wrote " << spec.output_path << "\n";
  }
  return 0;
}

int run_limit_check(const JobSpec& spec, std::ostream& out) {
  // presentation and diagram: either from a diagram file or the canonical
  // proof shapes over a plane curve
  std::shared_ptr<Presentation> pres;
  std::shared_ptr<EmbeddingDiagram> diagram;
  LaurentPoly curve(2);
  if (spec.paths.count("diagram")) {
    DiagramFile file = parse_diagram(read_file(spec.paths.at("diagram")));
    pres = file.presentation;
    diagram = file.diagram;
    if (pres->relations().size() == 1 && pres->num_vars() == 2) curve = pres->relations()[0];
  } else {
    curve = LaurentPoly::parse(need(spec.inputs, "poly", "--poly"), 2, spec.trivial);
    pres = std::make_shared<Presentation>(plane_presentation(curve));
    std::vector<EmbeddingNode> nodes = {
        {"identity", {LaurentPoly::variable(2, 0), LaurentPoly::variable(2, 1)}}};
    diagram = std::make_shared<EmbeddingDiagram>(*pres, nodes, std::vector<DiagramEdge>{});
    LaurentPoly sum = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    int graph = add_graph_node(*diagram, 0, sum, "graph");
    int other = diagram->add_node({"other", {sum, LaurentPoly::variable(2, 0),
                                             LaurentPoly::variable(2, 1)}});
    add_product_node(*diagram, graph, other, "product");
  }

  int failures = 0;
  auto verdict = [&](const std::string& name, bool ok) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  // sampled seminorm points
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> cnum(1, 5), aval(-4, 4), roff(-2, 2);
  std::vector<SeminormPoint> points;
  for (int i = 0; i < spec.samples && !curve.is_zero(); ++i) {
    int chart = i % pres->num_charts();
    const auto& c = pres->chart(chart);
    int free = c.free[0], bound = c.bound.begin()->first;
    const LaurentPoly& expr = c.bound.begin()->second;
    PuiseuxScalar x0 = PuiseuxScalar::monomial(Rational(cnum(rng)), Rational(aval(rng), 2));
    if (int r = roff(rng); r != 0 && !pres->trivial()) {
      try {
        PuiseuxScalar shifted = x0 + PuiseuxScalar::constant(Rational(r));
        std::vector<PuiseuxScalar> coords(2);
        coords[static_cast<size_t>(free)] = shifted;
        coords[static_cast<size_t>(bound)] = expr.eval({shifted});
        if (!coords[static_cast<size_t>(bound)].is_zero())
          points.push_back(SeminormPoint::k_point(*pres, coords));
      } catch (const Error&) {
      }
    }
    Vec w(2);
    w(free) = Rational(aval(rng), 2);
    w(bound) = expr.psi(make_vec({w(free)})).finite();
    points.push_back(SeminormPoint::monomial(*pres, chart, w));
  }
  out << "sampled " << points.size() << " seminorm points\n";

  bool coherent = true;
  for (const auto& x : points) coherent = coherent && coherence_check(*diagram, x);
  verdict("coherence on all sampled points", coherent);

  auto search = default_search_set(*pres, spec.degree_bound);
  bool separated = true;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      bool distinct = false;
      for (const auto& fsearch : search)
        if (!(seminorm_value(points[i], fsearch) == seminorm_value(points[j], fsearch)))
          distinct = true;
      if (distinct && !separate(*pres, points[i], points[j], search).has_value())
        separated = false;
    }
  verdict("separation of distinct sampled points", separated);

  bool roundtrip = true;
  for (const auto& x : points) {
    CoherentTuple t = tuple_from_point(*diagram, x);
    if (!validate_coherent(*diagram, t)) roundtrip = false;
    for (int nidx = 0; nidx < diagram->num_nodes(); ++nidx) {
      const LaurentPoly& first = diagram->node(nidx).gens[0];
      if (!(reconstruct(*diagram, t, first) == seminorm_value(x, first))) roundtrip = false;
    }
  }
  verdict("reconstruction round-trips", roundtrip);

  if (!curve.is_zero()) {
    ImageReport report = image_check(curve, affine_fan(2), std::min(spec.samples, 60), spec.seed,
                                     spec.precision);
    verdict("image check (" + std::to_string(report.forward_hits) + "/" +
                std::to_string(report.forward_total) + " forward, " +
                std::to_string(report.backward_hits) + "/" +
                std::to_string(report.backward_total) + " backward)",
            report.pass());
    for (const auto& f : report.failures) out << "  failure: " << f << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.subcommand == "trop") return run_trop(spec, out);
    if (spec.subcommand == "init") return run_init(spec, out);
    if (spec.subcommand == "member") return run_member(spec, out);
    if (spec.subcommand == "extend") return run_extend(spec, out);
    if (spec.subcommand == "map") return run_map(spec, out);
    if (spec.subcommand == "moment") return run_moment(spec, out);
    if (spec.subcommand == "cox") return run_cox(spec, out);
    if (spec.subcommand == "limit-check") return run_limit_check(spec, out);
    if (spec.subcommand == "trivial") return run_trivial(spec, out);
    if (spec.subcommand == "basechange") return run_basechange(spec, out);
    if (spec.subcommand == "project") return run_project(spec, out);
    if (spec.subcommand == "plot") return run_plot(spec, out);
    err << "unknown subcommand: " << spec.subcommand << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace trop
