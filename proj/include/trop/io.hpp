#pragma once

#include <memory>

#include "trop/anlim.hpp"
#include "trop/basechange.hpp"

namespace trop {

/// Structured-text fan format: `rank n`, `ray a b ...` lines (integer
/// tuples), `cone i j ...` lines (ray index sets of the maximal cones).
/// Faces are derived, never listed. `#` starts a comment.
Fan parse_fan(const std::string& text);
std::string print_fan(const Fan& fan);

/// Point format: `chart i j ...` (ray indices of a maximal cone) then one
/// `value a b ... = q` line per Hilbert-basis element, `inf` allowed.
ExtendedPoint parse_point(const std::string& text, const Fan& fan);
std::string print_point(const ExtendedPoint& p);

/// Complex format: `rank n` then `cell` lines carrying `v (a,b,..)` vertices
/// and `r (a,b,..)` rays.
PolyComplex parse_complex(const std::string& text);
std::string print_complex(const PolyComplex& c);

/// Stratified format: one `stratum [i j ...] empty|full|cells` record per
/// cone (ray indices identify the cone), cells as in the complex format.
std::string print_stratified(const StratifiedTrop& st);
StratifiedTrop parse_stratified(const std::string& text, const Fan& fan);

/// Monoid-map format: `src-chart i j ...`, `dst-chart i j ...`, then one
/// `send a b ... = c d ...` or `send a b ... = inf` line per destination
/// Hilbert-basis element.
ExtendedMonoidMap parse_monoid_map(const std::string& text, const Fan& src, const Fan& dst);
std::string print_monoid_map(const ExtendedMonoidMap& m);

/// Diagram file: presentation (`var`, `relation`, `chart`, optional
/// `mode trivial`) followed by `node name : expr ; expr ...` and
/// `edge src dst : mono ; mono ...` records. Edge monomials are written in
/// x1..xk for the source node's generators.
struct DiagramFile {
  std::shared_ptr<Presentation> presentation;
  std::shared_ptr<EmbeddingDiagram> diagram;
};

DiagramFile parse_diagram(const std::string& text);
std::string print_diagram(const Presentation& p, const EmbeddingDiagram& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace trop
