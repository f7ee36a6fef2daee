#pragma once

#include <map>
#include <string>

#include "trop/closure.hpp"

namespace trop {

/// Presentation of the coordinate ring of an affine variety: named
/// generators, a finite relation set, and torus-dense charts that solve some
/// generators in terms of the others. Chart 0 is the distinguished one.
///
/// Monomial (Gauss) seminorms are multiplicative exactly because evaluation
/// happens on the free Laurent subring of a chart after reduction.
class Presentation {
 public:
  struct Chart {
    std::vector<int> free;             // indices of the free generators
    std::map<int, LaurentPoly> bound;  // generator -> expression in the free ones
  };

  Presentation(std::vector<std::string> vars, std::vector<LaurentPoly> relations,
               std::vector<Chart> charts, bool trivial = false);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<LaurentPoly>& relations() const { return relations_; }
  int num_charts() const { return static_cast<int>(charts_.size()); }
  const Chart& chart(int i) const { return charts_[static_cast<size_t>(i)]; }
  bool trivial() const { return trivial_; }

  /// Canonical representative of f on the chart's free Laurent subring.
  /// Throws PresentationError when f needs an inverse the chart cannot give.
  LaurentPoly reduce(const LaurentPoly& f, int chart = 0) const;

 private:
  std::vector<std::string> vars_;
  std::vector<LaurentPoly> relations_;
  std::vector<Chart> charts_;
  bool trivial_;
};

/// Point of the desk-scale analytification: either a K-point of the variety
/// or a monomial (Gauss) seminorm over one of the presentation's charts.
class SeminormPoint {
 public:
  static SeminormPoint k_point(const Presentation& p, std::vector<PuiseuxScalar> coords);
  /// v is the full tuple of generator values; bound entries must agree with
  /// the chart reduction and v must lie in trop of every relation.
  static SeminormPoint monomial(const Presentation& p, int chart, const Vec& v);

  const Presentation& presentation() const { return *pres_; }
  bool is_k_point() const { return kind_ == Kind::KPoint; }
  const std::vector<PuiseuxScalar>& coords() const { return coords_; }
  int chart() const { return chart_; }
  const Vec& weights() const { return weights_; }

 private:
  enum class Kind { KPoint, Monomial };
  const Presentation* pres_ = nullptr;
  Kind kind_ = Kind::KPoint;
  std::vector<PuiseuxScalar> coords_;  // K-point variant
  int chart_ = 0;                      // monomial variant
  Vec weights_;                        //   full tuple over all generators
};

/// −log |f|_x: valuation of f(coords) for K-points, Ψ of the chart reduction
/// for monomial points (∞ when f lies in the ideal).
ExtRat seminorm_value(const SeminormPoint& x, const LaurentPoly& f);

/// Affine embedding given by a generator list (expressions in the
/// presentation's generators); the target is A^(gens.size()).
struct EmbeddingNode {
  std::string name;
  std::vector<LaurentPoly> gens;
};

/// One coordinate of an equivariant map A^m -> A^n: c · Π src_j^{e_j}.
struct MonomialExpr {
  PuiseuxScalar coeff;
  Vec exponents;  // nonnegative integers, size = source generator count
};

struct DiagramEdge {
  int src = 0;
  int dst = 0;
  std::vector<MonomialExpr> exprs;  // one per destination generator
};

/// Finite diagram of affine embeddings with certified commuting edges.
/// Owns the ambient fans of its nodes, so points built by pi() must not
/// outlive the diagram.
class EmbeddingDiagram {
 public:
  EmbeddingDiagram(const Presentation& p, std::vector<EmbeddingNode> nodes,
                   std::vector<DiagramEdge> edges);

  const Presentation& presentation() const { return *pres_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const EmbeddingNode& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const Fan& node_fan(int i) const { return *fans_[static_cast<size_t>(i)]; }
  int node_chart(int i) const;

  /// Append a node; returns its index. Edges added through add_edge are
  /// certified symbolically against the relations.
  int add_node(EmbeddingNode n);
  void add_edge(DiagramEdge e);

 private:
  void certify(const DiagramEdge& e) const;

  const Presentation* pres_;
  std::vector<EmbeddingNode> nodes_;
  std::vector<DiagramEdge> edges_;
  std::vector<std::shared_ptr<const Fan>> fans_;
};

/// π_ι(x): the seminorm values on the node's generators, as a point of the
/// extended tropicalization of the target affine space.
ExtendedPoint pi(const EmbeddingDiagram& d, int node, const SeminormPoint& x);

/// Trop of an edge map applied to a point of the source target-space.
ExtendedPoint apply_edge(const EmbeddingDiagram& d, const DiagramEdge& e, const ExtendedPoint& p);

/// π_dst = Trop(edge) ∘ π_src, exactly, over every edge.
bool coherence_check(const EmbeddingDiagram& d, const SeminormPoint& x);

/// Compatible family of extended points across the diagram.
struct CoherentTuple {
  std::map<int, ExtendedPoint> points;
};

CoherentTuple tuple_from_point(const EmbeddingDiagram& d, const SeminormPoint& x);
bool validate_coherent(const EmbeddingDiagram& d, const CoherentTuple& t);

/// Relation-reduced monomials in the generators up to the degree bound.
std::vector<LaurentPoly> default_search_set(const Presentation& p, int degree_bound = 4);

/// An embedding node whose first generator separates the two points, or
/// nothing if the search set cannot tell them apart.
std::optional<EmbeddingNode> separate(const Presentation& p, const SeminormPoint& x,
                                      const SeminormPoint& y,
                                      const std::vector<LaurentPoly>& search);

/// First coordinate of the tuple at a node whose first generator is f
/// (checked equal across all eligible nodes).
ExtRat reconstruct(const EmbeddingDiagram& d, const CoherentTuple& t, const LaurentPoly& f);

/// Canonical diagram shapes from the surjectivity proof: graph embeddings
/// appending one generator, and product embeddings with both projections
/// plus the transposition automorphism when first generators coincide.
int add_graph_node(EmbeddingDiagram& d, int base, const LaurentPoly& extra,
                   const std::string& name);
int add_product_node(EmbeddingDiagram& d, int left, int right, const std::string& name);

/// Two-sided image check for a plane-hypersurface presentation embedded by
/// its generators: sampled seminorm points land in the stratified support,
/// and sampled support points are hit by lifted K-points (monomial seminorms
/// on the rays in trivial mode).
struct ImageReport {
  int forward_total = 0;
  int forward_hits = 0;
  int backward_total = 0;
  int backward_hits = 0;
  std::vector<std::string> failures;
  bool pass() const {
    return forward_total == forward_hits && backward_total == backward_hits &&
           forward_total > 0 && backward_total > 0;
  }
};

ImageReport image_check(const LaurentPoly& f, const Fan& ambient, int samples, unsigned seed,
                        const Rational& precision = Rational(3));

/// Presentation of a plane hypersurface V(f): generators x, y with relation f
/// and the monomial charts obtainable by solving a variable that appears in
/// exactly one term, linearly.
Presentation plane_presentation(const LaurentPoly& f);

/// Presentation of the torus itself: no relations, one all-free chart.
Presentation torus_presentation(int n, bool trivial = false);

}  // namespace trop
