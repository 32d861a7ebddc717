#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alexnorm/arith.hpp"

namespace alexnorm {

/// The inequality normal . x <= offset (or an equation, when used as one).
/// Stored scaled to coprime integer entries.
struct Halfspace {
  Point normal;
  Rational offset;

  bool operator==(const Halfspace&) const = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  }
};

/// Scales (normal, offset) by a positive factor to coprime integers.
Halfspace canonical_halfspace(Point normal, Rational offset);

/// Exact rational convex polytope in V- and H-representation.
///
/// Built only through hull(); vertices are sorted lexicographically and
/// every derived structure (facets, affine hull, incidences, edge graph) is
/// computed at construction.
class Polytope {
 public:
  /// Convex hull of a nonempty point set of uniform dimension. Lower
  /// dimensional hulls are handled in reduced coordinates; their facets are
  /// relative to the affine hull recorded in equations().
  static Polytope hull(const std::vector<Point>& points);

  std::size_t ambient_dim() const { return ambient_; }
  /// Affine dimension.
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Halfspace>& equations() const { return equations_; }

  std::optional<std::size_t> vertex_index(const Point& p) const;
  bool contains(const Point& p) const;

  /// Facet indices tight at each vertex.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return incidence_; }
  /// Edge graph derived from facet incidences: a vertex pair spans an edge
  /// iff the facets containing both have normals of rank dim() - 1.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  Polytope() = default;
  void derive_combinatorics();

  std::size_t ambient_ = 0;
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

struct Face {
  Point functional;
  std::vector<Point> vertices;
  int dimension;
};

/// The face on which `functional` is maximized.
Face face_of(const Polytope& p, const Point& functional);

/// Affine dimension of a finite point set (-1 for the empty set).
int affine_dimension(const std::vector<Point>& points);

/// Exact LP test: p lies in the convex hull of `points`.
bool in_convex_hull(const std::vector<Point>& points, const Point& p);

/// Exact LP test: some linear functional is maximized over the vertex set
/// exactly on vertices i and j.
bool spans_edge_lp(const Polytope& p, std::size_t i, std::size_t j);

/// Degree of vertex v in the edge graph, decided pair by pair with spans_edge_lp.
std::size_t vertex_valence(const Polytope& p, const Point& v);
/// Degree of vertex v in the facet-incidence edge graph (Polytope::edges()).
std::size_t vertex_valence_by_facets(const Polytope& p, const Point& v);
/// Number of facets containing v.
std::size_t vertex_facet_count(const Polytope& p, const Point& v);

Polytope scaled(const Polytope& p, const Rational& k);
/// Hull of {g - h : g, h vertices}.
Polytope difference_body(const Polytope& p);
/// {phi : phi(x) <= 1 for all x in P}; requires the origin in the interior.
Polytope polar_dual(const Polytope& p);
/// The prism Q x [-halfwidth, halfwidth] along a unit axis orthogonal to Q.
Polytope product_with_segment(const Polytope& q, const Point& axis, const Rational& halfwidth);
/// Same vertex sets.
bool polytope_equal(const Polytope& p, const Polytope& q);

/// `polytope <dim>` header, `v` vertex lines, `f <normal> <offset>` facet
/// lines and, for lower-dimensional polytopes, `e <normal> <offset>` lines.
std::string to_text(const Polytope& p);
/// Rebuilds from the `v` lines; any `f` lines present must match the hull.
Polytope parse_polytope(std::string_view text);

}  // namespace alexnorm
