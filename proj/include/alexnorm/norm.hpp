#pragma once

#include <string>
#include <variant>
#include <vector>

#include "alexnorm/arith.hpp"
#include "alexnorm/laurent.hpp"
#include "alexnorm/polytope.hpp"

namespace alexnorm {

/// A real (rational) class in H^1 of a link exterior, one coordinate per
/// meridian variable.
struct CohomologyClass {
  Point components;

  std::size_t size() const { return components.size(); }
  bool is_zero() const;
  bool operator==(const CohomologyClass&) const = default;
};

CohomologyClass parse_class(std::string_view text);
std::string to_string(const CohomologyClass& c);

Polytope newton_polytope(const LaurentPoly& p);

/// max over support points g, h of phi(g - h).
Rational poly_norm(const LaurentPoly& p, const CohomologyClass& phi);

/// Unit ball of the polytope norm of p.
///
/// When the difference body spans a proper subspace L the norm vanishes on
/// L^perp; `ball` is then the bounded slice of the ball inside L and
/// `null_directions` is a basis of L^perp.
struct NormBall {
  Polytope newton;
  Polytope difference;
  Polytope ball;
  std::vector<Point> null_directions;

  bool degenerate() const { return !null_directions.empty(); }
  bool contains(const CohomologyClass& phi) const;
};

NormBall unit_ball(const LaurentPoly& p);

struct DualVertexResult {
  enum class Kind { Unique, Boundary, Zero };
  Kind kind;
  /// The maximizing Newton vertices: one for Unique, the tied set for Boundary.
  std::vector<ExponentVector> vertices;

  bool is_unique() const { return kind == Kind::Unique; }
  const ExponentVector& vertex() const;
  bool operator==(const DualVertexResult&) const = default;
};

std::string to_string(const DualVertexResult& r);

DualVertexResult dual_vertex(const LaurentPoly& p, const CohomologyClass& phi);
DualVertexResult dual_vertex(const Polytope& newton, const CohomologyClass& phi);

/// phi lies in the open cone over the top-dimensional ball face dual to v.
bool in_cone_over_face(const LaurentPoly& p, const CohomologyClass& phi, const ExponentVector& v);

struct ProductStructureReport {
  bool holds = false;
  bool degenerate = false;  ///< the ball or its t = 0 slice is not full-dimensional
  std::string note;
  std::vector<Halfspace> ball_facets;
  std::vector<Halfspace> slice_facets;  ///< facets of the t = 0 slice, in R^3
};

/// Tests unit_ball(p) == (unit_ball(p) with t = 0) x [-1/2, 1/2] for a
/// four-variable polynomial with t last.
ProductStructureReport subspace_restriction_check(const LaurentPoly& p);

/// Sum of -chi over the components with negative Euler characteristic.
long long chi_complexity(const std::vector<long long>& component_eulers);

struct FiberedAnnotation {
  CohomologyClass cls;
  ExponentVector dual_vertex;
  std::string note;
};

/// Classes of the Borromean-rings-plus-axis exterior recorded as fibered,
/// together with their dual vertices. Bundled data; nothing is decided here.
std::vector<FiberedAnnotation> fibered_annotations();

}  // namespace alexnorm
