#include "alexnorm/norm.hpp"

#include <algorithm>

#include "alexnorm/linalg.hpp"

namespace alexnorm {

bool CohomologyClass::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Rational& c) { return c == 0; });
}

CohomologyClass parse_class(std::string_view text) { return CohomologyClass{parse_point(text)}; }

std::string to_string(const CohomologyClass& c) { return "(" + to_string(c.components, ",") + ")"; }

namespace {

void check_arity(const LaurentPoly& p, const CohomologyClass& phi) {
  if (phi.size() != p.arity())
    throw PreconditionError("class has " + std::to_string(phi.size()) + " components but the polynomial has " +
                            std::to_string(p.arity()) + " variables");
}

void require_nonzero(const LaurentPoly& p, const char* op) {
  if (p.is_zero()) throw PreconditionError(std::string(op) + ": zero polynomial");
}

std::vector<Point> support_points(const LaurentPoly& p) {
  std::vector<Point> pts;
  for (const auto& [e, c] : p.terms()) pts.push_back(e.to_point());
  return pts;
}

}  // namespace

Polytope newton_polytope(const LaurentPoly& p) {
  require_nonzero(p, "newton_polytope");
  return Polytope::hull(support_points(p));
}

Rational poly_norm(const LaurentPoly& p, const CohomologyClass& phi) {
  require_nonzero(p, "poly_norm");
  check_arity(p, phi);
  // max_{g,h} phi(g - h) = max phi - min phi over the support.
  std::optional<Rational> lo, hi;
  for (const auto& [e, c] : p.terms()) {
    const Rational v = dot(phi.components, e.to_point());
    if (!lo || v < *lo) lo = v;
    if (!hi || v > *hi) hi = v;
  }
  return *hi - *lo;
}

NormBall unit_ball(const LaurentPoly& p) {
  Polytope newton = newton_polytope(p);
  Polytope diff = difference_body(newton);
  const std::size_t d = p.arity();
  if (diff.full_dimensional()) {
    Polytope ball = polar_dual(diff);
    return NormBall{std::move(newton), std::move(diff), std::move(ball), {}};
  }

  // The difference body spans L = span(basis); the norm is zero on L^perp.
  const RationalMatrix basis = row_reduce(diff.vertices(), d).rows;
  std::vector<Point> nulls;
  for (auto& n : nullspace(basis, d)) nulls.push_back(canonical_halfspace(std::move(n), 0).normal);
  if (basis.empty())
    return NormBall{std::move(newton), std::move(diff), Polytope::hull({Point(d, Rational(0))}), std::move(nulls)};

  std::vector<Point> coords;
  for (const auto& w : diff.vertices()) {
    Point y;
    for (const auto& b : basis) y.push_back(dot(b, w));
    coords.push_back(std::move(y));
  }
  const Polytope polar = polar_dual(Polytope::hull(coords));
  std::vector<Point> ball_pts;
  for (const auto& alpha : polar.vertices()) {
    Point phi(d, Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < d; ++i) phi[i] += alpha[k] * basis[k][i];
    ball_pts.push_back(std::move(phi));
  }
  return NormBall{std::move(newton), std::move(diff), Polytope::hull(ball_pts), std::move(nulls)};
}

bool NormBall::contains(const CohomologyClass& phi) const {
  if (phi.size() != ball.ambient_dim()) throw PreconditionError("NormBall::contains: dimension mismatch");
  if (!degenerate()) return ball.contains(phi.components);
  // Project orthogonally onto L: phi - sum gamma_k n_k with Gram(n) gamma = (n_j . phi).
  const std::size_t m = null_directions.size();
  RationalMatrix gram(m, Point(m, Rational(0)));
  Point rhs(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) gram[j][k] = dot(null_directions[j], null_directions[k]);
    rhs[j] = dot(null_directions[j], phi.components);
  }
  const auto gamma = solve(gram, rhs);
  if (!gamma) throw ConsistencyError("NormBall::contains: singular Gram matrix");
  Point proj = phi.components;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < proj.size(); ++i) proj[i] -= (*gamma)[k] * null_directions[k][i];
  return ball.contains(proj);
}

const ExponentVector& DualVertexResult::vertex() const {
  if (kind != Kind::Unique) throw PreconditionError("dual vertex is not unique");
  return vertices.front();
}

std::string to_string(const DualVertexResult& r) {
  switch (r.kind) {
    case DualVertexResult::Kind::Zero:
      return "Zero";
    case DualVertexResult::Kind::Unique:
      return "Unique" + to_string(r.vertices.front());
    case DualVertexResult::Kind::Boundary: {
      std::string s = "Boundary{";
      for (std::size_t i = 0; i < r.vertices.size(); ++i) s += (i ? "," : "") + to_string(r.vertices[i]);
      return s + "}";
    }
  }
  return {};
}

DualVertexResult dual_vertex(const Polytope& newton, const CohomologyClass& phi) {
  if (phi.size() != newton.ambient_dim()) throw PreconditionError("dual_vertex: class dimension mismatch");
  if (phi.is_zero()) return {DualVertexResult::Kind::Zero, {}};
  const Face face = face_of(newton, phi.components);
  DualVertexResult r{face.vertices.size() == 1 ? DualVertexResult::Kind::Unique : DualVertexResult::Kind::Boundary, {}};
  for (const auto& v : face.vertices) r.vertices.push_back(to_exponent(v));
  return r;
}

DualVertexResult dual_vertex(const LaurentPoly& p, const CohomologyClass& phi) {
  check_arity(p, phi);
  return dual_vertex(newton_polytope(p), phi);
}

bool in_cone_over_face(const LaurentPoly& p, const CohomologyClass& phi, const ExponentVector& v) {
  check_arity(p, phi);
  const Polytope newton = newton_polytope(p);
  if (!newton.vertex_index(v.to_point()))
    throw PreconditionError(to_string(v) + " is not a vertex of the Newton polytope");
  const DualVertexResult r = dual_vertex(newton, phi);
  return r.is_unique() && r.vertex() == v;
}

ProductStructureReport subspace_restriction_check(const LaurentPoly& p) {
  if (p.arity() != 4) throw PreconditionError("product-structure check needs a four-variable polynomial (x, y, z, t)");
  ProductStructureReport report;
  const NormBall b = unit_ball(p);
  report.ball_facets = b.ball.facets();
  if (b.degenerate()) {
    report.degenerate = true;
    report.note = "unit ball is degenerate: the norm vanishes on " + std::to_string(b.null_directions.size()) +
                  " independent direction(s)";
    return report;
  }
  // The t = 0 slice of the ball is polar to the projection of the
  // difference body that forgets t.
  std::vector<Point> projected;
  for (const auto& w : b.difference.vertices()) projected.emplace_back(w.begin(), w.begin() + 3);
  const Polytope shadow = Polytope::hull(projected);
  if (!shadow.full_dimensional()) {
    report.degenerate = true;
    report.note = "the t = 0 slice of the unit ball is unbounded";
    return report;
  }
  const Polytope slice = polar_dual(shadow);
  report.slice_facets = slice.facets();
  std::vector<Point> embedded;
  for (auto v : slice.vertices()) {
    v.emplace_back(0);
    embedded.push_back(std::move(v));
  }
  const Point axis{0, 0, 0, 1};
  const Polytope prism = product_with_segment(Polytope::hull(embedded), axis, Rational(1, 2));
  report.holds = polytope_equal(b.ball, prism);
  report.note = report.holds ? "unit ball = (t = 0 slice) x [-1/2, 1/2]" : "unit ball is not the prism over its t = 0 slice";
  return report;
}

long long chi_complexity(const std::vector<long long>& component_eulers) {
  long long total = 0;
  for (auto chi : component_eulers)
    if (chi < 0) total += -chi;
  return total;
}

std::vector<FiberedAnnotation> fibered_annotations() {
  return {
      {CohomologyClass{{1, 1, 1, 1}}, ExponentVector{1, 1, 1, 0},
       "fiber of the minimal spanning surface; restriction of the fibration of the surgered manifold M_K"},
      {CohomologyClass{{1, 1, 1, 0}}, ExponentVector{1, 1, 1, 0},
       "class pulled back from H^1(T^3) in the open cone of the face dual to xyz"},
      {CohomologyClass{{0, 0, 0, 1}}, ExponentVector{0, 0, 0, 1},
       "disk spanning the axis; restriction of the sphere fibration S^1 x S^2 -> S^1"},
  };
}

}  // namespace alexnorm
