#include "alexnorm/sw.hpp"

namespace alexnorm {

LaurentPoly sw_polynomial(const LaurentPoly& delta) {
  if (delta.is_zero()) throw PreconditionError("sw_polynomial: zero polynomial");
  return substitute_powers(delta, 2);
}

BasicClassReport basic_classes_unit_coeff(const LaurentPoly& sw) {
  BasicClassReport r;
  for (const auto& [e, c] : sw.terms()) {
    if (c == 1 || c == -1)
      r.classes.emplace_back(e, static_cast<int>(c.get_si()));
    else
      r.excluded.emplace_back(e, c);
  }
  return r;
}

namespace {

std::size_t checked_valence(const Polytope& p, const ExponentVector& v) {
  const Point pt = v.to_point();
  if (!p.vertex_index(pt)) throw PreconditionError(to_string(v) + " is not a vertex of the Newton polytope");
  const std::size_t by_lp = vertex_valence(p, pt);
  const std::size_t by_facets = vertex_valence_by_facets(p, pt);
  if (by_lp != by_facets)
    throw ConsistencyError("valence of " + to_string(v) + ": LP edge test gives " + std::to_string(by_lp) +
                           ", facet incidence gives " + std::to_string(by_facets));
  return by_lp;
}

}  // namespace

CanonicalClassReport canonical_class(const LaurentPoly& delta, const CohomologyClass& phi) {
  const DualVertexResult dv = dual_vertex(delta, phi);
  if (!dv.is_unique())
    throw PreconditionError("class " + to_string(phi) + " has dual vertex " + to_string(dv) +
                            "; a canonical class needs a unique dual vertex");
  const ExponentVector k = dv.vertex().scaled(2);
  const Polytope newt = newton_polytope(sw_polynomial(delta));
  return {phi, dv.vertex(), k, checked_valence(newt, k)};
}

ValenceComparison valence_distinct(const LaurentPoly& sw, const ExponentVector& v1, const ExponentVector& v2) {
  const Polytope newt = newton_polytope(sw);
  const std::size_t a = checked_valence(newt, v1);
  const std::size_t b = checked_valence(newt, v2);
  return {a, b, a != b};
}

}  // namespace alexnorm
