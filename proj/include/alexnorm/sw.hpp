#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alexnorm/laurent.hpp"
#include "alexnorm/norm.hpp"

namespace alexnorm {

/// Delta(x1^2, ..., xn^2).
LaurentPoly sw_polynomial(const LaurentPoly& delta);

struct BasicClassReport {
  std::vector<std::pair<ExponentVector, int>> classes;  ///< coefficient +1 or -1
  std::vector<std::pair<ExponentVector, Integer>> excluded;
};

BasicClassReport basic_classes_unit_coeff(const LaurentPoly& sw);

struct CanonicalClassReport {
  CohomologyClass source;
  ExponentVector dual_vertex;
  ExponentVector canonical_class;  ///< twice the dual vertex
  std::size_t valence;             ///< in the Newton polytope of the SW polynomial
};

/// Throws PreconditionError unless phi has a unique dual vertex.
CanonicalClassReport canonical_class(const LaurentPoly& delta, const CohomologyClass& phi);

struct ValenceComparison {
  std::size_t first;
  std::size_t second;
  bool distinct;
};

/// Valences of two vertices of Newt(sw). Each valence is computed by the LP
/// edge test and by the facet-incidence edge graph; a disagreement between
/// the two routes is a ConsistencyError.
ValenceComparison valence_distinct(const LaurentPoly& sw, const ExponentVector& v1, const ExponentVector& v2);

}  // namespace alexnorm
