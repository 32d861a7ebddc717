#pragma once

// Data-parallel kernels. Each has an OpenMP implementation and a serial
// reference with identical (sorted, deterministic) output; the tests and the
// benchmark compare the two.

#include <cstddef>
#include <vector>

#include "alexnorm/arith.hpp"
#include "alexnorm/laurent.hpp"
#include "alexnorm/polytope.hpp"

namespace alexnorm::kernels {

/// Facets of the hull of a full-dimensional point set in R^d: every
/// d-subset spanning a hyperplane with all points on one side. Output is
/// canonical, sorted and duplicate free.
std::vector<Halfspace> enumerate_facets(const std::vector<Point>& points);
std::vector<Halfspace> enumerate_facets_serial(const std::vector<Point>& points);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant by fraction-free Bareiss elimination, after clearing the
/// monomial denominators of each row.
LaurentPoly bareiss_determinant(PolyMatrix m, std::size_t arity);

/// For an (n-1) x n matrix, the determinants D_j of the square matrices with
/// column j deleted, j = 0..n-1.
std::vector<LaurentPoly> column_deleted_minors(const PolyMatrix& m, std::size_t arity);
std::vector<LaurentPoly> column_deleted_minors_serial(const PolyMatrix& m, std::size_t arity);

}  // namespace alexnorm::kernels
