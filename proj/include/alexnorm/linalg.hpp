#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alexnorm/arith.hpp"

namespace alexnorm {

/// Dense row-major rational matrix given as a list of rows.
using RationalMatrix = std::vector<Point>;

struct RowEchelon {
  RationalMatrix rows;               ///< reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;   ///< pivot column of each row
};

RowEchelon row_reduce(RationalMatrix m, std::size_t cols);
std::size_t rank(const RationalMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);

/// Solves m x = b; nullopt when inconsistent. Free variables are set to zero.
std::optional<Point> solve(const RationalMatrix& m, const Point& b);

/// Feasibility of {x : A x = b, x >= 0} by exact Phase-I simplex with
/// Bland's rule. Returns a feasible x when one exists.
std::optional<Point> find_nonnegative_solution(const RationalMatrix& a, const Point& b);

}  // namespace alexnorm
