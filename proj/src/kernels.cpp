#include "alexnorm/kernels.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "alexnorm/linalg.hpp"

namespace alexnorm::kernels {

namespace {

/// Supporting halfspace through the points indexed by `subset`, if those
/// points span a hyperplane and all points lie on one side of it.
std::optional<Halfspace> facet_through(const std::vector<Point>& pts, const std::vector<std::size_t>& subset) {
  const std::size_t d = pts[0].size();
  RationalMatrix rows;
  rows.reserve(subset.size());
  for (auto i : subset) {
    Point r = pts[i];
    r.emplace_back(-1);
    rows.push_back(std::move(r));
  }
  RationalMatrix ns = nullspace(rows, d + 1);
  if (ns.size() != 1) return std::nullopt;
  Point normal(ns[0].begin(), ns[0].begin() + static_cast<std::ptrdiff_t>(d));
  const Rational offset = ns[0][d];
  bool below = false, above = false;
  for (const auto& p : pts) {
    const Rational s = dot(normal, p) - offset;
    if (s < 0) below = true;
    if (s > 0) above = true;
    if (below && above) return std::nullopt;
  }
  if (above) {
    for (auto& v : normal) v = -v;
    return canonical_halfspace(std::move(normal), -offset);
  }
  return canonical_halfspace(std::move(normal), offset);
}

/// Visits every d-subset whose smallest element is `first`.
template <class Visit>
void for_each_subset_from(std::size_t n, std::size_t d, std::size_t first, Visit&& visit) {
  std::vector<std::size_t> idx(d);
  idx[0] = first;
  if (d == 1) {
    visit(idx);
    return;
  }
  if (first + d > n) return;
  for (std::size_t k = 1; k < d; ++k) idx[k] = first + k;
  while (true) {
    visit(idx);
    std::size_t k = d - 1;
    while (k >= 1 && idx[k] == n - d + k) --k;
    if (k == 0) return;
    ++idx[k];
    for (std::size_t j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void sort_unique(std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

}  // namespace

std::vector<Halfspace> enumerate_facets_serial(const std::vector<Point>& points) {
  std::vector<Halfspace> out;
  if (points.empty()) return out;
  const std::size_t n = points.size(), d = points[0].size();
  for (std::size_t first = 0; first < n; ++first)
    for_each_subset_from(n, d, first, [&](const std::vector<std::size_t>& s) {
      if (auto h = facet_through(points, s)) out.push_back(std::move(*h));
    });
  sort_unique(out);
  return out;
}

std::vector<Halfspace> enumerate_facets(const std::vector<Point>& points) {
  std::vector<Halfspace> out;
  if (points.empty()) return out;
  const std::size_t n = points.size(), d = points[0].size();
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    std::vector<Halfspace> local;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t first = 0; first < count; ++first)
      for_each_subset_from(n, d, static_cast<std::size_t>(first), [&](const std::vector<std::size_t>& s) {
        if (auto h = facet_through(points, s)) local.push_back(std::move(*h));
      });
#pragma omp critical
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------- determinants

LaurentPoly bareiss_determinant(PolyMatrix m, std::size_t arity) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) return LaurentPoly::constant(arity, 1);

  // Clear monomial denominators row by row; det(M) = det(M') * x^-shift.
  ExponentVector total_shift(arity);
  for (auto& row : m) {
    std::optional<ExponentVector> lo;
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      ExponentVector emin = e.min_exponents();
      if (!lo)
        lo = emin;
      else
        for (std::size_t k = 0; k < arity; ++k) (*lo)[k] = std::min((*lo)[k], emin[k]);
    }
    if (!lo) return LaurentPoly(arity);
    for (auto& e : row) e = e.shifted(-*lo);
    total_shift = total_shift + *lo;
  }

  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(arity, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot, lowest row on ties.
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].is_zero() && (piv == n || m[i][k].size() < m[piv][k].size())) piv = i;
    if (piv == n) return LaurentPoly(arity);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
      m[i][k] = LaurentPoly(arity);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det.shifted(total_shift);
}

namespace {

PolyMatrix without_column(const PolyMatrix& m, std::size_t col) {
  PolyMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<LaurentPoly> r;
    r.reserve(row.size() - 1);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (j != col) r.push_back(row[j]);
    out.push_back(std::move(r));
  }
  return out;
}

void check_shape(const PolyMatrix& m) {
  const std::size_t rows = m.size();
  for (const auto& row : m)
    if (row.size() != rows + 1) throw PreconditionError("column-deleted minors need an (n-1) x n matrix");
}

}  // namespace

std::vector<LaurentPoly> column_deleted_minors_serial(const PolyMatrix& m, std::size_t arity) {
  check_shape(m);
  const std::size_t cols = m.size() + 1;
  std::vector<LaurentPoly> out;
  out.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) out.push_back(bareiss_determinant(without_column(m, j), arity));
  return out;
}

std::vector<LaurentPoly> column_deleted_minors(const PolyMatrix& m, std::size_t arity) {
  check_shape(m);
  const std::size_t cols = m.size() + 1;
  std::vector<LaurentPoly> out(cols, LaurentPoly(arity));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(cols); ++j) {
    const auto col = static_cast<std::size_t>(j);
    try {
      out[col] = bareiss_determinant(without_column(m, col), arity);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace alexnorm::kernels
