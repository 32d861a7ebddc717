#include "alexnorm/linalg.hpp"

namespace alexnorm {

RowEchelon row_reduce(RationalMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  const RowEchelon ech = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Point v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) v[ech.pivots[i]] = -ech.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Point> solve(const RationalMatrix& m, const Point& b) {
  if (m.size() != b.size()) throw PreconditionError("solve: row count mismatch");
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const RowEchelon ech = row_reduce(aug, cols + 1);
  Point x(cols, Rational(0));
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    if (ech.pivots[i] == cols) return std::nullopt;
    x[ech.pivots[i]] = ech.rows[i][cols];
  }
  return x;
}

std::optional<Point> find_nonnegative_solution(const RationalMatrix& a, const Point& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw PreconditionError("lp: row count mismatch");
  const std::size_t n = m ? a[0].size() : 0;
  if (m == 0) return Point(n, Rational(0));

  // Tableau [A | I | b] with artificial basis; objective row minimizes the
  // sum of artificials.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  RationalMatrix t(m, Point(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = flip ? -b[i] : b[i];
    basis[i] = n + i;
  }
  Point obj(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] += t[i][j];
    obj[rhs] += t[i][rhs];
  }

  while (true) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == n) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase I is bounded below by zero, so some row always qualifies.
    if (leave == m) throw ConsistencyError("lp: unbounded Phase-I objective");
    const Rational inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = obj[enter];
    for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (obj[rhs] != 0) return std::nullopt;
  Point x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][rhs];
  return x;
}

}  // namespace alexnorm
