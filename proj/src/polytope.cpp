#include "alexnorm/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "alexnorm/kernels.hpp"
#include "alexnorm/linalg.hpp"

namespace alexnorm {

Halfspace canonical_halfspace(Point normal, Rational offset) {
  Integer den_lcm = offset.get_den();
  for (const auto& v : normal) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& v : normal) {
    Integer scaled = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  {
    Integer scaled = offset.get_num() * (den_lcm / offset.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return {std::move(normal), offset};
  const Rational factor(den_lcm, num_gcd);
  for (auto& v : normal) v *= factor;
  offset *= factor;
  return {std::move(normal), offset};
}

namespace {

void check_uniform(const std::vector<Point>& points) {
  if (points.empty()) throw PreconditionError("hull of an empty point set");
  for (const auto& p : points)
    if (p.size() != points[0].size()) throw PreconditionError("hull: points of different dimensions");
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Above this size, points inside the hull of the others are dropped by LP
// before the combinatorial facet search.
constexpr std::size_t kPrefilterThreshold = 24;

std::vector<Point> extreme_points_lp(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    others.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(others, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

Polytope Polytope::hull(const std::vector<Point>& input) {
  check_uniform(input);
  std::vector<Point> pts = sorted_unique(input);
  Polytope poly;
  poly.ambient_ = pts[0].size();
  const std::size_t d = poly.ambient_;

  if (pts.size() > kPrefilterThreshold) pts = extreme_points_lp(pts);

  // Affine hull.
  const Point& base = pts[0];
  RationalMatrix dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = pts[i][k] - base[k];
    dirs.push_back(std::move(v));
  }
  const RowEchelon ech = row_reduce(dirs, d);
  const std::size_t r = ech.pivots.size();
  poly.dim_ = static_cast<int>(r);
  for (auto& n : nullspace(ech.rows, d)) {
    Rational off = dot(n, base);
    poly.equations_.push_back(canonical_halfspace(std::move(n), off));
  }
  std::sort(poly.equations_.begin(), poly.equations_.end());

  if (r == 0) {
    poly.vertices_ = {base};
  } else if (r == d) {
    poly.facets_ = kernels::enumerate_facets(pts);
    for (const auto& p : pts) {
      RationalMatrix tight;
      for (const auto& f : poly.facets_)
        if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
      if (rank(tight, d) == d) poly.vertices_.push_back(p);
    }
  } else {
    // The projection onto the pivot coordinates is injective on the affine hull.
    std::vector<Point> reduced;
    for (const auto& p : pts) {
      Point y;
      for (auto c : ech.pivots) y.push_back(p[c]);
      reduced.push_back(std::move(y));
    }
    const Polytope low = hull(reduced);
    for (const auto& f : low.facets_) {
      Point n(d, Rational(0));
      for (std::size_t k = 0; k < r; ++k) n[ech.pivots[k]] = f.normal[k];
      poly.facets_.push_back(canonical_halfspace(std::move(n), f.offset));
    }
    std::sort(poly.facets_.begin(), poly.facets_.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (low.vertex_index(reduced[i])) poly.vertices_.push_back(pts[i]);
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  poly.derive_combinatorics();
  return poly;
}

void Polytope::derive_combinatorics() {
  incidence_.assign(vertices_.size(), {});
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (dot(facets_[f].normal, vertices_[v]) == facets_[f].offset) incidence_[v].push_back(f);

  edges_.clear();
  if (dim_ < 1) return;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(incidence_[i].begin(), incidence_[i].end(), incidence_[j].begin(), incidence_[j].end(),
                            std::back_inserter(shared));
      RationalMatrix normals;
      for (auto f : shared) normals.push_back(facets_[f].normal);
      if (rank(normals, ambient_) == static_cast<std::size_t>(dim_ - 1)) edges_.emplace_back(i, j);
    }
}

std::optional<std::size_t> Polytope::vertex_index(const Point& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Polytope::contains(const Point& p) const {
  if (p.size() != ambient_) throw PreconditionError("contains: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e.normal, p) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, p) > f.offset) return false;
  return true;
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  const std::size_t d = points[0].size();
  RationalMatrix dirs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = points[i][k] - points[0][k];
    dirs.push_back(std::move(v));
  }
  return static_cast<int>(rank(dirs, d));
}

Face face_of(const Polytope& p, const Point& functional) {
  if (functional.size() != p.ambient_dim()) throw PreconditionError("face_of: functional dimension mismatch");
  Face face{functional, {}, 0};
  std::optional<Rational> best;
  for (const auto& v : p.vertices()) {
    const Rational val = dot(functional, v);
    if (!best || val > *best) {
      best = val;
      face.vertices.clear();
    }
    if (val == *best) face.vertices.push_back(v);
  }
  face.dimension = affine_dimension(face.vertices);
  return face;
}

bool in_convex_hull(const std::vector<Point>& points, const Point& p) {
  if (points.empty()) return false;
  const std::size_t d = p.size();
  // Columns are the points (plus a row of ones); lambda >= 0.
  RationalMatrix a(d + 1, Point(points.size(), Rational(0)));
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != d) throw PreconditionError("in_convex_hull: dimension mismatch");
    for (std::size_t k = 0; k < d; ++k) a[k][j] = points[j][k];
    a[d][j] = 1;
  }
  Point b = p;
  b.emplace_back(1);
  return find_nonnegative_solution(a, b).has_value();
}

bool spans_edge_lp(const Polytope& p, std::size_t i, std::size_t j) {
  const auto& vs = p.vertices();
  if (i >= vs.size() || j >= vs.size() || i == j) throw PreconditionError("spans_edge_lp: bad vertex indices");
  if (p.dim() < 1) return false;
  const std::size_t d = p.ambient_dim();
  const Point& u = vs[i];
  const Point& v = vs[j];
  std::vector<std::size_t> others;
  for (std::size_t w = 0; w < vs.size(); ++w)
    if (w != i && w != j) others.push_back(w);
  // Variables: c+ (d), c- (d), slack per other vertex. Constraints:
  //   (u - v).c = 0,   (u - w).c - s_w = 1.
  const std::size_t nvar = 2 * d + others.size();
  RationalMatrix a;
  Point b;
  Point row(nvar, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    row[k] = u[k] - v[k];
    row[d + k] = -(u[k] - v[k]);
  }
  a.push_back(row);
  b.emplace_back(0);
  for (std::size_t s = 0; s < others.size(); ++s) {
    const Point& w = vs[others[s]];
    Point r(nvar, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = u[k] - w[k];
      r[d + k] = -(u[k] - w[k]);
    }
    r[2 * d + s] = -1;
    a.push_back(std::move(r));
    b.emplace_back(1);
  }
  return find_nonnegative_solution(a, b).has_value();
}

namespace {

std::size_t require_vertex(const Polytope& p, const Point& v) {
  auto idx = p.vertex_index(v);
  if (!idx) throw PreconditionError("point " + to_string(v) + " is not a vertex");
  return *idx;
}

}  // namespace

std::size_t vertex_valence(const Polytope& p, const Point& v) {
  const std::size_t i = require_vertex(p, v);
  std::size_t deg = 0;
  for (std::size_t j = 0; j < p.vertices().size(); ++j)
    if (j != i && spans_edge_lp(p, i, j)) ++deg;
  return deg;
}

std::size_t vertex_valence_by_facets(const Polytope& p, const Point& v) {
  const std::size_t i = require_vertex(p, v);
  return static_cast<std::size_t>(std::count_if(p.edges().begin(), p.edges().end(),
                                                [i](const auto& e) { return e.first == i || e.second == i; }));
}

std::size_t vertex_facet_count(const Polytope& p, const Point& v) {
  return p.vertex_facets()[require_vertex(p, v)].size();
}

Polytope scaled(const Polytope& p, const Rational& k) {
  std::vector<Point> pts;
  for (auto v : p.vertices()) {
    for (auto& c : v) c *= k;
    pts.push_back(std::move(v));
  }
  return Polytope::hull(pts);
}

Polytope difference_body(const Polytope& p) {
  const auto& vs = p.vertices();
  std::vector<Point> pts;
  pts.reserve(vs.size() * vs.size());
  for (const auto& g : vs)
    for (const auto& h : vs) {
      Point d(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) d[k] = g[k] - h[k];
      pts.push_back(std::move(d));
    }
  return Polytope::hull(pts);
}

Polytope polar_dual(const Polytope& p) {
  if (!p.full_dimensional()) throw PreconditionError("polar_dual: origin is not an interior point (polytope is not full-dimensional)");
  std::vector<Point> pts;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) throw PreconditionError("polar_dual: origin is not an interior point");
    Point q = f.normal;
    for (auto& c : q) c /= f.offset;
    pts.push_back(std::move(q));
  }
  return Polytope::hull(pts);
}

Polytope product_with_segment(const Polytope& q, const Point& axis, const Rational& halfwidth) {
  if (axis.size() != q.ambient_dim()) throw PreconditionError("product_with_segment: axis dimension mismatch");
  if (dot(axis, axis) != 1) throw PreconditionError("product_with_segment: axis is not a unit vector");
  if (halfwidth < 0) throw PreconditionError("product_with_segment: negative halfwidth");
  std::vector<Point> pts;
  for (const auto& v : q.vertices()) {
    if (dot(v, axis) != 0) throw PreconditionError("product_with_segment: polytope is not orthogonal to the axis");
    for (int s : {-1, 1}) {
      Point w = v;
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += s * halfwidth * axis[k];
      pts.push_back(std::move(w));
    }
  }
  return Polytope::hull(pts);
}

bool polytope_equal(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw PreconditionError("polytope_equal: dimension mismatch");
  return p.vertices() == q.vertices();
}

// ---------------------------------------------------------------- text I/O

std::string to_text(const Polytope& p) {
  std::string out = "polytope " + std::to_string(p.ambient_dim()) + "\n";
  for (const auto& v : p.vertices()) out += "v " + to_string(v, " ") + "\n";
  for (const auto& f : p.facets()) out += "f " + to_string(f.normal, " ") + " " + to_string(f.offset) + "\n";
  for (const auto& e : p.equations()) out += "e " + to_string(e.normal, " ") + " " + to_string(e.offset) + "\n";
  return out;
}

Polytope parse_polytope(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> dim;
  std::vector<Point> verts;
  std::vector<Halfspace> facets;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "polytope line " + std::to_string(lineno) + ": ";
    if (!dim) {
      if (tok.size() != 2 || tok[0] != "polytope") throw InputError(where + "expected header 'polytope <dim>'");
      Integer d = parse_integer(tok[1]);
      if (d < 1 || d > 16) throw InputError(where + "dimension must be in 1..16");
      dim = d.get_ui();
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != *dim + 1) throw InputError(where + "wrong coordinate count");
      Point v;
      for (std::size_t k = 1; k < tok.size(); ++k) v.push_back(parse_rational(tok[k]));
      verts.push_back(std::move(v));
    } else if (tok[0] == "f") {
      if (tok.size() != *dim + 2) throw InputError(where + "wrong facet entry count");
      Point n;
      for (std::size_t k = 1; k + 1 < tok.size(); ++k) n.push_back(parse_rational(tok[k]));
      facets.push_back(canonical_halfspace(std::move(n), parse_rational(tok.back())));
    } else if (tok[0] == "e") {
      if (tok.size() != *dim + 2) throw InputError(where + "wrong equation entry count");
    } else {
      throw InputError(where + "unknown record '" + tok[0] + "'");
    }
  }
  if (!dim) throw InputError("polytope: missing header");
  if (verts.empty()) throw InputError("polytope: no vertices");
  Polytope p = Polytope::hull(verts);
  if (!facets.empty()) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    if (facets != p.facets()) throw InputError("polytope: facet lines do not match the hull of the vertices");
  }
  return p;
}

}  // namespace alexnorm
