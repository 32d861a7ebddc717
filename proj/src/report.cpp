#include "alexnorm/report.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "alexnorm/fox.hpp"
#include "alexnorm/norm.hpp"
#include "alexnorm/surgery.hpp"
#include "alexnorm/sw.hpp"

namespace alexnorm {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace {


struct Env {
  std::filesystem::path dir;
  LaurentPoly eq3() const {
    LaurentPoly p = parse_laurent(read_file(dir / "eq3.poly"));
    if (normalize_units(p) != normalize_units(mt_link_polynomial()))
      throw ConsistencyError("eq3.poly differs from the built-in polynomial");
    return p;
  }
};

bool alexander_matches(const Env& env, std::string& detail) {
  const PDCode pd = parse_pd(read_file(env.dir / "mt_link.pd"));
  const LaurentPoly got = alexander_polynomial(wirtinger_from_pd(pd));
  const LaurentPoly want = normalize_units(env.eq3());
  detail = std::to_string(pd.crossings.size()) + " crossings, " + std::to_string(got.size()) + " terms";
  if (got != want) detail += "; got " + to_pretty(got);
  return got == want;
}

bool newton_vertices(const Env& env, std::string& detail) {
  const LaurentPoly d = env.eq3();
  const Polytope newt = newton_polytope(d);
  std::size_t extreme = 0;
  std::vector<Point> support;
  for (const auto& [e, c] : d.terms()) support.push_back(e.to_point());
  for (std::size_t i = 0; i < support.size(); ++i) {
    std::vector<Point> rest = support;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!in_convex_hull(rest, support[i])) ++extreme;
  }
  bool interior = newt.full_dimensional();
  for (const auto& f : newt.facets()) interior = interior && f.offset > 0;
  detail = std::to_string(newt.vertices().size()) + " vertices, " + std::to_string(extreme) +
           " extreme support points, origin " + (interior ? "interior" : "not interior");
  return newt.vertices().size() == 16 && extreme == 16 && interior;
}

bool dual_vertices(const Env& env, std::string& detail) {
  const LaurentPoly d = env.eq3();
  const auto a = dual_vertex(d, CohomologyClass{{1, 1, 1, 1}});
  const auto b = dual_vertex(d, CohomologyClass{{0, 0, 0, 1}});
  detail = "(1,1,1,1) -> " + to_string(a) + ", (0,0,0,1) -> " + to_string(b);
  return a.is_unique() && a.vertex() == ExponentVector{1, 1, 1, 0} && b.is_unique() &&
         b.vertex() == ExponentVector{0, 0, 0, 1};
}

Rational pairwise_norm(const LaurentPoly& p, const CohomologyClass& phi) {
  Rational best = 0;
  for (const auto& [g, cg] : p.terms())
    for (const auto& [h, ch] : p.terms()) best = std::max(best, dot(phi.components, (g - h).to_point()));
  return best;
}

bool norm_values(const Env& env, std::string& detail) {
  const LaurentPoly d = env.eq3();
  const CohomologyClass a{{1, 1, 1, 1}}, b{{0, 0, 0, 1}};
  const Rational na = poly_norm(d, a), nb = poly_norm(d, b);
  detail = "norm(1,1,1,1) = " + to_string(na) + ", norm(0,0,0,1) = " + to_string(nb);
  return na == 6 && nb == 2 && pairwise_norm(d, a) == na && pairwise_norm(d, b) == nb;
}

bool product_structure(const Env& env, std::string& detail) {
  const auto r = subspace_restriction_check(env.eq3());
  detail = r.note + " (" + std::to_string(r.ball_facets.size()) + " ball facets, " +
           std::to_string(r.slice_facets.size()) + " slice facets)";
  return r.holds;
}

bool basic_classes(const Env& env, std::string& detail) {
  const LaurentPoly sw = sw_polynomial(env.eq3());
  const auto bc = basic_classes_unit_coeff(sw);
  const Polytope newt = newton_polytope(sw);
  std::size_t on_vertices = 0;
  for (const auto& [e, c] : bc.classes)
    if (newt.vertex_index(e.to_point())) ++on_vertices;
  detail = std::to_string(bc.classes.size()) + " classes with coefficient +-1, " + std::to_string(on_vertices) +
           " of them vertices";
  return bc.classes.size() == 16 && on_vertices == 16 && newt.vertices().size() == 16;
}

bool valence(const Env& env, std::string& detail) {
  const auto v = valence_distinct(sw_polynomial(env.eq3()), {0, 0, 0, 2}, {2, 2, 2, 0});
  detail = "valence(0,0,0,2) = " + std::to_string(v.first) + ", valence(2,2,2,0) = " + std::to_string(v.second);
  return v.distinct;
}

bool surgery_homology(const Env& env, std::string& detail) {
  const PDCode borromean = parse_pd(read_file(env.dir / "borromean.pd"));
  LinkingData zero{linking_numbers(borromean), std::vector<Integer>(3, 0)};
  const auto h = h1_of_surgery(zero);

  const PDCode pd = parse_pd(read_file(env.dir / "mt_link.pd"));
  const IntMatrix lk = linking_numbers(pd);
  const LinkingData k{lk, canonical_framings(lk)};
  std::size_t infinite = 0;
  for (std::size_t i = 0; i < k.components(); ++i)
    if (meridian_order(k, i).infinite) ++infinite;
  detail = "Borromean 0-surgery H1 = " + to_string(h) + ", " + std::to_string(infinite) + "/" +
           std::to_string(k.components()) + " meridians of infinite order";
  return h.rank == 3 && h.torsion.empty() && k.components() == 4 && infinite == 4;
}

GluingMatrix random_block(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-3, 3), row(-9, 9), coin(0, 1);
  IntMatrix a = IntMatrix::identity(2);
  for (int s = 0; s < 4; ++s) {
    IntMatrix e = IntMatrix::identity(2);
    (coin(rng) ? e(0, 1) : e(1, 0)) = small(rng);
    a = a * e;
  }
  return GluingMatrix{{a(0, 0).get_si(), a(0, 1).get_si(), 0},
                      {a(1, 0).get_si(), a(1, 1).get_si(), 0},
                      {row(rng), row(rng), 1}};
}

bool block_form(const Env&, std::string& detail) {
  std::mt19937_64 rng(20240601);
  const int n = 200;
  int ok = 0;
  for (int i = 0; i < n; ++i) {
    const GluingMatrix g = random_block(rng), h = random_block(rng);
    const GluingMatrix gi = g.inverse();
    if (is_fiber_block_form(g) && is_fiber_block_form(compose_gluings(g, h)) && is_fiber_block_form(gi) &&
        compose_gluings(g, gi) == GluingMatrix(IntMatrix::identity(3)))
      ++ok;
  }
  const bool rejects = !is_fiber_block_form(GluingMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}) &&
                       !is_fiber_block_form(GluingMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  detail = std::to_string(ok) + "/" + std::to_string(n) + " random products and inverses stay in block form";
  return ok == n && rejects;
}

}  // namespace

std::vector<ClaimResult> run_claims(const std::filesystem::path& data_dir) {
  const Env env{data_dir};
  const std::vector<std::pair<std::string, bool (*)(const Env&, std::string&)>> claims = {
      {"alexander polynomial of the bundled PD code", alexander_matches},
      {"newton polytope has 16 vertices around an interior origin", newton_vertices},
      {"dual vertices of (1,1,1,1) and (0,0,0,1)", dual_vertices},
      {"norm values 6 and 2", norm_values},
      {"unit ball is a prism over its t = 0 slice", product_structure},
      {"sixteen SW basic classes, all vertices", basic_classes},
      {"valences of (0,0,0,2) and (2,2,2,0) differ", valence},
      {"surgery homology", surgery_homology},
      {"gluing block form closed under product and inverse", block_form},
  };
  std::vector<ClaimResult> out;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    ClaimResult r{static_cast<int>(i + 1), claims[i].first, false, {}};
    try {
      r.pass = claims[i].second(env, r.detail);
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace alexnorm
