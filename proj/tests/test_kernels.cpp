#include <doctest.h>

#include "alexnorm/fox.hpp"
#include "alexnorm/kernels.hpp"
#include "oracles.hpp"

using namespace alexnorm;

TEST_CASE("parallel facet enumeration matches the serial reference") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 40; ++i) {
    std::vector<Point> pts;
    for (int k = 0; k < 12; ++k) pts.push_back({c(rng), c(rng), c(rng), c(rng)});
    if (affine_dimension(pts) < 4) continue;
    CHECK(kernels::enumerate_facets(pts) == kernels::enumerate_facets_serial(pts));
  }
}

TEST_CASE("Bareiss determinant against Laplace expansion") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 4, mu = 1 + i % 2;
    kernels::PolyMatrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(mu)));
    for (auto& row : m)
      for (auto& e : row) e = oracle::random_poly(rng, mu, 3, 1, 2);
    CHECK(kernels::bareiss_determinant(m, mu) == oracle::laplace_det(m, mu));
  }
}

TEST_CASE("parallel minors match the serial reference") {
  const PDCode pd = parse_pd(
      "pd 3 1\nX 6 4 1 3 +1\nX 4 2 5 1 +1\nX 2 6 3 5 +1\ncomp 1 2 3 4 5 6\n");
  AlexanderMatrix m = alexander_matrix(wirtinger_from_pd(pd));
  m.pop_back();
  const auto par = kernels::column_deleted_minors(m, 1);
  CHECK(par == kernels::column_deleted_minors_serial(m, 1));
  for (std::size_t j = 0; j < par.size(); ++j) {
    kernels::PolyMatrix sq;
    for (const auto& row : m) {
      std::vector<LaurentPoly> r;
      for (std::size_t c = 0; c < row.size(); ++c)
        if (c != j) r.push_back(row[c]);
      sq.push_back(r);
    }
    CHECK(par[j] == oracle::laplace_det(sq, 1));
  }
}
