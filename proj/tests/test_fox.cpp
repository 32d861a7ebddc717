#include <doctest.h>

#include "alexnorm/fox.hpp"
#include "alexnorm/report.hpp"
#include "oracles.hpp"

using namespace alexnorm;

namespace {

const std::filesystem::path data = ALEXNORM_DATA_DIR;

GroupPresentation fixture(const char* name) { return wirtinger_from_pd(parse_pd(read_file(data / name))); }

const LaurentPoly t = LaurentPoly::variable(1, 0);
const LaurentPoly one = LaurentPoly::constant(1, 1);

}  // namespace

TEST_CASE("free words") {
  const FreeWord w = parse_word("x1 x2^-1 x2 x3");
  CHECK(w.length() == 4);
  CHECK(w.reduced() == parse_word("x1 x3"));
  CHECK(to_string(w.inverse()) == "x3^-1 x2^-1 x2 x1^-1");
  CHECK((w * w.inverse()).reduced().length() == 0);
  CHECK(parse_word("x2^3") == parse_word("x2 x2 x2"));
  CHECK(to_string(FreeWord{}) == "1");
  CHECK_THROWS_AS(parse_word("y1"), InputError);
  CHECK_THROWS_AS(parse_word("x0"), InputError);
  CHECK_THROWS_AS(parse_word("x1^0"), InputError);
}

TEST_CASE("PD parsing") {
  const PDCode tre = parse_pd(read_file(data / "trefoil.pd"));
  CHECK(tre.crossings.size() == 3);
  CHECK(tre.components.size() == 1);
  const PDCode k = parse_pd(read_file(data / "mt_link.pd"));
  CHECK(k.components.size() == 4);
  CHECK(to_text(parse_pd(to_text(k))) == to_text(k));

  CHECK_THROWS_AS(parse_pd("pd 2 1\nX 1 1 2 2 +1\nX 1 3 3 4 +1\ncomp 1 2 3 4\n"), InputError);  // label 1 used 3 times
  CHECK_THROWS_AS(parse_pd("pd 2 1\nX 6 4 1 3 +1\ncomp 1 3 4 6\n"), InputError);             // header count
  CHECK_THROWS_AS(parse_pd("pd 3 1\nX 6 4 1 3 +1\nX 4 2 5 1 +1\nX 2 6 3 5 +2\ncomp 1 2 3 4 5 6\n"), InputError);
  CHECK_THROWS_AS(parse_pd("pd 3 1\nX 6 4 1 3 +1\nX 4 2 5 1 +1\nX 2 6 3 5 +1\ncomp 1 2 3 4 6 5\n"), InputError);
  CHECK_THROWS_AS(parse_pd("pd 3 1\nX 6 4 1 3 -1\nX 4 2 5 1 +1\nX 2 6 3 5 +1\ncomp 1 2 3 4 5 6\n"), InputError);
  CHECK_THROWS_AS(parse_pd(""), InputError);
}

TEST_CASE("linking numbers from diagrams") {
  const IntMatrix hopf = linking_numbers(parse_pd(read_file(data / "hopf.pd")));
  CHECK(hopf == IntMatrix{{0, 1}, {1, 0}});
  const IntMatrix bor = linking_numbers(parse_pd(read_file(data / "borromean.pd")));
  CHECK(bor == IntMatrix(3, 3));
  const IntMatrix k = linking_numbers(parse_pd(read_file(data / "mt_link.pd")));
  CHECK(k == IntMatrix{{0, 0, 0, -1}, {0, 0, 0, -1}, {0, 0, 0, -1}, {-1, -1, -1, 0}});
}

TEST_CASE("Wirtinger presentations") {
  const GroupPresentation tre = fixture("trefoil.pd");
  CHECK(tre.generator_count() == 3);
  CHECK(tre.relators().size() == 3);
  CHECK(tre.arity() == 1);
  const GroupPresentation k = fixture("mt_link.pd");
  CHECK(k.arity() == 4);
  CHECK(k.generator_count() == 12);
}

TEST_CASE("presentations") {
  const GroupPresentation p = parse_presentation(read_file(data / "trefoil.pres"));
  CHECK(p.generator_count() == 2);
  CHECK(parse_presentation(to_text(p)).relators() == p.relators());
  CHECK_THROWS_AS(parse_presentation("gen 2\nab 1 1\nab 2 1\nrel x1 x1\n"), InputError);  // not null-homologous
  CHECK_THROWS_AS(parse_presentation("gen 1\nab 1 2\n"), InputError);                     // not onto
  CHECK_THROWS_AS(parse_presentation("gen 2\nab 1 1\n"), InputError);                     // missing ab line
  CHECK_THROWS_AS(parse_presentation("gen 1\nab 1 1\nrel x2\n"), InputError);
}

TEST_CASE("Fox derivatives") {
  const std::vector<ExponentVector> ab = {{1, 0}, {0, 1}};
  const LaurentPoly one2 = LaurentPoly::constant(2, 1);
  CHECK(fox_derivative_abelianized(parse_word("x1 x2"), 0, ab) == one2);
  CHECK(fox_derivative_abelianized(parse_word("x1^-1"), 0, ab) == LaurentPoly::monomial({-1, 0}, -1));
  CHECK(fox_derivative_abelianized(parse_word("x1 x2 x1^-1"), 0, ab) == one2 - LaurentPoly::monomial({0, 1}));
  CHECK(fox_derivative_abelianized(parse_word("x1 x2 x1^-1"), 1, ab) == LaurentPoly::monomial({1, 0}));
}

TEST_CASE("fundamental identity on every fixture relator") {
  for (const char* f : {"trefoil.pd", "hopf.pd", "borromean.pd", "mt_link.pd"}) {
    const GroupPresentation p = fixture(f);
    for (const auto& r : p.relators()) {
      LaurentPoly sum(p.arity());
      for (std::size_t j = 0; j < p.generator_count(); ++j) {
        const LaurentPoly d = fox_derivative_abelianized(r, j, p.abelianization());
        CHECK(d == oracle::fox_by_product_rule(r.letters(), 0, r.length(), j, p.abelianization()));
        sum += d * (LaurentPoly::monomial(p.abelianization()[j]) - LaurentPoly::constant(p.arity(), 1));
      }
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("Alexander matrix shape") {
  const AlexanderMatrix m = alexander_matrix(fixture("trefoil.pd"));
  CHECK(m.size() == 3);
  CHECK(m[0].size() == 3);
  const AlexanderMatrix k = alexander_matrix(fixture("mt_link.pd"));
  CHECK(k[0][0].arity() == 4);
}

TEST_CASE("Alexander polynomials of small fixtures") {
  // Trefoil: a 2x2 minor of the Wirtinger matrix by Laplace expansion.
  AlexanderMatrix m = alexander_matrix(fixture("trefoil.pd"));
  const kernels::PolyMatrix minor = {{m[0][1], m[0][2]}, {m[1][1], m[1][2]}};
  const LaurentPoly by_hand = oracle::laplace_det(minor, 1);
  CHECK(equal_up_to_units(by_hand, t * t - t + one));
  CHECK(alexander_polynomial(fixture("trefoil.pd")) == normalize_units(t * t - t + one));
  CHECK(alexander_polynomial(parse_presentation(read_file(data / "trefoil.pres"))) ==
        normalize_units(t * t - t + one));

  CHECK(alexander_polynomial(fixture("hopf.pd")) == LaurentPoly::constant(2, 1));

  const LaurentPoly x = LaurentPoly::variable(3, 0), y = LaurentPoly::variable(3, 1), z = LaurentPoly::variable(3, 2);
  const LaurentPoly one3 = LaurentPoly::constant(3, 1);
  CHECK(equal_up_to_units(alexander_polynomial(fixture("borromean.pd")), (x - one3) * (y - one3) * (z - one3)));
}

TEST_CASE("Alexander polynomial of the four-component link") {
  const auto r = alexander_polynomial_details(fixture("mt_link.pd"));
  CHECK(r.polynomial == normalize_units(mt_link_polynomial()));
  CHECK(r.minors.size() == 12);
  REQUIRE(r.dropped_relator);
  CHECK(*r.dropped_relator == 11);
  for (const auto& q : r.quotients) CHECK(equal_up_to_units(q, r.polynomial));
  // Any relator may be dropped.
  AlexanderOptions opt;
  opt.dropped_relator = 0;
  opt.parallel = false;
  CHECK(alexander_polynomial(fixture("mt_link.pd"), opt) == r.polynomial);
}
