#include <doctest.h>

#include "koszul/linalg.hpp"
#include "properties.hpp"

using namespace koszul;

TEST_SUITE("linalg") {

TEST_CASE("known Smith forms") {
  IntegerMatrix m = IntegerMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm s = smith_normal_form(m);
  REQUIRE(s.factors.size() == 3);
  CHECK(s.factors[0] == 2);
  CHECK(s.factors[1] == 6);
  CHECK(s.factors[2] == 12);
  SmithForm z = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(z.rank() == 0);
  SmithForm t = smith_normal_form(IntegerMatrix::from_dense({{2, 0}, {0, 3}}));
  CHECK(t.factors == std::vector<mpz_class>{1, 6});
}

TEST_CASE("ranks over Q and F_p") {
  IntegerMatrix a = IntegerMatrix::from_dense({{1, 2}, {3, 6}});
  CHECK(rank_over_rationals(a) == 1);
  IntegerMatrix b = IntegerMatrix::from_dense({{2, 0}, {0, 3}});
  CHECK(rank_over_rationals(b) == 2);
  CHECK(rank_mod_p(b, 2) == 1);
  CHECK(rank_mod_p(b, 3) == 1);
  CHECK(rank_mod_p(b, 5) == 2);
}

TEST_CASE("determinant and products") {
  DenseMatrix m = {{2, 1}, {7, 4}};
  CHECK(determinant(m) == 1);
  CHECK(determinant(identity_matrix(4)) == 1);
  IntegerMatrix x = IntegerMatrix::from_dense({{1, 2}, {0, 1}});
  IntegerMatrix y = IntegerMatrix::from_dense({{1, -2}, {0, 1}});
  CHECK(x * y == IntegerMatrix::from_dense({{1, 0}, {0, 1}}));
  CHECK(x.transpose().get(1, 0) == 2);
}

TEST_CASE("Smith form is correct on random matrices") {
  props::Rng rng(7);
  CHECK(props::smith_normal_form_correct(rng, 1500) == "");
  CHECK(props::smith_normal_form_correct(rng, 200, 12, 40) == "");
}

}  // TEST_SUITE
