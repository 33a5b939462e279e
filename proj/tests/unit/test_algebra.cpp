#include <doctest.h>

#include "koszul/algebra.hpp"
#include "koszul/errors.hpp"
#include "koszul/presentations.hpp"
#include "properties.hpp"

using namespace koszul;

TEST_SUITE("algebra") {

TEST_CASE("generator sets reject bad input") {
  CHECK_THROWS_AS(GeneratorSet({{"x", Parity::Even, {}}, {"x", Parity::Odd, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({{"", Parity::Even, {}}}), std::invalid_argument);
  std::vector<Generator> many;
  for (int i = 0; i < 65; ++i) many.push_back({"e" + std::to_string(i), Parity::Odd, {}});
  CHECK_THROWS_AS(GeneratorSet{many}, std::invalid_argument);
}

TEST_CASE("odd generators anticommute and square to zero") {
  Presentation p = stable_presentation(3, 2);
  CHECK(p.poly("xi1*xi0") == -p.poly("xi0*xi1"));
  CHECK(p.poly("xi0*xi0").is_zero());
  CHECK(p.poly("xi2*x1*xi0") == -p.poly("x1*xi0*xi2"));
  CHECK(p.poly("x1*x0") == p.poly("x0*x1"));
  CHECK((p.poly("xi0 + xi1") * p.poly("xi0 + xi1")).is_zero());
}

TEST_CASE("text form round-trips") {
  Presentation p = stable_presentation(3, 3);
  for (const char* text : {"2*x1*xi0 - x0*xi1", "x0^3", "1", "-x2^2*xi0*xi1*xi2 + 5"}) {
    SuperPolynomial a = p.poly(text);
    CHECK(p.poly(a.to_string()) == a);
  }
  CHECK(p.poly("0").is_zero());
  SuperPolynomial half = p.poly("-1/2*xi2", CoefficientRing::rationals());
  CHECK(half.to_string() == "-1/2*xi2");
  CHECK_THROWS_AS(p.poly("x7"), ParseError);
  CHECK_THROWS_AS(p.poly("x0^"), ParseError);
}

TEST_CASE("degrees add and homogeneity is detected") {
  Presentation p = stable_presentation(3, 3);
  CHECK(p.poly("x1*xi2").homogeneous_degree() == Degree{4 + 10, 2 + 5, 0});
  CHECK_FALSE(p.poly("x0 + x1").homogeneous_degree().has_value());
  CHECK(p.poly("x0*x1").is_even());
  CHECK_FALSE(p.poly("x0*xi1").is_even());
  CHECK(p.poly("x0 + x1").support_degrees().size() == 2);
}

TEST_CASE("canonical order puts t before q") {
  Presentation p = stable_presentation(2, 3);
  const auto& g = *p.generators();
  Monomial x0_cubed = Monomial::even_power(g, 0, 3);  // (6, 0)
  Monomial x1 = Monomial::even_power(g, 1);           // (4, 2)
  CHECK(x0_cubed < x1);
  CHECK(Monomial::one(g) < x0_cubed);
}

TEST_CASE("coefficient rings") {
  Presentation p = stable_presentation(2, 3);
  SuperPolynomial a = p.poly("4*x0 + 3*x1");
  SuperPolynomial a3 = a.change_ring(CoefficientRing::prime_field(3));
  CHECK(a3.to_string() == "x0");
  CHECK(CoefficientRing::parse("Fp:7") == CoefficientRing::prime_field(7));
  CHECK(CoefficientRing::parse("Q") == CoefficientRing::rationals());
  CHECK_THROWS(CoefficientRing::parse("Fp:6"));
  CHECK_THROWS_AS(a + a3, StructuralError);
  Presentation other = stable_presentation(2, 2);
  CHECK_THROWS_AS(a + other.poly("x0"), StructuralError);
}

TEST_CASE("supercommutativity and associativity on random monomials") {
  props::Rng rng(1234);
  Presentation p = stable_presentation(4, 3);
  CHECK(props::supercommutativity(p, rng, 10000) == "");
  CHECK(props::associativity(p, rng, 10000) == "");
  Presentation h = projector_presentation(Tableau::Hook12_3, ProjectorLevel::Homfly);
  CHECK(props::supercommutativity(h, rng, 2000) == "");
  CHECK(props::associativity(h, rng, 2000) == "");
}

}  // TEST_SUITE
