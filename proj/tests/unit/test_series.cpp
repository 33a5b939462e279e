#include <doctest.h>

#include "koszul/errors.hpp"
#include "koszul/laurent.hpp"
#include "koszul/series.hpp"

using namespace koszul;

namespace {

LaurentPoly L(const char* text) { return LaurentPoly::parse(text); }

FormulaParams sl(int N, bool reduced = false) {
  FormulaParams p;
  p.N = N;
  p.reduced = reduced;
  return p;
}

// Alexander polynomial of T(3, m) by integer polynomial division.
std::vector<long> alexander_t3(int m) {
  std::vector<long> num(3 * m + 2, 0);
  // (x^{3m} - 1)(x - 1)
  num[3 * m + 1] += 1;
  num[3 * m] -= 1;
  num[1] -= 1;
  num[0] += 1;
  auto divide = [](std::vector<long> n, std::vector<long> d) {
    std::vector<long> q(n.size() - d.size() + 1, 0);
    for (std::size_t i = n.size(); i-- >= d.size();) {
      long c = n[i] / d.back();
      q[i - d.size() + 1] = c;
      for (std::size_t j = 0; j < d.size(); ++j) n[i - d.size() + 1 + j] -= c * d[j];
      if (i == d.size() - 1) break;
    }
    return q;
  };
  std::vector<long> cube{-1, 0, 0, 1}, xm(m + 1, 0);
  xm[0] = -1;
  xm[m] = 1;
  return divide(divide(num, cube), xm);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("Laurent polynomials parse and multiply") {
  LaurentPoly p = L("1 + q^2*t - 3*a^-1*q");
  CHECK(p.coefficient({2, 1, 0}) == 1);
  CHECK(p.coefficient({1, 0, -1}) == -3);
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(L("1 - q^2") * L("1 + q^2") == L("1 - q^4"));
  CHECK(L("q^-2*t^-1").shifted({2, 1, 0}) == LaurentPoly(1));
  CHECK_THROWS_AS(L("1 + + q"), ParseError);
}

TEST_CASE("exact division") {
  auto quotient = L("1 - q^6").divide_exact(L("1 - q^2"));
  REQUIRE(quotient.has_value());
  CHECK(*quotient == L("1 + q^2 + q^4"));
  CHECK_FALSE(L("1 + q^3").divide_exact(L("1 - q")).has_value());
}

TEST_CASE("geometric expansion") {
  RationalFunction f(1, L("1 - q^2"));
  auto e = expand(f, {0, 0, 0, 10, 0, 0});
  CHECK(e.size() == 6);
  for (int k = 0; k <= 10; k += 2) CHECK(e.at({k, 0, 0}) == 1);
  CHECK_THROWS_AS(expand(RationalFunction(1, L("2 - q")), {0, 0, 0, 4, 0, 0}), NoExpansionRegionError);
  CHECK_THROWS_AS(expand(RationalFunction(1, L("1 - q")), {0, 0, 0, 4, 0, 0}, Degree{0, 1, 0}),
                  NoExpansionRegionError);
}

TEST_CASE("the expansion region follows the weights") {
  RationalFunction f(1, L("1 - q^-4*t^-2"));
  auto lower = expand(f, {-4, 4, -8, 8, 0, 0});
  CHECK(lower.at({4, 2, 0}) == -1);
  CHECK(lower.at({8, 4, 0}) == -1);
  CHECK_FALSE(lower.count({0, 0, 0}));
  auto upper = expand(f, {-4, 4, -8, 8, 0, 0}, Degree{-1, -1, 0});
  CHECK(upper.at({0, 0, 0}) == 1);
  CHECK(upper.at({-4, -2, 0}) == 1);
  CHECK(upper.at({-8, -4, 0}) == 1);
}

TEST_CASE("two-strand forms agree") {
  for (int N = 2; N <= 6; ++N) {
    CAPTURE(N);
    CHECK(formula("P2_dN", sl(N)) == formula("P2_dN_sum", sl(N)));
  }
}

TEST_CASE("level decomposition of the three-strand form") {
  for (int N = 2; N <= 5; ++N) {
    CAPTURE(N);
    CHECK(formula("P3_dN_levels", sl(N)) == formula("P3_dN", sl(N)));
  }
}

TEST_CASE("SL(3) forms specialize the generic ones") {
  CHECK(formula("SL3_P2", {}) == formula("P2_dN", sl(3)));
  CHECK(formula("SL3_P3", {}) == formula("P3_dN", sl(3)));
  CHECK(formula("SL3_P2_red", {}) == formula("P2_red_dN", sl(3)));
  CHECK(formula("SL3_P3_red", {}) == formula("P3_red_dN", sl(3)));
  FormulaParams printed;
  printed.as_printed = true;
  CHECK_FALSE(formula("SL3_P4", printed) == formula("SL3_P4", {}));
}

TEST_CASE("one strand with Z/N coefficients") {
  FormulaParams p;
  p.n = 1;
  p.N = 3;
  CHECK(formula("P_ZN", p) == RationalFunction(L("1 - q^6"), L("1 - q^2")));
  p.N = 4;
  CHECK_THROWS_AS(formula("P_ZN", p), std::invalid_argument);
  CHECK_THROWS_AS(formula("no-such-formula", {}), std::invalid_argument);
}

TEST_CASE("projector sums") {
  struct Id {
    const char *a, *b, *sum;
  };
  const Id ids[] = {{"[12]", "[1,2]", "[1]"}, {"[123]", "[12,3]", "[12]"}, {"[1,2,3]", "[13,2]", "[1,2]"}};
  for (bool red : {false, true})
    for (const Id& id : ids) {
      CAPTURE(red);
      CAPTURE(id.a);
      auto P = [&](const char* t, SeriesLevel lv, int N) { return projector_series(t, lv, N, red); };
      CHECK(P(id.a, SeriesLevel::Homfly, 0) + P(id.b, SeriesLevel::Homfly, 0) ==
            P(id.sum, SeriesLevel::Homfly, 0));
      for (int N = 2; N <= 4; ++N)
        CHECK(P(id.a, SeriesLevel::SlN, N) + P(id.b, SeriesLevel::SlN, N) == P(id.sum, SeriesLevel::SlN, N));
    }
}

TEST_CASE("the trefoil two ways") {
  Assembly two = assemble_torus2(3, SeriesLevel::SlN, 2, true);
  Assembly three = assemble_torus3(2, SeriesLevel::SlN, 2, true);
  REQUIRE(two.polynomial);
  REQUIRE(three.polynomial);
  LaurentPoly trefoil = L("q^2 + q^6*t^2 + q^8*t^3");
  CHECK(normalize_lowest_q(*two.polynomial, 2) == trefoil);
  CHECK(normalize_lowest_q(*three.polynomial, 2) == trefoil);
  Assembly sl3 = assemble_torus3(2, SeriesLevel::SlN, 3, true);
  REQUIRE(sl3.polynomial);
  CHECK(normalize_lowest_q(*sl3.polynomial, 4) == L("q^4 + q^8*t^2 + q^12*t^3"));
}

TEST_CASE("d0 assemblies count Alexander polynomial terms") {
  for (int m : {1, 2, 4, 5, 7, 8, 10, 11}) {
    CAPTURE(m);
    Assembly a = assemble_torus3(m, SeriesLevel::D0, 0, true);
    REQUIRE(a.polynomial);
    CHECK(a.polynomial->has_nonnegative_coefficients());
    long terms = 0;
    for (long c : alexander_t3(m)) terms += c != 0;
    CHECK(a.polynomial->coefficient_sum() == terms);
  }
  CHECK(*assemble_torus3(4, SeriesLevel::D0, 0, true).polynomial ==
        L("1 + q^2*t + q^6*t^4 + q^10*t^5 + q^12*t^6"));
}

TEST_CASE("assemblies are polynomials") {
  for (int m = 1; m <= 14; ++m) {
    if (m % 3 == 0) continue;
    CAPTURE(m);
    for (int N = 2; N <= 4; ++N)
      for (bool red : {false, true}) {
        Assembly a = assemble_torus3(m, SeriesLevel::SlN, N, red);
        REQUIRE(a.polynomial);
        CHECK(a.polynomial->has_nonnegative_coefficients());
      }
    Assembly h = assemble_torus3(m, SeriesLevel::Homfly, 0, true);
    CHECK(h.polynomial.has_value());
  }
  for (int m = 1; m <= 15; m += 2) {
    Assembly a = assemble_torus2(m, SeriesLevel::SlN, 3, false);
    REQUIRE(a.polynomial);
    CHECK(a.polynomial->has_nonnegative_coefficients());
  }
  CHECK_THROWS_AS(assemble_torus3(3, SeriesLevel::SlN, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(assemble_torus2(4, SeriesLevel::SlN, 2, false), std::invalid_argument);
}

TEST_CASE("displayed torus knot series match the assemblies") {
  for (int m : {1, 2, 4, 5, 7, 8}) {
    CAPTURE(m);
    FormulaParams p;
    p.m = m;
    auto d2 = formula("T3_d2", p).as_polynomial();
    auto d0 = formula("T3_d0_red", p).as_polynomial();
    REQUIRE(d2);
    REQUIRE(d0);
    LaurentPoly a2 = *assemble_torus3(m, SeriesLevel::SlN, 2, false).polynomial;
    LaurentPoly a0 = *assemble_torus3(m, SeriesLevel::D0, 0, true).polynomial;
    CHECK(normalize_lowest_q(*d2, a2.min_degree().q) == a2);
    CHECK(normalize_lowest_q(*d0, a0.min_degree().q) == a0);
  }
}

TEST_CASE("the catalogue is complete") {
  for (const auto& e : catalogue()) {
    CAPTURE(e.name);
    FormulaParams p = sl(3);
    p.n = 2;
    p.m = 2;
    if (e.name == "P_ZN") p.N = 3;
    CHECK_NOTHROW(formula(e.name, p));
  }
}

}  // TEST_SUITE
