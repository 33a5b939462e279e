#include <doctest.h>

#include <string>

#include "koszul/errors.hpp"
#include "koszul/tables.hpp"

using namespace koszul;

namespace {

std::string data_path(const char* name) { return std::string(KOSZUL_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("rows and headers") {
  ExternalTable t = parse_table(
      "# comment\n"
      "knot=5,6\n"
      "coeff=Fp:3\n"
      "tor-primes=5\n"
      "\n"
      "t=11, dd=-4, rank=0, tor=5^1\n"
      "t=12, q=20, rank=2, tor=5^1,3^2\n");
  REQUIRE(t.knot);
  CHECK(*t.knot == std::pair{5, 6});
  CHECK(t.ring == CoefficientRing::prime_field(3));
  REQUIRE(t.tor_primes);
  CHECK(t.tor_primes->count(5));
  CHECK(t.cells.at({11, -4}) == ExternalCell{0, {{5, 1}}});
  CHECK(t.cells.at({12, -4}) == ExternalCell{2, {{3, 2}, {5, 1}}});
  CHECK(parse_table(serialize(t)) == t);
}

TEST_CASE("empty input is an empty table") {
  ExternalTable t = parse_table("");
  CHECK(t.cells.empty());
  CHECK(t.ring == CoefficientRing::integers());
}

TEST_CASE("errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_table(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("t=0, dd=0, rank=1\nt=0, dd=0, rank=2\n") == 2);
  CHECK(line_of("t=0, dd=0, rank=x\n") == 1);
  CHECK(line_of("\n\nt=0, dd=0, rank=1, colour=3\n") == 3);
  CHECK(line_of("t=0, rank=1\n") == 1);
  CHECK(line_of("t=0, dd=0, q=0, rank=1\n") == 1);
  CHECK(line_of("t=0, dd=0, rank=1, tor=6^1\n") == 1);
}

TEST_CASE("model tables round-trip") {
  HomologyTable h = homology_table(stable_presentation(5, 3), CoefficientRing::integers(), {0, 12, 0, 34});
  h.label = "stable(5,3)";
  HomologyTable back = parse_homology_table(serialize(h));
  CHECK(back == h);
  CHECK(invariant_factors({{2, 1}, {3, 1}, {3, 2}}) == std::vector<mpz_class>{3, 18});
}

TEST_CASE("comparing a table with itself") {
  HomologyTable h = homology_table(stable_presentation(4, 3), CoefficientRing::prime_field(3), {0, 12, 0, 34});
  DiffReport r = compare(h, to_external(h));
  CHECK(r.agrees());
  CHECK(r.shift == 0);
  CHECK(r.compared_cells > 0);
  CHECK(r.to_string().find("result: AGREE") != std::string::npos);

  ExternalTable shifted;
  shifted.ring = h.ring;
  for (const auto& [key, cell] : to_external(h).cells) shifted.cells[{key.first, key.second - 4}] = cell;
  CHECK(compare(h, shifted, 4).agrees());
  CHECK(compare(h, shifted).agrees());
  CHECK_FALSE(compare(h, shifted, 0).agrees());

  ExternalTable other = to_external(h);
  other.ring = CoefficientRing::integers();
  CHECK_THROWS_AS(compare(h, other), std::invalid_argument);
}

TEST_CASE("first divergence is the least mismatch") {
  HomologyTable h = homology_table(stable_presentation(3, 2), CoefficientRing::rationals(), {0, 8, 0, 24});
  ExternalTable e = to_external(h);
  e.ring = CoefficientRing::rationals();
  e.cells[{6, 4}] = ExternalCell{7, {}};
  e.cells[{4, 2}] = ExternalCell{5, {}};
  DiffReport r = compare(h, e, 0);
  CHECK_FALSE(r.agrees());
  REQUIRE(r.first_divergence);
  CHECK(r.first_divergence->first == 4);
  CHECK(r.to_string().find("result: DIVERGE") != std::string::npos);
}

TEST_CASE("published F_3 table diverges at t = 16") {
  ExternalTable data = read_table_file(data_path("table2_t59_f3.txt"));
  HomologyTable h = homology_table(stable_presentation(5, 3), CoefficientRing::prime_field(3), {0, 18, 0, 44});
  DiffReport r = compare(h, data);
  REQUIRE(r.first_divergence);
  CHECK(r.first_divergence->first == 16);
  CHECK(r.first_divergence->second == 20);
}

TEST_CASE("published integral table agrees through t = 15") {
  ExternalTable data = read_table_file(data_path("table1_t59_z.txt"));
  HomologyTable h = homology_table(stable_presentation(5, 3), CoefficientRing::integers(), {0, 15, 0, 40});
  DiffReport r = compare(h, data);
  CHECK(r.agrees());
  CHECK(r.tmax == 15);
}

}  // TEST_SUITE
