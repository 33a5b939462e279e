#include "properties.hpp"

#include <sstream>

#include "koszul/linalg.hpp"
#include "koszul/tables.hpp"

namespace koszul::props {

Monomial random_monomial(const GeneratorSet& gens, Rng& rng, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<int> even(gens.even_count());
  for (auto& e : even) e = exp(rng);
  OddSet odd = 0;
  for (std::size_t j = 0; j < gens.odd_count(); ++j)
    if (rng() % 3 == 0) odd |= OddSet{1} << j;
  return Monomial(gens, even, odd);
}

SuperPolynomial random_polynomial(const Presentation& pres, Rng& rng, int max_terms, int max_exp) {
  SuperPolynomial p(pres.generators(), CoefficientRing::integers());
  std::uniform_int_distribution<int> coef(-3, 3), count(1, max_terms);
  for (int i = count(rng); i > 0; --i)
    p.add_term(random_monomial(*pres.generators(), rng, max_exp), coef(rng));
  return p;
}

namespace {

SuperPolynomial as_poly(const Presentation& pres, const Monomial& m) {
  return SuperPolynomial::monomial(pres.generators(), CoefficientRing::integers(), m);
}

}  // namespace

std::string supercommutativity(const Presentation& pres, Rng& rng, int trials) {
  const auto& gens = *pres.generators();
  for (int i = 0; i < trials; ++i) {
    Monomial a = random_monomial(gens, rng), b = random_monomial(gens, rng);
    auto ab = mono_mul(a, b), ba = mono_mul(b, a);
    if (ab.has_value() != ba.has_value()) return "vanishing differs for " + to_string(a, gens) + ", " + to_string(b, gens);
    if (!ab) {
      if ((a.odd() & b.odd()) == 0) return "product wrongly vanished: " + to_string(a, gens) + " * " + to_string(b, gens);
      continue;
    }
    int expected = a.is_odd() && b.is_odd() ? -1 : 1;
    if (!(ab->second == ba->second) || ab->first != expected * ba->first)
      return "sign rule fails for " + to_string(a, gens) + " and " + to_string(b, gens);
    if (ab->second.degree() != a.degree() + b.degree())
      return "degree not additive for " + to_string(a, gens) + " * " + to_string(b, gens);
  }
  return {};
}

std::string associativity(const Presentation& pres, Rng& rng, int trials) {
  const auto& gens = *pres.generators();
  for (int i = 0; i < trials; ++i) {
    Monomial a = random_monomial(gens, rng), b = random_monomial(gens, rng),
             c = random_monomial(gens, rng);
    SuperPolynomial A = as_poly(pres, a), B = as_poly(pres, b), C = as_poly(pres, c);
    if (!((A * B) * C == A * (B * C)))
      return "(ab)c != a(bc) for " + to_string(a, gens) + ", " + to_string(b, gens) + ", " +
             to_string(c, gens);
  }
  return {};
}

std::string leibniz_rule(const Presentation& pres, Rng& rng, int trials) {
  const auto& gens = *pres.generators();
  for (int i = 0; i < trials; ++i) {
    Monomial a = random_monomial(gens, rng), b = random_monomial(gens, rng);
    SuperPolynomial A = as_poly(pres, a), B = as_poly(pres, b);
    SuperPolynomial lhs = apply_d(pres, A * B);
    SuperPolynomial rhs = apply_d(pres, A) * B + (A * apply_d(pres, B)).scaled(a.is_odd() ? -1 : 1);
    if (!(lhs == rhs)) return "Leibniz fails for " + to_string(a, gens) + ", " + to_string(b, gens);
  }
  return {};
}

std::string d_squared_zero(const Presentation& pres, Rng& rng, int trials) {
  for (int i = 0; i < trials; ++i) {
    SuperPolynomial p = random_polynomial(pres, rng);
    SuperPolynomial dd = apply_d(pres, apply_d(pres, p));
    if (!dd.is_zero()) return "d^2(" + p.to_string() + ") = " + dd.to_string();
  }
  return {};
}

std::string d_squared_zero_matrices(const Presentation& pres, const Window& window) {
  for (int t = window.tmin; t <= window.tmax; ++t)
    for (int q = window.qmin; q <= window.qmax; ++q) {
      Degree deg{q, t, 0};
      IntegerMatrix first = d_matrix(pres, deg);
      IntegerMatrix second = d_matrix(pres, deg + kDifferentialDegree);
      if (first.cols() == 0 || second.rows() == 0) continue;
      if (!(second * first).is_zero()) return "d^2 != 0 on " + to_string(deg);
    }
  return {};
}

std::string euler_characteristic(const Presentation& pres, const Window& window) {
  HomologyTable h = homology_table(pres, CoefficientRing::rationals(), window);
  std::map<int, long> from_homology;
  for (const auto& [d, g] : h.cells) from_homology[d.q] += (d.t % 2 ? -1 : 1) * g.free_rank;
  std::map<int, long> from_chains = euler_characteristic_of_chains(pres, window);
  for (int q = window.qmin; q <= window.qmax; ++q) {
    long a = from_homology.count(q) ? from_homology[q] : 0;
    long b = from_chains.count(q) ? from_chains.at(q) : 0;
    if (a != b)
      return "q=" + std::to_string(q) + ": homology " + std::to_string(a) + ", chains " +
             std::to_string(b);
  }
  return {};
}

std::string universal_coefficients(const Presentation& pres, long p, const Window& window) {
  Window wide = window;
  wide.tmax += 1;
  HomologyTable z = homology_table(pres, CoefficientRing::integers(), wide);
  HomologyTable fp = homology_table(pres, CoefficientRing::prime_field(p), window);
  HomologyTable q = homology_table(pres, CoefficientRing::rationals(), window);
  for (int t = window.tmin; t <= window.tmax; ++t)
    for (int qq = window.qmin; qq <= window.qmax; ++qq) {
      HomologyGroup here = z.at(qq, t), above = z.at(qq, t + 1);
      long expected = here.free_rank + here.p_primary_count(p) + above.p_primary_count(p);
      long got = fp.at(qq, t).free_rank;
      Degree d{qq, t, 0};
      if (got != expected)
        return "F_" + std::to_string(p) + " at " + to_string(d) + ": " + std::to_string(got) +
               " vs " + std::to_string(expected);
      if (q.at(qq, t).free_rank != here.free_rank)
        return "Q and Z free ranks differ at " + to_string(d);
      if (here.p_primary_count(p) == 0 && above.p_primary_count(p) == 0 && got != here.free_rank)
        return "field ranks differ without adjacent torsion at " + to_string(d);
    }
  return {};
}

std::string smith_normal_form_correct(Rng& rng, int trials, int max_dim, int max_entry) {
  std::uniform_int_distribution<int> dim(1, max_dim), entry(-max_entry, max_entry), zero(0, 2);
  for (int i = 0; i < trials; ++i) {
    std::size_t r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (zero(rng)) m.set(a, b, entry(rng));
    SmithForm s = smith_normal_form(m, true);
    if (!s.U || !s.V) return "transforms missing";
    DenseMatrix d = dense_multiply(dense_multiply(*s.U, m.to_dense(), r), *s.V, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) {
        mpz_class want = (a == b && a < s.factors.size()) ? s.factors[a] : mpz_class(0);
        if (d[a][b] != want) return "U*M*V is not the Smith form of\n" + m.to_string();
      }
    if (abs(determinant(*s.U)) != 1 || abs(determinant(*s.V)) != 1)
      return "non-unimodular transform for\n" + m.to_string();
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
      if (s.factors[k] <= 0) return "non-positive invariant factor";
      if (k && !mpz_divisible_p(s.factors[k].get_mpz_t(), s.factors[k - 1].get_mpz_t()))
        return "divisibility chain broken for\n" + m.to_string();
    }
    if (s.rank() != rank_over_rationals(m)) return "rank disagrees with rational rank";
  }
  return {};
}

std::string deterministic_tables(const Presentation& pres, const CoefficientRing& ring,
                                 const Window& window, unsigned threads) {
  std::string one = serialize(homology_table(pres, ring, window, std::nullopt, 1));
  std::string many = serialize(homology_table(pres, ring, window, std::nullopt, threads));
  if (one != many) return "table output depends on thread count";
  return {};
}

}  // namespace koszul::props
