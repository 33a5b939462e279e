#pragma once

// Laurent polynomials in q, t, a over Z and their fractions.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "koszul/degree.hpp"

namespace koszul {

class LaurentPoly {
 public:
  using Terms = std::map<Degree, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(const Degree& d, const mpz_class& c = 1);
  /// Text such as "1 - q^6 - q^8*t^2 + 2*q^-2*t*a^2".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coefficient(const Degree& d) const;
  void add_term(const Degree& d, const mpz_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned e) const;
  /// Multiplies by q^d.q t^d.t a^d.a.
  LaurentPoly shifted(const Degree& d) const;
  /// a = q^N.
  LaurentPoly substitute_a_qpow(int N) const;
  /// a = t^-1.
  LaurentPoly substitute_a_tinv() const;

  /// Lowest and highest terms in the canonical (t, q, a) order.
  Degree min_degree() const;
  Degree max_degree() const;
  /// Componentwise exponent bounds.
  Degree min_exponents() const;
  Degree max_exponents() const;

  mpz_class coefficient_sum() const;
  bool has_nonnegative_coefficients() const;
  bool involves_a() const;

  /// Exact quotient when divisor divides *this in the Laurent ring, else nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// numerator / denominator, compared by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction(LaurentPoly num = 0, LaurentPoly den = 1);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
  friend bool operator==(const RationalFunction& x, const RationalFunction& y);

  RationalFunction shifted(const Degree& d) const;
  RationalFunction substitute_a_qpow(int N) const;
  RationalFunction substitute_a_tinv() const;

  /// The Laurent polynomial when the denominator divides the numerator.
  std::optional<LaurentPoly> as_polynomial() const;

  std::string to_string() const;

 private:
  LaurentPoly num_, den_;
};

/// True iff lhs and rhs agree after cross-multiplication.
bool identity_check(const RationalFunction& lhs, const RationalFunction& rhs);

}  // namespace koszul
