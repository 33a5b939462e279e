#pragma once

// Multigraded supercommutative polynomials.
//
// A GeneratorSet fixes the even and odd generators together with their
// degrees. Monomials store even exponents and the set of odd generators as a
// bitmask; the odd factors are understood to appear in ascending index order,
// and the Koszul sign of a product is the parity of the number of inversions
// created by merging the two odd sequences.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koszul/coefficients.hpp"
#include "koszul/degree.hpp"

namespace koszul {

enum class Parity { Even, Odd };

struct Generator {
  std::string symbol;
  Parity parity = Parity::Even;
  Degree degree;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Immutable ordered list of generators. Even and odd generators are indexed
/// separately, in the order they appear.
class GeneratorSet {
 public:
  static constexpr std::size_t kMaxOdd = 64;

  explicit GeneratorSet(std::vector<Generator> generators);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Generator>& all() const noexcept { return generators_; }

  std::size_t even_count() const noexcept { return even_.size(); }
  std::size_t odd_count() const noexcept { return odd_.size(); }
  const Generator& even(std::size_t i) const { return generators_[even_.at(i)]; }
  const Generator& odd(std::size_t j) const { return generators_[odd_.at(j)]; }

  /// (parity, index within that parity) for a symbol.
  std::optional<std::pair<Parity, std::size_t>> find(std::string_view symbol) const;

  friend bool operator==(const GeneratorSet& x, const GeneratorSet& y) {
    return x.generators_ == y.generators_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<std::size_t> even_;
  std::vector<std::size_t> odd_;
};

using OddSet = std::uint64_t;

/// x^e * xi_{j1} * ... * xi_{jk} with j1 < ... < jk. The degree is cached at
/// construction; monomials from one generator set order canonically by
/// (t, q, a, even exponents, odd index sequence).
class Monomial {
 public:
  Monomial() = default;
  Monomial(const GeneratorSet& gens, std::vector<int> even, OddSet odd);

  static Monomial one(const GeneratorSet& gens);
  static Monomial even_power(const GeneratorSet& gens, std::size_t i, int power = 1);
  static Monomial odd_generator(const GeneratorSet& gens, std::size_t j);

  const std::vector<int>& even() const noexcept { return even_; }
  OddSet odd() const noexcept { return odd_; }
  const Degree& degree() const noexcept { return degree_; }

  int odd_count() const noexcept;
  bool is_odd() const noexcept { return odd_count() % 2 == 1; }
  /// Sum of even exponents plus the number of odd factors.
  int total_multiplicity() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.odd_ == y.odd_ && x.even_ == y.even_;
  }
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

 private:
  friend std::optional<std::pair<int, Monomial>> mono_mul(const Monomial&, const Monomial&);
  std::vector<int> even_;
  OddSet odd_ = 0;
  Degree degree_;
};

/// Sign (+1/-1) and product, or nullopt when an odd generator repeats.
/// Throws StructuralError when the monomials have different shapes.
std::optional<std::pair<int, Monomial>> mono_mul(const Monomial& m1, const Monomial& m2);

/// Degree recomputed from the generator set.
Degree mono_degree(const Monomial& m, const GeneratorSet& gens);

/// Text form of a monomial, e.g. "x0^2*x1*xi0". "1" for the empty monomial.
std::string to_string(const Monomial& m, const GeneratorSet& gens);

/// Finite sum of monomials with nonzero coefficients in a coefficient ring.
class SuperPolynomial {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  SuperPolynomial(std::shared_ptr<const GeneratorSet> gens, CoefficientRing ring);

  static SuperPolynomial constant(std::shared_ptr<const GeneratorSet> gens, CoefficientRing ring,
                                  const mpq_class& c);
  static SuperPolynomial monomial(std::shared_ptr<const GeneratorSet> gens, CoefficientRing ring,
                                  const Monomial& m, const mpq_class& c = 1);
  static SuperPolynomial generator(std::shared_ptr<const GeneratorSet> gens, CoefficientRing ring,
                                   std::string_view symbol);
  /// Parses the canonical text form ("2*x1*xi0 - x0*xi1", "x0^3", "-1/2*xi2").
  /// Factors of a term are multiplied left to right, so "xi1*xi0" = -xi0*xi1.
  static SuperPolynomial parse(std::shared_ptr<const GeneratorSet> gens, CoefficientRing ring,
                               std::string_view text);

  const GeneratorSet& generators() const noexcept { return *gens_; }
  const std::shared_ptr<const GeneratorSet>& generator_set() const noexcept { return gens_; }
  const CoefficientRing& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  mpq_class coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const mpq_class& c);

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial operator-() const;
  SuperPolynomial scaled(const mpq_class& c) const;

  friend SuperPolynomial operator+(SuperPolynomial x, const SuperPolynomial& y) { return x += y; }
  friend SuperPolynomial operator-(SuperPolynomial x, const SuperPolynomial& y) { return x -= y; }
  friend SuperPolynomial operator*(const SuperPolynomial& x, const SuperPolynomial& y);

  /// Same polynomial with coefficients mapped into another ring (Z -> F_p, Z -> Q).
  SuperPolynomial change_ring(const CoefficientRing& target) const;

  /// Distinct degrees of the terms, canonically ordered.
  std::set<Degree> support_degrees() const;
  /// The degree when all terms share one, nullopt for zero or inhomogeneous.
  std::optional<Degree> homogeneous_degree() const;
  bool is_even() const noexcept;

  std::string to_string() const;

  friend bool operator==(const SuperPolynomial& x, const SuperPolynomial& y);
  friend SuperPolynomial poly_mul(const SuperPolynomial& p1, const SuperPolynomial& p2);

 private:
  void check_compatible(const SuperPolynomial& o) const;

  std::shared_ptr<const GeneratorSet> gens_;
  CoefficientRing ring_;
  Terms terms_;
};

/// Bilinear extension of mono_mul.
SuperPolynomial poly_mul(const SuperPolynomial& p1, const SuperPolynomial& p2);

}  // namespace koszul
