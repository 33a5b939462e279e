#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace koszul {

/// Coefficient ring for chain groups and polynomials: Q, Z or F_p.
///
/// Values are carried as mpq_class throughout; normalize() maps an arbitrary
/// rational into the ring's canonical representative (integers for Z, residues
/// in [0, p) for F_p).
class CoefficientRing {
 public:
  enum class Kind { Rationals, Integers, PrimeField };

  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static CoefficientRing prime_field(long p);
  /// Accepts "Q", "Z", "Fp:<p>" (also "F<p>").
  static CoefficientRing parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// p for F_p, 0 otherwise.
  long characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != Kind::Integers; }

  mpq_class normalize(const mpq_class& value) const;
  bool is_zero(const mpq_class& value) const { return normalize(value) == 0; }

  std::string name() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind kind, long p) : kind_(kind), p_(p) {}

  Kind kind_;
  long p_;
};

bool is_prime(long n);

}  // namespace koszul
