#include "koszul/coefficients.hpp"

#include <charconv>
#include <stdexcept>

namespace koszul {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientRing CoefficientRing::prime_field(long p) {
  if (!is_prime(p) || p >= (1L << 31))
    throw std::invalid_argument("prime field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  std::string_view digits;
  if (text.starts_with("Fp:"))
    digits = text.substr(3);
  else if (text.starts_with("F"))
    digits = text.substr(1);
  long p = 0;
  if (!digits.empty()) {
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw std::invalid_argument("unknown coefficient ring '" + std::string(text) +
                              "' (expected Q, Z or Fp:<p>)");
}

mpq_class CoefficientRing::normalize(const mpq_class& value) const {
  switch (kind_) {
    case Kind::Rationals:
      return value;
    case Kind::Integers:
      if (value.get_den() != 1)
        throw std::domain_error("non-integral coefficient " + value.get_str() + " over Z");
      return value;
    case Kind::PrimeField: {
      mpz_class p = p_;
      mpz_class num = value.get_num() % p;
      mpz_class den = value.get_den() % p;
      if (den == 0)
        throw std::domain_error("denominator of " + value.get_str() + " vanishes mod " +
                                std::to_string(p_));
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class r = (num * inv) % p;
      if (r < 0) r += p;
      return mpq_class(r);
    }
  }
  return value;
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Integers:
      return "Z";
    case Kind::PrimeField:
      return "Fp:" + std::to_string(p_);
  }
  return "?";
}

}  // namespace koszul
