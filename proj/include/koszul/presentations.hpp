#pragma once

// Free supercommutative algebras with a differential that kills the even
// generators and sends each odd generator to an even polynomial.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/algebra.hpp"

namespace koszul {

class Presentation {
 public:
  /// images maps odd-generator symbols to even polynomials in canonical text
  /// form; odd generators not listed are cycles. Validates homogeneity
  /// (image degree = source degree + (0,-1,0)) and d^2 = 0.
  Presentation(std::string name, std::vector<Generator> generators,
               const std::map<std::string, std::string>& images);

  const std::string& name() const noexcept { return name_; }
  const std::shared_ptr<const GeneratorSet>& generators() const noexcept { return gens_; }
  /// d of the j-th odd generator, over Z.
  const SuperPolynomial& image(std::size_t j) const { return images_.at(j); }
  bool has_differential() const noexcept;

  /// Polynomial from text over this presentation's generators.
  SuperPolynomial poly(std::string_view text, CoefficientRing ring = CoefficientRing::integers()) const;

  /// Multi-line text: name, generators with degrees, differential images.
  std::string serialize() const;

 private:
  std::string name_;
  std::shared_ptr<const GeneratorSet> gens_;
  std::vector<SuperPolynomial> images_;
};

/// x_0..x_{n-1}, xi_0..xi_{n-1} with a = q^N folded in; d(xi_k) is the
/// coefficient of tau^k in (sum x_i tau^i)^N.
Presentation stable_presentation(int n, int N);

/// Stable presentation with x_0 set to zero. x_0 is deleted and so is xi_0,
/// whose image would vanish; keep_xi0 retains xi_0 as a free odd cycle.
Presentation reduced_presentation(int n, int N, bool keep_xi0 = false);

enum class Tableau { Row2, Column2, Row3, Column3, Hook12_3, Hook13_2 };
enum class ProjectorLevel { Homfly, SlN, D0 };

/// "[12]", "[1,2]", "[123]", "[1,2,3]", "[12,3]", "[13,2]".
Tableau parse_tableau(std::string_view text);
std::string tableau_name(Tableau t);
const std::vector<Tableau>& all_tableaux();

struct ProjectorOptions {
  bool reduced = false;
  /// For [13,2]: use d(xi0) = x0^(N-1) instead of x0^N. That image is not
  /// homogeneous, so construction fails validation.
  bool hook_xi0_variant = false;
};

/// Homfly keeps (q,t,a) and has no differential; SlN regrades a = q^N and
/// uses d_N; D0 regrades a = t^-1, is always reduced, and exists for
/// [123], [1,2,3], [12,3] and [13,2].
Presentation projector_presentation(Tableau tableau, ProjectorLevel level, int N = 0,
                                    ProjectorOptions options = {});

/// Odd derivation extending the presentation's images, coefficients in p's ring.
SuperPolynomial apply_d(const Presentation& pres, const SuperPolynomial& p);

/// Image of one monomial under d, as (monomial, integer coefficient) pairs.
std::map<Monomial, mpz_class> apply_d_monomial(const Presentation& pres, const Monomial& m);

/// mu_k = sum_{i+j=k} (N i - j) x_i xi_j in the given stable presentation.
SuperPolynomial mu(const Presentation& stable, int k, int N);
SuperPolynomial mu(int k, int n, int N);

}  // namespace koszul
