#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "koszul/coefficients.hpp"
#include "koszul/degree.hpp"
#include "koszul/linalg.hpp"
#include "koszul/presentations.hpp"

namespace koszul {

struct GradedBasis {
  Degree degree;
  std::vector<Monomial> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
  /// Position of m, or npos.
  std::size_t index_of(const Monomial& m) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Integer weights (wq, wt, wa) that are strictly positive on every even
/// generator, or nullopt when the even degrees admit a nonnegative relation.
std::optional<Degree> positive_functional(const Presentation& pres);

/// Shortest product of even generators of degree zero, in canonical text, or
/// nullopt for properly graded presentations.
std::optional<std::string> degree_zero_witness(const Presentation& pres);

/// All monomials of degree deg (with total multiplicity <= bound when given).
/// Throws NonProperGradingError when the piece may be infinite and no bound is
/// supplied.
GradedBasis basis_at(const Presentation& pres, const Degree& deg,
                     std::optional<int> bound = std::nullopt);

/// Columns: basis_at(deg); rows: basis_at(deg + (0,-1,0)).
IntegerMatrix d_matrix(const Presentation& pres, const Degree& deg,
                       std::optional<int> bound = std::nullopt);

/// Over Z the torsion at a degree is that of the outgoing differential's
/// cokernel dual: a chain c with d(c) = p*y contributes Z/p at deg(c). With
/// this placement dim over F_p at (q,t) = free + #p-factors at (q,t) +
/// #p-factors at (q,t+1).
struct HomologyGroup {
  long free_rank = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<mpz_class> torsion;

  bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
  /// Torsion as prime powers (p, e), sorted, with multiplicity.
  std::vector<std::pair<long, int>> elementary_divisors() const;
  /// Number of Z/p^e summands for the given prime.
  int p_primary_count(long p) const;
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Prime-power factorization of each invariant factor.
std::vector<std::pair<long, int>> elementary_divisors(const std::vector<mpz_class>& factors);

/// Caches bases and differential matrices of one presentation.
class ChainComplex {
 public:
  explicit ChainComplex(const Presentation& pres, std::optional<int> bound = std::nullopt);

  const Presentation& presentation() const noexcept { return pres_; }
  std::optional<int> bound() const noexcept { return bound_; }

  std::shared_ptr<const GradedBasis> basis(const Degree& deg);
  std::shared_ptr<const IntegerMatrix> differential(const Degree& deg);
  HomologyGroup homology(const Degree& deg, const CoefficientRing& ring);

 private:
  Presentation pres_;
  std::optional<int> bound_;
  std::mutex mutex_;
  std::map<Degree, std::shared_ptr<const GradedBasis>> bases_;
  std::map<Degree, std::shared_ptr<const IntegerMatrix>> matrices_;
};

HomologyGroup homology_at(const Presentation& pres, const Degree& deg, const CoefficientRing& ring,
                          std::optional<int> bound = std::nullopt);

/// Rectangle of (q, t) cells at a = 0.
struct Window {
  int tmin = 0, tmax = 0;
  int qmin = 0, qmax = 0;

  bool contains(int q, int t) const noexcept {
    return tmin <= t && t <= tmax && qmin <= q && q <= qmax;
  }
  bool empty() const noexcept { return tmin > tmax || qmin > qmax; }
  friend bool operator==(const Window&, const Window&) = default;
};

struct HomologyTable {
  std::string label;
  CoefficientRing ring = CoefficientRing::rationals();
  Window window;
  std::optional<int> bound;
  /// Nonzero groups only; every other cell of the window is zero.
  std::map<Degree, HomologyGroup> cells;
  /// Cells whose value changed between caps (stabilization protocol).
  std::set<Degree> unstable;

  HomologyGroup at(int q, int t) const;
  long total_rank() const;
  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

/// threads = 0 picks the hardware concurrency. Output is independent of it.
HomologyTable homology_table(const Presentation& pres, const CoefficientRing& ring,
                             const Window& window, std::optional<int> bound = std::nullopt,
                             unsigned threads = 0);

/// Runs the table at each cap in turn; cells that differ between caps are
/// reported unstable and the largest cap's value is kept.
HomologyTable stabilized_homology_table(const Presentation& pres, const CoefficientRing& ring,
                                        const Window& window, const std::vector<int>& caps,
                                        unsigned threads = 0);

/// For each q in the window: sum_t (-1)^t dim C_(q,t).
std::map<int, long> euler_characteristic_of_chains(const Presentation& pres, const Window& window,
                                                   std::optional<int> bound = std::nullopt);

/// Runs f(i) for i in [0, count) on a pool of threads.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace koszul
