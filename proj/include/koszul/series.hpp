#pragma once

// Closed-form Poincare series, their expansions, and torus-knot assemblies.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/laurent.hpp"
#include "koszul/presentations.hpp"

namespace koszul {

struct SeriesWindow {
  int tmin = 0, tmax = 0;
  int qmin = 0, qmax = 0;
  int amin = 0, amax = 0;

  bool contains(const Degree& d) const noexcept {
    return tmin <= d.t && d.t <= tmax && qmin <= d.q && d.q <= qmax && amin <= d.a && d.a <= amax;
  }
};

/// Weights realizing the (t, q, a) orientation on the denominator of rf.
Degree default_expansion_weights(const RationalFunction& rf);

/// Coefficients of the formal expansion of rf inside the window. The
/// expansion lives in the region where the weight functional is bounded
/// below: the denominator's weight-minimal term must be unique with
/// coefficient +-1, otherwise NoExpansionRegionError.
std::map<Degree, mpz_class> expand(const RationalFunction& rf, const SeriesWindow& window,
                                   std::optional<Degree> weights = std::nullopt);

enum class SeriesLevel { Homfly, SlN, D0 };

struct FormulaParams {
  SeriesLevel level = SeriesLevel::SlN;
  int N = 0;
  int n = 0;
  int m = 0;
  bool reduced = false;
  /// Reproduce a displayed formula verbatim where the catalogue stores a
  /// corrected version.
  bool as_printed = false;
};

struct CatalogueEntry {
  std::string name;
  std::string parameters;
  std::string description;
};

const std::vector<CatalogueEntry>& catalogue();
/// Throws std::invalid_argument for unknown names or invalid parameters.
RationalFunction formula(const std::string& name, const FormulaParams& params);

/// Series of a projector algebra; tableau "[1]" is the single strand.
RationalFunction projector_series(const std::string& tableau, SeriesLevel level, int N,
                                  bool reduced, bool as_printed = false);

/// Weights under which a projector series expands like its algebra.
Degree projector_expansion_weights(Tableau tableau, SeriesLevel level, int N, bool reduced);

struct Assembly {
  RationalFunction function;
  /// Set when exact division certifies a Laurent polynomial.
  std::optional<LaurentPoly> polynomial;
  /// Overall q-shift quoted alongside the decomposition, not applied.
  std::optional<int> stated_q_shift;
};

/// Four-term projector sum for T(3, m), m not divisible by 3.
Assembly assemble_torus3(int m, SeriesLevel level, int N, bool reduced);
/// Two-term projector sum for T(2, m), m odd.
Assembly assemble_torus2(int m, SeriesLevel level, int N, bool reduced);

/// Shifts q so that the lowest term in (t, q) order sits at q^target.
LaurentPoly normalize_lowest_q(const LaurentPoly& p, int target);

}  // namespace koszul
