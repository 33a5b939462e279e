#pragma once

// Text formats for homology tables and the comparator against external data.
//
// External tables are (t, dd) grids with dd = q - 2t:
//
//   # comment
//   knot=5,6
//   coeff=Fp:3
//   tor-primes=5
//   t=11, dd=-4, rank=0, tor=5^1
//
// A row may give q=<int> instead of dd. tor lists prime powers separated by
// commas ("tor=5^1,3^2"). tor-primes restricts which primes the comparator
// looks at; without it every prime counts.

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "koszul/homology.hpp"

namespace koszul {

/// Prime powers (p, e) with multiplicity, sorted.
using PrimePowers = std::vector<std::pair<long, int>>;

struct ExternalCell {
  long rank = 0;
  PrimePowers torsion;
  friend bool operator==(const ExternalCell&, const ExternalCell&) = default;
};

struct ExternalTable {
  std::optional<std::pair<int, int>> knot;
  CoefficientRing ring = CoefficientRing::integers();
  std::optional<std::set<long>> tor_primes;
  /// (t, dd) -> cell.
  std::map<std::pair<int, int>, ExternalCell> cells;

  friend bool operator==(const ExternalTable&, const ExternalTable&) = default;
};

/// Throws ParseError (with the 1-based line) on syntax errors, duplicate
/// cells and non-integer entries.
ExternalTable parse_table(std::string_view text);
ExternalTable read_table_file(const std::string& path);
std::string serialize(const ExternalTable& table);

/// The model table in the external format, at dd = q - 2t.
ExternalTable to_external(const HomologyTable& table);

/// One record per nonzero cell in canonical order, e.g.
/// "q=18, t=11, rank=0, tor=5^1", after label/coeff/window/bound headers.
std::string serialize(const HomologyTable& table);
HomologyTable parse_homology_table(std::string_view text);

/// Invariant factors rebuilt from prime powers.
std::vector<mpz_class> invariant_factors(const PrimePowers& powers);

struct CellMismatch {
  int t = 0, q = 0;
  ExternalCell model, data;
  bool model_unstable = false;
};

struct DiffReport {
  /// Added to the data's q before comparing.
  int shift = 0;
  bool auto_shift = false;
  /// Range of t where both tables were compared.
  int tmin = 0, tmax = -1;
  std::size_t compared_cells = 0;
  /// Data cells outside the model window, not compared.
  std::size_t ignored_cells = 0;
  /// (t, q) of the first mismatch in (t, q) order.
  std::optional<std::pair<int, int>> first_divergence;
  std::vector<CellMismatch> mismatches;

  bool agrees() const noexcept { return mismatches.empty(); }
  std::string to_string() const;
};

/// shift = nullopt aligns the lowest (t, q) occupied cells. Throws
/// std::invalid_argument when the coefficient rings differ.
DiffReport compare(const HomologyTable& model, const ExternalTable& data,
                   std::optional<int> shift = std::nullopt);

}  // namespace koszul
