#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

using DenseMatrix = std::vector<std::vector<mpz_class>>;

/// Sparse integer matrix keyed by (row, col); zeros are never stored.
class IntegerMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  IntegerMatrix(std::size_t rows = 0, std::size_t cols = 0) : rows_(rows), cols_(cols) {}

  static IntegerMatrix from_dense(const DenseMatrix& d, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  const std::map<Key, mpz_class>& entries() const noexcept { return entries_; }

  mpz_class get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const mpz_class& v);
  void add(std::size_t r, std::size_t c, const mpz_class& v);

  bool is_zero() const noexcept { return entries_.empty(); }
  DenseMatrix to_dense() const;
  IntegerMatrix transpose() const;

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  std::string to_string() const;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_, cols_;
  std::map<Key, mpz_class> entries_;
};

DenseMatrix dense_multiply(const DenseMatrix& x, const DenseMatrix& y, std::size_t inner);
DenseMatrix identity_matrix(std::size_t n);
/// Exact determinant by fraction-free elimination.
mpz_class determinant(const DenseMatrix& m);

struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
  std::vector<mpz_class> factors;
  /// Present when requested: U * M * V = D with U, V unimodular.
  std::optional<DenseMatrix> U, V;

  std::size_t rank() const noexcept { return factors.size(); }
};

/// Minimal-|entry| pivoting with gcd reduction along the pivot row and column.
SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

std::size_t rank_over_rationals(const IntegerMatrix& m);
std::size_t rank_mod_p(const IntegerMatrix& m, long p);

}  // namespace koszul
