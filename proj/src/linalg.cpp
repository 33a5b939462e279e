#include "koszul/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace koszul {

IntegerMatrix IntegerMatrix::from_dense(const DenseMatrix& d, std::size_t cols) {
  if (!d.empty()) cols = d.front().size();
  IntegerMatrix m(d.size(), cols);
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (d[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (d[r][c] != 0) m.entries_.emplace(Key{r, c}, d[r][c]);
  }
  return m;
}

void IntegerMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
}

mpz_class IntegerMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? mpz_class(0) : it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const mpz_class& v) {
  check(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const mpz_class& v) {
  check(r, c);
  auto [it, inserted] = entries_.try_emplace({r, c}, 0);
  it->second += v;
  if (it->second == 0) entries_.erase(it);
}

DenseMatrix IntegerMatrix::to_dense() const {
  DenseMatrix d(rows_, std::vector<mpz_class>(cols_, 0));
  for (const auto& [k, v] : entries_) d[k.first][k.second] = v;
  return d;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (const auto& [k, v] : entries_) t.entries_.emplace(Key{k.second, k.first}, v);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shapes do not compose");
  std::vector<std::vector<std::pair<std::size_t, const mpz_class*>>> yrows(y.rows_);
  for (const auto& [k, v] : y.entries_) yrows[k.first].push_back({k.second, &v});
  IntegerMatrix r(x.rows_, y.cols_);
  for (const auto& [k, v] : x.entries_)
    for (const auto& [c, w] : yrows[k.second]) r.add(k.first, c, v * *w);
  return r;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  auto d = to_dense();
  os << rows_ << "x" << cols_ << "\n";
  for (const auto& row : d) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "\n";
  }
  return os.str();
}

DenseMatrix dense_multiply(const DenseMatrix& x, const DenseMatrix& y, std::size_t inner) {
  std::size_t cols = y.empty() ? 0 : y.front().size();
  DenseMatrix r(x.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

DenseMatrix identity_matrix(std::size_t n) {
  DenseMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

mpz_class determinant(const DenseMatrix& m0) {
  DenseMatrix m = m0;
  std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

class SmithWorker {
 public:
  SmithWorker(DenseMatrix a, std::size_t cols, bool transforms)
      : a_(std::move(a)), rows_(a_.size()), cols_(cols), transforms_(transforms) {
    if (transforms_) {
      u_ = identity_matrix(rows_);
      v_ = identity_matrix(cols_);
    }
  }

  SmithForm run() {
    SmithForm out;
    std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!pivot_from_block(t)) break;
      reduce_at(t);
      if (a_[t][t] < 0) negate_row(t);
      out.factors.push_back(a_[t][t]);
    }
    if (transforms_) {
      out.U = std::move(u_);
      out.V = std::move(v_);
    }
    return out;
  }

 private:
  // Moves a minimal nonzero entry of the block [t.., t..] to (t, t).
  bool pivot_from_block(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        if (bi == rows_ || cmp(abs(a_[i][j]), abs(a_[bi][bj])) < 0) {
          bi = i;
          bj = j;
          if (a_[i][j] == 1 || a_[i][j] == -1) goto found;
        }
      }
    if (bi == rows_) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) continue;
        mpz_class q = a_[i][t] / a_[t][t];
        if (q != 0) add_row(i, t, -q);
        if (a_[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) continue;
        mpz_class q = a_[t][j] / a_[t][t];
        if (q != 0) add_col(j, t, -q);
        if (a_[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows_; ++i)
          if (a_[i][t] != 0 && cmp(abs(a_[i][t]), abs(a_[bi][bj])) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (a_[t][j] != 0 && cmp(abs(a_[t][j]), abs(a_[bi][bj])) < 0) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows_ && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (a_[i][j] != 0 && !mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
            add_row(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) return;
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (transforms_) std::swap(u_[i], u_[k]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (transforms_)
      for (auto& row : v_) std::swap(row[j], row[k]);
  }
  // row_i += q * row_k
  void add_row(std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[k][j] != 0) a_[i][j] += q * a_[k][j];
    if (transforms_)
      for (std::size_t j = 0; j < rows_; ++j)
        if (u_[k][j] != 0) u_[i][j] += q * u_[k][j];
  }
  // col_j += q * col_k
  void add_col(std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (a_[i][k] != 0) a_[i][j] += q * a_[i][k];
    if (transforms_)
      for (std::size_t i = 0; i < cols_; ++i)
        if (v_[i][k] != 0) v_[i][j] += q * v_[i][k];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    if (transforms_)
      for (auto& x : u_[i]) x = -x;
  }

  DenseMatrix a_, u_, v_;
  std::size_t rows_, cols_;
  bool transforms_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms) {
  return SmithWorker(m.to_dense(), m.cols(), with_transforms).run();
}

std::size_t rank_over_rationals(const IntegerMatrix& m) {
  DenseMatrix a = m.to_dense();
  std::size_t rows = m.rows(), cols = m.cols(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    const auto& piv = a[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpz_class f = a[i][c];
      mpz_class g = 0;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = a[i][j] * piv[c] - f * piv[j];
        if (a[i][j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i][j].get_mpz_t());
      }
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j)
          if (a[i][j] != 0) mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), g.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntegerMatrix& m, long p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p needs a prime modulus");
  using i64 = long long;
  std::size_t rows = m.rows(), cols = m.cols(), rank = 0;
  std::vector<std::vector<i64>> a(rows, std::vector<i64>(cols, 0));
  mpz_class P = p;
  for (const auto& [k, v] : m.entries()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
    a[k.first][k.second] = r.get_si();
  }
  auto inverse = [p](i64 x) {
    i64 result = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    i64 inv = inverse(a[rank][c]);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      i64 f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace koszul
