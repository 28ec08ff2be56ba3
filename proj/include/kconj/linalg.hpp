#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kconj {

/// Dense arbitrary-precision integer matrix with optional row/column labels.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& o) const;

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_bareiss(IntMatrix m);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::size_t rank() const;
  /// Nonzero diagonal entries d_1 | d_2 | ... (all positive).
  std::vector<mpz_class> invariant_factors() const;
};

/// U·m·V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... >= 0.
SmithForm smith_normal_form(const IntMatrix& m);

/// Sparse column over 64-bit row codes. Entries sorted by row, no zeros.
struct SparseColumn {
  std::vector<std::pair<std::uint64_t, std::int64_t>> entries;
};

struct SparseRankStats {
  std::size_t components = 0;
  std::size_t largest_component = 0;
  std::size_t gmp_fallbacks = 0;
};

/// Exact rank over Q. The columns are split into connected components of the
/// row/column incidence graph and each block is eliminated fraction-free,
/// first in checked 64-bit arithmetic, falling back to GMP on overflow.
std::size_t sparse_rank(const std::vector<SparseColumn>& columns, SparseRankStats* stats = nullptr,
                        unsigned threads = 1);

/// Columns of one connected block, rows renumbered 0..rows-1 in row-code
/// order; used to build dense submatrices (torsion checks).
struct SparseBlock {
  std::vector<std::uint64_t> row_codes;
  std::vector<std::size_t> column_ids;
};

std::vector<SparseBlock> connected_blocks(const std::vector<SparseColumn>& columns);

}  // namespace kconj
