#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parikhseq/bigint.hpp"

namespace parikhseq {

/// Square matrix of exact integers.
///
/// Element access is 0-based (row, col). Index sets handed to minor() are
/// 1-based, matching how minors are written down mathematically.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// dim x dim zero matrix.
  explicit ExactMatrix(std::size_t dim);
  /// Throws std::invalid_argument unless the rows form a square.
  ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  explicit ExactMatrix(const std::vector<std::vector<BigInt>>& rows);

  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  BigInt& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  bool is_upper_triangular() const;
  bool is_unit_upper_triangular() const;

  /// Square block of size `size` with top-left corner (row, col), 0-based.
  ExactMatrix block(std::size_t row, std::size_t col, std::size_t size) const;

  std::vector<std::vector<BigInt>> rows() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

/// Throws std::invalid_argument on a dimension mismatch.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return multiply(a, b); }

/// Submatrix on the given 1-based rows and columns, each taken in ascending
/// order. Throws std::invalid_argument for mismatched or empty sets and
/// std::out_of_range for indices outside [1, dim].
ExactMatrix minor(const ExactMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Bareiss fraction-free elimination; every intermediate is an exact integer.
BigInt determinant(const ExactMatrix& a);

/// Matrix with few nonzeros, stored column by column. Used for the per-letter
/// generators of the streaming folds.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    BigInt value;
  };

  SparseMatrix() = default;
  explicit SparseMatrix(const ExactMatrix& dense);

  std::size_t dim() const noexcept { return columns_.size(); }
  std::size_t nonzeros() const noexcept;
  const std::vector<Entry>& column(std::size_t col) const { return columns_[col]; }

 private:
  std::vector<std::vector<Entry>> columns_;
};

/// out = acc * g. `out` is resized as needed and may not alias `acc`.
void multiply_into(const ExactMatrix& acc, const SparseMatrix& g, ExactMatrix& out);

/// {"dim": n, "rows": [["1", "0", ...], ...]} with decimal-string entries.
nlohmann::json to_json(const ExactMatrix& m);
/// Inverse of to_json; throws std::invalid_argument on schema violations.
ExactMatrix matrix_from_json(const nlohmann::json& j);

/// Rows on separate lines, columns right-aligned.
std::string to_text(const ExactMatrix& m);

}  // namespace parikhseq
