#ifndef PS2GD_SPARSE_MATRIX_HPP
#define PS2GD_SPARSE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ps2gd/vector_ops.hpp"

namespace ps2gd {

/// Compressed sparse-row real matrix. Rows are the unit of access: the data
/// matrix stores one training example (or one feature row, in the dual
/// construction) per row.
///
/// Invariants, enforced at construction:
///   - row_offsets is nondecreasing, starts at 0, ends at nnz
///   - column indices are strictly increasing within each row and < n_cols
///   - no explicit zeros are stored
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t n_rows, std::size_t n_cols,
               std::vector<std::size_t> row_offsets,
               std::vector<std::size_t> col_indices, std::vector<double> values);

  /// Builds from dense rows, dropping exact zeros.
  static SparseMatrix from_dense(const std::vector<Vector>& rows,
                                 std::size_t n_cols);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const std::size_t> row_cols(std::size_t i) const {
    return {col_indices_.data() + row_offsets_[i],
            col_indices_.data() + row_offsets_[i + 1]};
  }
  std::span<const double> row_values(std::size_t i) const {
    return {values_.data() + row_offsets_[i],
            values_.data() + row_offsets_[i + 1]};
  }
  std::size_t row_nnz(std::size_t i) const {
    return row_offsets_[i + 1] - row_offsets_[i];
  }

  /// Inner product of row i with a dense vector.
  double row_dot(std::size_t i, std::span<const double> x) const;

  /// y += a * row_i, touching only stored nonzeros.
  void row_axpy(std::size_t i, double a, Vector& y) const;

  double row_squared_norm(std::size_t i) const;

  /// Multiplies row i by a nonzero scalar in place.
  void scale_row(std::size_t i, double factor);

  Vector row_dense(std::size_t i) const;

  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const SparseMatrix&) const = default;

 private:
  void validate() const;

  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::size_t> row_offsets_ = {0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

}  // namespace ps2gd

#endif  // PS2GD_SPARSE_MATRIX_HPP
