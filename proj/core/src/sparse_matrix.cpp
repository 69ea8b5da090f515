#include "ps2gd/sparse_matrix.hpp"

#include <string>
#include <utility>

#include "ps2gd/errors.hpp"

namespace ps2gd {

SparseMatrix::SparseMatrix(std::size_t n_rows, std::size_t n_cols,
                           std::vector<std::size_t> row_offsets,
                           std::vector<std::size_t> col_indices,
                           std::vector<double> values)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
  validate();
}

void SparseMatrix::validate() const {
  if (row_offsets_.size() != n_rows_ + 1) {
    throw argument_error("SparseMatrix: row_offsets must have n_rows+1 entries");
  }
  if (row_offsets_.front() != 0) {
    throw argument_error("SparseMatrix: row_offsets[0] must be 0");
  }
  if (col_indices_.size() != values_.size() ||
      row_offsets_.back() != values_.size()) {
    throw argument_error(
        "SparseMatrix: last row offset must equal the number of stored values");
  }
  for (std::size_t i = 0; i < n_rows_; ++i) {
    if (row_offsets_[i] > row_offsets_[i + 1]) {
      throw argument_error("SparseMatrix: row_offsets must be nondecreasing");
    }
    for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      if (col_indices_[k] >= n_cols_) {
        throw argument_error("SparseMatrix: column index out of range in row " +
                             std::to_string(i));
      }
      if (k > row_offsets_[i] && col_indices_[k] <= col_indices_[k - 1]) {
        throw argument_error(
            "SparseMatrix: column indices must be strictly increasing in row " +
            std::to_string(i));
      }
      if (values_[k] == 0.0) {
        throw argument_error("SparseMatrix: explicit zero stored in row " +
                             std::to_string(i));
      }
    }
  }
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows,
                                      std::size_t n_cols) {
  std::vector<std::size_t> offsets = {0};
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  for (const Vector& row : rows) {
    if (row.size() != n_cols) {
      throw argument_error("SparseMatrix::from_dense: ragged row");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0.0) {
        cols.push_back(j);
        vals.push_back(row[j]);
      }
    }
    offsets.push_back(vals.size());
  }
  return SparseMatrix(rows.size(), n_cols, std::move(offsets), std::move(cols),
                      std::move(vals));
}

double SparseMatrix::row_dot(std::size_t i, std::span<const double> x) const {
  const auto cols = row_cols(i);
  const auto vals = row_values(i);
  double s = 0.0;
  for (std::size_t k = 0; k < cols.size(); ++k) s += vals[k] * x[cols[k]];
  return s;
}

void SparseMatrix::row_axpy(std::size_t i, double a, Vector& y) const {
  const auto cols = row_cols(i);
  const auto vals = row_values(i);
  for (std::size_t k = 0; k < cols.size(); ++k) y[cols[k]] += a * vals[k];
}

double SparseMatrix::row_squared_norm(std::size_t i) const {
  double s = 0.0;
  for (double v : row_values(i)) s += v * v;
  return s;
}

void SparseMatrix::scale_row(std::size_t i, double factor) {
  if (factor == 0.0) {
    throw argument_error("SparseMatrix::scale_row: zero factor");
  }
  for (std::size_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
    values_[k] *= factor;
  }
}

Vector SparseMatrix::row_dense(std::size_t i) const {
  Vector out(n_cols_, 0.0);
  row_axpy(i, 1.0, out);
  return out;
}

}  // namespace ps2gd
