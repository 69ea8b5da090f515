#ifndef PS2GD_DATASET_HPP
#define PS2GD_DATASET_HPP

#include <utility>

#include "ps2gd/errors.hpp"
#include "ps2gd/sparse_matrix.hpp"

namespace ps2gd {

/// Sparse feature rows plus one real label per row.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  LabeledDataset(SparseMatrix features, Vector labels)
      : features_(std::move(features)), labels_(std::move(labels)) {
    if (features_.n_rows() == 0 || features_.n_cols() == 0) {
      throw argument_error("LabeledDataset: needs at least one row and column");
    }
    if (labels_.size() != features_.n_rows()) {
      throw argument_error("LabeledDataset: one label per example required");
    }
  }

  std::size_t n() const { return features_.n_rows(); }
  std::size_t d() const { return features_.n_cols(); }
  const SparseMatrix& features() const { return features_; }
  const Vector& labels() const { return labels_; }

  bool operator==(const LabeledDataset&) const = default;

 private:
  SparseMatrix features_;
  Vector labels_;
};

}  // namespace ps2gd

#endif  // PS2GD_DATASET_HPP
