#ifndef PS2GD_OBJECTIVE_HPP
#define PS2GD_OBJECTIVE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ps2gd/constraint_set.hpp"
#include "ps2gd/dataset.hpp"

namespace ps2gd {

enum class LossKind { logistic, squared, svm_dual_quadratic };

std::string to_string(LossKind kind);
LossKind loss_from_string(const std::string& name);

/// F(x) = (1/m) sum_i f_i(x) with f_i(x) = g_i(r_i^T x) + q^T x, where r_i is
/// a sparse component row. Primal problems have one component per example
/// (r_i = a_i); the SVM-dual construction has one component per feature row.
/// Immutable after construction and safe to share across threads.
class CompositeObjective {
 public:
  /// Primal (per-example) objective. The Lipschitz constant defaults to the
  /// analytic per-component maximum for the loss family; a larger override is
  /// accepted, a smaller one is rejected.
  CompositeObjective(LabeledDataset data, LossKind loss, Vector linear_term = {},
                     double lipschitz_override = 0.0);

  /// Component-row construction used by build_svm_dual.
  CompositeObjective(SparseMatrix component_rows, Vector labels, LossKind loss,
                     Vector linear_term, double lipschitz_override = 0.0);

  std::size_t n_components() const { return components_.n_rows(); }
  std::size_t dimension() const { return components_.n_cols(); }
  LossKind loss() const { return loss_; }
  double lipschitz() const { return lipschitz_; }
  const SparseMatrix& components() const { return components_; }
  const Vector& labels() const { return labels_; }
  const Vector& linear_term() const { return linear_term_; }

  /// F(x). Parallel evaluation (threads > 1) reduces in a fixed chunk order,
  /// so the result is deterministic for a given thread count.
  double value(std::span<const double> x, unsigned threads = 1) const;

  /// grad f_i(x) = g_i'(r_i^T x) r_i + q, returned dense.
  Vector component_gradient(std::size_t i, std::span<const double> x) const;

  /// grad F(x) = (1/m) sum_i g_i'(r_i^T x) r_i + q, with compensated
  /// accumulation so the average of component gradients is reproduced to
  /// ~1e-12 relative even at m ~ 1e5.
  Vector full_gradient(std::span<const double> x, unsigned threads = 1) const;

  /// g_i'(t) at margin t = r_i^T x; this is the scalar the variance-reduced
  /// estimate needs per touched component.
  double loss_derivative(std::size_t i, double margin) const;
  double loss_value(std::size_t i, double margin) const;

  double component_margin(std::size_t i, std::span<const double> x) const {
    return components_.row_dot(i, x);
  }

 private:
  void check_point(std::span<const double> x) const;
  void finish_init(double lipschitz_override);

  SparseMatrix components_;
  Vector labels_;  // empty for svm_dual_quadratic
  Vector linear_term_;
  LossKind loss_ = LossKind::squared;
  double lipschitz_ = 0.0;
};

/// max_i of the analytic per-component gradient Lipschitz constant:
/// logistic ||r_i||^2/4, squared ||r_i||^2, dual quadratic m*||r_i||^2.
double lipschitz_constant(const SparseMatrix& component_rows, LossKind loss);
double lipschitz_constant(const LabeledDataset& data, LossKind loss);

/// Returns a copy with every feature row scaled to unit Euclidean norm.
/// Rejects all-zero rows, naming the offending row.
LabeledDataset scale_rows_to_unit_norm(const LabeledDataset& data);

struct SvmDualProblem {
  CompositeObjective objective;
  ConstraintSet constraint;
  /// Original indices of the feature rows kept (zero rows are dropped).
  std::vector<std::size_t> kept_features;
};

/// Builds the box-constrained dual of the hinge-loss SVM: components are the
/// feature rows of the matrix whose columns are b_i * a_i, the linear term is
/// -1, and the feasible region is [0, lambda*n]^n.
SvmDualProblem build_svm_dual(const LabeledDataset& data, double lambda);

}  // namespace ps2gd

#endif  // PS2GD_OBJECTIVE_HPP
