#ifndef PS2GD_CONSTRAINT_SET_HPP
#define PS2GD_CONSTRAINT_SET_HPP

#include <cstddef>
#include <span>
#include <string>

#include "ps2gd/vector_ops.hpp"

namespace ps2gd {

enum class ConstraintKind { box, linf_ball, l1_ball };

std::string to_string(ConstraintKind kind);

/// Compact polyhedral feasible region with a closed-form exact Euclidean
/// projection. Box bounds must be finite; ball radii strictly positive.
class ConstraintSet {
 public:
  static ConstraintSet box(Vector lower, Vector upper);
  static ConstraintSet linf_ball(double radius, std::size_t dim);
  static ConstraintSet l1_ball(double radius, std::size_t dim);
  /// The SVM-dual feasible region [0, lambda*n]^n.
  static ConstraintSet svm_dual_box(double lambda, std::size_t n);

  ConstraintKind kind() const { return kind_; }
  std::size_t dimension() const { return dim_; }
  double radius() const { return radius_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

  /// Coordinate bounds of the set's bounding box (used by samplers and the
  /// grid oracle).
  double lower_bound(std::size_t j) const;
  double upper_bound(std::size_t j) const;

  /// Exact Euclidean projection; feasible z is returned unchanged.
  Vector project(std::span<const double> z) const;
  void project(std::span<const double> z, Vector& out) const;

  /// True iff every defining inequality holds within tol.
  bool contains(std::span<const double> x, double tol) const;

 private:
  ConstraintSet(ConstraintKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}
  void check_dimension(std::size_t got, const char* what) const;

  ConstraintKind kind_ = ConstraintKind::box;
  std::size_t dim_ = 0;
  Vector lower_;
  Vector upper_;
  double radius_ = 0.0;
};

}  // namespace ps2gd

#endif  // PS2GD_CONSTRAINT_SET_HPP
