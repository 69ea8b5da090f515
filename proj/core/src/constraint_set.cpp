#include "ps2gd/constraint_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ps2gd/errors.hpp"

namespace ps2gd {

std::string to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::box:
      return "box";
    case ConstraintKind::linf_ball:
      return "linf_ball";
    case ConstraintKind::l1_ball:
      return "l1_ball";
  }
  return "unknown";
}

ConstraintSet ConstraintSet::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size() || lower.empty()) {
    throw argument_error("box: lower and upper must be nonempty, same length");
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j])) {
      throw argument_error("box: bounds must be finite");
    }
    if (lower[j] > upper[j]) {
      throw argument_error("box: lower[" + std::to_string(j) +
                           "] exceeds upper bound (empty set)");
    }
  }
  ConstraintSet set(ConstraintKind::box, lower.size());
  set.lower_ = std::move(lower);
  set.upper_ = std::move(upper);
  return set;
}

ConstraintSet ConstraintSet::linf_ball(double radius, std::size_t dim) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw argument_error("linf_ball: radius must be a positive finite real");
  }
  if (dim == 0) throw argument_error("linf_ball: dimension must be positive");
  ConstraintSet set(ConstraintKind::linf_ball, dim);
  set.radius_ = radius;
  return set;
}

ConstraintSet ConstraintSet::l1_ball(double radius, std::size_t dim) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw argument_error("l1_ball: radius must be a positive finite real");
  }
  if (dim == 0) throw argument_error("l1_ball: dimension must be positive");
  ConstraintSet set(ConstraintKind::l1_ball, dim);
  set.radius_ = radius;
  return set;
}

ConstraintSet ConstraintSet::svm_dual_box(double lambda, std::size_t n) {
  if (!(lambda > 0.0)) {
    throw argument_error("svm_dual_box: lambda must be positive");
  }
  return box(Vector(n, 0.0), Vector(n, lambda * static_cast<double>(n)));
}

double ConstraintSet::lower_bound(std::size_t j) const {
  return kind_ == ConstraintKind::box ? lower_[j] : -radius_;
}

double ConstraintSet::upper_bound(std::size_t j) const {
  return kind_ == ConstraintKind::box ? upper_[j] : radius_;
}

void ConstraintSet::check_dimension(std::size_t got, const char* what) const {
  if (got != dim_) {
    throw argument_error(std::string(what) + ": expected dimension " +
                         std::to_string(dim_) + ", got " + std::to_string(got));
  }
}

Vector ConstraintSet::project(std::span<const double> z) const {
  Vector out;
  project(z, out);
  return out;
}

void ConstraintSet::project(std::span<const double> z, Vector& out) const {
  check_dimension(z.size(), "project");
  out.assign(z.begin(), z.end());
  switch (kind_) {
    case ConstraintKind::box:
      for (std::size_t j = 0; j < dim_; ++j) {
        out[j] = std::min(std::max(out[j], lower_[j]), upper_[j]);
      }
      return;
    case ConstraintKind::linf_ball:
      for (std::size_t j = 0; j < dim_; ++j) {
        out[j] = std::min(std::max(out[j], -radius_), radius_);
      }
      return;
    case ConstraintKind::l1_ball: {
      if (norm_l1(out) <= radius_) return;
      // Sort-based threshold: project |z| onto the simplex of radius zeta and
      // restore signs. Ties are resolved by index order; the projection is
      // unique either way.
      Vector mag(dim_);
      for (std::size_t j = 0; j < dim_; ++j) mag[j] = std::abs(out[j]);
      Vector sorted = mag;
      std::sort(sorted.begin(), sorted.end(), std::greater<double>());
      double cumulative = 0.0;
      double theta = 0.0;
      for (std::size_t j = 0; j < dim_; ++j) {
        cumulative += sorted[j];
        const double candidate =
            (cumulative - radius_) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0.0) theta = candidate;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        const double shrunk = std::max(mag[j] - theta, 0.0);
        out[j] = std::copysign(shrunk, out[j]);
        if (out[j] == 0.0) out[j] = 0.0;  // normalize -0.0
      }
      return;
    }
  }
}

bool ConstraintSet::contains(std::span<const double> x, double tol) const {
  check_dimension(x.size(), "contains");
  if (tol < 0.0) throw argument_error("contains: tol must be nonnegative");
  switch (kind_) {
    case ConstraintKind::box:
      for (std::size_t j = 0; j < dim_; ++j) {
        if (x[j] < lower_[j] - tol || x[j] > upper_[j] + tol) return false;
      }
      return true;
    case ConstraintKind::linf_ball:
      for (std::size_t j = 0; j < dim_; ++j) {
        if (std::abs(x[j]) > radius_ + tol) return false;
      }
      return true;
    case ConstraintKind::l1_ball:
      return norm_l1(x) <= radius_ + tol;
  }
  return false;
}

}  // namespace ps2gd
