#include "ps2gd/oracles.hpp"

#include <cmath>
#include <limits>

#include "ps2gd/errors.hpp"

namespace ps2gd::oracles {

Vector finite_diff_gradient(const std::function<double(const Vector&)>& f,
                            const Vector& x, double step) {
  if (!(step > 0.0)) {
    throw argument_error("finite_diff_gradient: step must be positive");
  }
  Vector grad(x.size());
  Vector probe = x;
  for (std::size_t j = 0; j < x.size(); ++j) {
    probe[j] = x[j] + step;
    const double up = f(probe);
    probe[j] = x[j] - step;
    const double down = f(probe);
    probe[j] = x[j];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw numeric_error("finite_diff_gradient: non-finite evaluation");
    }
    grad[j] = (up - down) / (2.0 * step);
  }
  return grad;
}

void for_each_subset(
    std::size_t n, std::size_t k,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k == 0 || k > n) {
    throw argument_error("for_each_subset: need 1 <= k <= n");
  }
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    fn(subset);
    // Advance to the next lexicographic k-subset.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

double enumerate_minibatch_expectation(const std::vector<Vector>& vectors,
                                       std::size_t tau) {
  const std::size_t n = vectors.size();
  if (n == 0) {
    throw argument_error("enumerate_minibatch_expectation: empty family");
  }
  if (n > 12) {
    throw budget_error(
        "enumerate_minibatch_expectation: n must be <= 12, got " +
        std::to_string(n));
  }
  if (tau == 0 || tau > n) {
    throw argument_error("enumerate_minibatch_expectation: need 1 <= tau <= n");
  }
  const std::size_t dim = vectors.front().size();
  Vector mean(dim, 0.0);
  for (const Vector& v : vectors) {
    if (v.size() != dim) {
      throw argument_error("enumerate_minibatch_expectation: ragged vectors");
    }
    axpy(1.0 / static_cast<double>(n), v, mean);
  }

  double total = 0.0;
  std::size_t count = 0;
  for_each_subset(n, tau, [&](const std::vector<std::size_t>& subset) {
    Vector avg(dim, 0.0);
    for (std::size_t i : subset) {
      axpy(1.0 / static_cast<double>(tau), vectors[i], avg);
    }
    total += squared_distance(avg, mean);
    ++count;
  });
  return total / static_cast<double>(count);
}

double enumerate_estimator_variance(const CompositeObjective& objective,
                                    const ConstraintSet& set, const Vector& x_k,
                                    const Vector& y, std::size_t b) {
  const std::size_t m = objective.n_components();
  if (m > 10) {
    throw budget_error(
        "enumerate_estimator_variance: n_components must be <= 10, got " +
        std::to_string(m));
  }
  if (b == 0 || b > m) {
    throw argument_error("enumerate_estimator_variance: need 1 <= b <= m");
  }
  if (!set.contains(x_k, 1e-9) || !set.contains(y, 1e-9)) {
    throw argument_error(
        "enumerate_estimator_variance: x_k and y must be feasible");
  }

  const std::size_t dim = objective.dimension();
  const double inv_m = 1.0 / static_cast<double>(m);

  // Everything below is assembled from component gradients only.
  std::vector<Vector> diff(m);  // grad f_i(y) - grad f_i(x_k)
  Vector anchor(dim, 0.0);      // grad F(x_k)
  Vector target(dim, 0.0);      // grad F(y)
  for (std::size_t i = 0; i < m; ++i) {
    const Vector at_y = objective.component_gradient(i, y);
    const Vector at_anchor = objective.component_gradient(i, x_k);
    axpy(inv_m, at_y, target);
    axpy(inv_m, at_anchor, anchor);
    diff[i] = at_y;
    axpy(-1.0, at_anchor, diff[i]);
  }

  double total = 0.0;
  std::size_t count = 0;
  Vector estimate(dim);
  for_each_subset(m, b, [&](const std::vector<std::size_t>& subset) {
    estimate = anchor;
    for (std::size_t i : subset) {
      axpy(1.0 / static_cast<double>(b), diff[i], estimate);
    }
    total += squared_distance(estimate, target);
    ++count;
  });
  return total / static_cast<double>(count);
}

Vector grid_projection_oracle(const ConstraintSet& set, const Vector& z,
                              double spacing) {
  if (set.dimension() > 3) {
    throw budget_error("grid_projection_oracle: dimension must be <= 3, got " +
                       std::to_string(set.dimension()));
  }
  if (!(spacing > 0.0)) {
    throw argument_error("grid_projection_oracle: spacing must be positive");
  }
  if (z.size() != set.dimension()) {
    throw argument_error("grid_projection_oracle: dimension mismatch");
  }
  const std::size_t dim = set.dimension();
  std::vector<std::size_t> steps(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    steps[j] = static_cast<std::size_t>(
                   std::floor((set.upper_bound(j) - set.lower_bound(j)) /
                              spacing + 1e-9)) + 1;
  }

  Vector point(dim);
  Vector best(dim, 0.0);
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    for (std::size_t j = 0; j < dim; ++j) {
      point[j] = set.lower_bound(j) + static_cast<double>(idx[j]) * spacing;
    }
    if (set.contains(point, 1e-12)) {
      const double cost = 0.5 * squared_distance(point, z);
      if (cost < best_cost) {
        best_cost = cost;
        best = point;
      }
    }
    std::size_t j = 0;
    while (j < dim && ++idx[j] >= steps[j]) {
      idx[j] = 0;
      ++j;
    }
    if (j == dim) break;
  }
  if (!std::isfinite(best_cost)) {
    throw argument_error("grid_projection_oracle: no feasible grid point");
  }
  return best;
}

}  // namespace ps2gd::oracles
