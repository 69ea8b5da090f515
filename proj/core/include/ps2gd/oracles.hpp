#ifndef PS2GD_ORACLES_HPP
#define PS2GD_ORACLES_HPP

#include <functional>

#include "ps2gd/constraint_set.hpp"
#include "ps2gd/objective.hpp"

namespace ps2gd::oracles {

/// Central finite differences per coordinate. Independent of the analytic
/// gradient paths it is used to check.
Vector finite_diff_gradient(const std::function<double(const Vector&)>& f,
                            const Vector& x, double step);

/// Exact E || (1/tau) sum_{i in S} xi_i - mean ||^2 over all C(n, tau)
/// subsets of the given vectors. Budget: n <= 12.
double enumerate_minibatch_expectation(const std::vector<Vector>& vectors,
                                       std::size_t tau);

/// Exact E || G - grad F(y) ||^2 over all size-b mini-batches, with G built
/// exactly as the solver builds it (anchor full gradient plus averaged
/// component-gradient differences). Uses only component_gradient averages.
/// Budget: n_components <= 10.
double enumerate_estimator_variance(const CompositeObjective& objective,
                                    const ConstraintSet& set, const Vector& x_k,
                                    const Vector& y, std::size_t b);

/// Minimizer of 0.5 ||x - z||^2 over a feasibility-filtered grid of the
/// set's bounding box. Budget: dimension <= 3.
Vector grid_projection_oracle(const ConstraintSet& set, const Vector& z,
                              double spacing);

/// Calls fn with every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace ps2gd::oracles

#endif  // PS2GD_ORACLES_HPP
