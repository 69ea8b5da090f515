#ifndef PS2GD_SOLVERS_HPP
#define PS2GD_SOLVERS_HPP

#include "ps2gd/constraint_set.hpp"
#include "ps2gd/objective.hpp"
#include "ps2gd/trace.hpp"

namespace ps2gd {

/// Projected semi-stochastic gradient descent with mini-batches. Each epoch
/// computes the full gradient at the reference point, runs a uniformly random
/// number t <= M of projected variance-reduced steps, and continues from the
/// last inner iterate. Pass accounting: one pass for the full gradient plus
/// 2*b*t/m passes of inner work (every inner step evaluates 2b component
/// gradients; reference-point gradients are recomputed, not cached).
Trace run_ps2gd(const CompositeObjective& objective, const ConstraintSet& set,
                const SolverConfig& config);

/// Projected stochastic gradient descent with a constant stepsize; one record
/// per effective pass (m single-component steps).
Trace run_sgd(const CompositeObjective& objective, const ConstraintSet& set,
              const SolverConfig& config);

/// Projected SGD with the adaptive stepsize h0/(k+1), k = completed effective
/// passes.
Trace run_sgd_plus(const CompositeObjective& objective, const ConstraintSet& set,
                   const SolverConfig& config);

/// Projected FISTA with function-value monotone restart; requires h <= 1/L.
/// One effective pass per iteration (two on restart).
Trace run_fista(const CompositeObjective& objective, const ConstraintSet& set,
                const SolverConfig& config);

/// Dispatch on config.kind.
Trace run_solver(const CompositeObjective& objective, const ConstraintSet& set,
                 const SolverConfig& config);

struct ReferenceSolution {
  Vector x_star;
  double f_star = 0.0;
  std::size_t iterations = 0;
  double mapping_norm = 0.0;
};

/// High-accuracy deterministic reference: FISTA with h = 1/L until the
/// gradient-mapping norm ||x - proj(x - h grad F(x))|| / h falls below tol,
/// then 10 polish iterations. Throws convergence_error at 1e6 iterations.
ReferenceSolution run_reference(const CompositeObjective& objective,
                                const ConstraintSet& set, double tol,
                                const Vector& start = {});

}  // namespace ps2gd

#endif  // PS2GD_SOLVERS_HPP
