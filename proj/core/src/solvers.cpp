#include "ps2gd/solvers.hpp"

#include <chrono>
#include <cmath>

#include "ps2gd/errors.hpp"
#include "ps2gd/sampling.hpp"

namespace ps2gd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Vector starting_point(const CompositeObjective& objective,
                      const ConstraintSet& set, const SolverConfig& config) {
  if (set.dimension() != objective.dimension()) {
    throw argument_error("solver: constraint dimension " +
                         std::to_string(set.dimension()) +
                         " does not match objective dimension " +
                         std::to_string(objective.dimension()));
  }
  Vector x0 = config.initial_point.empty() ? Vector(objective.dimension(), 0.0)
                                           : config.initial_point;
  if (x0.size() != objective.dimension()) {
    throw argument_error("solver: initial point has wrong dimension");
  }
  return set.project(x0);
}

void check_stepsize(const SolverConfig& config) {
  if (!(config.stepsize >= 0.0) || !std::isfinite(config.stepsize)) {
    throw argument_error("solver: stepsize must be a finite nonnegative real");
  }
}

void echo_config(Trace& trace, const CompositeObjective& objective,
                 const ConstraintSet& set, const SolverConfig& config) {
  trace.set_meta("solver", to_string(config.kind));
  trace.set_meta("loss", to_string(objective.loss()));
  trace.set_meta("n_components", std::to_string(objective.n_components()));
  trace.set_meta("dimension", std::to_string(objective.dimension()));
  trace.set_meta("lipschitz", format_double(objective.lipschitz()));
  trace.set_meta("constraint", to_string(set.kind()));
  trace.set_meta("stepsize", format_double(config.stepsize));
  trace.set_meta("epochs", std::to_string(config.epochs));
  trace.set_meta("seed", std::to_string(config.seed));
  trace.set_meta("threads", std::to_string(config.threads));
}

}  // namespace

Trace run_ps2gd(const CompositeObjective& objective, const ConstraintSet& set,
                const SolverConfig& config) {
  if (config.kind != SolverKind::ps2gd) {
    throw argument_error("run_ps2gd: config.kind must be ps2gd");
  }
  check_stepsize(config);
  const std::size_t m = objective.n_components();
  if (config.batch == 0 || config.batch > m) {
    throw argument_error("run_ps2gd: need 1 <= b <= number of components");
  }
  if (config.inner_max == 0) {
    throw argument_error("run_ps2gd: inner_max M must be at least 1");
  }

  const double h = config.stepsize;
  const std::size_t b = config.batch;
  const auto start = Clock::now();
  RandomSource rng(config.seed);

  Trace trace;
  echo_config(trace, objective, set, config);
  trace.set_meta("inner_max", std::to_string(config.inner_max));
  trace.set_meta("batch", std::to_string(b));

  Vector x = starting_point(objective, set, config);
  double passes = 0.0;
  double parallel = 0.0;
  trace.add_record({0, 0.0, 0.0, seconds_since(start),
                    objective.value(x, config.threads)});
  if (config.epoch_callback) config.epoch_callback(0, x);

  Vector y = x;
  Vector step(objective.dimension());
  Vector gradient_estimate(objective.dimension());
  for (std::size_t k = 0; k < config.epochs; ++k) {
    const Vector anchor_gradient = objective.full_gradient(x, config.threads);
    const std::size_t t_k = sample_inner_length(rng, config.inner_max);
    y = x;
    for (std::size_t t = 0; t < t_k; ++t) {
      gradient_estimate = anchor_gradient;
      for (std::size_t i : sample_minibatch(rng, m, b)) {
        const double delta =
            objective.loss_derivative(i, objective.component_margin(i, y)) -
            objective.loss_derivative(i, objective.component_margin(i, x));
        objective.components().row_axpy(
            i, delta / static_cast<double>(b), gradient_estimate);
      }
      for (std::size_t j = 0; j < y.size(); ++j) {
        step[j] = y[j] - h * gradient_estimate[j];
      }
      set.project(step, y);
    }
    x = y;
    passes += 1.0 + 2.0 * static_cast<double>(b * t_k) / static_cast<double>(m);
    parallel += 1.0 + 2.0 * static_cast<double>(t_k) / static_cast<double>(m);
    double objective_value = 0.0;
    try {
      objective_value = objective.value(x, config.threads);
    } catch (const numeric_error&) {
      throw numeric_error("run_ps2gd: non-finite objective at epoch " +
                          std::to_string(k + 1));
    }
    trace.add_record({k + 1, passes, parallel, seconds_since(start),
                      objective_value});
    if (config.epoch_callback) config.epoch_callback(k + 1, x);
  }
  return trace;
}

namespace {

Trace run_sgd_impl(const CompositeObjective& objective, const ConstraintSet& set,
                   const SolverConfig& config, bool adaptive) {
  check_stepsize(config);
  const std::size_t m = objective.n_components();
  const auto start = Clock::now();
  RandomSource rng(config.seed);

  Trace trace;
  echo_config(trace, objective, set, config);
  if (adaptive) {
    // Stepsize h0/(k+1) updated at pass boundaries, k = completed passes.
    trace.set_meta("stepsize_rule", "h0/(k+1) per effective pass");
  }

  Vector x = starting_point(objective, set, config);
  trace.add_record({0, 0.0, 0.0, seconds_since(start),
                    objective.value(x, config.threads)});
  if (config.epoch_callback) config.epoch_callback(0, x);

  Vector step(objective.dimension());
  for (std::size_t pass = 0; pass < config.epochs; ++pass) {
    const double h = adaptive
                         ? config.stepsize / static_cast<double>(pass + 1)
                         : config.stepsize;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t i = rng.next_below(m);
      const double coef =
          objective.loss_derivative(i, objective.component_margin(i, x));
      for (std::size_t j = 0; j < x.size(); ++j) {
        step[j] = x[j] - h * objective.linear_term()[j];
      }
      objective.components().row_axpy(i, -h * coef, step);
      set.project(step, x);
    }
    double objective_value = 0.0;
    try {
      objective_value = objective.value(x, config.threads);
    } catch (const numeric_error&) {
      throw numeric_error("run_sgd: non-finite objective at pass " +
                          std::to_string(pass + 1));
    }
    const double passes = static_cast<double>(pass + 1);
    trace.add_record({pass + 1, passes, passes, seconds_since(start),
                      objective_value});
    if (config.epoch_callback) config.epoch_callback(pass + 1, x);
  }
  return trace;
}

}  // namespace

Trace run_sgd(const CompositeObjective& objective, const ConstraintSet& set,
              const SolverConfig& config) {
  if (config.kind != SolverKind::sgd) {
    throw argument_error("run_sgd: config.kind must be sgd");
  }
  return run_sgd_impl(objective, set, config, false);
}

Trace run_sgd_plus(const CompositeObjective& objective, const ConstraintSet& set,
                   const SolverConfig& config) {
  if (config.kind != SolverKind::sgd_plus) {
    throw argument_error("run_sgd_plus: config.kind must be sgd_plus");
  }
  return run_sgd_impl(objective, set, config, true);
}

namespace {

struct FistaState {
  Vector x;
  Vector x_prev;
  double momentum = 1.0;  // t_k, starts at 1 so the first step has no
                          // extrapolation
  double objective_value = 0.0;
  std::size_t restarts = 0;
  double passes = 0.0;
};

/// One FISTA iteration with monotone restart. Updates state in place.
void fista_step(const CompositeObjective& objective, const ConstraintSet& set,
                double h, unsigned threads, FistaState& st) {
  const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * st.momentum * st.momentum));
  const double extrapolation = (st.momentum - 1.0) / t_next;

  Vector y(st.x.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] = st.x[j] + extrapolation * (st.x[j] - st.x_prev[j]);
  }
  Vector grad = objective.full_gradient(y, threads);
  st.passes += 1.0;
  Vector candidate(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] -= h * grad[j];
  set.project(y, candidate);
  double candidate_value = objective.value(candidate, threads);

  if (candidate_value > st.objective_value) {
    // Monotone restart: redo as a plain projected-gradient step from x and
    // reset the momentum sequence. Descent is guaranteed for h <= 1/L.
    grad = objective.full_gradient(st.x, threads);
    st.passes += 1.0;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = st.x[j] - h * grad[j];
    set.project(y, candidate);
    candidate_value = objective.value(candidate, threads);
    st.momentum = 1.0;
    ++st.restarts;
  } else {
    st.momentum = t_next;
  }
  st.x_prev = st.x;
  st.x = std::move(candidate);
  st.objective_value = candidate_value;
}

}  // namespace

Trace run_fista(const CompositeObjective& objective, const ConstraintSet& set,
                const SolverConfig& config) {
  if (config.kind != SolverKind::fista) {
    throw argument_error("run_fista: config.kind must be fista");
  }
  check_stepsize(config);
  if (config.stepsize > 1.0 / objective.lipschitz()) {
    throw argument_error("run_fista: stepsize must satisfy h <= 1/L");
  }
  const auto start = Clock::now();

  Trace trace;
  echo_config(trace, objective, set, config);

  FistaState st;
  st.x = starting_point(objective, set, config);
  st.x_prev = st.x;
  st.objective_value = objective.value(st.x, config.threads);
  trace.add_record({0, 0.0, 0.0, seconds_since(start), st.objective_value});
  if (config.epoch_callback) config.epoch_callback(0, st.x);

  for (std::size_t k = 0; k < config.epochs; ++k) {
    fista_step(objective, set, config.stepsize, config.threads, st);
    trace.add_record({k + 1, st.passes, st.passes, seconds_since(start),
                      st.objective_value});
    if (config.epoch_callback) config.epoch_callback(k + 1, st.x);
  }
  trace.set_meta("restarts", std::to_string(st.restarts));
  return trace;
}

Trace run_solver(const CompositeObjective& objective, const ConstraintSet& set,
                 const SolverConfig& config) {
  switch (config.kind) {
    case SolverKind::ps2gd:
      return run_ps2gd(objective, set, config);
    case SolverKind::sgd:
      return run_sgd(objective, set, config);
    case SolverKind::sgd_plus:
      return run_sgd_plus(objective, set, config);
    case SolverKind::fista:
      return run_fista(objective, set, config);
  }
  throw argument_error("run_solver: unknown solver kind");
}

ReferenceSolution run_reference(const CompositeObjective& objective,
                                const ConstraintSet& set, double tol,
                                const Vector& start) {
  if (!(tol > 0.0)) {
    throw argument_error("run_reference: tol must be positive");
  }
  constexpr std::size_t kMaxIterations = 1'000'000;
  constexpr std::size_t kPolishIterations = 10;
  const double h = 1.0 / objective.lipschitz();

  SolverConfig config;
  config.kind = SolverKind::fista;
  config.stepsize = h;
  config.initial_point = start;

  FistaState st;
  st.x = starting_point(objective, set, config);
  st.x_prev = st.x;
  st.objective_value = objective.value(st.x);

  double mapping_norm = 0.0;
  std::size_t iterations = 0;
  for (;; ++iterations) {
    // Gradient mapping at the current iterate: (x - proj(x - h grad)) / h.
    const Vector grad = objective.full_gradient(st.x);
    Vector shifted(st.x.size());
    for (std::size_t j = 0; j < shifted.size(); ++j) {
      shifted[j] = st.x[j] - h * grad[j];
    }
    const Vector projected = set.project(shifted);
    mapping_norm = distance(st.x, projected) / h;
    if (mapping_norm <= tol) break;
    if (iterations >= kMaxIterations) {
      throw convergence_error(
          "run_reference: iteration cap reached, gradient mapping norm " +
              format_double(mapping_norm),
          mapping_norm);
    }
    fista_step(objective, set, h, 1, st);
  }
  for (std::size_t k = 0; k < kPolishIterations; ++k) {
    fista_step(objective, set, h, 1, st);
  }
  return ReferenceSolution{st.x, st.objective_value,
                           iterations + kPolishIterations, mapping_norm};
}

}  // namespace ps2gd
