#include "ps2gd/theory.hpp"

#include <algorithm>
#include <cmath>

#include "ps2gd/errors.hpp"
#include "ps2gd/solvers.hpp"

namespace ps2gd {

double alpha(std::size_t n, std::size_t b) {
  if (b == 0 || b > n) {
    throw argument_error("alpha: need 1 <= b <= n");
  }
  if (n == 1) return 0.0;
  return static_cast<double>(n - b) /
         (static_cast<double>(b) * static_cast<double>(n - 1));
}

namespace {

void check_rate_stepsize(double h, double L, double a) {
  if (!(h > 0.0)) throw argument_error("rho: stepsize must be positive");
  if (h > 1.0 / L) {
    throw argument_error("rho: stepsize violates h <= 1/L");
  }
  if (a > 0.0 && 4.0 * h * L * a >= 1.0) {
    throw argument_error("rho: stepsize violates h < 1/(4 L alpha(b))");
  }
}

}  // namespace

double rho(const RateInputs& in) {
  if (!(in.mu > 0.0) || !(in.beta > 0.0) || !(in.lipschitz > 0.0)) {
    throw argument_error("rho: mu, beta, L must be positive");
  }
  if (in.inner_max == 0) throw argument_error("rho: M must be at least 1");
  const double a = alpha(in.n, in.batch);
  check_rate_stepsize(in.stepsize, in.lipschitz, a);
  const double h = in.stepsize;
  const double hla4 = 4.0 * h * in.lipschitz * a;
  const double M = static_cast<double>(in.inner_max);
  return (in.beta + in.mu * h * hla4 * (M + 1.0)) /
         (in.mu * h * (1.0 - hla4) * M);
}

double rho_strongly_convex(double mu_F, double lipschitz, double stepsize,
                           std::size_t inner_max, std::size_t batch,
                           std::size_t n) {
  if (!(mu_F > 0.0) || !(lipschitz > 0.0)) {
    throw argument_error("rho_strongly_convex: mu_F and L must be positive");
  }
  if (inner_max == 0) {
    throw argument_error("rho_strongly_convex: M must be at least 1");
  }
  const double a = alpha(n, batch);
  check_rate_stepsize(stepsize, lipschitz, a);
  const double hla4 = 4.0 * stepsize * lipschitz * a;
  const double M = static_cast<double>(inner_max);
  return 1.0 / (stepsize * mu_F * (1.0 - hla4) * M) +
         hla4 * (M + 1.0) / ((1.0 - hla4) * M);
}

std::string to_string(PlanRegime regime) {
  return regime == PlanRegime::interior ? "interior" : "capped";
}

Plan plan(double rho_star, double mu, double beta, double lipschitz,
          std::size_t batch, std::size_t n) {
  if (!(rho_star > 0.0) || !(rho_star < 1.0)) {
    throw argument_error("plan: rho_star must lie in (0,1)");
  }
  if (!(mu > 0.0) || !(beta > 0.0) || !(lipschitz > 0.0)) {
    throw argument_error("plan: mu, beta, L must be positive");
  }
  Plan out;
  out.alpha_b = alpha(n, batch);
  out.kappa = beta * lipschitz / mu;
  const double a = out.alpha_b;
  const double inv_L = 1.0 / lipschitz;

  if (a == 0.0) {
    // b = n: the estimate is exact, work decreases in h, cap at 1/L.
    out.regime = PlanRegime::capped;
    out.h_star = inv_L;
    out.m_star = out.kappa / rho_star;
    return out;
  }

  const double drift = beta * (1.0 + rho_star) / (rho_star * mu);
  const double h_tilde =
      std::sqrt(drift * drift + beta / (4.0 * mu * a * lipschitz)) - drift;

  if (h_tilde <= inv_L) {
    out.regime = PlanRegime::interior;
    out.h_star = h_tilde;
    const double four_a = 4.0 * a;
    const double lever = (1.0 + 1.0 / rho_star) * four_a;
    out.m_star = 2.0 * out.kappa / rho_star *
                 (lever + std::sqrt(four_a / out.kappa + lever * lever));
  } else {
    out.regime = PlanRegime::capped;
    out.h_star = inv_L;
    const double denom = rho_star - 4.0 * a * (1.0 + rho_star);
    if (denom <= 0.0) {
      throw planning_error(
          "plan: target rho_star unreachable at h = 1/L (requires rho > "
          "4 alpha(b) (1+rho)); increase the batch or relax the target");
    }
    out.m_star = (out.kappa + 4.0 * a) / denom;
  }
  return out;
}

namespace {

/// max over the feasible set of |r^T x| for a sparse component row, via the
/// support function of the set.
double worst_margin(const SparseMatrix& rows, std::size_t i,
                    const ConstraintSet& set) {
  const auto cols = rows.row_cols(i);
  const auto vals = rows.row_values(i);
  switch (set.kind()) {
    case ConstraintKind::box: {
      double hi = 0.0, lo = 0.0;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const double v = vals[k];
        const double l = set.lower()[cols[k]];
        const double u = set.upper()[cols[k]];
        hi += v > 0.0 ? v * u : v * l;
        lo += v > 0.0 ? v * l : v * u;
      }
      return std::max(std::abs(hi), std::abs(lo));
    }
    case ConstraintKind::linf_ball: {
      double sum = 0.0;
      for (std::size_t k = 0; k < vals.size(); ++k) sum += std::abs(vals[k]);
      return set.radius() * sum;
    }
    case ConstraintKind::l1_ball: {
      double mx = 0.0;
      for (std::size_t k = 0; k < vals.size(); ++k) {
        mx = std::max(mx, std::abs(vals[k]));
      }
      return set.radius() * mx;
    }
  }
  return 0.0;
}

}  // namespace

double strong_convexity_mu(const CompositeObjective& objective,
                           const ConstraintSet& set) {
  const double m = static_cast<double>(objective.n_components());
  switch (objective.loss()) {
    case LossKind::squared:
      return 1.0 / m;
    case LossKind::svm_dual_quadratic:
      return 1.0;
    case LossKind::logistic: {
      // Smallest logistic curvature over margins reachable within the set.
      double t_max = 0.0;
      for (std::size_t i = 0; i < objective.n_components(); ++i) {
        t_max = std::max(t_max, worst_margin(objective.components(), i, set));
      }
      const double sig = 1.0 / (1.0 + std::exp(-t_max));
      return sig * (1.0 - sig) / m;
    }
  }
  throw argument_error("strong_convexity_mu: unknown loss kind");
}

double estimate_beta(const CompositeObjective& objective,
                     const ConstraintSet& set, const Vector& x_star,
                     double f_star, RandomSource& rng, std::size_t n_samples) {
  if (n_samples == 0) {
    throw argument_error("estimate_beta: n_samples must be positive");
  }
  if (x_star.size() != objective.dimension()) {
    throw argument_error("estimate_beta: x_star has wrong dimension");
  }
  const double mu = strong_convexity_mu(objective, set);
  const std::size_t dim = objective.dimension();

  std::vector<Vector> samples;
  samples.reserve(n_samples + 9);
  Vector raw(dim);
  for (std::size_t s = 0; s < n_samples; ++s) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double lo = set.lower_bound(j);
      const double hi = set.upper_bound(j);
      raw[j] = lo + (hi - lo) * rng.next_double();
    }
    samples.push_back(set.project(raw));
  }

  // Early iterates of a short solver run probe directions the random box
  // samples miss.
  SolverConfig probe;
  probe.kind = SolverKind::ps2gd;
  probe.stepsize = 0.1 / objective.lipschitz();
  probe.inner_max = std::max<std::size_t>(1, objective.n_components());
  probe.batch = 1;
  probe.epochs = 8;
  probe.seed = rng.next_u64();
  probe.epoch_callback = [&samples](std::size_t, const Vector& x) {
    samples.push_back(x);
  };
  run_ps2gd(objective, set, probe);

  double best = 0.0;
  bool any = false;
  for (const Vector& x : samples) {
    const double gap = objective.value(x) - f_star;
    if (gap <= 1e-12) continue;
    const ReferenceSolution nearest = run_reference(objective, set, 1e-10, x);
    const double ratio = mu * squared_distance(x, nearest.x_star) / (2.0 * gap);
    best = std::max(best, ratio);
    any = true;
  }
  if (!any) {
    throw estimation_error(
        "estimate_beta: no sample had a usable optimality gap");
  }
  return best;
}

}  // namespace ps2gd
