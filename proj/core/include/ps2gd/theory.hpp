#ifndef PS2GD_THEORY_HPP
#define PS2GD_THEORY_HPP

#include <cstddef>
#include <string>

#include "ps2gd/constraint_set.hpp"
#include "ps2gd/objective.hpp"
#include "ps2gd/random_source.hpp"

namespace ps2gd {

/// Mini-batch variance factor (n-b)/(b(n-1)); 1 at b=1, 0 at b=n. Returns 0
/// for n = 1 by convention.
double alpha(std::size_t n, std::size_t b);

struct RateInputs {
  double mu = 0.0;         // strong convexity of g
  double beta = 0.0;       // Hoffman-derived weak-strong-convexity constant
  double lipschitz = 0.0;  // L
  double stepsize = 0.0;   // h
  std::size_t inner_max = 0;  // M
  std::size_t batch = 1;      // b
  std::size_t n = 1;          // sampling universe size
};

/// Per-epoch contraction factor under weak strong convexity:
///   rho = (beta + 4 mu h^2 L alpha(b) (M+1)) / (mu h (1 - 4 h L alpha(b)) M).
/// Requires h < 1/(4 L alpha(b)) and h <= 1/L; convergence is guaranteed only
/// when the returned value is < 1.
double rho(const RateInputs& inputs);

/// Contraction factor when F itself is mu_F-strongly convex:
///   1/(h mu_F (1-4hLa) M) + 4hLa (M+1) / ((1-4hLa) M).
/// Coincides with rho() under mu_F = mu/beta.
double rho_strongly_convex(double mu_F, double lipschitz, double stepsize,
                           std::size_t inner_max, std::size_t batch,
                           std::size_t n);

enum class PlanRegime {
  interior,  // optimal stepsize below 1/L
  capped,    // stepsize capped at 1/L
};

std::string to_string(PlanRegime regime);

struct Plan {
  double h_star = 0.0;
  double m_star = 0.0;  // real-valued; ceil before use as M
  PlanRegime regime = PlanRegime::interior;
  double kappa = 0.0;   // beta*L/mu
  double alpha_b = 0.0;
};

/// Work-minimizing stepsize and inner-loop length reaching a target
/// per-epoch decrease rho_star in (0,1). Throws planning_error when the
/// target is unreachable in the capped regime.
Plan plan(double rho_star, double mu, double beta, double lipschitz,
          std::size_t batch, std::size_t n);

/// Analytic strong-convexity constant of g for the loss family; for the
/// logistic loss this uses the worst reachable margin over the feasible set,
/// so it depends on the constraint geometry.
double strong_convexity_mu(const CompositeObjective& objective,
                           const ConstraintSet& set);

/// Empirical lower bound on the weak-strong-convexity constant: the maximum
/// of mu ||x - P(x)||^2 / (2 (F(x) - F*)) over sampled feasible points, where
/// P(x) is a nearest optimal point approximated by a warm-started
/// high-accuracy solve. Samples with gap <= 1e-12 are skipped.
double estimate_beta(const CompositeObjective& objective,
                     const ConstraintSet& set, const Vector& x_star,
                     double f_star, RandomSource& rng, std::size_t n_samples);

}  // namespace ps2gd

#endif  // PS2GD_THEORY_HPP
