#include <cmath>

#include "doctest.h"
#include "ps2gd/errors.hpp"
#include "ps2gd/objective.hpp"
#include "ps2gd/oracles.hpp"
#include "test_util.hpp"

using namespace ps2gd;
using namespace ps2gd::testutil;

TEST_CASE("central differences recover smooth gradients") {
  SUBCASE("half squared norm") {
    const auto f = [](const Vector& v) { return 0.5 * squared_norm(v); };
    const Vector g = oracles::finite_diff_gradient(f, {1.0, 2.0}, 1e-5);
    CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g[1] == doctest::Approx(2.0).epsilon(1e-9));
  }
  SUBCASE("constant function") {
    const auto f = [](const Vector&) { return 3.25; };
    const Vector g = oracles::finite_diff_gradient(f, {0.3, -0.7, 1.1}, 1e-5);
    for (double v : g) CHECK(v == 0.0);
  }
  SUBCASE("logistic objective on a 3x2 instance") {
    const LabeledDataset data = make_dataset(
        {{0.4, -1.2}, {0.0, 0.7}, {-0.3, 0.5}}, {1.0, -1.0, 1.0});
    const CompositeObjective obj(data, LossKind::logistic);
    const Vector x = {0.2, -0.4};
    const Vector analytic = obj.full_gradient(x);
    const Vector numeric = oracles::finite_diff_gradient(
        [&obj](const Vector& v) { return obj.value(v); }, x, 1e-5);
    for (std::size_t j = 0; j < x.size(); ++j) {
      CHECK(std::abs(numeric[j] - analytic[j]) <=
            1e-6 * std::max(1.0, std::abs(analytic[j])));
    }
  }
  SUBCASE("step must be positive") {
    CHECK_THROWS_AS(oracles::finite_diff_gradient(
                        [](const Vector&) { return 0.0; }, {1.0}, 0.0),
                    argument_error);
  }
}

TEST_CASE("subset enumeration visits every combination once") {
  std::size_t count = 0;
  oracles::for_each_subset(6, 3, [&](const std::vector<std::size_t>& s) {
    CHECK(s.size() == 3);
    CHECK(s[0] < s[1]);
    CHECK(s[1] < s[2]);
    ++count;
  });
  CHECK(count == 20);
}

TEST_CASE("exact mini-batch mean-error expectation") {
  SUBCASE("two orthogonal unit vectors, tau = 1") {
    const double e =
        oracles::enumerate_minibatch_expectation({{1.0, 0.0}, {0.0, 1.0}}, 1);
    CHECK(e == doctest::Approx(0.5).epsilon(1e-14));
    // The uncentered closed form is only an upper bound here.
    const double uncentered_bound = (1.0 / 2.0) * 1.0 * 2.0 / 1.0;
    CHECK(uncentered_bound >= e);
  }
  SUBCASE("tau = n gives zero") {
    const double e = oracles::enumerate_minibatch_expectation(
        {{1.0, 2.0}, {-0.5, 0.25}, {3.0, 0.0}}, 3);
    CHECK(e == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("identical vectors give zero") {
    const double e = oracles::enumerate_minibatch_expectation(
        {{0.7, -0.1}, {0.7, -0.1}, {0.7, -0.1}}, 2);
    CHECK(e == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("budget is enforced") {
    const std::vector<Vector> big(13, Vector{1.0});
    CHECK_THROWS_AS(oracles::enumerate_minibatch_expectation(big, 2),
                    budget_error);
  }
}

TEST_CASE("exact variance-reduced estimator second moment") {
  RandomSource rng(42);
  const LabeledDataset data = random_sparse_dataset(rng, 6, 3);
  const CompositeObjective obj(data, LossKind::logistic);
  const ConstraintSet set = ConstraintSet::linf_ball(0.5, 3);

  SUBCASE("anchor equals iterate: every summand vanishes") {
    const Vector x = random_feasible(rng, set);
    CHECK(oracles::enumerate_estimator_variance(obj, set, x, x, 2) == 0.0);
  }
  SUBCASE("b = n: estimator is the full gradient") {
    const Vector x = random_feasible(rng, set);
    const Vector y = random_feasible(rng, set);
    CHECK(oracles::enumerate_estimator_variance(obj, set, x, y, 6) ==
          doctest::Approx(0.0).epsilon(1e-24));
  }
  SUBCASE("budget is enforced") {
    RandomSource rng2(7);
    const LabeledDataset big = random_sparse_dataset(rng2, 11, 2);
    const CompositeObjective big_obj(big, LossKind::squared);
    const ConstraintSet big_set = ConstraintSet::linf_ball(1.0, 2);
    const Vector z(2, 0.0);
    CHECK_THROWS_AS(
        oracles::enumerate_estimator_variance(big_obj, big_set, z, z, 1),
        budget_error);
  }
}

TEST_CASE("grid projection oracle") {
  SUBCASE("clipping onto the small infinity ball") {
    const ConstraintSet set = ConstraintSet::linf_ball(0.1, 2);
    const Vector got =
        oracles::grid_projection_oracle(set, {0.5, -0.05}, 1e-3);
    CHECK(std::abs(got[0] - 0.1) <= 1e-3 + 1e-12);
    CHECK(std::abs(got[1] + 0.05) <= 1e-3 + 1e-12);
  }
  SUBCASE("feasible point maps to its nearest grid point") {
    const ConstraintSet set = ConstraintSet::box({0.0, 0.0}, {1.0, 1.0});
    const Vector got = oracles::grid_projection_oracle(set, {0.5, 0.25}, 0.25);
    CHECK(got[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(got[1] == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("l1 threshold case matches project()") {
    const ConstraintSet set = ConstraintSet::l1_ball(1.0, 2);
    const Vector got = oracles::grid_projection_oracle(set, {2.0, 1.0}, 1e-3);
    const Vector exact = set.project(Vector{2.0, 1.0});
    CHECK(exact[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(exact[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(distance(got, exact) <= 2e-3 * std::sqrt(2.0) + 1e-9);
  }
  SUBCASE("dimension budget") {
    const ConstraintSet set = ConstraintSet::linf_ball(1.0, 4);
    CHECK_THROWS_AS(
        oracles::grid_projection_oracle(set, Vector(4, 0.0), 0.5),
        budget_error);
  }
}
