#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ps2gd/data_io.hpp"
#include "ps2gd/errors.hpp"
#include "ps2gd/solvers.hpp"
#include "test_util.hpp"

using namespace ps2gd;
using namespace ps2gd::testutil;

TEST_CASE("libsvm parsing") {
  SUBCASE("single record") {
    std::istringstream in("+1 3:0.5\n");
    const LabeledDataset data = parse_libsvm(in);
    CHECK(data.n() == 1);
    CHECK(data.d() == 3);
    CHECK(data.labels()[0] == 1.0);
    CHECK(data.features().nnz() == 1);
    CHECK(data.features().row_cols(0)[0] == 2);
    CHECK(data.features().row_values(0)[0] == 0.5);
  }
  SUBCASE("blank lines produce no records") {
    std::istringstream in("+1 1:1\n\n-1 2:2\n");
    const LabeledDataset data = parse_libsvm(in);
    CHECK(data.n() == 2);
  }
  SUBCASE("{0,1} labels are remapped with a warning") {
    std::istringstream in("1 1:1\n0 2:1\n");
    std::ostringstream warnings;
    ParseOptions options;
    options.warnings = &warnings;
    const LabeledDataset data = parse_libsvm(in, options);
    CHECK(data.labels() == Vector{1.0, -1.0});
    CHECK(warnings.str().find("remapped") != std::string::npos);
  }
  SUBCASE("label outside the supported sets") {
    std::istringstream in("2 1:1\n");
    CHECK_THROWS_AS(parse_libsvm(in), parse_error);
  }
  SUBCASE("mixed 0 and -1 labels are ambiguous") {
    std::istringstream in("0 1:1\n-1 2:1\n");
    CHECK_THROWS_AS(parse_libsvm(in), parse_error);
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream bad_token("+1 1:1\n+1 2:xyz\n");
    try {
      parse_libsvm(bad_token);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("index zero is rejected") {
    std::istringstream in("+1 0:1\n");
    CHECK_THROWS_AS(parse_libsvm(in), parse_error);
  }
  SUBCASE("non-increasing indices are rejected") {
    std::istringstream in("+1 2:1 2:2\n");
    CHECK_THROWS_AS(parse_libsvm(in), parse_error);
    std::istringstream in2("+1 3:1 2:2\n");
    CHECK_THROWS_AS(parse_libsvm(in2), parse_error);
  }
  SUBCASE("missing colon is rejected") {
    std::istringstream in("+1 7\n");
    CHECK_THROWS_AS(parse_libsvm(in), parse_error);
  }
  SUBCASE("feature-count override") {
    std::istringstream in("+1 3:0.5\n");
    ParseOptions options;
    options.d_override = 10;
    CHECK(parse_libsvm(in, options).d() == 10);

    std::istringstream in2("+1 3:0.5\n");
    options.d_override = 2;
    CHECK_THROWS_AS(parse_libsvm(in2, options), parse_error);
  }
}

TEST_CASE("serialize-parse round trip preserves structure") {
  RandomSource rng(2718);
  const LabeledDataset original = random_sparse_dataset(rng, 50, 20, 0.3);
  std::stringstream buffer;
  write_libsvm(buffer, original);
  ParseOptions options;
  options.d_override = 20;  // trailing all-zero columns are not observable
  const LabeledDataset parsed = parse_libsvm(buffer, options);
  CHECK(parsed.labels() == original.labels());
  CHECK(parsed.features().row_offsets() == original.features().row_offsets());
  CHECK(parsed.features().col_indices() == original.features().col_indices());
  REQUIRE(parsed.features().nnz() == original.features().nnz());
  for (std::size_t k = 0; k < parsed.features().nnz(); ++k) {
    CHECK(std::abs(parsed.features().values()[k] -
                   original.features().values()[k]) <= 1e-15);
  }
}

TEST_CASE("parser fuzzing never yields an invalid dataset") {
  RandomSource rng(999);
  const char* tokens[] = {"+1",  "-1",   "0",    "1",    "2:0.5", "0:1",
                          "3:",  ":2",   "7:1e3", "abc",  "4:0",   "2:nan"};
  for (int rep = 0; rep < 300; ++rep) {
    std::string text;
    const std::size_t lines = 1 + rng.next_below(4);
    for (std::size_t l = 0; l < lines; ++l) {
      const std::size_t count = rng.next_below(5);
      for (std::size_t t = 0; t < count; ++t) {
        text += tokens[rng.next_below(std::size(tokens))];
        text += ' ';
      }
      text += '\n';
    }
    std::istringstream in(text);
    try {
      const LabeledDataset data = parse_libsvm(in);
      // Reconstruction revalidates every SparseMatrix invariant.
      CHECK_NOTHROW(SparseMatrix(data.n(), data.d(),
                                 data.features().row_offsets(),
                                 data.features().col_indices(),
                                 data.features().values()));
      for (double l : data.labels()) CHECK((l == 1.0 || l == -1.0));
    } catch (const parse_error&) {
      // rejected input is fine
    }
  }
}

TEST_CASE("summaries") {
  SUBCASE("dense matrix has sparsity one") {
    const LabeledDataset data =
        make_dataset({{1.0, 2.0}, {3.0, 4.0}}, {1.0, -1.0});
    const DatasetSummary s = summarize(data, LossKind::logistic);
    CHECK(s.n == 2);
    CHECK(s.d == 2);
    CHECK(s.sparsity == 1.0);
  }
  SUBCASE("summary is stable under round trip") {
    RandomSource rng(31415);
    const LabeledDataset data = random_sparse_dataset(rng, 12, 7, 0.4);
    std::stringstream buffer;
    write_libsvm(buffer, data);
    ParseOptions options;
    options.d_override = 7;
    const DatasetSummary a = summarize(data, LossKind::logistic, true);
    const DatasetSummary b =
        summarize(parse_libsvm(buffer, options), LossKind::logistic, true);
    CHECK(a.n == b.n);
    CHECK(a.d == b.d);
    CHECK(a.sparsity == b.sparsity);
    CHECK(a.lipschitz == doctest::Approx(b.lipschitz).epsilon(1e-12));
    CHECK(a.lipschitz == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("synthetic least squares") {
  SUBCASE("full rank gives a strongly convex instance") {
    const SynthProblem synth = synth_least_squares(30, 6, 6, 0.0, 5);
    const auto hessian = squared_loss_hessian(synth.data.features());
    const auto eig = jacobi_eigenvalues(hessian);
    CHECK(*std::min_element(eig.begin(), eig.end()) > 1e-8);
  }
  SUBCASE("noiseless full-rank recovery") {
    const SynthProblem synth = synth_least_squares(40, 8, 8, 0.0, 6);
    const CompositeObjective obj(synth.data, LossKind::squared);
    const ConstraintSet set =
        ConstraintSet::box(Vector(8, -1e10), Vector(8, 1e10));
    const ReferenceSolution ref = run_reference(obj, set, 1e-10);
    for (std::size_t j = 0; j < 8; ++j) {
      CHECK(std::abs(ref.x_star[j] - synth.meta.x_true[j]) <= 1e-6);
    }
  }
  SUBCASE("rank deficiency leaves the objective null-space invariant") {
    const SynthProblem synth = synth_least_squares(20, 10, 4, 0.01, 7);
    const CompositeObjective obj(synth.data, LossKind::squared);
    const auto hessian = squared_loss_hessian(synth.data.features());
    const auto eig = jacobi_eigenvalues(hessian);
    CHECK(*std::min_element(eig.begin(), eig.end()) <= 1e-10);

    // Any vector annihilated by every row shifts an optimum to an equal
    // optimum; build one by projecting a random vector onto the row-space
    // complement with Gram-Schmidt against the rows.
    RandomSource rng(12);
    Vector candidate = random_point(rng, 10, 1.0);
    for (int sweep = 0; sweep < 8; ++sweep) {
      for (std::size_t i = 0; i < synth.data.n(); ++i) {
        const Vector row = synth.data.features().row_dense(i);
        const double coef =
            dot(row, candidate) / squared_norm(row);
        axpy(-coef, row, candidate);
      }
    }
    const Vector x = random_point(rng, 10, 1.0);
    Vector shifted = x;
    axpy(1.0, candidate, shifted);
    CHECK(std::abs(obj.value(x) - obj.value(shifted)) <=
          1e-12 + 1e-9 * std::abs(obj.value(x)));
  }
  SUBCASE("rank out of range") {
    CHECK_THROWS_AS(synth_least_squares(5, 3, 4, 0.0, 1), argument_error);
    CHECK_THROWS_AS(synth_least_squares(5, 3, 0, 0.0, 1), argument_error);
  }
}

TEST_CASE("synthetic logistic") {
  SUBCASE("same seed reproduces the dataset") {
    const LabeledDataset a = synth_logistic(25, 6, true, 77);
    const LabeledDataset b = synth_logistic(25, 6, true, 77);
    CHECK(a == b);
  }
  SUBCASE("rows are unit norm") {
    const LabeledDataset data = synth_logistic(10, 4, false, 3);
    for (std::size_t i = 0; i < data.n(); ++i) {
      CHECK(std::sqrt(data.features().row_squared_norm(i)) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("separable data attains a finite constrained optimum") {
    const CompositeObjective obj(synth_logistic(60, 5, true, 21),
                                 LossKind::logistic);
    const ConstraintSet set = ConstraintSet::linf_ball(0.1, 5);
    const ReferenceSolution ref = run_reference(obj, set, 1e-8);
    CHECK(std::isfinite(ref.f_star));
    CHECK(ref.f_star > 0.0);
  }
  SUBCASE("one-dimensional all-positive case pins the boundary") {
    // d=1, all labels +1, all features +1: the loss is decreasing in x, so
    // the constrained optimum sits at the right edge of the box.
    const LabeledDataset data =
        make_dataset({{1.0}, {1.0}, {1.0}}, {1.0, 1.0, 1.0});
    const CompositeObjective obj(data, LossKind::logistic);
    const double zeta = 0.1;
    const ConstraintSet set = ConstraintSet::linf_ball(zeta, 1);
    const ReferenceSolution ref = run_reference(obj, set, 1e-10);
    CHECK(ref.x_star[0] == doctest::Approx(zeta).epsilon(1e-9));
  }
}

TEST_CASE("key=value metadata files") {
  std::stringstream buffer;
  write_key_value(buffer, {{"n", "200"}, {"rank", "20"}, {"noise", "0.01"}});
  buffer << "# trailing comment\n";
  const auto kv = read_key_value(buffer);
  CHECK(kv.at("n") == "200");
  CHECK(kv.at("rank") == "20");
  CHECK(kv.at("noise") == "0.01");
  CHECK(kv.size() == 3);
}
