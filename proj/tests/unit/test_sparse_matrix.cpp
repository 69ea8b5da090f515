#include "doctest.h"
#include "ps2gd/errors.hpp"
#include "ps2gd/sparse_matrix.hpp"

using namespace ps2gd;

TEST_CASE("csr invariants are enforced at construction") {
  CHECK_NOTHROW(SparseMatrix(2, 3, {0, 2, 3}, {0, 2, 1}, {1.0, -2.0, 0.5}));

  SUBCASE("offsets must start at zero") {
    CHECK_THROWS_AS(SparseMatrix(2, 3, {1, 2, 3}, {0, 1, 2}, {1, 1, 1}),
                    argument_error);
  }
  SUBCASE("offsets must be nondecreasing") {
    CHECK_THROWS_AS(SparseMatrix(2, 3, {0, 2, 1}, {0, 1, 2}, {1, 1, 1}),
                    argument_error);
  }
  SUBCASE("last offset must equal nnz") {
    CHECK_THROWS_AS(SparseMatrix(2, 3, {0, 2, 4}, {0, 1, 2}, {1, 1, 1}),
                    argument_error);
  }
  SUBCASE("column indices strictly increasing within a row") {
    CHECK_THROWS_AS(SparseMatrix(1, 3, {0, 2}, {1, 1}, {1, 2}), argument_error);
    CHECK_THROWS_AS(SparseMatrix(1, 3, {0, 2}, {2, 1}, {1, 2}), argument_error);
  }
  SUBCASE("column indices bounded by n_cols") {
    CHECK_THROWS_AS(SparseMatrix(1, 3, {0, 1}, {3}, {1}), argument_error);
  }
  SUBCASE("no explicit zeros") {
    CHECK_THROWS_AS(SparseMatrix(1, 3, {0, 1}, {0}, {0.0}), argument_error);
    CHECK_THROWS_AS(SparseMatrix(1, 3, {0, 1}, {0}, {-0.0}), argument_error);
  }
}

TEST_CASE("row access and arithmetic") {
  const SparseMatrix m(2, 4, {0, 2, 3}, {1, 3, 0}, {2.0, -1.0, 5.0});
  CHECK(m.nnz() == 3);
  CHECK(m.row_nnz(0) == 2);

  const Vector x = {1.0, 2.0, 3.0, 4.0};
  CHECK(m.row_dot(0, x) == doctest::Approx(2.0 * 2.0 - 1.0 * 4.0));
  CHECK(m.row_dot(1, x) == doctest::Approx(5.0));
  CHECK(m.row_squared_norm(0) == doctest::Approx(5.0));

  Vector y(4, 1.0);
  m.row_axpy(0, 2.0, y);
  CHECK(y == Vector{1.0, 5.0, 1.0, -1.0});

  CHECK(m.row_dense(1) == Vector{5.0, 0.0, 0.0, 0.0});
}

TEST_CASE("from_dense drops exact zeros") {
  const SparseMatrix m =
      SparseMatrix::from_dense({{0.0, 1.5, 0.0}, {0.0, 0.0, 0.0}}, 3);
  CHECK(m.nnz() == 1);
  CHECK(m.row_nnz(1) == 0);
  CHECK(m.row_cols(0)[0] == 1);
}
