#include <sstream>

#include "doctest.h"
#include "ps2gd/errors.hpp"
#include "ps2gd/trace.hpp"

using namespace ps2gd;

TEST_CASE("trace invariants") {
  Trace trace;
  trace.add_record({0, 0.0, 0.0, 0.0, 1.5});
  SUBCASE("passes must strictly increase") {
    CHECK_THROWS_AS(trace.add_record({1, 0.0, 0.0, 0.1, 1.0}), argument_error);
  }
  SUBCASE("objective must be finite") {
    CHECK_THROWS_AS(trace.add_record({1, 1.0, 1.0, 0.1,
                                      std::numeric_limits<double>::infinity()}),
                    numeric_error);
  }
  SUBCASE("metadata overwrites by key") {
    trace.set_meta("k", "1");
    trace.set_meta("k", "2");
    CHECK(trace.meta("k") == "2");
  }
}

TEST_CASE("csv output") {
  Trace trace;
  trace.add_record({0, 0.0, 0.0, 0.25, 0.5});
  trace.add_record({1, 3.0, 2.0, 0.5, 0.125});

  SUBCASE("base columns") {
    std::ostringstream out;
    write_trace_csv(out, trace);
    CHECK(out.str() ==
          "pass,seconds,objective\n0,0.25,0.5\n3,0.5,0.125\n");
  }
  SUBCASE("gap column against a reference") {
    std::ostringstream out;
    TraceCsvOptions options;
    options.f_star = 0.125;
    write_trace_csv(out, trace, options);
    CHECK(out.str() ==
          "pass,seconds,objective,gap\n0,0.25,0.5,0.375\n3,0.5,0.125,0\n");
  }
  SUBCASE("parallel passes never exceed serial passes") {
    std::ostringstream out;
    TraceCsvOptions options;
    options.ideal_parallel = true;
    options.include_timing = false;
    write_trace_csv(out, trace, options);
    CHECK(out.str() ==
          "pass,seconds,objective,passes_parallel\n0,0,0.5,0\n3,0,0.125,2\n");
  }
}

TEST_CASE("number formatting is locale-independent and round-trips") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-10) == "1e-10");
  CHECK(format_double(-3.5) == "-3.5");
  CHECK(format_double(0.0) == "0");
  const double tricky = 0.1234567890123456789;
  CHECK(std::stod(format_double(tricky)) == tricky);
}

TEST_CASE("solver names round-trip") {
  for (SolverKind kind : {SolverKind::ps2gd, SolverKind::sgd,
                          SolverKind::sgd_plus, SolverKind::fista}) {
    CHECK(solver_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(solver_from_string("adam"), argument_error);
}
