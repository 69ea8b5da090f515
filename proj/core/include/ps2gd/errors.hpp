#ifndef PS2GD_ERRORS_HPP
#define PS2GD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ps2gd {

/// Bad caller input: dimension mismatches, out-of-range indices, invalid
/// configuration values.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced a non-finite intermediate or result.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The requested target rate is unreachable for the given parameters.
class planning_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No usable samples were found by an empirical estimator.
class estimation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative routine hit its iteration cap before reaching tolerance.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

/// An exhaustive enumeration was asked to exceed its combinatorial budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ps2gd

#endif  // PS2GD_ERRORS_HPP
