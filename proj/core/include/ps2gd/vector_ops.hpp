#ifndef PS2GD_VECTOR_OPS_HPP
#define PS2GD_VECTOR_OPS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ps2gd/errors.hpp"

namespace ps2gd {

using Vector = std::vector<double>;

/// Neumaier-compensated scalar accumulator.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

inline void check_same_size(std::span<const double> a,
                            std::span<const double> b, const char* what) {
  if (a.size() != b.size()) {
    throw argument_error(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  check_same_size(a, b, "dot");
  KahanSum s;
  for (std::size_t j = 0; j < a.size(); ++j) s.add(a[j] * b[j]);
  return s.value();
}

inline double squared_norm(std::span<const double> a) {
  KahanSum s;
  for (double v : a) s.add(v * v);
  return s.value();
}

inline double norm(std::span<const double> a) {
  return std::sqrt(squared_norm(a));
}

inline double norm_l1(std::span<const double> a) {
  KahanSum s;
  for (double v : a) s.add(std::abs(v));
  return s.value();
}

inline double norm_linf(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

/// y += a * x
inline void axpy(double a, std::span<const double> x, Vector& y) {
  check_same_size(x, y, "axpy");
  for (std::size_t j = 0; j < x.size(); ++j) y[j] += a * x[j];
}

inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  check_same_size(a, b, "squared_distance");
  KahanSum s;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double dv = a[j] - b[j];
    s.add(dv * dv);
  }
  return s.value();
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

inline bool all_finite(std::span<const double> a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace ps2gd

#endif  // PS2GD_VECTOR_OPS_HPP
