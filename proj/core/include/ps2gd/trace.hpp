#ifndef PS2GD_TRACE_HPP
#define PS2GD_TRACE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ps2gd/vector_ops.hpp"

namespace ps2gd {

enum class SolverKind { ps2gd, sgd, sgd_plus, fista };

std::string to_string(SolverKind kind);
SolverKind solver_from_string(const std::string& name);

struct SolverConfig {
  SolverKind kind = SolverKind::ps2gd;
  double stepsize = 0.0;       // h (h0 for sgd_plus)
  std::size_t inner_max = 0;   // M, ps2gd only
  std::size_t batch = 1;       // b, ps2gd only
  std::size_t epochs = 0;      // outer epochs / effective passes / iterations
  std::uint64_t seed = 0;
  Vector initial_point;        // empty = zero vector (projected)
  unsigned threads = 1;
  /// Diagnostic hook, called with (epoch, iterate) after each record; does not
  /// perturb the random stream.
  std::function<void(std::size_t, const Vector&)> epoch_callback;
};

struct TraceRecord {
  std::size_t epoch = 0;
  double effective_passes = 0.0;  // n component-gradient evaluations = 1 pass
  double parallel_passes = 0.0;   // inner work divided by b (ideal speedup)
  double wall_seconds = 0.0;
  double objective = 0.0;
};

/// Per-epoch solver progress plus a deterministic metadata echo.
class Trace {
 public:
  void add_record(TraceRecord record);
  void set_meta(const std::string& key, const std::string& value);

  const std::vector<TraceRecord>& records() const { return records_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const {
    return metadata_;
  }
  std::string meta(const std::string& key) const;

 private:
  std::vector<TraceRecord> records_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

struct TraceCsvOptions {
  /// Reference optimum; enables the gap column.
  std::optional<double> f_star;
  /// Adds the ideal-parallel pass column.
  bool ideal_parallel = false;
  /// When false the seconds column is written as 0 so reruns are
  /// byte-identical.
  bool include_timing = true;
};

/// RFC-4180-style CSV: header row, comma separators, '.' decimal point
/// regardless of locale, shortest round-trip number formatting.
void write_trace_csv(std::ostream& out, const Trace& trace,
                     const TraceCsvOptions& options = {});

/// Locale-independent shortest representation of a double.
std::string format_double(double v);

}  // namespace ps2gd

#endif  // PS2GD_TRACE_HPP
