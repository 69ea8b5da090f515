#include "ps2gd/trace.hpp"

#include <charconv>
#include <cmath>

#include "ps2gd/errors.hpp"

namespace ps2gd {

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::ps2gd:
      return "ps2gd";
    case SolverKind::sgd:
      return "sgd";
    case SolverKind::sgd_plus:
      return "sgd+";
    case SolverKind::fista:
      return "fista";
  }
  return "unknown";
}

SolverKind solver_from_string(const std::string& name) {
  if (name == "ps2gd") return SolverKind::ps2gd;
  if (name == "sgd") return SolverKind::sgd;
  if (name == "sgd+" || name == "sgd_plus") return SolverKind::sgd_plus;
  if (name == "fista") return SolverKind::fista;
  throw argument_error(
      "unknown solver kind: " + name +
      " (valid kinds: ps2gd, sgd, sgd+, fista)");
}

void Trace::add_record(TraceRecord record) {
  if (!std::isfinite(record.objective)) {
    throw numeric_error("Trace: non-finite objective at epoch " +
                        std::to_string(record.epoch));
  }
  if (!records_.empty() &&
      record.effective_passes <= records_.back().effective_passes) {
    throw argument_error("Trace: effective passes must be strictly increasing");
  }
  records_.push_back(record);
}

void Trace::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : metadata_) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  metadata_.emplace_back(key, value);
}

std::string Trace::meta(const std::string& key) const {
  for (const auto& kv : metadata_) {
    if (kv.first == key) return kv.second;
  }
  return {};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_trace_csv(std::ostream& out, const Trace& trace,
                     const TraceCsvOptions& options) {
  out << "pass,seconds,objective";
  if (options.f_star) out << ",gap";
  if (options.ideal_parallel) out << ",passes_parallel";
  out << "\n";
  for (const TraceRecord& r : trace.records()) {
    out << format_double(r.effective_passes) << ','
        << format_double(options.include_timing ? r.wall_seconds : 0.0) << ','
        << format_double(r.objective);
    if (options.f_star) out << ',' << format_double(r.objective - *options.f_star);
    if (options.ideal_parallel) out << ',' << format_double(r.parallel_passes);
    out << "\n";
  }
}

}  // namespace ps2gd
