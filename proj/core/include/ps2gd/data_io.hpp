#ifndef PS2GD_DATA_IO_HPP
#define PS2GD_DATA_IO_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "ps2gd/dataset.hpp"
#include "ps2gd/objective.hpp"

namespace ps2gd {

struct DatasetSummary {
  std::size_t n = 0;
  std::size_t d = 0;
  double sparsity = 0.0;  // fraction of stored nonzeros
  double lipschitz = 0.0;
};

struct ParseOptions {
  /// Overrides the feature count (must be >= the maximum index observed);
  /// 0 means "use the maximum observed index".
  std::size_t d_override = 0;
  /// Destination for non-fatal warnings ({0,1} label remapping); may be null.
  std::ostream* warnings = nullptr;
};

/// Parses LIBSVM text: `<label> <idx>:<val> ...` per line, 1-based strictly
/// increasing indices. Labels {-1,+1} are kept; an all-{0,1} labeling is
/// remapped to {-1,+1} with a warning; anything else is rejected. Indices are
/// stored 0-based. Malformed tokens, index 0, and non-increasing indices
/// raise parse_error with the line number.
LabeledDataset parse_libsvm(std::istream& in, const ParseOptions& options = {});

void write_libsvm(std::ostream& out, const LabeledDataset& data);

/// Reads a dataset from disk; names ending in .gz are decompressed first.
LabeledDataset load_dataset(const std::string& path,
                            const ParseOptions& options = {});

/// n, d, nnz fraction, and the loss-family Lipschitz constant (computed after
/// row normalization when scale_rows is set).
DatasetSummary summarize(const LabeledDataset& data, LossKind loss,
                         bool scale_rows = false);

struct SynthMetadata {
  Vector x_true;
  std::size_t rank = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

struct SynthProblem {
  LabeledDataset data;
  SynthMetadata meta;
};

/// Low-rank least squares: A = U V^T with Gaussian factors, targets
/// b = A x_true + noise * gaussian. rank < d leaves F convex but not strongly
/// convex (a nontrivial null space), the regime the weak-strong-convexity
/// analysis targets.
SynthProblem synth_least_squares(std::size_t n, std::size_t d, std::size_t rank,
                                 double noise, std::uint64_t seed,
                                 bool unit_rows = false);

/// Gaussian features, labels from a random hyperplane (10% flips when
/// separable is false), rows scaled to unit norm.
LabeledDataset synth_logistic(std::size_t n, std::size_t d, bool separable,
                              std::uint64_t seed);

/// Flat `key=value` text, one pair per line, '#' comments.
void write_key_value(std::ostream& out,
                     const std::vector<std::pair<std::string, std::string>>& kv);
std::map<std::string, std::string> read_key_value(std::istream& in);

}  // namespace ps2gd

#endif  // PS2GD_DATA_IO_HPP
