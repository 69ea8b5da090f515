#include "ps2gd/data_io.hpp"

#include <zlib.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "ps2gd/errors.hpp"
#include "ps2gd/random_source.hpp"
#include "ps2gd/trace.hpp"

namespace ps2gd {

namespace {

double parse_number(std::string_view token, std::size_t line,
                    const char* what) {
  double out = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && token.front() == '+') ++begin;  // from_chars rejects '+'
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw parse_error(std::string("malformed ") + what + " '" +
                          std::string(token) + "'",
                      line);
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t out = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), out);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw parse_error("malformed feature index '" + std::string(token) + "'",
                      line);
  }
  return out;
}

}  // namespace

LabeledDataset parse_libsvm(std::istream& in, const ParseOptions& options) {
  std::vector<std::size_t> offsets = {0};
  std::vector<std::size_t> cols;
  std::vector<double> vals;
  std::vector<double> labels;

  bool saw_zero_label = false;
  bool saw_negative_label = false;
  std::size_t max_index = 0;  // 1-based
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;  // blank line: no record

    const double label = parse_number(token, line_no, "label");
    if (label != 1.0 && label != -1.0 && label != 0.0) {
      throw parse_error("label must be one of -1, 0, +1, got '" + token + "'",
                        line_no);
    }
    saw_zero_label |= label == 0.0;
    saw_negative_label |= label == -1.0;
    labels.push_back(label);

    std::size_t prev_index = 0;
    while (tokens >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) {
        throw parse_error("expected <index>:<value>, got '" + token + "'",
                          line_no);
      }
      const std::size_t index = parse_index(token.substr(0, colon), line_no);
      if (index == 0) {
        throw parse_error("feature indices are 1-based; got index 0", line_no);
      }
      if (index <= prev_index) {
        throw parse_error("feature indices must be strictly increasing",
                          line_no);
      }
      const double value =
          parse_number(token.substr(colon + 1), line_no, "feature value");
      prev_index = index;
      max_index = std::max(max_index, index);
      if (value == 0.0) continue;  // never store explicit zeros
      cols.push_back(index - 1);
      vals.push_back(value);
    }
    offsets.push_back(vals.size());
  }

  if (labels.empty()) {
    throw parse_error("no records found", line_no);
  }
  if (saw_zero_label) {
    if (saw_negative_label) {
      throw parse_error("labels mix 0 with -1; cannot infer the convention",
                        line_no);
    }
    for (double& l : labels) l = l == 0.0 ? -1.0 : 1.0;
    if (options.warnings) {
      *options.warnings << "warning: {0,1} labels remapped to {-1,+1}\n";
    }
  }

  std::size_t d = max_index;
  if (options.d_override > 0) {
    if (options.d_override < max_index) {
      throw parse_error("feature-count override " +
                            std::to_string(options.d_override) +
                            " is below the maximum observed index " +
                            std::to_string(max_index),
                        line_no);
    }
    d = options.d_override;
  }
  if (d == 0) {
    throw parse_error("no features found", line_no);
  }

  SparseMatrix features(labels.size(), d, std::move(offsets), std::move(cols),
                        std::move(vals));
  return LabeledDataset(std::move(features), std::move(labels));
}

void write_libsvm(std::ostream& out, const LabeledDataset& data) {
  for (std::size_t i = 0; i < data.n(); ++i) {
    out << format_double(data.labels()[i]);
    const auto cols = data.features().row_cols(i);
    const auto vals = data.features().row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out << ' ' << cols[k] + 1 << ':' << format_double(vals[k]);
    }
    out << '\n';
  }
}

namespace {

std::string read_gzip_file(const std::string& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    throw argument_error("cannot open gzip file: " + path);
  }
  std::string content;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file, buffer, sizeof(buffer))) > 0) {
    content.append(buffer, static_cast<std::size_t>(got));
  }
  const bool failed = got < 0;
  gzclose(file);
  if (failed) {
    throw argument_error("gzip read error in: " + path);
  }
  return content;
}

}  // namespace

LabeledDataset load_dataset(const std::string& path,
                            const ParseOptions& options) {
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    std::istringstream in(read_gzip_file(path));
    return parse_libsvm(in, options);
  }
  std::ifstream in(path);
  if (!in) {
    throw argument_error("cannot open dataset file: " + path);
  }
  return parse_libsvm(in, options);
}

DatasetSummary summarize(const LabeledDataset& data, LossKind loss,
                         bool scale_rows) {
  DatasetSummary s;
  s.n = data.n();
  s.d = data.d();
  s.sparsity = static_cast<double>(data.features().nnz()) /
               (static_cast<double>(s.n) * static_cast<double>(s.d));
  s.lipschitz = scale_rows
                    ? lipschitz_constant(scale_rows_to_unit_norm(data), loss)
                    : lipschitz_constant(data, loss);
  return s;
}

SynthProblem synth_least_squares(std::size_t n, std::size_t d, std::size_t rank,
                                 double noise, std::uint64_t seed,
                                 bool unit_rows) {
  if (rank == 0 || rank > std::min(n, d)) {
    throw argument_error("synth_least_squares: need 1 <= rank <= min(n,d)");
  }
  RandomSource rng(seed);

  std::vector<Vector> left(n, Vector(rank));
  std::vector<Vector> right(d, Vector(rank));
  for (auto& row : left) {
    for (double& v : row) v = rng.next_gaussian();
  }
  for (auto& row : right) {
    for (double& v : row) v = rng.next_gaussian();
  }

  std::vector<Vector> rows(n, Vector(d, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < rank; ++k) acc += left[i][k] * right[j][k];
      rows[i][j] = acc;
    }
  }

  SynthMetadata meta;
  meta.rank = rank;
  meta.noise = noise;
  meta.seed = seed;
  meta.x_true.resize(d);
  for (double& v : meta.x_true) v = rng.next_gaussian();

  Vector targets(n);
  for (std::size_t i = 0; i < n; ++i) {
    targets[i] = dot(rows[i], meta.x_true);
    if (noise != 0.0) targets[i] += noise * rng.next_gaussian();
  }

  LabeledDataset data(SparseMatrix::from_dense(rows, d), std::move(targets));
  if (unit_rows) data = scale_rows_to_unit_norm(data);
  return SynthProblem{std::move(data), std::move(meta)};
}

LabeledDataset synth_logistic(std::size_t n, std::size_t d, bool separable,
                              std::uint64_t seed) {
  if (n == 0 || d == 0) {
    throw argument_error("synth_logistic: n and d must be positive");
  }
  RandomSource rng(seed);
  Vector hyperplane(d);
  for (double& v : hyperplane) v = rng.next_gaussian();

  std::vector<Vector> rows(n, Vector(d));
  Vector labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (double& v : rows[i]) v = rng.next_gaussian();
    labels[i] = dot(rows[i], hyperplane) >= 0.0 ? 1.0 : -1.0;
    if (!separable && rng.next_double() < 0.1) labels[i] = -labels[i];
  }
  return scale_rows_to_unit_norm(
      LabeledDataset(SparseMatrix::from_dense(rows, d), std::move(labels)));
}

void write_key_value(
    std::ostream& out,
    const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [key, value] : kv) {
    out << key << '=' << value << '\n';
  }
}

std::map<std::string, std::string> read_key_value(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (!key.empty()) out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace ps2gd
