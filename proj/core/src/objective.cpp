#include "ps2gd/objective.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <utility>

#include "ps2gd/errors.hpp"

namespace ps2gd {

namespace {

// log(1 + exp(u)) without overflow for large |u|.
double log1p_exp(double u) {
  return std::max(u, 0.0) + std::log1p(std::exp(-std::abs(u)));
}

// 1 / (1 + exp(s)) without overflow.
double inverse_logit(double s) {
  if (s >= 0.0) {
    const double e = std::exp(-s);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(s));
}

struct ChunkGradient {
  Vector sum;
  Vector comp;
};

}  // namespace

std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::logistic:
      return "logistic";
    case LossKind::squared:
      return "squared";
    case LossKind::svm_dual_quadratic:
      return "svm_dual_quadratic";
  }
  return "unknown";
}

LossKind loss_from_string(const std::string& name) {
  if (name == "logistic") return LossKind::logistic;
  if (name == "squared") return LossKind::squared;
  if (name == "svm_dual_quadratic" || name == "svm-dual") {
    return LossKind::svm_dual_quadratic;
  }
  throw argument_error("unknown loss kind: " + name);
}

CompositeObjective::CompositeObjective(LabeledDataset data, LossKind loss,
                                       Vector linear_term,
                                       double lipschitz_override)
    : components_(data.features()),
      labels_(data.labels()),
      linear_term_(std::move(linear_term)),
      loss_(loss) {
  if (loss_ == LossKind::svm_dual_quadratic) {
    throw argument_error(
        "CompositeObjective: use build_svm_dual for the dual construction");
  }
  if (loss_ == LossKind::logistic) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] != 1.0 && labels_[i] != -1.0) {
        throw argument_error("CompositeObjective: logistic loss needs labels "
                             "in {-1,+1}; offending example " +
                             std::to_string(i));
      }
    }
  }
  finish_init(lipschitz_override);
}

CompositeObjective::CompositeObjective(SparseMatrix component_rows,
                                       Vector labels, LossKind loss,
                                       Vector linear_term,
                                       double lipschitz_override)
    : components_(std::move(component_rows)),
      labels_(std::move(labels)),
      linear_term_(std::move(linear_term)),
      loss_(loss) {
  if (loss_ != LossKind::svm_dual_quadratic &&
      labels_.size() != components_.n_rows()) {
    throw argument_error("CompositeObjective: one label per component required");
  }
  finish_init(lipschitz_override);
}

void CompositeObjective::finish_init(double lipschitz_override) {
  if (components_.n_rows() == 0) {
    throw argument_error("CompositeObjective: empty component set");
  }
  if (linear_term_.empty()) {
    linear_term_.assign(dimension(), 0.0);
  } else if (linear_term_.size() != dimension()) {
    throw argument_error("CompositeObjective: linear term has wrong dimension");
  }
  const double analytic = lipschitz_constant(components_, loss_);
  if (lipschitz_override == 0.0) {
    lipschitz_ = analytic;
  } else if (lipschitz_override >= analytic * (1.0 - 1e-12)) {
    lipschitz_ = lipschitz_override;
  } else {
    throw argument_error(
        "CompositeObjective: Lipschitz override below the per-component bound");
  }
}

void CompositeObjective::check_point(std::span<const double> x) const {
  if (x.size() != dimension()) {
    throw argument_error("CompositeObjective: point has dimension " +
                         std::to_string(x.size()) + ", expected " +
                         std::to_string(dimension()));
  }
}

double CompositeObjective::loss_value(std::size_t i, double margin) const {
  switch (loss_) {
    case LossKind::logistic:
      return log1p_exp(-labels_[i] * margin);
    case LossKind::squared: {
      const double r = margin - labels_[i];
      return 0.5 * r * r;
    }
    case LossKind::svm_dual_quadratic:
      return 0.5 * static_cast<double>(n_components()) * margin * margin;
  }
  return 0.0;
}

double CompositeObjective::loss_derivative(std::size_t i, double margin) const {
  switch (loss_) {
    case LossKind::logistic:
      return -labels_[i] * inverse_logit(labels_[i] * margin);
    case LossKind::squared:
      return margin - labels_[i];
    case LossKind::svm_dual_quadratic:
      return static_cast<double>(n_components()) * margin;
  }
  return 0.0;
}

double CompositeObjective::value(std::span<const double> x,
                                 unsigned threads) const {
  check_point(x);
  const std::size_t m = n_components();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));

  auto chunk_value = [&](std::size_t begin, std::size_t end) {
    KahanSum s;
    for (std::size_t i = begin; i < end; ++i) {
      s.add(loss_value(i, components_.row_dot(i, x)));
    }
    return s;
  };

  KahanSum total;
  if (workers == 1) {
    total = chunk_value(0, m);
  } else {
    std::vector<std::future<KahanSum>> parts;
    const std::size_t chunk = (m + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(m, begin + chunk);
      if (begin >= end) break;
      parts.push_back(
          std::async(std::launch::async, chunk_value, begin, end));
    }
    for (auto& part : parts) {
      const KahanSum s = part.get();
      total.add(s.sum);
      total.add(s.comp);
    }
  }

  const double result =
      total.value() / static_cast<double>(m) + dot(linear_term_, x);
  if (!std::isfinite(result)) {
    throw numeric_error("objective value is not finite");
  }
  return result;
}

Vector CompositeObjective::component_gradient(std::size_t i,
                                              std::span<const double> x) const {
  if (i >= n_components()) {
    throw argument_error("component_gradient: index " + std::to_string(i) +
                         " out of range");
  }
  check_point(x);
  Vector grad = linear_term_;
  const double coef = loss_derivative(i, components_.row_dot(i, x));
  components_.row_axpy(i, coef, grad);
  return grad;
}

Vector CompositeObjective::full_gradient(std::span<const double> x,
                                         unsigned threads) const {
  check_point(x);
  const std::size_t m = n_components();
  const std::size_t d = dimension();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));

  // Neumaier-compensated scatter per chunk; chunks combined in index order so
  // the reduction is deterministic for a fixed thread count.
  auto chunk_gradient = [&](std::size_t begin, std::size_t end) {
    ChunkGradient g{Vector(d, 0.0), Vector(d, 0.0)};
    for (std::size_t i = begin; i < end; ++i) {
      const double coef = loss_derivative(i, components_.row_dot(i, x));
      const auto cols = components_.row_cols(i);
      const auto vals = components_.row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::size_t j = cols[k];
        const double v = coef * vals[k];
        const double t = g.sum[j] + v;
        if (std::abs(g.sum[j]) >= std::abs(v)) {
          g.comp[j] += (g.sum[j] - t) + v;
        } else {
          g.comp[j] += (v - t) + g.sum[j];
        }
        g.sum[j] = t;
      }
    }
    return g;
  };

  Vector grad(d, 0.0);
  if (workers == 1) {
    const ChunkGradient g = chunk_gradient(0, m);
    for (std::size_t j = 0; j < d; ++j) grad[j] = g.sum[j] + g.comp[j];
  } else {
    std::vector<std::future<ChunkGradient>> parts;
    const std::size_t chunk = (m + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(m, begin + chunk);
      if (begin >= end) break;
      parts.push_back(
          std::async(std::launch::async, chunk_gradient, begin, end));
    }
    Vector comp(d, 0.0);
    for (auto& part : parts) {
      const ChunkGradient g = part.get();
      for (std::size_t j = 0; j < d; ++j) {
        comp[j] += g.comp[j];
        const double v = g.sum[j];
        const double t = grad[j] + v;
        if (std::abs(grad[j]) >= std::abs(v)) {
          comp[j] += (grad[j] - t) + v;
        } else {
          comp[j] += (v - t) + grad[j];
        }
        grad[j] = t;
      }
    }
    for (std::size_t j = 0; j < d; ++j) grad[j] += comp[j];
  }

  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < d; ++j) {
    grad[j] = grad[j] * inv_m + linear_term_[j];
    if (!std::isfinite(grad[j])) {
      throw numeric_error("full gradient is not finite");
    }
  }
  return grad;
}

double lipschitz_constant(const SparseMatrix& component_rows, LossKind loss) {
  if (component_rows.n_rows() == 0) {
    throw argument_error("lipschitz_constant: empty dataset");
  }
  double max_sq = 0.0;
  for (std::size_t i = 0; i < component_rows.n_rows(); ++i) {
    max_sq = std::max(max_sq, component_rows.row_squared_norm(i));
  }
  switch (loss) {
    case LossKind::logistic:
      return max_sq / 4.0;
    case LossKind::squared:
      return max_sq;
    case LossKind::svm_dual_quadratic:
      return static_cast<double>(component_rows.n_rows()) * max_sq;
  }
  return max_sq;
}

double lipschitz_constant(const LabeledDataset& data, LossKind loss) {
  return lipschitz_constant(data.features(), loss);
}

LabeledDataset scale_rows_to_unit_norm(const LabeledDataset& data) {
  SparseMatrix features = data.features();
  for (std::size_t i = 0; i < features.n_rows(); ++i) {
    const double nrm = std::sqrt(features.row_squared_norm(i));
    if (nrm == 0.0) {
      throw argument_error("scale_rows_to_unit_norm: row " + std::to_string(i) +
                           " is all zero");
    }
    features.scale_row(i, 1.0 / nrm);
  }
  return LabeledDataset(std::move(features), data.labels());
}

SvmDualProblem build_svm_dual(const LabeledDataset& data, double lambda) {
  if (!(lambda > 0.0)) {
    throw argument_error("build_svm_dual: lambda must be positive");
  }
  const std::size_t n = data.n();
  const std::size_t d = data.d();
  for (std::size_t i = 0; i < n; ++i) {
    if (data.labels()[i] != 1.0 && data.labels()[i] != -1.0) {
      throw argument_error("build_svm_dual: labels must be in {-1,+1}; "
                           "offending example " + std::to_string(i));
    }
  }

  // Feature row s of the dual matrix holds b_i * a_{is} across examples i.
  // Built as a label-scaled transpose of the example matrix; feature rows
  // with no nonzeros are dropped.
  const SparseMatrix& a = data.features();
  std::vector<std::size_t> count(d, 0);
  for (std::size_t k = 0; k < a.nnz(); ++k) ++count[a.col_indices()[k]];

  std::vector<std::size_t> kept;
  std::vector<std::size_t> feature_slot(d, 0);
  for (std::size_t s = 0; s < d; ++s) {
    if (count[s] > 0) {
      feature_slot[s] = kept.size();
      kept.push_back(s);
    }
  }
  if (kept.empty()) {
    throw argument_error("build_svm_dual: dataset has no nonzero features");
  }

  std::vector<std::size_t> offsets(kept.size() + 1, 0);
  for (std::size_t t = 0; t < kept.size(); ++t) {
    offsets[t + 1] = offsets[t] + count[kept[t]];
  }
  std::vector<std::size_t> cols(offsets.back());
  std::vector<double> vals(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_cols = a.row_cols(i);
    const auto row_vals = a.row_values(i);
    for (std::size_t k = 0; k < row_cols.size(); ++k) {
      const std::size_t slot = feature_slot[row_cols[k]];
      cols[cursor[slot]] = i;
      vals[cursor[slot]] = data.labels()[i] * row_vals[k];
      ++cursor[slot];
    }
  }

  SparseMatrix rows(kept.size(), n, std::move(offsets), std::move(cols),
                    std::move(vals));
  CompositeObjective objective(std::move(rows), Vector{},
                               LossKind::svm_dual_quadratic, Vector(n, -1.0));
  return SvmDualProblem{std::move(objective),
                        ConstraintSet::svm_dual_box(lambda, n), std::move(kept)};
}

}  // namespace ps2gd
