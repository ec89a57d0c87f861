#include "lexfit/retrofit.h"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lexfit/error.h"

namespace lexfit {

namespace {

void check_scheme(const WeightScheme& scheme) {
  if (!(scheme.alpha > 0.0)) throw Error("weight scheme: alpha must be positive");
  if (scheme.beta_rule == WeightScheme::BetaRule::kConstant && !(scheme.beta_constant > 0.0))
    throw Error("weight scheme: constant beta must be positive");
}

void check_aligned(const EmbeddingMatrix& m, const RestrictedGraph& graph) {
  if (m.size() != graph.size())
    throw Error("graph has " + std::to_string(graph.size()) + " vertices but matrix has " +
                std::to_string(m.size()) + " rows");
}

void check_same_shape(const EmbeddingMatrix& a, const EmbeddingMatrix& b) {
  if (a.size() != b.size() || a.dim() != b.dim())
    throw Error("matrix shape mismatch: " + std::to_string(a.size()) + "x" +
                std::to_string(a.dim()) + " vs " + std::to_string(b.size()) + "x" +
                std::to_string(b.dim()));
}

void check_finite(const EmbeddingMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (double v : m.row(i))
      if (!std::isfinite(v))
        throw Error("non-finite value in row for token '" + m.vocab().token(i) + "'");
}

}  // namespace

double retrofit_sweep(EmbeddingMatrix& q, const EmbeddingMatrix& q_hat,
                      const RestrictedGraph& graph, const WeightScheme& scheme) {
  const std::size_t d = q.dim();
  std::vector<double> neighbor_sum(d);
  double max_change_sq = 0.0;

  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& neighbors = graph.adjacency[i];
    if (neighbors.empty()) continue;

    // beta_ij depends only on i under both weight rules, so the neighbor
    // contribution factors as beta * sum_j q_j.
    const double beta = scheme.beta(neighbors.size());
    const double denom = scheme.alpha + beta * static_cast<double>(neighbors.size());

    for (std::size_t k = 0; k < d; ++k) neighbor_sum[k] = 0.0;
    for (std::uint32_t j : neighbors) {
      const double* qj = q.row(j).data();
      for (std::size_t k = 0; k < d; ++k) neighbor_sum[k] += qj[k];
    }

    double* qi = q.row(i).data();
    const double* anchor = q_hat.row(i).data();
    double change_sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double updated = (beta * neighbor_sum[k] + scheme.alpha * anchor[k]) / denom;
      const double delta = updated - qi[k];
      change_sq += delta * delta;
      qi[k] = updated;
    }
    if (change_sq > max_change_sq) max_change_sq = change_sq;
  }
  return std::sqrt(max_change_sq);
}

RetrofitResult retrofit(const EmbeddingMatrix& q_hat, const RestrictedGraph& graph,
                        const RetrofitConfig& config) {
  check_aligned(q_hat, graph);
  check_scheme(config.scheme);
  check_finite(q_hat);
  if (config.iterations < 1) throw Error("retrofit: iterations must be >= 1");
  if (config.tolerance && !(*config.tolerance >= 0.0))
    throw Error("retrofit: tolerance must be non-negative");

  RetrofitResult result{q_hat, {}};
  result.sweep_changes.reserve(config.iterations);
  for (std::size_t it = 0; it < config.iterations; ++it) {
    const double change = retrofit_sweep(result.vectors, q_hat, graph, config.scheme);
    result.sweep_changes.push_back(change);
    if (config.tolerance && change < *config.tolerance) break;
  }
  return result;
}

EmbeddingMatrix solve_exact(const EmbeddingMatrix& q_hat, const RestrictedGraph& graph,
                            const WeightScheme& scheme) {
  check_aligned(q_hat, graph);
  check_scheme(scheme);
  check_finite(q_hat);

  // Dense system over the connected vertices only; degree-0 rows are copied.
  constexpr std::size_t kMaxDense = 2000;
  std::vector<std::size_t> dense_index(graph.size(), SIZE_MAX);
  std::vector<std::size_t> connected;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!graph.adjacency[i].empty()) {
      dense_index[i] = connected.size();
      connected.push_back(i);
    }
  }
  const std::size_t m = connected.size();
  if (m > kMaxDense)
    throw Error("solve_exact: " + std::to_string(m) + " connected vertices exceed the dense " +
                "solver limit of " + std::to_string(kMaxDense));

  EmbeddingMatrix out = q_hat;
  if (m == 0) return out;

  const std::size_t d = q_hat.dim();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd rhs(m, d);
  for (std::size_t row = 0; row < m; ++row) {
    const std::size_t i = connected[row];
    const auto& neighbors = graph.adjacency[i];
    const double beta = scheme.beta(neighbors.size());
    a(row, row) = scheme.alpha + beta * static_cast<double>(neighbors.size());
    for (std::uint32_t j : neighbors) a(row, dense_index[j]) -= beta;
    const auto anchor = q_hat.row(i);
    for (std::size_t k = 0; k < d; ++k) rhs(row, k) = scheme.alpha * anchor[k];
  }

  // Strict diagonal dominance (alpha > 0) makes the system uniquely solvable.
  Eigen::MatrixXd solution = a.partialPivLu().solve(rhs);
  for (std::size_t row = 0; row < m; ++row) {
    auto out_row = out.row(connected[row]);
    for (std::size_t k = 0; k < d; ++k) out_row[k] = solution(row, k);
  }
  return out;
}

double objective(const EmbeddingMatrix& q, const EmbeddingMatrix& q_hat,
                 const RestrictedGraph& graph, const WeightScheme& scheme) {
  check_same_shape(q, q_hat);
  check_aligned(q, graph);
  check_scheme(scheme);

  const std::size_t d = q.dim();
  double total = 0.0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const double* qi = q.row(i).data();
    const double* anchor = q_hat.row(i).data();
    double anchor_sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double delta = qi[k] - anchor[k];
      anchor_sq += delta * delta;
    }
    total += scheme.alpha * anchor_sq;

    const auto& neighbors = graph.adjacency[i];
    if (neighbors.empty()) continue;
    const double beta = scheme.beta(neighbors.size());
    double edge_sq = 0.0;
    for (std::uint32_t j : neighbors) {
      const double* qj = q.row(j).data();
      for (std::size_t k = 0; k < d; ++k) {
        const double delta = qi[k] - qj[k];
        edge_sq += delta * delta;
      }
    }
    total += beta * edge_sq;
  }
  return total;
}

double max_adjacent_change(const EmbeddingMatrix& prev, const EmbeddingMatrix& next,
                           const RestrictedGraph& graph) {
  check_same_shape(prev, next);
  check_aligned(prev, graph);

  const std::size_t d = prev.dim();
  double max_sq = 0.0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (graph.adjacency[i].empty()) continue;
    const double* a = prev.row(i).data();
    const double* b = next.row(i).data();
    double sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double delta = b[k] - a[k];
      sq += delta * delta;
    }
    if (sq > max_sq) max_sq = sq;
  }
  return std::sqrt(max_sq);
}

}  // namespace lexfit
