#include "lexfit/prior.h"

#include <string>
#include <vector>

#include "lexfit/error.h"

namespace lexfit {

namespace {

void check_config(const PriorConfig& config) {
  if (!(config.gamma >= 0.0)) throw Error("prior: gamma must be non-negative");
  if (config.k < 1) throw Error("prior: update period k must be >= 1");
  if (!(config.learning_rate > 0.0)) throw Error("prior: learning rate must be positive");
}

void check_aligned(const EmbeddingMatrix& q, const RestrictedGraph& graph) {
  if (q.size() != graph.size())
    throw Error("graph has " + std::to_string(graph.size()) + " vertices but matrix has " +
                std::to_string(q.size()) + " rows");
}

}  // namespace

double log_prior(const EmbeddingMatrix& q, const RestrictedGraph& graph,
                 const PriorConfig& config) {
  check_config(config);
  check_aligned(q, graph);

  const std::size_t d = q.dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& neighbors = graph.adjacency[i];
    if (neighbors.empty()) continue;
    const double beta = config.scheme.beta(neighbors.size());
    const double* qi = q.row(i).data();
    double edge_sq = 0.0;
    for (std::uint32_t j : neighbors) {
      const double* qj = q.row(j).data();
      for (std::size_t k = 0; k < d; ++k) {
        const double delta = qi[k] - qj[k];
        edge_sq += delta * delta;
      }
    }
    sum += beta * edge_sq;
  }
  return -config.gamma * sum;
}

EmbeddingMatrix log_prior_gradient(const EmbeddingMatrix& q, const RestrictedGraph& graph,
                                   const PriorConfig& config) {
  check_config(config);
  check_aligned(q, graph);

  const std::size_t d = q.dim();
  EmbeddingMatrix grad(q.vocab(), d);
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& neighbors = graph.adjacency[i];
    if (neighbors.empty()) continue;  // gradient row stays zero
    const double beta_i = config.scheme.beta(neighbors.size());
    const double* qi = q.row(i).data();
    double* gi = grad.row(i).data();
    for (std::uint32_t j : neighbors) {
      // The edge shows up in both endpoints' sums, with each endpoint's beta.
      const double beta_j = config.scheme.beta(graph.degree(j));
      const double w = -config.gamma * 2.0 * (beta_i + beta_j);
      const double* qj = q.row(j).data();
      for (std::size_t k = 0; k < d; ++k) gi[k] += w * (qi[k] - qj[k]);
    }
  }
  return grad;
}

void lazy_step(EmbeddingMatrix& q, const RestrictedGraph& graph, const PriorConfig& config,
               const std::vector<std::size_t>& touched) {
  check_config(config);
  check_aligned(q, graph);
  for (std::size_t i : touched)
    if (i >= q.size())
      throw Error("lazy_step: ordinal " + std::to_string(i) + " out of range (vocabulary has " +
                  std::to_string(q.size()) + " tokens)");

  // Gradients are taken at the incoming q for the whole window, then applied.
  const EmbeddingMatrix grad = log_prior_gradient(q, graph, config);
  for (std::size_t i : touched) {
    double* qi = q.row(i).data();
    const double* gi = grad.row(i).data();
    for (std::size_t k = 0; k < q.dim(); ++k) qi[k] += config.learning_rate * gi[k];
  }
}

double periodic_step(EmbeddingMatrix& q, const EmbeddingMatrix& q_hat,
                     const RestrictedGraph& graph, const WeightScheme& scheme) {
  if (q.size() != q_hat.size() || q.dim() != q_hat.dim())
    throw Error("periodic_step: matrix shape mismatch");
  check_aligned(q, graph);
  return retrofit_sweep(q, q_hat, graph, scheme);
}

}  // namespace lexfit
