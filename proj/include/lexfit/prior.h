#ifndef LEXFIT_PRIOR_H_
#define LEXFIT_PRIOR_H_

#include <cstddef>
#include <vector>

#include "lexfit/embeddings.h"
#include "lexfit/lexicon.h"
#include "lexfit/retrofit.h"

namespace lexfit {

// Configuration of the graph prior used when a lexicon informs an external
// trainer. `k` is the update period in tokens; it is carried for the trainer,
// the step functions here apply one update when called.
struct PriorConfig {
  double gamma = 1.0;          // prior strength, >= 0
  WeightScheme scheme;
  std::size_t k = 1;           // update period in tokens, >= 1
  double learning_rate = 0.1;  // lazy step size, > 0
};

// Log of the graph prior up to its normalization constant:
//
//   -gamma * sum_i sum_{j in adj(i)} beta_ij |q_i - q_j|^2
//
// Always <= 0; 0 when gamma is 0 or all connected rows coincide.
double log_prior(const EmbeddingMatrix& q, const RestrictedGraph& graph,
                 const PriorConfig& config);

// Analytic gradient of log_prior. Row i is
//
//   -gamma * sum_{j in adj(i)} 2 (beta_ij + beta_ji) (q_i - q_j)
//
// and zero for degree-0 vertices. The result shares q's vocabulary.
EmbeddingMatrix log_prior_gradient(const EmbeddingMatrix& q, const RestrictedGraph& graph,
                                   const PriorConfig& config);

// One lazy gradient-ascent step: q_i += learning_rate * grad_i for the
// touched ordinals only. Gradients are taken at the incoming q, then applied
// at once. Out-of-range ordinals are an error.
void lazy_step(EmbeddingMatrix& q, const RestrictedGraph& graph, const PriorConfig& config,
               const std::vector<std::size_t>& touched);

// One full retrofitting sweep of q against the anchor q_hat; identical to a
// single retrofit() iteration. Returns the sweep's max_adjacent_change.
double periodic_step(EmbeddingMatrix& q, const EmbeddingMatrix& q_hat,
                     const RestrictedGraph& graph, const WeightScheme& scheme);

}  // namespace lexfit

#endif  // LEXFIT_PRIOR_H_
