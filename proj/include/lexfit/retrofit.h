#ifndef LEXFIT_RETROFIT_H_
#define LEXFIT_RETROFIT_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "lexfit/embeddings.h"
#include "lexfit/lexicon.h"

namespace lexfit {

// Per-vertex anchor weight alpha_i and per-directed-pair edge weight
// beta_ij. beta_ij depends only on the vertex i being updated: either
// 1/degree(i) or a positive constant.
struct WeightScheme {
  enum class BetaRule { kInverseDegree, kConstant };

  BetaRule beta_rule = BetaRule::kInverseDegree;
  double beta_constant = 1.0;  // used by kConstant
  double alpha = 1.0;

  double beta(std::size_t degree) const {
    return beta_rule == BetaRule::kInverseDegree
               ? 1.0 / static_cast<double>(degree)
               : beta_constant;
  }
};

struct RetrofitConfig {
  std::size_t iterations = 10;
  WeightScheme scheme;
  // When set, sweeping stops early once a sweep's max_adjacent_change drops
  // below this value.
  std::optional<double> tolerance;
};

struct RetrofitResult {
  EmbeddingMatrix vectors;
  // max_adjacent_change of each completed sweep, in order.
  std::vector<double> sweep_changes;
};

// Iterative retrofitting. The output starts as a copy of q_hat; each sweep
// visits vertices in ascending ordinal order and replaces q_i in place with
//
//   (sum_{j in adj(i)} beta_ij q_j + alpha_i qhat_i) / (sum beta_ij + alpha_i)
//
// Vertices with no edges are never touched, so their rows stay bit-identical
// to the input. Identical inputs give bit-identical outputs.
RetrofitResult retrofit(const EmbeddingMatrix& q_hat, const RestrictedGraph& graph,
                        const RetrofitConfig& config = {});

// Runs exactly one in-place sweep of the update above over q, anchored to
// q_hat. Returns the sweep's max_adjacent_change. retrofit() is a loop over
// this routine.
double retrofit_sweep(EmbeddingMatrix& q, const EmbeddingMatrix& q_hat,
                      const RestrictedGraph& graph, const WeightScheme& scheme);

// Direct dense solve of the fixed-point system the sweeps converge to:
// per dimension, (alpha_i + sum_j beta_ij) q_i - sum_j beta_ij q_j =
// alpha_i qhat_i over all vertices with degree >= 1. The system matrix is
// strictly diagonally dominant, hence uniquely solvable. Degree-0 rows are
// copied. Guarded to at most 2,000 connected vertices (dense O(n^3)).
EmbeddingMatrix solve_exact(const EmbeddingMatrix& q_hat, const RestrictedGraph& graph,
                            const WeightScheme& scheme = {});

// The convex quadratic the method trades off:
//
//   sum_i [ alpha_i |q_i - qhat_i|^2 + sum_{j in adj(i)} beta_ij |q_i - q_j|^2 ]
//
// The inner sum runs over directed adjacent pairs, so each undirected edge
// contributes twice, once per endpoint with that endpoint's beta.
double objective(const EmbeddingMatrix& q, const EmbeddingMatrix& q_hat,
                 const RestrictedGraph& graph, const WeightScheme& scheme = {});

// Max Euclidean displacement over vertices with degree >= 1; 0 when there
// are none.
double max_adjacent_change(const EmbeddingMatrix& prev, const EmbeddingMatrix& next,
                           const RestrictedGraph& graph);

}  // namespace lexfit

#endif  // LEXFIT_RETROFIT_H_
