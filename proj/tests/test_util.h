#ifndef LEXFIT_TESTS_TEST_UTIL_H_
#define LEXFIT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexfit/embeddings.h"
#include "lexfit/lexicon.h"
#include "lexfit/retrofit.h"

namespace test_util {

inline lexfit::Vocabulary make_vocab(std::size_t n) {
  lexfit::Vocabulary vocab;
  for (std::size_t i = 0; i < n; ++i) vocab.add("w" + std::to_string(i));
  return vocab;
}

// Undirected graph over n ordinals from an explicit edge list.
inline lexfit::RestrictedGraph make_graph(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  lexfit::RestrictedGraph g;
  g.adjacency.resize(n);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [a, b] : edges) {
    if (a == b) continue;
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) continue;
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  g.edge_count = seen.size();
  return g;
}

inline lexfit::RestrictedGraph random_graph(std::size_t n, double edge_prob,
                                            std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return make_graph(n, edges);
}

inline lexfit::EmbeddingMatrix random_matrix(std::size_t n, std::size_t d,
                                             std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> uni(-scale, scale);
  lexfit::EmbeddingMatrix m(make_vocab(n), d);
  for (double& v : m.values()) v = uni(rng);
  return m;
}

struct RandomInstance {
  lexfit::EmbeddingMatrix q_hat;
  lexfit::RestrictedGraph graph;
  lexfit::WeightScheme scheme;
};

// n in [2,50], d in [1,10], sparse random edges, alternating beta rules with
// moderate weights so 200 sweeps reach well below 1e-6 of the fixed point.
inline RandomInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> n_dist(2, 50);
  std::uniform_int_distribution<std::size_t> d_dist(1, 10);
  std::uniform_real_distribution<double> prob_dist(0.0, 0.2);
  std::uniform_real_distribution<double> beta_dist(0.1, 0.5);

  const std::size_t n = n_dist(rng);
  const std::size_t d = d_dist(rng);
  RandomInstance inst{random_matrix(n, d, rng), random_graph(n, prob_dist(rng), rng), {}};
  if (seed % 2 == 0) {
    inst.scheme.beta_rule = lexfit::WeightScheme::BetaRule::kInverseDegree;
  } else {
    inst.scheme.beta_rule = lexfit::WeightScheme::BetaRule::kConstant;
    inst.scheme.beta_constant = beta_dist(rng);
  }
  return inst;
}

inline double linf_distance(const lexfit::EmbeddingMatrix& a, const lexfit::EmbeddingMatrix& b) {
  double max = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    max = std::max(max, std::abs(a.values()[i] - b.values()[i]));
  return max;
}

}  // namespace test_util

#endif  // LEXFIT_TESTS_TEST_UTIL_H_
