#ifndef LEXFIT_LEXICON_H_
#define LEXFIT_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lexfit/embeddings.h"

namespace lexfit {

// Undirected graph over token strings. The adjacency map is symmetric,
// loop-free and deduplicated by construction; vertices may be isolated
// (a head token listed with no surviving neighbors).
class LexiconGraph {
 public:
  using Adjacency = std::map<std::string, std::set<std::string>>;

  // Registers a vertex with no edges (idempotent).
  void add_vertex(std::string token);

  // Adds the undirected edge a-b; self-loops are dropped, repeats collapse.
  void add_edge(const std::string& a, const std::string& b);

  const Adjacency& adjacency() const { return adjacency_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

  bool operator==(const LexiconGraph&) const = default;

 private:
  Adjacency adjacency_;
};

// Undirected graph over vocabulary ordinals, aligned to an embedding
// vocabulary. Neighbor lists are sorted and deduplicated.
struct RestrictedGraph {
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::size_t edge_count = 0;

  std::size_t size() const { return adjacency.size(); }
  std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
};

// Parses the edge-list format: each line is a head token followed by zero or
// more neighbor tokens, whitespace-separated. Blank lines are ignored.
LexiconGraph parse_lexicon(std::istream& source);
LexiconGraph parse_lexicon_file(const std::string& path);

// Keeps only edges whose both endpoints resolve to vocabulary tokens (see
// TokenResolver for the fold_case rules) and reindexes them by ordinal.
// Edges collapsing onto a single ordinal after case folding are dropped.
RestrictedGraph restrict_to_vocab(const LexiconGraph& graph, const Vocabulary& vocab,
                                  bool fold_case = false);

// Set union of the edge sets (and vertex sets) of two graphs.
LexiconGraph graph_union(const LexiconGraph& a, const LexiconGraph& b);

struct GraphStats {
  std::size_t words = 0;
  std::size_t edges = 0;
  bool operator==(const GraphStats&) const = default;
};

// words = vertices (isolated heads included), edges = undirected edge count.
GraphStats stats(const LexiconGraph& graph);
// words = ordinals with degree >= 1.
GraphStats stats(const RestrictedGraph& graph);

}  // namespace lexfit

#endif  // LEXFIT_LEXICON_H_
