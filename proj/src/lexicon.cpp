#include "lexfit/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

#include "lexfit/error.h"

namespace lexfit {

void LexiconGraph::add_vertex(std::string token) {
  adjacency_.try_emplace(std::move(token));
}

void LexiconGraph::add_edge(const std::string& a, const std::string& b) {
  if (a == b) {
    add_vertex(a);
    return;
  }
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

std::size_t LexiconGraph::edge_count() const {
  std::size_t directed = 0;
  for (const auto& [token, neighbors] : adjacency_) directed += neighbors.size();
  return directed / 2;
}

LexiconGraph parse_lexicon(std::istream& source) {
  LexiconGraph graph;
  std::string line;
  while (std::getline(source, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = 0;
    auto next_field = [&]() -> std::string {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      return line.substr(start, i - start);
    };
    std::string head = next_field();
    if (head.empty()) continue;  // blank line
    graph.add_vertex(head);
    for (std::string nbr = next_field(); !nbr.empty(); nbr = next_field())
      graph.add_edge(head, nbr);
  }
  if (source.bad()) throw Error("read failure while parsing lexicon");
  return graph;
}

LexiconGraph parse_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file '" + path + "'");
  return parse_lexicon(in);
}

RestrictedGraph restrict_to_vocab(const LexiconGraph& graph, const Vocabulary& vocab,
                                  bool fold_case) {
  TokenResolver resolver(vocab, fold_case);
  RestrictedGraph out;
  out.adjacency.resize(vocab.size());

  for (const auto& [token, neighbors] : graph.adjacency()) {
    auto head = resolver.resolve(token);
    if (!head) continue;
    for (const auto& nbr_token : neighbors) {
      auto nbr = resolver.resolve(nbr_token);
      // Case folding can collapse an edge onto one ordinal; drop those.
      if (!nbr || *nbr == *head) continue;
      out.adjacency[*head].push_back(static_cast<std::uint32_t>(*nbr));
    }
  }

  std::size_t directed = 0;
  for (auto& list : out.adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    directed += list.size();
  }
  out.edge_count = directed / 2;
  return out;
}

LexiconGraph graph_union(const LexiconGraph& a, const LexiconGraph& b) {
  LexiconGraph out = a;
  for (const auto& [token, neighbors] : b.adjacency()) {
    out.add_vertex(token);
    for (const auto& nbr : neighbors) out.add_edge(token, nbr);
  }
  return out;
}

GraphStats stats(const LexiconGraph& graph) {
  return {graph.vertex_count(), graph.edge_count()};
}

GraphStats stats(const RestrictedGraph& graph) {
  std::size_t words = 0;
  for (const auto& list : graph.adjacency)
    if (!list.empty()) ++words;
  return {words, graph.edge_count};
}

}  // namespace lexfit
