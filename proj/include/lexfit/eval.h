#ifndef LEXFIT_EVAL_H_
#define LEXFIT_EVAL_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lexfit/embeddings.h"

namespace lexfit {

struct SimilarityItem {
  std::string a;
  std::string b;
  double human_score = 0.0;
};

struct SimilarityDataset {
  std::vector<SimilarityItem> items;
};

struct AnalogyItem {
  std::string a, b, c, d;  // "a is to b as c is to d"
};

struct AnalogyDataset {
  std::vector<AnalogyItem> items;
};

struct ChoiceItem {
  std::string target;
  std::vector<std::string> candidates;  // at least 2
  std::size_t gold = 0;                 // index into candidates
};

struct ChoiceDataset {
  std::vector<ChoiceItem> items;
};

// File formats, one item per line, UTF-8:
//   similarity  "w1 w2 score"
//   analogy     "a b c d"
//   choice      "target | cand1 cand2 ... | goldIndex"
SimilarityDataset parse_similarity(std::istream& in, const std::string& name = "<stream>");
AnalogyDataset parse_analogy(std::istream& in, const std::string& name = "<stream>");
ChoiceDataset parse_choice(std::istream& in, const std::string& name = "<stream>");
SimilarityDataset parse_similarity_file(const std::string& path);
AnalogyDataset parse_analogy_file(const std::string& path);
ChoiceDataset parse_choice_file(const std::string& path);

// dot(u,v) / (|u| |v|). Vectors with norm below 1e-12 make the similarity
// undefined and raise an error.
double cosine(std::span<const double> u, std::span<const double> v);

// Spearman's rank correlation: Pearson correlation of fractional ranks,
// ties assigned their average rank. Errors on length mismatch, fewer than
// two points, or an all-constant side.
double spearman(std::span<const double> x, std::span<const double> y);

struct EvalResult {
  double metric = 0.0;  // correlation or accuracy
  std::size_t used = 0;
  std::size_t skipped = 0;
};

// Spearman correlation between model cosines and human scores. Pairs with
// an out-of-vocabulary token are skipped and counted; fewer than two usable
// pairs is an error.
EvalResult eval_similarity(const EmbeddingMatrix& m, const SimilarityDataset& ds,
                           bool fold_case = false);

// Query direction for the vector offset method on "a is to b as c is to d".
enum class AnalogyDirection {
  kSubtractSecond,  // q = q_a - q_b + q_c (default)
  kSubtractFirst,   // q = q_b - q_a + q_c
};

// Vector offset analogy: the predicted word is the vocabulary vector most
// cosine-similar to the query, excluding a, b and c themselves; ties go to
// the lowest ordinal. Items with any out-of-vocabulary word are skipped.
EvalResult eval_analogy(const EmbeddingMatrix& m, const AnalogyDataset& ds,
                        bool fold_case = false,
                        AnalogyDirection direction = AnalogyDirection::kSubtractSecond);

// Picks the candidate with the highest cosine to the target; out-of-vocabulary
// candidates score -inf, ties go to the lowest index. Items whose target is
// out of vocabulary are skipped.
EvalResult eval_choice(const EmbeddingMatrix& m, const ChoiceDataset& ds,
                       bool fold_case = false);

struct Projected2D {
  std::string token;
  double x = 0.0;
  double y = 0.0;
};

// Mean-centers the selected rows and projects them onto their top two
// principal components (eigendecomposition of the k x k Gram matrix). Sign
// convention: each component's entry of largest magnitude is positive.
// Requires at least 3 tokens, all in vocabulary (exact match).
std::vector<Projected2D> project_2d(const EmbeddingMatrix& m,
                                    const std::vector<std::string>& tokens);

}  // namespace lexfit

#endif  // LEXFIT_EVAL_H_
