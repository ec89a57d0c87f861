#ifndef LEXFIT_EMBEDDINGS_H_
#define LEXFIT_EMBEDDINGS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexfit {

// Ordered set of unique token strings with token -> ordinal lookup.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Appends a token and returns its ordinal. Fails on duplicates.
  std::size_t add(std::string token);

  // Ordinal of `token`, or nullopt if absent.
  std::optional<std::size_t> find(std::string_view token) const;

  bool contains(std::string_view token) const { return find(token).has_value(); }
  const std::string& token(std::size_t ordinal) const { return tokens_.at(ordinal); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> lookup_;
};

// n x d matrix of finite 64-bit reals, one row per vocabulary token.
// Stored row-major.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(Vocabulary vocab, std::size_t dim);
  EmbeddingMatrix(Vocabulary vocab, std::size_t dim, std::vector<double> values);

  std::size_t size() const { return vocab_.size(); }  // n
  std::size_t dim() const { return dim_; }            // d

  std::span<double> row(std::size_t i) { return {values_.data() + i * dim_, dim_}; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }

  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

 private:
  Vocabulary vocab_;
  std::size_t dim_ = 0;
  std::vector<double> values_;  // n * d, row-major
};

enum class DuplicatePolicy {
  kError,      // duplicate token is a hard error (default)
  kKeepFirst,  // keep the first occurrence, count the rest as warnings
};

// Reads the whitespace text interchange format: one token followed by d
// decimal reals per line. An optional first line of exactly two integers
// (count, dim) is treated as a header and skipped; a header-declared dim
// must match the observed one. Tokens may contain any non-whitespace bytes.
// `source_name` is used in diagnostics. With kKeepFirst, the number of
// dropped duplicate lines is written to *duplicates_dropped when non-null.
EmbeddingMatrix read_embeddings(std::istream& source,
                                DuplicatePolicy policy = DuplicatePolicy::kError,
                                const std::string& source_name = "<stream>",
                                std::size_t* duplicates_dropped = nullptr);

// Same, opening `path` itself.
EmbeddingMatrix read_embeddings_file(const std::string& path,
                                     DuplicatePolicy policy = DuplicatePolicy::kError,
                                     std::size_t* duplicates_dropped = nullptr);

// Writes one line per token in vocabulary order, no header. Values are
// printed in the shortest form that round-trips 64-bit doubles, so
// read(write(m)) reproduces m bit-for-bit.
void write_embeddings(const EmbeddingMatrix& matrix, std::ostream& sink);
void write_embeddings_file(const EmbeddingMatrix& matrix, const std::string& path);

// Divides each row by sqrt(sum of squares + 1e-6). Zero rows stay (near-)zero;
// no row can come out with norm > 1.
EmbeddingMatrix normalize_rows(EmbeddingMatrix matrix);

// Token -> ordinal resolution against a vocabulary. With fold_case set, a
// token that has no exact match is matched after ASCII-lowercasing both
// sides; when several vocabulary tokens collide under folding, the lowest
// ordinal wins.
class TokenResolver {
 public:
  TokenResolver(const Vocabulary& vocab, bool fold_case);

  std::optional<std::size_t> resolve(std::string_view token) const;

 private:
  const Vocabulary* vocab_;
  bool fold_case_;
  std::unordered_map<std::string, std::size_t> folded_;  // lowercased -> min ordinal
};

// ASCII lowercasing; bytes outside [A-Z] pass through untouched.
std::string ascii_lower(std::string_view s);

}  // namespace lexfit

#endif  // LEXFIT_EMBEDDINGS_H_
