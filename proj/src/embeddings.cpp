#include "lexfit/embeddings.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lexfit/error.h"

namespace lexfit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits on runs of whitespace; fields are views into `line`.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_double(std::string_view field, double* out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), *out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool parse_size(std::string_view field, std::size_t* out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), *out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

void strip_cr(std::string* line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

}  // namespace

std::size_t Vocabulary::add(std::string token) {
  auto [it, inserted] = lookup_.try_emplace(std::move(token), tokens_.size());
  if (!inserted) throw Error("duplicate token '" + it->first + "' in vocabulary");
  tokens_.push_back(it->first);
  return tokens_.size() - 1;
}

std::optional<std::size_t> Vocabulary::find(std::string_view token) const {
  auto it = lookup_.find(token);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

EmbeddingMatrix::EmbeddingMatrix(Vocabulary vocab, std::size_t dim)
    : vocab_(std::move(vocab)), dim_(dim), values_(vocab_.size() * dim, 0.0) {}

EmbeddingMatrix::EmbeddingMatrix(Vocabulary vocab, std::size_t dim,
                                 std::vector<double> values)
    : vocab_(std::move(vocab)), dim_(dim), values_(std::move(values)) {
  if (values_.size() != vocab_.size() * dim_)
    throw Error("embedding matrix shape mismatch: " + std::to_string(values_.size()) +
                " values for " + std::to_string(vocab_.size()) + " tokens of dim " +
                std::to_string(dim_));
}

EmbeddingMatrix read_embeddings(std::istream& source, DuplicatePolicy policy,
                                const std::string& source_name,
                                std::size_t* duplicates_dropped) {
  Vocabulary vocab;
  std::vector<double> values;
  std::size_t dim = 0;
  std::size_t header_dim = 0;
  bool saw_header = false;
  std::size_t dropped = 0;

  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(source, line)) {
    ++line_no;
    strip_cr(&line);
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (first) {
      first = false;
      // Optional "count dim" header: exactly two integer fields.
      std::size_t a = 0, b = 0;
      if (fields.size() == 2 && parse_size(fields[0], &a) && parse_size(fields[1], &b)) {
        saw_header = true;
        header_dim = b;
        continue;
      }
    }

    if (fields.size() < 2)
      throw Error(source_name + ":" + std::to_string(line_no) +
                  ": expected a token followed by vector components");
    const std::size_t row_dim = fields.size() - 1;
    if (dim == 0) {
      dim = row_dim;
    } else if (row_dim != dim) {
      throw Error(source_name + ":" + std::to_string(line_no) + ": inconsistent dimension (" +
                  std::to_string(row_dim) + " components, expected " + std::to_string(dim) +
                  ")");
    }

    std::string token(fields[0]);
    if (vocab.contains(token)) {
      if (policy == DuplicatePolicy::kError)
        throw Error(source_name + ":" + std::to_string(line_no) + ": duplicate token '" +
                    token + "'");
      ++dropped;
      continue;
    }

    for (std::size_t k = 1; k < fields.size(); ++k) {
      double v = 0.0;
      if (!parse_double(fields[k], &v))
        throw Error(source_name + ":" + std::to_string(line_no) + ": bad numeric value '" +
                    std::string(fields[k]) + "' for token '" + token + "'");
      if (!std::isfinite(v))
        throw Error(source_name + ":" + std::to_string(line_no) + ": non-finite value '" +
                    std::string(fields[k]) + "' for token '" + token + "'");
      values.push_back(v);
    }
    vocab.add(std::move(token));
  }

  if (source.bad()) throw Error(source_name + ": read failure");
  if (vocab.empty()) throw Error(source_name + ": no embedding rows found");
  if (saw_header && header_dim != dim)
    throw Error(source_name + ": header declares dim " + std::to_string(header_dim) +
                " but rows have dim " + std::to_string(dim));

  if (duplicates_dropped) *duplicates_dropped = dropped;
  return EmbeddingMatrix(std::move(vocab), dim, std::move(values));
}

EmbeddingMatrix read_embeddings_file(const std::string& path, DuplicatePolicy policy,
                                     std::size_t* duplicates_dropped) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embeddings file '" + path + "'");
  return read_embeddings(in, policy, path, duplicates_dropped);
}

void write_embeddings(const EmbeddingMatrix& matrix, std::ostream& sink) {
  if (matrix.size() == 0) throw Error("refusing to write an empty embedding matrix");
  char buf[64];
  std::string line;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    line.clear();
    line += matrix.vocab().token(i);
    for (double v : matrix.row(i)) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      line += ' ';
      line.append(buf, ptr);
      (void)ec;  // cannot fail for doubles with this buffer
    }
    line += '\n';
    sink.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  if (!sink) throw Error("write failure while emitting embeddings");
}

void write_embeddings_file(const EmbeddingMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  write_embeddings(matrix, out);
  out.close();
  if (!out) throw Error("write failure on '" + path + "'");
}

EmbeddingMatrix normalize_rows(EmbeddingMatrix matrix) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    auto row = matrix.row(i);
    double ss = 0.0;
    for (double v : row) ss += v * v;
    const double inv = 1.0 / std::sqrt(ss + 1e-6);
    for (double& v : row) v *= inv;
  }
  return matrix;
}

TokenResolver::TokenResolver(const Vocabulary& vocab, bool fold_case)
    : vocab_(&vocab), fold_case_(fold_case) {
  if (!fold_case_) return;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    // First insertion wins, keeping the lowest ordinal per folded form.
    folded_.try_emplace(ascii_lower(vocab.token(i)), i);
  }
}

std::optional<std::size_t> TokenResolver::resolve(std::string_view token) const {
  if (auto exact = vocab_->find(token)) return exact;
  if (!fold_case_) return std::nullopt;
  auto it = folded_.find(ascii_lower(token));
  if (it == folded_.end()) return std::nullopt;
  return it->second;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

}  // namespace lexfit
