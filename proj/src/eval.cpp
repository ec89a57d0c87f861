#include "lexfit/eval.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "lexfit/error.h"

namespace lexfit {

namespace {

constexpr double kNormFloor = 1e-12;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream iss(line);
  for (std::string f; iss >> f;) fields.push_back(std::move(f));
  return fields;
}

double parse_double_or_throw(const std::string& field, const std::string& where) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw Error(where + ": bad numeric value '" + field + "'");
  return v;
}

double dot(std::span<const double> u, std::span<const double> v) {
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

double norm(std::span<const double> u) { return std::sqrt(dot(u, u)); }

// Cosine that answers -inf instead of failing on a degenerate vector, for
// ranking loops where such a vector must simply never win.
double cosine_or_neg_inf(std::span<const double> u, std::span<const double> v) {
  const double nu = norm(u), nv = norm(v);
  if (nu < kNormFloor || nv < kNormFloor) return kNegInf;
  return dot(u, v) / (nu * nv);
}

// Fractional ranks, ties getting the average of their positions (1-based).
std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw Error("cosine: vector lengths differ (" + std::to_string(u.size()) + " vs " +
                std::to_string(v.size()) + ")");
  const double nu = norm(u), nv = norm(v);
  if (nu < kNormFloor || nv < kNormFloor)
    throw Error("cosine: similarity undefined for a (near-)zero vector");
  return dot(u, v) / (nu * nv);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw Error("spearman: list lengths differ (" + std::to_string(x.size()) + " vs " +
                std::to_string(y.size()) + ")");
  if (x.size() < 2) throw Error("spearman: need at least two points");

  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;  // ranks always average to this

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw Error("spearman: correlation undefined for a constant input");
  return sxy / std::sqrt(sxx * syy);
}

SimilarityDataset parse_similarity(std::istream& in, const std::string& name) {
  SimilarityDataset ds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    const std::string where = name + ":" + std::to_string(line_no);
    if (fields.size() != 3) throw Error(where + ": expected 'w1 w2 score'");
    const double score = parse_double_or_throw(fields[2], where);
    if (!std::isfinite(score)) throw Error(where + ": non-finite score");
    ds.items.push_back({std::move(fields[0]), std::move(fields[1]), score});
  }
  if (in.bad()) throw Error(name + ": read failure");
  if (ds.items.empty()) throw Error(name + ": empty similarity dataset");
  return ds;
}

AnalogyDataset parse_analogy(std::istream& in, const std::string& name) {
  AnalogyDataset ds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (fields.size() != 4)
      throw Error(name + ":" + std::to_string(line_no) + ": expected 'a b c d'");
    ds.items.push_back({std::move(fields[0]), std::move(fields[1]), std::move(fields[2]),
                        std::move(fields[3])});
  }
  if (in.bad()) throw Error(name + ": read failure");
  if (ds.items.empty()) throw Error(name + ": empty analogy dataset");
  return ds;
}

ChoiceDataset parse_choice(std::istream& in, const std::string& name) {
  ChoiceDataset ds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = name + ":" + std::to_string(line_no);

    // "target | cand1 cand2 ... | goldIndex"
    const std::size_t p1 = line.find('|');
    const std::size_t p2 = line.rfind('|');
    if (p1 == std::string::npos || p2 == p1)
      throw Error(where + ": expected 'target | candidates | goldIndex'");

    auto target_fields = split_ws(line.substr(0, p1));
    auto cand_fields = split_ws(line.substr(p1 + 1, p2 - p1 - 1));
    auto gold_fields = split_ws(line.substr(p2 + 1));
    if (target_fields.size() != 1) throw Error(where + ": expected a single target token");
    if (cand_fields.size() < 2) throw Error(where + ": need at least two candidates");
    if (gold_fields.size() != 1) throw Error(where + ": expected a single gold index");

    std::size_t gold = 0;
    const std::string& g = gold_fields[0];
    auto [ptr, ec] = std::from_chars(g.data(), g.data() + g.size(), gold);
    if (ec != std::errc() || ptr != g.data() + g.size())
      throw Error(where + ": bad gold index '" + g + "'");
    if (gold >= cand_fields.size())
      throw Error(where + ": gold index " + std::to_string(gold) + " out of range for " +
                  std::to_string(cand_fields.size()) + " candidates");

    ds.items.push_back({std::move(target_fields[0]), std::move(cand_fields), gold});
  }
  if (in.bad()) throw Error(name + ": read failure");
  if (ds.items.empty()) throw Error(name + ": empty choice dataset");
  return ds;
}

SimilarityDataset parse_similarity_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset '" + path + "'");
  return parse_similarity(in, path);
}

AnalogyDataset parse_analogy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset '" + path + "'");
  return parse_analogy(in, path);
}

ChoiceDataset parse_choice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset '" + path + "'");
  return parse_choice(in, path);
}

EvalResult eval_similarity(const EmbeddingMatrix& m, const SimilarityDataset& ds,
                           bool fold_case) {
  TokenResolver resolver(m.vocab(), fold_case);
  std::vector<double> model, human;
  std::size_t skipped = 0;
  for (const auto& item : ds.items) {
    auto a = resolver.resolve(item.a);
    auto b = resolver.resolve(item.b);
    if (!a || !b) {
      ++skipped;
      continue;
    }
    model.push_back(cosine(m.row(*a), m.row(*b)));
    human.push_back(item.human_score);
  }
  if (model.size() < 2)
    throw Error("similarity evaluation needs at least 2 usable pairs, got " +
                std::to_string(model.size()) + " (skipped " + std::to_string(skipped) + ")");
  return {spearman(model, human), model.size(), skipped};
}

EvalResult eval_analogy(const EmbeddingMatrix& m, const AnalogyDataset& ds, bool fold_case,
                        AnalogyDirection direction) {
  TokenResolver resolver(m.vocab(), fold_case);
  const std::size_t n = m.size();
  const std::size_t d = m.dim();

  // Candidate norms don't change across items.
  std::vector<double> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = norm(m.row(i));

  std::vector<double> query(d);
  std::size_t used = 0, correct = 0, skipped = 0;
  for (const auto& item : ds.items) {
    auto a = resolver.resolve(item.a);
    auto b = resolver.resolve(item.b);
    auto c = resolver.resolve(item.c);
    auto gold = resolver.resolve(item.d);
    if (!a || !b || !c || !gold) {
      ++skipped;
      continue;
    }

    const auto qa = m.row(*a), qb = m.row(*b), qc = m.row(*c);
    const double sign = direction == AnalogyDirection::kSubtractSecond ? 1.0 : -1.0;
    for (std::size_t k = 0; k < d; ++k) query[k] = sign * (qa[k] - qb[k]) + qc[k];
    const double query_norm = norm(query);

    std::size_t best = SIZE_MAX;
    double best_score = kNegInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == *a || i == *b || i == *c) continue;
      double score = kNegInf;
      if (query_norm >= kNormFloor && norms[i] >= kNormFloor)
        score = dot(m.row(i), query) / (norms[i] * query_norm);
      if (best == SIZE_MAX || score > best_score) {
        best = i;
        best_score = score;
      }
    }

    ++used;
    if (best == *gold) ++correct;
  }
  if (used == 0) throw Error("analogy evaluation has no usable items");
  return {static_cast<double>(correct) / static_cast<double>(used), used, skipped};
}

EvalResult eval_choice(const EmbeddingMatrix& m, const ChoiceDataset& ds, bool fold_case) {
  TokenResolver resolver(m.vocab(), fold_case);
  std::size_t used = 0, correct = 0, skipped = 0;
  for (const auto& item : ds.items) {
    auto target = resolver.resolve(item.target);
    if (!target) {
      ++skipped;
      continue;
    }
    std::size_t best = 0;
    double best_score = kNegInf;
    for (std::size_t c = 0; c < item.candidates.size(); ++c) {
      auto cand = resolver.resolve(item.candidates[c]);
      const double score =
          cand ? cosine_or_neg_inf(m.row(*cand), m.row(*target)) : kNegInf;
      if (c == 0 || score > best_score) {
        best = c;
        best_score = score;
      }
    }
    ++used;
    if (best == item.gold) ++correct;
  }
  if (used == 0) throw Error("choice evaluation has no usable items");
  return {static_cast<double>(correct) / static_cast<double>(used), used, skipped};
}

std::vector<Projected2D> project_2d(const EmbeddingMatrix& m,
                                    const std::vector<std::string>& tokens) {
  if (tokens.size() < 3)
    throw Error("projection needs at least 3 tokens, got " + std::to_string(tokens.size()));
  std::vector<std::size_t> rows;
  std::string missing;
  for (const auto& token : tokens) {
    if (auto i = m.vocab().find(token)) {
      rows.push_back(*i);
    } else {
      missing += missing.empty() ? "" : ", ";
      missing += "'" + token + "'";
    }
  }
  if (!missing.empty()) throw Error("projection tokens not in vocabulary: " + missing);

  const std::size_t k = rows.size();
  const std::size_t d = m.dim();
  Eigen::MatrixXd x(k, d);
  for (std::size_t r = 0; r < k; ++r) {
    const auto row = m.row(rows[r]);
    for (std::size_t c = 0; c < d; ++c) x(r, c) = row[c];
  }
  x.rowwise() -= x.colwise().mean();

  // Selections are tiny, so decompose the k x k Gram matrix instead of the
  // d x d covariance; coordinates are sqrt(lambda) * eigenvector.
  const Eigen::MatrixXd gram = x * x.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success) throw Error("projection eigendecomposition failed");

  // Eigenvalues within rounding distance of zero are genuine zeros
  // (rank-deficient selections); without the cutoff they would leak
  // sqrt(eps)-sized coordinates.
  const double lambda_floor = eig.eigenvalues().maxCoeff() * 1e-12;
  Eigen::MatrixXd coords(k, 2);
  for (int c = 0; c < 2; ++c) {
    const auto idx = static_cast<Eigen::Index>(k) - 1 - c;  // eigenvalues ascend
    const double lambda = eig.eigenvalues()(idx);
    coords.col(c) = lambda > lambda_floor ? (std::sqrt(lambda) * eig.eigenvectors().col(idx)).eval()
                                          : Eigen::VectorXd::Zero(k).eval();
  }
  for (int c = 0; c < 2; ++c) {
    Eigen::Index at = 0;
    coords.col(c).cwiseAbs().maxCoeff(&at);
    if (coords(at, c) < 0.0) coords.col(c) = -coords.col(c);
  }

  std::vector<Projected2D> out(k);
  for (std::size_t r = 0; r < k; ++r) out[r] = {tokens[r], coords(r, 0), coords(r, 1)};
  return out;
}

}  // namespace lexfit
