#include "lexfit/eval.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <doctest.h>

#include "lexfit/error.h"
#include "test_util.h"

using namespace lexfit;

namespace {

EmbeddingMatrix make_matrix(const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
  Vocabulary vocab;
  std::vector<double> values;
  for (const auto& [token, vec] : rows) {
    vocab.add(token);
    values.insert(values.end(), vec.begin(), vec.end());
  }
  const std::size_t d = rows.empty() ? 0 : rows.front().second.size();
  return {std::move(vocab), d, std::move(values)};
}

// O(n^2) fractional ranks straight from the definition: positions occupied by
// the tied block average to (#smaller) + (1 + #equal)/2.
std::vector<double> brute_force_ranks(const std::vector<double>& x) {
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t smaller = 0, equal = 0;
    for (double v : x) {
      if (v < x[i]) ++smaller;
      if (v == x[i]) ++equal;
    }
    ranks[i] = static_cast<double>(smaller) + (1.0 + static_cast<double>(equal)) / 2.0;
  }
  return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double plain_cosine(std::span<const double> u, std::span<const double> v) {
  double uv = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    uv += u[k] * v[k];
    uu += u[k] * u[k];
    vv += v[k] * v[k];
  }
  return uv / (std::sqrt(uu) * std::sqrt(vv));
}

// Exhaustive analogy scorer over the whole vocabulary. Returns SIZE_MAX for
// unusable (OOV) items.
std::size_t analogy_oracle(const EmbeddingMatrix& m, const AnalogyItem& item,
                           AnalogyDirection direction) {
  const auto& vocab = m.vocab();
  auto a = vocab.find(item.a), b = vocab.find(item.b), c = vocab.find(item.c),
       d = vocab.find(item.d);
  if (!a || !b || !c || !d) return SIZE_MAX;

  std::vector<double> query(m.dim());
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const double offset = direction == AnalogyDirection::kSubtractSecond
                              ? m.row(*a)[k] - m.row(*b)[k]
                              : m.row(*b)[k] - m.row(*a)[k];
    query[k] = offset + m.row(*c)[k];
  }

  std::size_t best = SIZE_MAX;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == *a || i == *b || i == *c) continue;
    const double score = plain_cosine(m.row(i), query);
    if (best == SIZE_MAX || score > best_score) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

std::size_t choice_oracle(const EmbeddingMatrix& m, const ChoiceItem& item) {
  const auto& vocab = m.vocab();
  auto target = vocab.find(item.target);
  if (!target) return SIZE_MAX;
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < item.candidates.size(); ++c) {
    auto cand = vocab.find(item.candidates[c]);
    const double score = cand ? plain_cosine(m.row(*cand), m.row(*target))
                              : -std::numeric_limits<double>::infinity();
    if (c == 0 || score > best_score) {
      best = c;
      best_score = score;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("cosine hand values") {
  const std::vector<double> x{3.0, 4.0};
  CHECK(cosine(x, x) == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> e1{1.0, 0.0}, e2{0.0, 1.0}, diag{1.0, 1.0};
  CHECK(cosine(e1, e2) == 0.0);
  CHECK(cosine(diag, e1) == doctest::Approx(0.70710678).epsilon(1e-8));

  const std::vector<double> zero{0.0, 0.0};
  CHECK_THROWS_AS(cosine(e1, zero), Error);
  const std::vector<double> tiny{1e-13, 0.0};
  CHECK_THROWS_AS(cosine(tiny, e1), Error);
  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(cosine(e1, three), Error);
}

TEST_CASE("spearman hand values") {
  const std::vector<double> asc{1.0, 2.0, 3.0};
  CHECK(spearman(asc, asc) == 1.0);

  const std::vector<double> desc{3.0, 2.0, 1.0};
  CHECK(spearman(asc, desc) == -1.0);

  const std::vector<double> swapped{1.0, 3.0, 2.0};
  CHECK(spearman(asc, swapped) == 0.5);
}

TEST_CASE("spearman matches the brute-force rank definition") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> value(-5, 5);  // small range forces ties
  std::uniform_int_distribution<std::size_t> length(2, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = length(rng);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(value(rng));
      y[i] = static_cast<double>(value(rng));
    }
    const bool x_const = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
    const bool y_const = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (x_const || y_const) continue;
    CAPTURE(trial);
    CHECK(spearman(x, y) ==
          doctest::Approx(pearson(brute_force_ranks(x), brute_force_ranks(y))).epsilon(1e-12));
  }
}

TEST_CASE("spearman is invariant under strictly increasing transforms") {
  const std::vector<double> x{4.0, -1.0, 2.0, 2.0, 7.0};
  const std::vector<double> y{0.0, 3.0, -2.0, 5.0, 5.0};
  std::vector<double> cubed(y.size());
  std::transform(y.begin(), y.end(), cubed.begin(), [](double v) { return v * v * v; });
  CHECK(spearman(x, y) == spearman(x, cubed));
}

TEST_CASE("spearman rejects degenerate inputs") {
  const std::vector<double> constant{2.0, 2.0, 2.0};
  const std::vector<double> varied{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(spearman(constant, varied), Error);
  CHECK_THROWS_AS(spearman(varied, constant), Error);

  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(spearman(one, one), Error);
  const std::vector<double> two{1.0, 2.0};
  CHECK_THROWS_AS(spearman(two, varied), Error);
}

TEST_CASE("eval_similarity ranks model cosines against human scores") {
  // cos(a,b) ~ 0.8 > cos(b,c) ~ 0.6 > cos(a,c) = 0: same order as the scores.
  auto m = make_matrix({{"a", {1.0, 0.0}}, {"b", {0.8, 0.6}}, {"c", {0.0, 1.0}}});

  SimilarityDataset ds;
  ds.items = {{"a", "b", 3.0}, {"b", "c", 2.0}, {"a", "c", 1.0}};
  auto result = eval_similarity(m, ds);
  CHECK(result.metric == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.used == 3);
  CHECK(result.skipped == 0);

  SUBCASE("OOV pairs are skipped and counted") {
    ds.items[1] = {"b", "ghost", 2.0};
    auto partial = eval_similarity(m, ds);
    CHECK(partial.used == 2);
    CHECK(partial.skipped == 1);
    CHECK(partial.metric == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("all pairs OOV is an error") {
    ds.items = {{"ghost", "wraith", 1.0}, {"spook", "shade", 2.0}};
    CHECK_THROWS_WITH_AS(eval_similarity(m, ds), doctest::Contains("got 0"), Error);
  }

  SUBCASE("case folding recovers items") {
    ds.items = {{"A", "B", 3.0}, {"B", "C", 2.0}, {"A", "c", 1.0}};
    CHECK_THROWS_AS(eval_similarity(m, ds, false), Error);
    auto folded = eval_similarity(m, ds, true);
    CHECK(folded.used == 3);
    CHECK(folded.metric == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eval_analogy follows the offset query") {
  auto m = make_matrix(
      {{"a", {1.0, 1.0}}, {"b", {1.0, 0.0}}, {"c", {0.0, 1.0}}, {"d", {0.0, 2.0}}});

  AnalogyDataset ds;
  ds.items = {{"a", "b", "c", "d"}};  // query (1,1)-(1,0)+(0,1) = (0,2)
  auto result = eval_analogy(m, ds);
  CHECK(result.metric == 1.0);
  CHECK(result.used == 1);
  CHECK(result.skipped == 0);

  SUBCASE("OOV items are skipped") {
    ds.items.push_back({"a", "ghost", "c", "d"});
    auto partial = eval_analogy(m, ds);
    CHECK(partial.metric == 1.0);
    CHECK(partial.used == 1);
    CHECK(partial.skipped == 1);
  }

  SUBCASE("no usable items is an error") {
    ds.items = {{"ghost", "b", "c", "d"}};
    CHECK_THROWS_AS(eval_analogy(m, ds), Error);
  }
}

TEST_CASE("analogy direction flag flips the offset") {
  auto m = make_matrix({{"a", {2.0, 0.0}},
                        {"b", {1.0, 0.0}},
                        {"c", {0.0, 1.0}},
                        {"x", {1.0, 1.0}},
                        {"y", {-1.0, 1.0}}});
  AnalogyDataset ds;
  ds.items = {{"a", "b", "c", "x"}};

  // a - b + c = (1,1) picks x; b - a + c = (-1,1) picks y instead.
  CHECK(eval_analogy(m, ds, false, AnalogyDirection::kSubtractSecond).metric == 1.0);
  CHECK(eval_analogy(m, ds, false, AnalogyDirection::kSubtractFirst).metric == 0.0);
}

TEST_CASE("eval_analogy matches an exhaustive oracle") {
  std::mt19937_64 rng(67);
  auto m = test_util::random_matrix(20, 5, rng);
  std::uniform_int_distribution<std::size_t> pick(0, 19);
  std::uniform_int_distribution<int> coin(0, 1);

  for (AnalogyDirection direction :
       {AnalogyDirection::kSubtractSecond, AnalogyDirection::kSubtractFirst}) {
    AnalogyDataset ds;
    std::size_t expected_correct = 0, expected_skipped = 0;
    while (ds.items.size() < 50) {
      AnalogyItem item{m.vocab().token(pick(rng)), m.vocab().token(pick(rng)),
                       m.vocab().token(pick(rng)), m.vocab().token(pick(rng))};
      if (ds.items.size() % 7 == 3) item.d = "ghost";  // forced skip
      const std::size_t oracle = analogy_oracle(m, item, direction);
      if (oracle == SIZE_MAX) {
        ++expected_skipped;
      } else if (coin(rng)) {
        item.d = m.vocab().token(oracle);  // gold = oracle prediction
        ++expected_correct;
      } else if (m.vocab().find(item.d) == oracle) {
        ++expected_correct;
      }
      ds.items.push_back(std::move(item));
    }

    auto result = eval_analogy(m, ds, false, direction);
    const std::size_t expected_used = ds.items.size() - expected_skipped;
    CHECK(result.used == expected_used);
    CHECK(result.skipped == expected_skipped);
    CHECK(result.metric == static_cast<double>(expected_correct) /
                               static_cast<double>(expected_used));
  }
}

TEST_CASE("analogy accuracy is scale invariant") {
  std::mt19937_64 rng(71);
  auto m = test_util::random_matrix(15, 4, rng);
  std::uniform_int_distribution<std::size_t> pick(0, 14);
  AnalogyDataset ds;
  for (int i = 0; i < 30; ++i)
    ds.items.push_back({m.vocab().token(pick(rng)), m.vocab().token(pick(rng)),
                        m.vocab().token(pick(rng)), m.vocab().token(pick(rng))});

  auto scaled = m;
  for (double& v : scaled.values()) v *= 3.0;  // exact scaling, no new ties

  auto base = eval_analogy(m, ds);
  auto after = eval_analogy(scaled, ds);
  CHECK(base.metric == after.metric);
  CHECK(base.used == after.used);
}

TEST_CASE("eval_choice picks the nearest candidate") {
  auto m = make_matrix({{"target", {1.0, 0.0}},
                        {"same", {2.0, 0.0}},
                        {"ortho1", {0.0, 1.0}},
                        {"ortho2", {0.0, -1.0}}});

  ChoiceDataset ds;
  ds.items = {{"target", {"ortho1", "same", "ortho2"}, 1}};
  auto result = eval_choice(m, ds);
  CHECK(result.metric == 1.0);
  CHECK(result.used == 1);

  SUBCASE("OOV target skips the item") {
    ds.items.push_back({"ghost", {"same", "ortho1"}, 0});
    auto partial = eval_choice(m, ds);
    CHECK(partial.used == 1);
    CHECK(partial.skipped == 1);
    CHECK(partial.metric == 1.0);
  }

  SUBCASE("all candidates OOV predicts index 0") {
    ds.items = {{"target", {"ghost1", "ghost2"}, 0}, {"target", {"ghost1", "ghost2"}, 1}};
    auto blind = eval_choice(m, ds);
    CHECK(blind.used == 2);
    CHECK(blind.metric == 0.5);
  }

  SUBCASE("ties break toward the lowest index") {
    ds.items = {{"target", {"same", "same"}, 0}, {"target", {"same", "same"}, 1}};
    auto tied = eval_choice(m, ds);
    CHECK(tied.metric == 0.5);
  }

  SUBCASE("no usable items is an error") {
    ds.items = {{"ghost", {"same", "ortho1"}, 0}};
    CHECK_THROWS_AS(eval_choice(m, ds), Error);
  }
}

TEST_CASE("synonym pick on the classic furniture line") {
  auto m = make_matrix({{"rug", {1.0, 0.0}},
                        {"sofa", {0.6, 0.8}},
                        {"ottoman", {0.5, 0.87}},
                        {"carpet", {0.99, 0.1}},
                        {"hallway", {0.0, 1.0}}});
  std::istringstream in("rug | sofa ottoman carpet hallway | 2\n");
  auto ds = parse_choice(in);
  REQUIRE(ds.items.size() == 1);
  CHECK(ds.items[0].gold == 2);
  CHECK(eval_choice(m, ds).metric == 1.0);
}

TEST_CASE("eval_choice matches an exhaustive oracle") {
  std::mt19937_64 rng(73);
  auto m = test_util::random_matrix(20, 5, rng);
  std::uniform_int_distribution<std::size_t> pick(0, 19);
  std::uniform_int_distribution<std::size_t> n_cands(2, 6);
  std::uniform_int_distribution<int> coin(0, 1);

  ChoiceDataset ds;
  std::size_t expected_correct = 0, expected_skipped = 0;
  while (ds.items.size() < 50) {
    ChoiceItem item;
    item.target = ds.items.size() % 9 == 4 ? "ghost" : m.vocab().token(pick(rng));
    const std::size_t cands = n_cands(rng);
    for (std::size_t c = 0; c < cands; ++c)
      item.candidates.push_back(coin(rng) ? m.vocab().token(pick(rng)) : "ghost");
    item.gold = pick(rng) % cands;

    const std::size_t oracle = choice_oracle(m, item);
    if (oracle == SIZE_MAX) {
      ++expected_skipped;
    } else if (coin(rng)) {
      item.gold = oracle;
      ++expected_correct;
    } else if (item.gold == oracle) {
      ++expected_correct;
    }
    ds.items.push_back(std::move(item));
  }

  auto result = eval_choice(m, ds);
  const std::size_t expected_used = ds.items.size() - expected_skipped;
  CHECK(result.used == expected_used);
  CHECK(result.skipped == expected_skipped);
  CHECK(result.metric ==
        static_cast<double>(expected_correct) / static_cast<double>(expected_used));
}

TEST_CASE("project_2d collapses identical vectors to the origin") {
  auto m = make_matrix(
      {{"p", {1.0, 2.0, 3.0}}, {"q", {1.0, 2.0, 3.0}}, {"r", {1.0, 2.0, 3.0}}});
  auto points = project_2d(m, {"p", "q", "r"});
  REQUIRE(points.size() == 3);
  for (const auto& p : points) {
    CHECK(std::abs(p.x) < 1e-12);
    CHECK(std::abs(p.y) < 1e-12);
  }
}

TEST_CASE("project_2d keeps rank-1 data on one axis") {
  const std::size_t d = 10;
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> dir(d);
  for (double& v : dir) v = uni(rng);

  const std::vector<double> ts{0.0, 1.0, 2.5, -1.0};
  Vocabulary vocab;
  std::vector<double> values;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    vocab.add("t" + std::to_string(i));
    for (double v : dir) values.push_back(ts[i] * v);
  }
  EmbeddingMatrix m(std::move(vocab), d, std::move(values));

  auto points = project_2d(m, {"t0", "t1", "t2", "t3"});
  double dir_norm = 0.0;
  for (double v : dir) dir_norm += v * v;
  dir_norm = std::sqrt(dir_norm);
  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(std::abs(points[i].y) < 1e-8);
    for (std::size_t j = 0; j < i; ++j) {
      const double original = std::abs(ts[i] - ts[j]) * dir_norm;
      const double projected = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      CHECK(projected == doctest::Approx(original).epsilon(1e-8));
    }
  }
}

TEST_CASE("project_2d is non-expansive and variance-bounded") {
  std::mt19937_64 rng(83);
  auto m = test_util::random_matrix(8, 12, rng);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < 8; ++i) tokens.push_back(m.vocab().token(i));

  auto points = project_2d(m, tokens);
  REQUIRE(points.size() == 8);

  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double original = 0.0;
      for (std::size_t k = 0; k < 12; ++k) {
        const double delta = m.row(i)[k] - m.row(j)[k];
        original += delta * delta;
      }
      const double projected = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      CHECK(projected <= std::sqrt(original) + 1e-9);
    }
  }

  // Total projected variance never exceeds the centered total variance.
  std::vector<double> mean(12, 0.0);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 12; ++k) mean[k] += m.row(i)[k] / 8.0;
  double total = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 12; ++k) {
      const double delta = m.row(i)[k] - mean[k];
      total += delta * delta;
    }
  double projected_total = 0.0;
  for (const auto& p : points) projected_total += p.x * p.x + p.y * p.y;
  CHECK(projected_total <= total + 1e-9);
}

TEST_CASE("project_2d agrees with the covariance-route PCA") {
  std::mt19937_64 rng(89);
  auto m = test_util::random_matrix(7, 5, rng);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < 7; ++i) tokens.push_back(m.vocab().token(i));
  auto points = project_2d(m, tokens);

  Eigen::MatrixXd x(7, 5);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t k = 0; k < 5; ++k) x(i, k) = m.row(i)[k];
  x.rowwise() -= x.colwise().mean();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(x.transpose() * x);
  REQUIRE(eig.info() == Eigen::Success);

  Eigen::MatrixXd coords(7, 2);
  coords.col(0) = x * eig.eigenvectors().col(4);  // eigenvalues ascend
  coords.col(1) = x * eig.eigenvectors().col(3);
  for (int c = 0; c < 2; ++c) {
    Eigen::Index at = 0;
    coords.col(c).cwiseAbs().maxCoeff(&at);
    if (coords(at, c) < 0.0) coords.col(c) = -coords.col(c);
  }

  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(points[i].x == doctest::Approx(coords(static_cast<Eigen::Index>(i), 0)).epsilon(1e-8));
    CHECK(points[i].y == doctest::Approx(coords(static_cast<Eigen::Index>(i), 1)).epsilon(1e-8));
  }
}

TEST_CASE("project_2d output is deterministic with positive leading signs") {
  std::mt19937_64 rng(97);
  auto m = test_util::random_matrix(6, 9, rng);
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < 6; ++i) tokens.push_back(m.vocab().token(i));

  auto first = project_2d(m, tokens);
  auto second = project_2d(m, tokens);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(first[i].x == second[i].x);
    CHECK(first[i].y == second[i].y);
  }

  double max_x = 0.0, max_y = 0.0;
  for (const auto& p : first) {
    if (std::abs(p.x) > std::abs(max_x)) max_x = p.x;
    if (std::abs(p.y) > std::abs(max_y)) max_y = p.y;
  }
  CHECK(max_x > 0.0);
  CHECK(max_y > 0.0);
}

TEST_CASE("project_2d input validation") {
  auto m = make_matrix({{"p", {1.0}}, {"q", {2.0}}, {"r", {3.0}}});
  CHECK_THROWS_WITH_AS(project_2d(m, {"p", "q"}), doctest::Contains("at least 3"), Error);

  CHECK_THROWS_WITH_AS(project_2d(m, {"p", "ghost", "wraith"}),
                       doctest::Contains("'ghost', 'wraith'"), Error);
}

TEST_CASE("similarity parser") {
  std::istringstream good("cat dog 8.5\n\nbird stone 1.25\n");
  auto ds = parse_similarity(good, "sim");
  REQUIRE(ds.items.size() == 2);
  CHECK(ds.items[0].a == "cat");
  CHECK(ds.items[0].human_score == 8.5);
  CHECK(ds.items[1].b == "stone");

  std::istringstream short_line("cat dog\n");
  CHECK_THROWS_WITH_AS(parse_similarity(short_line, "sim"), doctest::Contains("sim:1"), Error);

  std::istringstream bad_score("cat dog high\n");
  CHECK_THROWS_AS(parse_similarity(bad_score, "sim"), Error);

  std::istringstream nan_score("cat dog nan\n");
  CHECK_THROWS_AS(parse_similarity(nan_score, "sim"), Error);

  std::istringstream empty("\n\n");
  CHECK_THROWS_WITH_AS(parse_similarity(empty, "sim"), doctest::Contains("empty"), Error);

  CHECK_THROWS_AS(parse_similarity_file("/nonexistent/sim.txt"), Error);
}

TEST_CASE("analogy parser") {
  std::istringstream good("king queen man woman\nparis france rome italy\n");
  auto ds = parse_analogy(good);
  REQUIRE(ds.items.size() == 2);
  CHECK(ds.items[1].c == "rome");

  std::istringstream bad("king queen man\n");
  CHECK_THROWS_AS(parse_analogy(bad), Error);

  std::istringstream empty("");
  CHECK_THROWS_AS(parse_analogy(empty), Error);
}

TEST_CASE("choice parser") {
  std::istringstream good("rug | sofa ottoman carpet hallway | 2\n");
  auto ds = parse_choice(good);
  REQUIRE(ds.items.size() == 1);
  CHECK(ds.items[0].target == "rug");
  CHECK(ds.items[0].candidates ==
        std::vector<std::string>{"sofa", "ottoman", "carpet", "hallway"});
  CHECK(ds.items[0].gold == 2);

  std::istringstream no_pipes("rug sofa ottoman 2\n");
  CHECK_THROWS_AS(parse_choice(no_pipes), Error);

  std::istringstream one_pipe("rug | sofa ottoman 2\n");
  CHECK_THROWS_AS(parse_choice(one_pipe), Error);

  std::istringstream one_cand("rug | sofa | 0\n");
  CHECK_THROWS_WITH_AS(parse_choice(one_cand), doctest::Contains("two candidates"), Error);

  std::istringstream bad_gold("rug | sofa ottoman | x\n");
  CHECK_THROWS_AS(parse_choice(bad_gold), Error);

  std::istringstream out_of_range("rug | sofa ottoman | 2\n");
  CHECK_THROWS_WITH_AS(parse_choice(out_of_range), doctest::Contains("out of range"), Error);

  std::istringstream two_targets("shag rug | sofa ottoman | 0\n");
  CHECK_THROWS_AS(parse_choice(two_targets), Error);
}
