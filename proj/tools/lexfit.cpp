#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lexfit/embeddings.h"
#include "lexfit/error.h"
#include "lexfit/eval.h"
#include "lexfit/lexicon.h"
#include "lexfit/manifest.h"
#include "lexfit/retrofit.h"

namespace {

std::string double_str(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, ptr};
}

bool is_integer(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// First whitespace field of each line. A leading "count dim" header line is
// skipped so embedding files double as token lists.
std::vector<std::string> read_token_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lexfit::Error("cannot open token file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  bool first_content = true;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first_content) {
      first_content = false;
      std::string second, extra;
      if (fields >> second && !(fields >> extra) && is_integer(first) && is_integer(second))
        continue;
    }
    tokens.push_back(std::move(first));
  }
  if (in.bad()) throw lexfit::Error(path + ": read failure");
  return tokens;
}

lexfit::Vocabulary to_vocabulary(const std::vector<std::string>& tokens) {
  lexfit::Vocabulary vocab;
  for (const auto& token : tokens)
    if (!vocab.contains(token)) vocab.add(token);
  return vocab;
}

lexfit::LexiconGraph load_lexicons(const std::vector<std::string>& paths) {
  lexfit::LexiconGraph combined;
  for (const auto& path : paths)
    combined = lexfit::graph_union(combined, lexfit::parse_lexicon_file(path));
  return combined;
}

struct RetrofitArgs {
  std::string vectors;
  std::vector<std::string> lexicons;
  std::string output;
  std::string manifest;
  std::size_t iterations = 10;
  std::string beta = "inverse-degree";
  double beta_value = 1.0;
  double alpha = 1.0;
  double tolerance = 0.0;
  bool has_tolerance = false;
  bool normalize = false;
  bool fold_case = false;
  bool keep_first = false;
};

void run_retrofit(const RetrofitArgs& args) {
  const auto start = std::chrono::steady_clock::now();

  std::size_t dropped = 0;
  auto q_hat = lexfit::read_embeddings_file(
      args.vectors,
      args.keep_first ? lexfit::DuplicatePolicy::kKeepFirst : lexfit::DuplicatePolicy::kError,
      &dropped);
  if (dropped > 0)
    std::cerr << args.vectors << ": dropped " << dropped << " duplicate token line(s)\n";
  if (args.normalize) q_hat = lexfit::normalize_rows(std::move(q_hat));

  const auto graph =
      lexfit::restrict_to_vocab(load_lexicons(args.lexicons), q_hat.vocab(), args.fold_case);

  lexfit::RetrofitConfig config;
  config.iterations = args.iterations;
  config.scheme.alpha = args.alpha;
  if (args.beta == "constant") {
    config.scheme.beta_rule = lexfit::WeightScheme::BetaRule::kConstant;
    config.scheme.beta_constant = args.beta_value;
  }
  if (args.has_tolerance) config.tolerance = args.tolerance;

  auto result = lexfit::retrofit(q_hat, graph, config);
  lexfit::write_embeddings_file(result.vectors, args.output);

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << "vocab=" << q_hat.size() << " dim=" << q_hat.dim() << " edges=" << graph.edge_count
            << " sweeps=" << result.sweep_changes.size() << " last_change="
            << double_str(result.sweep_changes.empty() ? 0.0 : result.sweep_changes.back())
            << "\n";

  if (args.manifest.empty()) return;
  lexfit::RunManifest manifest;
  manifest.command = "retrofit";
  manifest.add_flag("vectors", args.vectors);
  for (const auto& path : args.lexicons) manifest.add_flag("lexicon", path);
  manifest.add_flag("output", args.output);
  manifest.add_flag("iterations", std::to_string(args.iterations));
  manifest.add_flag("beta", args.beta);
  if (args.beta == "constant") manifest.add_flag("beta-value", double_str(args.beta_value));
  manifest.add_flag("alpha", double_str(args.alpha));
  if (args.has_tolerance) manifest.add_flag("tolerance", double_str(args.tolerance));
  manifest.add_flag("normalize", args.normalize ? "true" : "false");
  manifest.add_flag("fold-case", args.fold_case ? "true" : "false");
  manifest.add_flag("keep-first", args.keep_first ? "true" : "false");
  manifest.add_input(args.vectors);
  for (const auto& path : args.lexicons) manifest.add_input(path);
  manifest.iterations = result.sweep_changes.size();
  manifest.sweep_changes = result.sweep_changes;
  manifest.duration_seconds = elapsed.count();
  manifest.write_file(args.manifest);
}

void setup_retrofit(CLI::App& app) {
  auto args = std::make_shared<RetrofitArgs>();
  auto* cmd = app.add_subcommand("retrofit", "Pull word vectors toward their lexicon neighbors");
  cmd->add_option("--vectors", args->vectors, "input word vectors, text format")->required();
  cmd->add_option("--lexicon", args->lexicons, "lexicon edge list; repeat to take the union")
      ->required();
  cmd->add_option("--output", args->output, "where to write the retrofitted vectors")->required();
  cmd->add_option("--iterations", args->iterations, "number of sweeps (default 10)");
  cmd->add_option("--beta", args->beta, "neighbor weight rule")
      ->check(CLI::IsMember({"inverse-degree", "constant"}));
  cmd->add_option("--beta-value", args->beta_value, "neighbor weight for --beta constant");
  cmd->add_option("--alpha", args->alpha, "anchor weight (default 1)");
  auto* tolerance =
      cmd->add_option("--tolerance", args->tolerance, "stop early once a sweep moves less");
  cmd->add_flag("--normalize", args->normalize, "unit-normalize rows before retrofitting");
  cmd->add_flag("--fold-case", args->fold_case, "match lexicon tokens case-insensitively");
  cmd->add_flag("--keep-first", args->keep_first, "keep the first of duplicate vector lines");
  cmd->add_option("--manifest", args->manifest, "write a key=value run manifest");
  cmd->callback([args, tolerance] {
    args->has_tolerance = tolerance->count() > 0;
    run_retrofit(*args);
  });
}

struct EvalArgs {
  std::string vectors;
  std::string task;
  std::string dataset;
  std::string direction = "a-b+c";
  bool fold_case = false;
};

void run_eval(const EvalArgs& args) {
  const auto m = lexfit::read_embeddings_file(args.vectors);
  lexfit::EvalResult result;
  if (args.task == "sim") {
    result = lexfit::eval_similarity(m, lexfit::parse_similarity_file(args.dataset),
                                     args.fold_case);
  } else if (args.task == "analogy") {
    const auto direction = args.direction == "b-a+c"
                               ? lexfit::AnalogyDirection::kSubtractFirst
                               : lexfit::AnalogyDirection::kSubtractSecond;
    result = lexfit::eval_analogy(m, lexfit::parse_analogy_file(args.dataset), args.fold_case,
                                  direction);
  } else {
    result = lexfit::eval_choice(m, lexfit::parse_choice_file(args.dataset), args.fold_case);
  }
  std::cout << "metric=" << std::fixed << std::setprecision(4) << result.metric
            << " used=" << result.used << " skipped=" << result.skipped << "\n";
}

void setup_eval(CLI::App& app) {
  auto args = std::make_shared<EvalArgs>();
  auto* cmd = app.add_subcommand("eval", "Score vectors on a benchmark dataset");
  cmd->add_option("--vectors", args->vectors, "word vectors, text format")->required();
  cmd->add_option("--task", args->task, "benchmark type")
      ->required()
      ->check(CLI::IsMember({"sim", "analogy", "choice"}));
  cmd->add_option("--dataset", args->dataset, "benchmark file")->required();
  cmd->add_option("--direction", args->direction, "analogy query: a-b+c or b-a+c")
      ->check(CLI::IsMember({"a-b+c", "b-a+c"}));
  cmd->add_flag("--fold-case", args->fold_case, "match dataset tokens case-insensitively");
  cmd->callback([args] { run_eval(*args); });
}

struct StatsArgs {
  std::vector<std::string> lexicons;
  std::string vocab;
  bool fold_case = false;
};

void run_stats(const StatsArgs& args) {
  const auto lexicon = load_lexicons(args.lexicons);
  const auto full = lexfit::stats(lexicon);
  std::cout << "words=" << full.words << " edges=" << full.edges << "\n";

  if (args.vocab.empty()) return;
  const auto vocab = to_vocabulary(read_token_list(args.vocab));
  const auto restricted = lexfit::stats(lexfit::restrict_to_vocab(lexicon, vocab, args.fold_case));
  std::cout << "words=" << restricted.words << " edges=" << restricted.edges << "\n";
}

void setup_stats(CLI::App& app) {
  auto args = std::make_shared<StatsArgs>();
  auto* cmd = app.add_subcommand("lexicon-stats", "Count lexicon words and edges");
  cmd->add_option("--lexicon", args->lexicons, "lexicon edge list; repeat to take the union")
      ->required();
  cmd->add_option("--vocab", args->vocab,
                  "token list; also print counts restricted to this vocabulary");
  cmd->add_flag("--fold-case", args->fold_case, "restrict case-insensitively");
  cmd->callback([args] { run_stats(*args); });
}

struct ProjectArgs {
  std::string vectors;
  std::string tokens;
  std::string output;
};

void run_project(const ProjectArgs& args) {
  const auto m = lexfit::read_embeddings_file(args.vectors);
  const auto points = lexfit::project_2d(m, read_token_list(args.tokens));

  std::ofstream out(args.output, std::ios::binary);
  if (!out) throw lexfit::Error("cannot open output file '" + args.output + "'");
  for (const auto& p : points)
    out << p.token << '\t' << double_str(p.x) << '\t' << double_str(p.y) << '\n';
  if (!out.flush()) throw lexfit::Error("write failure on '" + args.output + "'");
}

void setup_project(CLI::App& app) {
  auto args = std::make_shared<ProjectArgs>();
  auto* cmd = app.add_subcommand("project", "Project selected vectors to 2-D for plotting");
  cmd->add_option("--vectors", args->vectors, "word vectors, text format")->required();
  cmd->add_option("--tokens", args->tokens, "file listing the tokens to project")->required();
  cmd->add_option("--output", args->output, "tab-separated token/x/y output")->required();
  cmd->callback([args] { run_project(*args); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retrofit word vectors to semantic lexicons and evaluate the result"};
  app.require_subcommand(1);

  setup_retrofit(app);
  setup_eval(app);
  setup_stats(app);
  setup_project(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const lexfit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
