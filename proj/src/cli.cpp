#include "rinclose/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rinclose/datagen.hpp"
#include "rinclose/enumerate.hpp"
#include "rinclose/io.hpp"
#include "rinclose/metrics.hpp"
#include "rinclose/oracle.hpp"

namespace rinclose {

namespace {

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("RINCLOSE_LOG");
  if (env == nullptr) return LogLevel::Info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

// Raised for flag combinations that parse but make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MineArgs {
  std::string alg;
  double epsilon = 0.0;
  std::size_t min_rows = 1;
  std::size_t min_cols = 1;
  std::string input;
  std::string output;
  std::string model = "shift";
  bool header = false;
};

struct GenerateArgs {
  GenConfig config;
  std::string pattern = "chv-shift";
  std::string out_matrix;
  std::string out_truth;
};

struct EvalArgs {
  std::string found;
  std::string reference;
  std::string solution;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool pairs = false;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

int run_mine(const MineArgs& a, std::ostream& out, std::ostream& err) {
  EnumParams params;
  std::string type_name = a.alg;
  const bool use_oracle = type_name.rfind("oracle:", 0) == 0;
  if (use_oracle) type_name = type_name.substr(7);
  try {
    params.type = parse_bic_type(type_name);
    params.model = parse_model(a.model);
    params.epsilon = a.epsilon;
    params.min_row = a.min_rows;
    params.min_col = a.min_cols;
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const NumericMatrix matrix = io::read_matrix(a.input, a.header);
  const BiclusterSolution solution =
      use_oracle ? oracle_enumerate(matrix, params) : enumerate(matrix, params);
  emit(a.output, io::biclusters_to_json(solution.biclusters), out);

  const LogLevel level = log_level();
  if (level != LogLevel::Quiet) {
    err << "mined " << solution.stats.biclusters << " biclusters in " << std::fixed
        << std::setprecision(3) << solution.stats.seconds << " s, " << solution.stats.nodes
        << " nodes\n";
    err.unsetf(std::ios::floatfield);
  }
  if (level == LogLevel::Debug) {
    err << "alg=" << a.alg << " model=" << to_string(params.model) << " epsilon=" << params.epsilon
        << " min_rows=" << params.min_row << " min_cols=" << params.min_col << " input "
        << matrix.rows() << "x" << matrix.cols() << "\n";
  }
  return kExitOk;
}

int run_generate(GenerateArgs a, std::ostream& err) {
  try {
    a.config.pattern = parse_pattern(a.pattern);
    a.config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const GeneratedData data = generate(a.config);
  io::write_matrix(a.out_matrix, data.matrix);
  io::write_text(a.out_truth, io::biclusters_to_json(data.truth.biclusters));
  if (log_level() != LogLevel::Quiet) {
    double worst = 0.0;
    for (double r : data.residues) worst = std::max(worst, r);
    err << "generated " << a.config.n << "x" << a.config.m << " matrix with "
        << data.truth.biclusters.size() << " planted biclusters, max residue " << worst << "\n";
  }
  return kExitOk;
}

int run_evaluate(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const auto found = io::read_biclusters(a.found);
  const auto reference = io::read_biclusters(a.reference);
  const PrecisionRecall pr = precision_recall(found, reference, a.rows, a.cols);
  if (pr.empty_input) err << "warning: empty solution; its ratio is reported as 0\n";
  nlohmann::json j = {{"precision", pr.precision},
                      {"recall", pr.recall},
                      {"found_biclusters", found.size()},
                      {"reference_biclusters", reference.size()}};
  out << j.dump() << "\n";
  return kExitOk;
}

int run_report(const EvalArgs& a, std::ostream& out) {
  const auto bics = io::read_biclusters(a.solution);
  const SolutionReport r = solution_report(bics, a.rows, a.cols);
  nlohmann::json j = {{"coverage_cells", r.coverage_cells},
                      {"coverage_fraction", r.coverage_fraction},
                      {"global_overlap", r.global_overlap},
                      {"num_biclusters", r.num_biclusters}};
  if (a.pairs) j["pairwise_overlaps"] = pairwise_overlaps(bics);
  out << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerates all maximal biclusters of numerical matrices", "rinclose"};
  app.require_subcommand(1);

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Enumerate maximal biclusters");
  mine_cmd
      ->add_option("--alg", mine.alg,
                   "ctv-binary, cvc-p, cvc, cvr-p, cvr, chv-p, chv, or oracle:<type> "
                   "(brute force, small inputs only)")
      ->required();
  mine_cmd->add_option("--epsilon", mine.epsilon, "Maximum residue")->check(CLI::NonNegativeNumber);
  mine_cmd->add_option("--min-rows", mine.min_rows, "Minimum rows per bicluster")
      ->check(CLI::PositiveNumber);
  mine_cmd->add_option("--min-cols", mine.min_cols, "Minimum columns per bicluster")
      ->check(CLI::PositiveNumber);
  mine_cmd->add_option("--input", mine.input, "CSV or TSV matrix")->required();
  mine_cmd->add_option("--output", mine.output, "JSON output path (default: stdout)");
  mine_cmd->add_option("--model", mine.model, "CHV model: shift or scale");
  mine_cmd->add_flag("--header", mine.header, "Skip the first line of the input");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a matrix with planted biclusters");
  gen_cmd->add_option("--rows", gen.config.n, "Matrix rows");
  gen_cmd->add_option("--cols", gen.config.m, "Matrix columns");
  gen_cmd->add_option("--bics", gen.config.num_bics, "Number of planted biclusters");
  gen_cmd->add_option("--bic-rows", gen.config.bic_rows, "Rows per planted bicluster");
  gen_cmd->add_option("--bic-cols", gen.config.bic_cols, "Columns per planted bicluster");
  gen_cmd->add_option("--overlap", gen.config.overlap, "Fraction shared by consecutive biclusters");
  gen_cmd->add_option("--sigma", gen.config.noise_sigma, "Gaussian noise standard deviation");
  gen_cmd->add_option("--seed", gen.config.seed, "Random seed");
  gen_cmd->add_option("--pattern", gen.pattern, "cvc or chv-shift");
  gen_cmd->add_option("--out-matrix", gen.out_matrix, "CSV matrix path")->required();
  gen_cmd->add_option("--out-truth", gen.out_truth, "JSON ground-truth path")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Precision and recall against a reference");
  eval_cmd->add_option("--found", eval.found, "Found biclusters (JSON)")->required();
  eval_cmd->add_option("--reference", eval.reference, "Reference biclusters (JSON)")->required();
  eval_cmd->add_option("--rows", eval.rows, "Matrix rows")->required();
  eval_cmd->add_option("--cols", eval.cols, "Matrix columns")->required();

  EvalArgs rep;
  auto* rep_cmd = app.add_subcommand("report", "Coverage and overlap of a solution");
  rep_cmd->add_option("--solution", rep.solution, "Biclusters (JSON)")->required();
  rep_cmd->add_option("--rows", rep.rows, "Matrix rows")->required();
  rep_cmd->add_option("--cols", rep.cols, "Matrix columns")->required();
  rep_cmd->add_flag("--pairs", rep.pairs, "Include every pairwise overlap");

  std::vector<const char*> argv{"rinclose"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return run_mine(mine, out, err);
    if (gen_cmd->parsed()) return run_generate(gen, err);
    if (eval_cmd->parsed()) return run_evaluate(eval, out, err);
    return run_report(rep, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace rinclose
