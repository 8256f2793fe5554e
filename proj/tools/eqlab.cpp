// Command-line entry point: dataset generation, pretraining, experiment
// runs, grid search, and analytic verification.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqlab/analytic.hpp"
#include "eqlab/harness.hpp"
#include "eqlab/io.hpp"
#include "eqlab/rng.hpp"

namespace fs = std::filesystem;
using eqlab::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitIo = 3;
constexpr int kExitProperty = 4;

constexpr int kSchemaVersion = 1;

fs::path output_root() {
  if (const char* env = std::getenv("EQLAB_OUT")) return fs::path(env);
  return fs::path("out");
}

struct CommonOpts {
  std::string out;
  std::uint64_t seed = 1;

  fs::path out_dir(const std::string& fallback) const {
    return out.empty() ? output_root() / fallback : fs::path(out);
  }
};

eqlab::SchemeConfig make_scheme(const std::string& name, int pretrain_tasks,
                                std::uint64_t seed) {
  eqlab::SchemeConfig s;
  s.scheme = eqlab::scheme_from_name(name);
  s.pretrain_tasks = pretrain_tasks;
  s.pretrain.seed = seed;
  return s;
}

// --------------------------------------------------------------------------
// Config file handling. Flags override file values override defaults; the
// merged config is echoed into the summary JSON.

const std::set<std::string> kRunKeys = {
    "schema_version", "experiment", "scheme", "pretrain_tasks",
    "input_dim", "hidden_dim", "lr", "l2", "seeds", "budget", "schedule",
    "train_vocab", "assess_vocab", "eval_size", "module_pretrain_budget",
    "stop_when_test_at_least", "jobs", "grid", "seeds_per_cell"};
const std::set<std::string> kGridKeys = {"lrs", "l2s", "input_dims",
                                         "hidden_dims"};

void check_keys(const Json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw eqlab::ConfigError("unknown key in " + where + ": " + key);
    }
  }
}

struct LoadedConfig {
  eqlab::RunConfig run;
  eqlab::HyperGrid grid;
  int seeds_per_cell = 5;
  std::string scheme_name = "random";
};

LoadedConfig load_config(const std::string& path) {
  LoadedConfig out;
  if (path.empty()) {
    out.run.scheme = make_scheme(out.scheme_name, 0, out.run.seeds.front());
    return out;
  }
  Json j = eqlab::read_json_file(path);
  if (!j.is_object()) throw eqlab::ConfigError("config must be an object");
  check_keys(j, kRunKeys, "config");
  if (!j.contains("schema_version")) {
    throw eqlab::ConfigError("config is missing schema_version");
  }
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw eqlab::ConfigError("unsupported schema_version");
  }
  auto& c = out.run;
  if (j.contains("experiment")) {
    c.experiment =
        eqlab::experiment_from_name(j.at("experiment").get<std::string>());
  }
  if (j.contains("scheme")) out.scheme_name = j.at("scheme").get<std::string>();
  int pretrain_tasks = j.value("pretrain_tasks", 0);
  if (j.contains("input_dim")) c.input_dim = j.at("input_dim").get<int>();
  if (j.contains("hidden_dim")) c.hidden_dim = j.at("hidden_dim").get<int>();
  if (j.contains("lr")) c.lr = j.at("lr").get<double>();
  if (j.contains("l2")) c.l2 = j.at("l2").get<double>();
  if (j.contains("seeds")) {
    c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  }
  if (j.contains("budget")) c.budget = j.at("budget").get<long long>();
  if (j.contains("schedule")) {
    c.schedule = j.at("schedule").get<std::vector<long long>>();
  }
  if (j.contains("train_vocab")) c.train_vocab = j.at("train_vocab").get<int>();
  if (j.contains("assess_vocab")) {
    c.assess_vocab = j.at("assess_vocab").get<int>();
  }
  if (j.contains("eval_size")) c.eval_size = j.at("eval_size").get<int>();
  if (j.contains("module_pretrain_budget")) {
    c.module_pretrain_budget = j.at("module_pretrain_budget").get<long long>();
  }
  if (j.contains("stop_when_test_at_least")) {
    c.stop_when_test_at_least = j.at("stop_when_test_at_least").get<double>();
  }
  if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    check_keys(g, kGridKeys, "config.grid");
    if (g.contains("lrs")) out.grid.lrs = g.at("lrs").get<std::vector<double>>();
    if (g.contains("l2s")) out.grid.l2s = g.at("l2s").get<std::vector<double>>();
    if (g.contains("input_dims")) {
      out.grid.input_dims = g.at("input_dims").get<std::vector<int>>();
    }
    if (g.contains("hidden_dims")) {
      out.grid.hidden_dims = g.at("hidden_dims").get<std::vector<int>>();
    }
  }
  if (j.contains("seeds_per_cell")) {
    out.seeds_per_cell = j.at("seeds_per_cell").get<int>();
  }
  c.scheme = make_scheme(out.scheme_name, pretrain_tasks, c.seeds.front());
  return out;
}

Json config_to_json(const eqlab::RunConfig& c) {
  return Json{{"schema_version", kSchemaVersion},
              {"experiment", eqlab::experiment_name(c.experiment)},
              {"scheme", eqlab::scheme_name(c.scheme.scheme)},
              {"pretrain_tasks", c.scheme.pretrain_tasks},
              {"input_dim", c.input_dim},
              {"hidden_dim", c.hidden_dim},
              {"lr", c.lr},
              {"l2", c.l2},
              {"seeds", c.seeds},
              {"budget", c.budget},
              {"schedule", c.resolved_schedule()},
              {"train_vocab", c.resolved_train_vocab()},
              {"assess_vocab", c.resolved_assess_vocab()},
              {"eval_size", c.eval_size},
              {"module_pretrain_budget", c.module_pretrain_budget},
              {"stop_when_test_at_least", c.stop_when_test_at_least},
              {"jobs", c.jobs}};
}

// --------------------------------------------------------------------------
// gen

int cmd_gen(const CommonOpts& common, const std::string& task,
            const std::string& scheme, int pretrain_tasks, int dim,
            int train_vocab, int test_vocab, int train_size, int test_size) {
  auto scheme_cfg = make_scheme(scheme, pretrain_tasks, common.seed);
  fs::path dir = common.out_dir("gen-" + task);

  Json header{{"schema_version", kSchemaVersion},
              {"task", task},
              {"scheme", scheme},
              {"pretrain_tasks", pretrain_tasks},
              {"dim", dim},
              {"train_vocab", train_vocab},
              {"assess_vocab", test_vocab},
              {"train_size", train_size},
              {"test_size", test_size},
              {"seed", common.seed}};

  std::ostringstream train_lines;
  std::ostringstream test_lines;
  if (task == "equality") {
    auto split = eqlab::make_split(train_vocab, test_vocab, dim, scheme_cfg,
                                   common.seed);
    for (const auto& e : eqlab::equality_stream(
             split, train_size, eqlab::derive_seed(common.seed, "stream"))) {
      train_lines << eqlab::equality_example_to_json(e).dump() << '\n';
    }
    for (const auto& e : eqlab::equality_testset(
             split, test_size, eqlab::derive_seed(common.seed, "test-set"))) {
      test_lines << eqlab::equality_example_to_json(e).dump() << '\n';
    }
  } else if (task == "hier") {
    auto split = eqlab::make_split(train_vocab, test_vocab, dim, scheme_cfg,
                                   common.seed);
    for (const auto& e : eqlab::hier_stream(
             split, train_size, eqlab::derive_seed(common.seed, "stream"))) {
      train_lines << eqlab::hier_example_to_json(e).dump() << '\n';
    }
    for (const auto& e : eqlab::hier_testset(
             split, test_size, eqlab::derive_seed(common.seed, "test-set"))) {
      test_lines << eqlab::hier_example_to_json(e).dump() << '\n';
    }
  } else if (task == "aba") {
    auto split = eqlab::make_split(train_vocab, test_vocab, dim, scheme_cfg,
                                   common.seed);
    int n_train = 0;
    for (const auto& s : eqlab::aba_train_set(split)) {
      train_lines << eqlab::sequence_example_to_json(s).dump() << '\n';
      ++n_train;
    }
    int n_prompts = 0;
    for (const auto& p : eqlab::aba_test_prompts(split)) {
      test_lines << Json{{"tokens", p}}.dump() << '\n';
      ++n_prompts;
    }
    header["train_size"] = n_train;
    header["test_size"] = n_prompts;
  } else {
    throw eqlab::ConfigError("unknown task: " + task);
  }

  eqlab::write_text_file(dir / "train.jsonl", train_lines.str());
  eqlab::write_text_file(dir / "test.jsonl", test_lines.str());
  eqlab::write_json_file(dir / "header.json", header);
  std::cout << "wrote " << (dir / "train.jsonl").string() << ", test.jsonl, "
            << "header.json\n";
  return kExitOk;
}

// --------------------------------------------------------------------------
// run / grid

int cmd_run(const eqlab::RunConfig& cfg, const fs::path& dir) {
  cfg.validate();
  auto curve = eqlab::run(cfg);
  eqlab::write_text_file(dir / "results.csv",
                         eqlab::results_csv_header() +
                             eqlab::curve_to_csv(curve));
  Json summary{{"config", config_to_json(cfg)},
               {"records", curve.records.size()}};
  eqlab::write_json_file(dir / "summary.json", summary);
  std::cout << "wrote " << (dir / "results.csv").string() << " ("
            << curve.records.size() << " records)\n";
  return kExitOk;
}

int cmd_grid(const eqlab::RunConfig& base, const eqlab::HyperGrid& grid,
             int seeds_per_cell, const fs::path& dir) {
  base.validate();
  auto result = eqlab::grid_search(base, grid, seeds_per_cell);
  std::ostringstream table;
  table.precision(17);
  table << "input_dim,hidden_dim,lr,l2,mean_final_test\n";
  for (const auto& cell : result.table) {
    table << cell.input_dim << ',' << cell.hidden_dim << ',' << cell.lr << ','
          << cell.l2 << ',' << cell.mean_final_test << '\n';
  }
  eqlab::write_text_file(dir / "grid.csv", table.str());
  Json summary{{"config", config_to_json(base)},
               {"seeds_per_cell", seeds_per_cell},
               {"cells", result.table.size()},
               {"best", config_to_json(result.best)}};
  eqlab::write_json_file(dir / "summary.json", summary);
  std::cout << "best cell: lr=" << result.best.lr << " l2=" << result.best.l2
            << " input_dim=" << result.best.input_dim
            << " hidden_dim=" << result.best.hidden_dim << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------------
// pretrain

int cmd_pretrain(const CommonOpts& common, int vocab_size, int dim, int tasks,
                 int epochs) {
  auto table = eqlab::make_random_vocab(vocab_size, dim, common.seed);
  auto labels = eqlab::make_task_labels(
      vocab_size, tasks, eqlab::derive_seed(common.seed, "labels"));
  eqlab::PretrainConfig cfg;
  cfg.epochs = epochs;
  cfg.seed = eqlab::derive_seed(common.seed, "pretrain");
  auto result = eqlab::pretrain(table, labels, cfg);
  fs::path dir = common.out_dir("pretrain");
  eqlab::write_json_file(dir / "embedding.json",
                         eqlab::table_to_json(result.table));
  Json summary{{"vocab_size", vocab_size},
               {"dim", dim},
               {"tasks", tasks},
               {"epochs", epochs},
               {"seed", common.seed},
               {"task_accuracy", result.task_accuracy},
               {"per_task_accuracy", result.per_task_accuracy}};
  eqlab::write_json_file(dir / "summary.json", summary);
  std::cout << "task accuracy " << result.task_accuracy << ", wrote "
            << (dir / "embedding.json").string() << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------------
// analytic

int cmd_analytic_equality(const CommonOpts& common, int dim, double margin) {
  eqlab::AnalyticEqualityConfig cfg;
  cfg.dim = dim;
  cfg.b1 = 0.0;
  cfg.b2 = margin;
  auto p = eqlab::build_analytic_equality(cfg);

  eqlab::Rng rng(eqlab::derive_seed(common.seed, "analytic-eq"));
  std::vector<std::pair<eqlab::RowVec, eqlab::RowVec>> pairs;
  for (int i = 0; i < 10000; ++i) {
    pairs.emplace_back(eqlab::uniform_matrix(1, dim, -1.0, 1.0, rng),
                       eqlab::uniform_matrix(1, dim, -1.0, 1.0, rng));
  }
  auto report = eqlab::check_decision_region(p, cfg, pairs);

  // Witness family: a diagonal point nudged by half the margin stays inside
  // the acceptance region while being unequal.
  eqlab::RowVec r = eqlab::uniform_matrix(1, dim, -1.0, 1.0, rng);
  eqlab::RowVec r2 = r;
  r2(0) += margin / 2.0;
  auto out = eqlab::analytic_equality_outputs(p, cfg, r, r2);
  bool witness_accepted = out.o2 > out.o1;

  bool pass = report.rule_violations == 0 && (margin <= 0 || witness_accepted);
  Json detail{{"dim", dim},
              {"margin", margin},
              {"pairs_tested", report.tested},
              {"rule_violations", report.rule_violations},
              {"false_positive_witnesses",
               report.false_positive_witnesses.size()},
              {"half_margin_witness_accepted", witness_accepted},
              {"pass", pass}};
  eqlab::write_json_file(common.out_dir("analytic") / "equality.json", detail);
  std::cout << (pass ? "pass" : "FAIL") << ": " << report.tested
            << " pairs, " << report.rule_violations << " rule violations"
            << (witness_accepted
                    ? ", half-margin false positive confirmed"
                    : "")
            << '\n';
  return pass ? kExitOk : kExitProperty;
}

int cmd_analytic_aba(const CommonOpts& common, int dim, double big_n) {
  eqlab::AnalyticAbaConfig cfg;
  cfg.dim = dim;
  cfg.big_n = big_n;
  auto p = eqlab::build_analytic_aba(cfg);

  eqlab::Rng rng(eqlab::derive_seed(common.seed, "analytic-aba"));
  bool pass = true;
  double worst_y1 = 0.0;
  double worst_y2 = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    eqlab::RowVec x1 = eqlab::uniform_matrix(1, dim, 0.05, 1.0, rng);
    eqlab::RowVec x2 = eqlab::uniform_matrix(1, dim, 0.05, 1.0, rng);
    auto trace = eqlab::run_analytic_aba(p, x1, x2);
    double e1 = (trace.y1 - 0.5 * x1).cwiseAbs().maxCoeff();
    double e2 = (trace.y2 - x1).cwiseAbs().maxCoeff();
    worst_y1 = std::max(worst_y1, e1);
    worst_y2 = std::max(worst_y2, e2);
    if (e1 > 1e-3 || e2 > 1e-3) pass = false;
    if ((trace.gates1.f.array() - 1.0).abs().maxCoeff() > 1e-6 ||
        (trace.gates1.i.array() - 1.0).abs().maxCoeff() > 1e-6 ||
        std::abs(trace.gates1.o(0) - 0.5) > 1e-6) {
      pass = false;
    }
  }
  Json detail{{"dim", dim},
              {"N", big_n},
              {"worst_y1_error", worst_y1},
              {"worst_y2_error", worst_y2},
              {"pass", pass}};
  eqlab::write_json_file(common.out_dir("analytic") / "aba.json", detail);
  std::cout << (pass ? "pass" : "FAIL") << ": worst first-output error "
            << worst_y1 << ", worst copy error " << worst_y2 << '\n';
  return pass ? kExitOk : kExitProperty;
}

int cmd_analytic_falsify(const CommonOpts& common,
                         const std::string& checkpoint) {
  auto ckpt = eqlab::checkpoint_from_json(eqlab::read_json_file(checkpoint));
  auto p = eqlab::equality_params_from_checkpoint(ckpt);
  int dim = p.input_dim() / 2;
  auto score = [&](const eqlab::RowVec& a, const eqlab::RowVec& b) {
    auto trace = eqlab::equality_forward(p, a, b);
    return trace.probs(eqlab::kPositiveClass) - 0.5;
  };
  auto result = eqlab::falsify_perfect_solution(
      score, dim, 1000, eqlab::derive_seed(common.seed, "falsify"));
  Json detail{{"checkpoint", checkpoint},
              {"accepted_any_diagonal", result.accepted_diagonal},
              {"witness_found", result.found},
              {"eps", result.eps},
              {"pass", result.found}};
  eqlab::write_json_file(common.out_dir("analytic") / "falsify.json", detail);
  if (result.found) {
    std::cout << "pass: off-diagonal misclassification at eps=" << result.eps
              << '\n';
    return kExitOk;
  }
  std::cout << "FAIL: no witness found (diagonal accepted: "
            << result.accepted_diagonal << ")\n";
  return kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equality-learning experiments"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--out", common.out, "Output directory");
  app.add_option("--seed", common.seed, "Master seed");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a dataset");
  std::string gen_task;
  std::string gen_scheme = "random";
  int gen_pretrain_tasks = 0;
  int gen_dim = 10;
  int gen_train_vocab = 100;
  int gen_test_vocab = 100;
  int gen_train_size = 1000;
  int gen_test_size = 500;
  gen->add_option("--task", gen_task, "equality|hier|aba")->required();
  gen->add_option("--scheme", gen_scheme,
                  "localist|property|random|pretrained");
  gen->add_option("--pretrain-tasks", gen_pretrain_tasks,
                  "Pretraining task count");
  gen->add_option("--dim", gen_dim, "Entity dimension");
  gen->add_option("--train-vocab", gen_train_vocab, "Train vocabulary size");
  gen->add_option("--test-vocab", gen_test_vocab,
                  "Assessment vocabulary size");
  gen->add_option("--train-size", gen_train_size, "Train examples");
  gen->add_option("--test-size", gen_test_size, "Test examples");

  // run / grid share config handling and override flags
  auto* run_cmd = app.add_subcommand("run", "Run an experiment");
  auto* grid_cmd = app.add_subcommand("grid", "Hyperparameter grid search");
  std::string run_config_path, grid_config_path;
  std::string flag_experiment, flag_scheme;
  int flag_pretrain_tasks = -1;
  int flag_input_dim = 0, flag_hidden_dim = 0, flag_jobs = 0;
  double flag_lr = 0.0, flag_l2 = -1.0;
  long long flag_budget = 0, flag_epochs = 0;
  std::uint64_t flag_seed_count = 0;
  for (CLI::App* cmd : {run_cmd, grid_cmd}) {
    cmd->add_option("--config",
                    cmd == run_cmd ? run_config_path : grid_config_path,
                    "JSON config file");
    cmd->add_option("--experiment", flag_experiment,
                    "exp1|exp2|exp3|exp4|exp1-on-hier");
    cmd->add_option("--scheme", flag_scheme,
                    "localist|property|random|pretrained");
    cmd->add_option("--pretrain-tasks", flag_pretrain_tasks,
                    "Pretraining task count");
    cmd->add_option("--input-dim", flag_input_dim, "Entity dimension");
    cmd->add_option("--hidden-dim", flag_hidden_dim, "Hidden width");
    cmd->add_option("--lr", flag_lr, "Learning rate");
    cmd->add_option("--l2", flag_l2, "L2 penalty coefficient");
    cmd->add_option("--budget", flag_budget, "Training examples");
    cmd->add_option("--epochs", flag_epochs,
                    "Training epochs (sequence task)");
    cmd->add_option("--seeds", flag_seed_count, "Number of seeds (1..k)");
    cmd->add_option("--jobs", flag_jobs, "Concurrent seed runs");
  }

  // pretrain
  auto* pre = app.add_subcommand("pretrain", "Pretrain an embedding table");
  int pre_vocab = 100, pre_dim = 10, pre_tasks = 10, pre_epochs = 10;
  pre->add_option("--vocab-size", pre_vocab, "Vocabulary size");
  pre->add_option("--dim", pre_dim, "Entity dimension");
  pre->add_option("--tasks", pre_tasks, "Binary task count");
  pre->add_option("--epochs", pre_epochs, "Training epochs");

  // analytic
  auto* analytic = app.add_subcommand("analytic", "Closed-form verifiers");
  analytic->require_subcommand(1);
  auto* an_eq = analytic->add_subcommand("equality", "Identity network");
  int an_dim = 10;
  double an_margin = 0.2;
  an_eq->add_option("--dim", an_dim, "Entity dimension");
  an_eq->add_option("--margin", an_margin, "Acceptance margin");
  auto* an_aba = analytic->add_subcommand("aba", "Sequence network");
  int aba_dim = 4;
  double aba_n = 100.0;
  an_aba->add_option("--n", aba_dim, "Entity dimension");
  an_aba->add_option("--N", aba_n, "Saturation constant");
  auto* an_falsify = analytic->add_subcommand(
      "falsify", "Find an off-diagonal misclassification");
  std::string falsify_ckpt;
  an_falsify->add_option("--checkpoint", falsify_ckpt, "Model checkpoint")
      ->required();

  try {
    app.parse(argc, argv);

    if (*gen) {
      return cmd_gen(common, gen_task, gen_scheme, gen_pretrain_tasks,
                     gen_dim, gen_train_vocab, gen_test_vocab, gen_train_size,
                     gen_test_size);
    }
    if (*run_cmd || *grid_cmd) {
      CLI::App* cmd = *run_cmd ? run_cmd : grid_cmd;
      auto loaded =
          load_config(*run_cmd ? run_config_path : grid_config_path);
      auto& cfg = loaded.run;
      if (cmd->count("--experiment")) {
        cfg.experiment = eqlab::experiment_from_name(flag_experiment);
      }
      if (cmd->count("--scheme")) loaded.scheme_name = flag_scheme;
      int pretrain_tasks = cfg.scheme.pretrain_tasks;
      if (cmd->count("--pretrain-tasks")) pretrain_tasks = flag_pretrain_tasks;
      if (cmd->count("--input-dim")) cfg.input_dim = flag_input_dim;
      if (cmd->count("--hidden-dim")) cfg.hidden_dim = flag_hidden_dim;
      if (cmd->count("--lr")) cfg.lr = flag_lr;
      if (cmd->count("--l2")) cfg.l2 = flag_l2;
      if (cmd->count("--budget")) cfg.budget = flag_budget;
      if (cmd->count("--epochs")) cfg.budget = flag_epochs;
      if (cmd->count("--jobs")) cfg.jobs = flag_jobs;
      if (cmd->count("--seeds")) {
        cfg.seeds.clear();
        for (std::uint64_t s = 1; s <= flag_seed_count; ++s) {
          cfg.seeds.push_back(s);
        }
      }
      cfg.scheme =
          make_scheme(loaded.scheme_name, pretrain_tasks, cfg.seeds.front());
      fs::path dir = common.out_dir(*run_cmd ? "run" : "grid");
      return *run_cmd
                 ? cmd_run(cfg, dir)
                 : cmd_grid(cfg, loaded.grid, loaded.seeds_per_cell, dir);
    }
    if (*pre) {
      return cmd_pretrain(common, pre_vocab, pre_dim, pre_tasks, pre_epochs);
    }
    if (*analytic) {
      if (*an_eq) return cmd_analytic_equality(common, an_dim, an_margin);
      if (*an_aba) return cmd_analytic_aba(common, aba_dim, aba_n);
      if (*an_falsify) return cmd_analytic_falsify(common, falsify_ckpt);
    }
    throw eqlab::UsageError("no subcommand selected");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const eqlab::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const eqlab::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eqlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
