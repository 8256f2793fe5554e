#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqlab/nets.hpp"
#include "eqlab/taskgen.hpp"
#include "eqlab/types.hpp"

namespace eqlab {

// Hyperparameter axes used by the grid search.
struct HyperGrid {
  std::vector<double> lrs{1e-5, 1e-4, 1e-3};
  std::vector<double> l2s{1e-4, 1e-3, 1e-2};
  std::vector<int> input_dims{2, 10, 25, 50, 100};
  std::vector<int> hidden_dims{2, 10, 25, 50, 100};

  void validate() const;  // non-empty axes
};

enum class Experiment { kExp1, kExp2, kExp3, kExp4, kExp1OnHier };
std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

struct RunConfig {
  Experiment experiment = Experiment::kExp1;
  SchemeConfig scheme;
  int input_dim = 10;    // entity dimension m
  int hidden_dim = 100;  // hidden width n (LSTM state d for the sequence task)
  double lr = 1e-3;
  double l2 = 1e-4;
  std::vector<std::uint64_t> seeds{1};
  // Streamed examples for exp1/exp3/exp4 fine-tuning; epochs for exp2.
  long long budget = 4000;
  // Evaluation points in the budget's unit; empty -> default schedule.
  std::vector<long long> schedule;
  int train_vocab = 0;   // 0 -> experiment default
  int assess_vocab = 0;  // 0 -> experiment default
  // Size of the fixed train-side and test-side evaluation sets for the
  // classification tasks.
  int eval_size = 500;
  // exp4 only: equality examples used to train the shared module before any
  // hierarchical example is seen.
  long long module_pretrain_budget = 4000;
  // Stop a seed's run at the first checkpoint whose test accuracy reaches
  // this value; negative disables early stopping.
  double stop_when_test_at_least = -1.0;
  int jobs = 1;

  void validate() const;  // throws ConfigError
  int resolved_train_vocab() const;
  int resolved_assess_vocab() const;
  std::vector<long long> resolved_schedule() const;
};

struct CurveRecord {
  std::uint64_t seed = 0;
  long long examples_seen = 0;
  std::string split;      // "train" or "test"
  double accuracy = 0.0;
  std::string class_tag;  // empty for overall accuracy
};

struct LearningCurve {
  RunConfig config;
  std::vector<CurveRecord> records;
};

// Executes per-seed training with evaluation pauses; deterministic given the
// config (including seed list and jobs setting).
LearningCurve run(const RunConfig& config);

// ---------------------------------------------------------------------------
// Evaluation. Never mutates parameters.

struct EvalResult {
  double accuracy = 0.0;
  // Per-class-tag accuracies for hierarchical data, in ClassTag order.
  std::vector<std::pair<std::string, double>> per_class;
};

EvalResult evaluate_equality(const EqualityNetParams& p,
                             const std::vector<EqualityExample>& data,
                             const EmbeddingTable& vocab);
EvalResult evaluate_hier(const EqualityNetParams& p,
                         const std::vector<HierExample>& data,
                         const EmbeddingTable& vocab);
EvalResult evaluate_hier(const DeepHierNetParams& p,
                         const std::vector<HierExample>& data,
                         const EmbeddingTable& vocab);
EvalResult evaluate_hier(const ModularHierNetParams& p,
                         const std::vector<HierExample>& data,
                         const EmbeddingTable& vocab);
// Fraction of prompts whose generated continuation the task predicate
// accepts.
double evaluate_aba(const SeqPredictorParams& p, const TokenInventory& inv,
                    const std::vector<std::vector<int>>& prompts);

// ---------------------------------------------------------------------------
// Grid search.

struct GridCell {
  int input_dim = 0;
  int hidden_dim = 0;
  double lr = 0.0;
  double l2 = 0.0;
  double mean_final_test = 0.0;
};

struct GridSearchResult {
  RunConfig best;            // base config with the winning cell filled in
  std::vector<GridCell> table;
};

// Trains every cell of the grid with the first `seeds_per_cell` seeds of the
// base config and selects the cell with the highest mean final test
// accuracy; ties break toward the smaller lr, then the smaller l2.
GridSearchResult grid_search(const RunConfig& base, const HyperGrid& grid,
                             int seeds_per_cell);

// ---------------------------------------------------------------------------
// Localist blocker check: with one-hot entities and disjoint vocabularies
// the test items activate only input units whose outgoing weights received
// no gradient, so test behavior never leaves the chance band even as train
// accuracy saturates.

struct BlockerReport {
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  int never_active_units = 0;
  bool untouched_rows_identical = false;
  double control_test_accuracy = 0.0;  // random scheme, identical budget
  bool pass() const;
};

BlockerReport localist_blocker_check(const RunConfig& config);

// ---------------------------------------------------------------------------
// Results CSV.

std::string results_csv_header();
std::string curve_to_csv(const LearningCurve& curve);

}  // namespace eqlab
