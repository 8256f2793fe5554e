#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "eqlab/harness.hpp"
#include "eqlab/rng.hpp"

using namespace eqlab;

namespace {

RunConfig small_exp1() {
  RunConfig cfg;
  cfg.experiment = Experiment::kExp1;
  cfg.scheme.scheme = Scheme::kRandom;
  cfg.input_dim = 4;
  cfg.hidden_dim = 8;
  cfg.lr = 1e-3;
  cfg.l2 = 0.0;
  cfg.seeds = {1, 2};
  cfg.budget = 100;
  cfg.eval_size = 40;
  cfg.train_vocab = 60;
  cfg.assess_vocab = 30;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig cfg = small_exp1();
  CHECK_NOTHROW(cfg.validate());
  RunConfig bad = cfg;
  bad.seeds = {1, 1};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.schedule = {0, 10, 10};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.budget = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.eval_size = 41;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("default schedule starts at zero and ends at the budget") {
  RunConfig cfg = small_exp1();
  cfg.budget = 4000;
  auto s = cfg.resolved_schedule();
  CHECK(s.front() == 0);
  CHECK(s.back() == 4000);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);

  cfg.experiment = Experiment::kExp2;
  cfg.budget = 20;
  auto epochs = cfg.resolved_schedule();
  CHECK(epochs == std::vector<long long>{0, 5, 10, 15, 20});
}

TEST_CASE("experiment names round-trip") {
  for (Experiment e : {Experiment::kExp1, Experiment::kExp2, Experiment::kExp3,
                       Experiment::kExp4, Experiment::kExp1OnHier}) {
    CHECK(experiment_from_name(experiment_name(e)) == e);
  }
  CHECK_THROWS_AS(experiment_from_name("exp9"), ConfigError);
}

TEST_CASE("evaluate_equality: perfect and degenerate predictors") {
  SchemeConfig scheme;
  scheme.scheme = Scheme::kRandom;
  auto split = make_split(20, 20, 3, scheme, 5);
  auto data = equality_testset(split, 40, 6);

  // Closed-form perfect predictor on this architecture.
  EqualityNetParams perfect;
  perfect.w_xh = Matrix::Zero(6, 6);
  perfect.w_xh.topLeftCorner(3, 3) = Matrix::Identity(3, 3);
  perfect.w_xh.topRightCorner(3, 3) = -Matrix::Identity(3, 3);
  perfect.w_xh.bottomLeftCorner(3, 3) = -Matrix::Identity(3, 3);
  perfect.w_xh.bottomRightCorner(3, 3) = Matrix::Identity(3, 3);
  perfect.b_h = Matrix::Zero(1, 6);
  perfect.w_hy = Matrix::Zero(6, 2);
  perfect.w_hy.col(kNegativeClass) = Matrix::Constant(6, 1, 1e9);
  perfect.b_y = Matrix::Zero(1, 2);
  perfect.b_y(0, kPositiveClass) = 1.0;  // tiny margin accepts only identity
  CHECK(evaluate_equality(perfect, data, split.assess).accuracy ==
        doctest::Approx(1.0));

  // Always-negative predictor scores exactly 0.5 on a balanced set.
  EqualityNetParams neg = perfect;
  neg.b_y(0, kNegativeClass) = 1e6;
  CHECK(evaluate_equality(neg, data, split.assess).accuracy ==
        doctest::Approx(0.5));
}

TEST_CASE("per-class accuracies weight-average to the overall accuracy") {
  SchemeConfig scheme;
  scheme.scheme = Scheme::kRandom;
  auto split = make_split(30, 30, 4, scheme, 7);
  auto data = hier_testset(split, 200, 8);
  auto p = DeepHierNetParams::init(4, 10, 9);
  auto r = evaluate_hier(p, data, split.assess);
  REQUIRE(r.per_class.size() == 4);
  double weighted = 0.0;
  for (const auto& [tag, acc] : r.per_class) weighted += acc * 50.0;
  weighted /= 200.0;
  CHECK(std::abs(weighted - r.accuracy) < 1e-12);
}

TEST_CASE("evaluation never mutates parameters") {
  SchemeConfig scheme;
  scheme.scheme = Scheme::kRandom;
  auto split = make_split(10, 10, 3, scheme, 11);
  auto data = equality_testset(split, 20, 12);
  auto p = EqualityNetParams::init(6, 5, 13);
  auto before = p;
  (void)evaluate_equality(p, data, split.assess);
  CHECK((p.w_xh.array() == before.w_xh.array()).all());
  CHECK((p.b_h.array() == before.b_h.array()).all());
  CHECK((p.w_hy.array() == before.w_hy.array()).all());
  CHECK((p.b_y.array() == before.b_y.array()).all());
}

TEST_CASE("run: untrained start is near chance, records match the schedule") {
  RunConfig cfg = small_exp1();
  cfg.seeds = {3};
  cfg.schedule = {0, 50, 100};
  auto curve = run(cfg);
  // Two records (train, test) per checkpoint.
  REQUIRE(curve.records.size() == 6);
  CHECK(curve.records[0].examples_seen == 0);
  CHECK(curve.records[0].split == "train");
  CHECK(curve.records[1].split == "test");
  // Untrained accuracy is near chance on a balanced set.
  CHECK(curve.records[1].accuracy > 0.2);
  CHECK(curve.records[1].accuracy < 0.8);
  for (const auto& r : curve.records) {
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);
  }
}

TEST_CASE("run is reproducible and jobs do not change results") {
  RunConfig cfg = small_exp1();
  auto a = run(cfg);
  auto b = run(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].accuracy == b.records[i].accuracy);
    CHECK(a.records[i].examples_seen == b.records[i].examples_seen);
  }
  RunConfig par = cfg;
  par.jobs = 2;
  auto c = run(par);
  REQUIRE(c.records.size() == a.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].accuracy == c.records[i].accuracy);
  }
}

TEST_CASE("exp4 curve includes a zero-fine-tune checkpoint with class tags") {
  RunConfig cfg;
  cfg.experiment = Experiment::kExp4;
  cfg.scheme.scheme = Scheme::kRandom;
  cfg.input_dim = 4;
  cfg.lr = 1e-3;
  cfg.l2 = 0.0;
  cfg.seeds = {1};
  cfg.budget = 40;
  cfg.module_pretrain_budget = 60;
  cfg.eval_size = 40;
  cfg.train_vocab = 40;
  cfg.assess_vocab = 20;
  cfg.schedule = {0, 40};
  auto curve = run(cfg);
  // Per checkpoint: train overall + 4 tags, test overall + 4 tags.
  REQUIRE(curve.records.size() == 20);
  CHECK(curve.records[0].examples_seen == 0);
  std::set<std::string> tags;
  for (const auto& r : curve.records) {
    if (!r.class_tag.empty()) tags.insert(r.class_tag);
  }
  CHECK(tags ==
        std::set<std::string>{"same/same", "diff/diff", "same/diff",
                              "diff/same"});
}

TEST_CASE("grid search picks the best cell with deterministic tie-breaks") {
  RunConfig base = small_exp1();
  base.seeds = {1, 2, 3};
  base.budget = 60;
  HyperGrid grid;
  grid.lrs = {1e-4, 1e-3};
  grid.l2s = {1e-4, 1e-3};
  grid.input_dims = {4};
  grid.hidden_dims = {8};
  auto result = grid_search(base, grid, 2);
  CHECK(result.table.size() == 4);
  // The selected cell's score is the max of the table.
  double best = -1.0;
  for (const auto& cell : result.table) best = std::max(best, cell.mean_final_test);
  bool found = false;
  for (const auto& cell : result.table) {
    if (cell.lr == result.best.lr && cell.l2 == result.best.l2) {
      CHECK(cell.mean_final_test == best);
      found = true;
    }
  }
  CHECK(found);
  // The winning config carries the full seed list for the final run.
  CHECK(result.best.seeds.size() == 3);

  CHECK_THROWS_AS(grid_search(base, grid, 5), ConfigError);
  HyperGrid empty;
  empty.lrs.clear();
  CHECK_THROWS_AS(grid_search(base, empty, 2), ConfigError);
}

TEST_CASE("results CSV has the documented shape") {
  RunConfig cfg = small_exp1();
  cfg.seeds = {1};
  cfg.schedule = {0, 100};
  auto curve = run(cfg);
  std::string header = results_csv_header();
  CHECK(header.rfind("experiment,scheme,k_pretrain_tasks,input_dim,", 0) == 0);
  std::istringstream body(curve_to_csv(curve));
  std::string line;
  int lines = 0;
  while (std::getline(body, line)) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), ',') == 11);
    CHECK(line.rfind("exp1,random,0,4,8,", 0) == 0);
  }
  CHECK(lines == 4);
}
