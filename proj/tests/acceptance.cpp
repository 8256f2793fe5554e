// Acceptance suite: one pass/fail line per criterion, non-zero exit if any
// criterion fails. Criteria marked "tendency" report the observed rate.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "eqlab/analytic.hpp"
#include "eqlab/embedding.hpp"
#include "eqlab/gradcheck.hpp"
#include "eqlab/harness.hpp"
#include "eqlab/nets.hpp"
#include "eqlab/rng.hpp"
#include "eqlab/taskgen.hpp"

using namespace eqlab;

namespace {

int g_failures = 0;

void report(int idx, bool pass, const std::string& detail) {
  std::printf("AC%-2d %s  %s\n", idx, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

SchemeConfig random_scheme() {
  SchemeConfig s;
  s.scheme = Scheme::kRandom;
  return s;
}

SchemeConfig pretrained_scheme(int tasks) {
  SchemeConfig s;
  s.scheme = Scheme::kPretrained;
  s.pretrain_tasks = tasks;
  return s;
}

std::vector<std::uint64_t> seed_range(int n) {
  std::vector<std::uint64_t> s(n);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

// Last overall test-accuracy record per seed.
std::map<std::uint64_t, double> final_test(const LearningCurve& curve) {
  std::map<std::uint64_t, double> out;
  for (const auto& r : curve.records) {
    if (r.split == "test" && r.class_tag.empty()) out[r.seed] = r.accuracy;
  }
  return out;
}

double mean_final_test(const LearningCurve& curve) {
  auto per_seed = final_test(curve);
  double sum = 0.0;
  for (const auto& [seed, acc] : per_seed) sum += acc;
  return per_seed.empty() ? 0.0 : sum / static_cast<double>(per_seed.size());
}

// First checkpoint at which a seed's overall test accuracy reaches the
// threshold; the budget counts as the (censored) value when it never does.
std::map<std::uint64_t, long long> examples_to(const LearningCurve& curve,
                                               double threshold) {
  std::map<std::uint64_t, long long> out;
  for (std::uint64_t s : curve.config.seeds) out[s] = curve.config.budget;
  std::map<std::uint64_t, bool> done;
  for (const auto& r : curve.records) {
    if (r.split != "test" || !r.class_tag.empty()) continue;
    if (!done[r.seed] && r.accuracy >= threshold) {
      out[r.seed] = r.examples_seen;
      done[r.seed] = true;
    }
  }
  return out;
}

double mean_of(const std::map<std::uint64_t, long long>& m) {
  double sum = 0.0;
  for (const auto& [k, v] : m) sum += static_cast<double>(v);
  return m.empty() ? 0.0 : sum / static_cast<double>(m.size());
}

// ---------------------------------------------------------------------------

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  Rng rng(101);

  for (int draw = 0; draw < 20; ++draw) {
    auto p = EqualityNetParams::init(6, 5, 200 + draw);
    RowVec a = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec b = uniform_matrix(1, 3, -1.0, 1.0, rng);
    int gold = draw % 2;
    auto g = equality_loss_grads(p, {a, b}, gold);
    auto numeric = finite_difference_grads(
        [&]() { return equality_loss_grads(p, {a, b}, gold).loss; },
        p.tensors());
    worst = std::max(worst, max_relative_error(g.grads, numeric));
  }
  for (int draw = 0; draw < 20; ++draw) {
    auto p = DeepHierNetParams::init(3, 6, 300 + draw);
    RowVec a = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec b = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec c = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec d = uniform_matrix(1, 3, -1.0, 1.0, rng);
    int gold = draw % 2;
    auto g = deep_hier_loss_grads(p, a, b, c, d, gold);
    auto numeric = finite_difference_grads(
        [&]() { return deep_hier_loss_grads(p, a, b, c, d, gold).loss; },
        p.tensors());
    worst = std::max(worst, max_relative_error(g.grads, numeric));
  }
  for (int draw = 0; draw < 20; ++draw) {
    auto p = ModularHierNetParams::init(3, 400 + draw);
    RowVec a = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec b = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec c = uniform_matrix(1, 3, -1.0, 1.0, rng);
    RowVec d = uniform_matrix(1, 3, -1.0, 1.0, rng);
    int gold = draw % 2;
    auto g = modular_loss_grads(p, a, b, c, d, gold);
    auto numeric = finite_difference_grads(
        [&]() { return modular_loss_grads(p, a, b, c, d, gold).loss; },
        p.tensors());
    worst = std::max(worst, max_relative_error(g.grads, numeric));
  }
  {
    auto split = make_split(4, 3, 3, random_scheme(), 102);
    TokenInventory inv(split);
    auto seqs = aba_train_set(split);
    for (int draw = 0; draw < 20; ++draw) {
      auto p = SeqPredictorParams::init(3, 5, 500 + draw);
      const auto& seq = seqs[draw % seqs.size()];
      auto g = seq_loss_grads(p, seq, inv);
      auto numeric = finite_difference_grads(
          [&]() { return seq_loss(p, seq, inv); }, p.tensors());
      worst = std::max(worst, max_relative_error(g.grads, numeric));
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(1, worst < 1e-5 && secs < 60.0,
         "gradients vs finite differences, 4 architectures x 20 draws: max "
         "rel err " + fmt(worst) + ", " + fmt(secs) + "s");
}

RunConfig criterion2(RunConfig* best_out) {
  RunConfig base;
  base.experiment = Experiment::kExp1;
  base.scheme = random_scheme();
  base.input_dim = 10;
  base.hidden_dim = 100;
  base.budget = 4000;
  base.seeds = seed_range(20);
  base.stop_when_test_at_least = 0.95;

  HyperGrid grid;
  grid.input_dims = {10};
  grid.hidden_dims = {100};
  auto result = grid_search(base, grid, 5);
  auto curve = run(result.best);
  double mean = mean_final_test(curve);
  report(2, mean >= 0.95,
         "exp1 best cell (lr=" + fmt(result.best.lr) + ", l2=" +
             fmt(result.best.l2) + "): mean test accuracy over 20 seeds " +
             fmt(mean) + " within 4000 examples");
  *best_out = result.best;
  return result.best;
}

void criterion3(const RunConfig& best_exp1) {
  RunConfig cfg = best_exp1;
  cfg.seeds = seed_range(20);
  cfg.stop_when_test_at_least = 0.9;
  cfg.schedule.clear();
  for (long long e = 0; e <= cfg.budget; e += 200) cfg.schedule.push_back(e);

  RunConfig plain = cfg;
  plain.scheme = random_scheme();
  RunConfig pre = cfg;
  pre.scheme = pretrained_scheme(10);

  double to_plain = mean_of(examples_to(run(plain), 0.9));
  double to_pre = mean_of(examples_to(run(pre), 0.9));
  report(3, to_pre <= to_plain,
         "mean examples to 0.9 test accuracy: pretrained k=10 " + fmt(to_pre) +
             " vs k=0 " + fmt(to_plain));
}

void criterion4() {
  RunConfig base;
  base.experiment = Experiment::kExp2;
  base.scheme = random_scheme();
  base.input_dim = 2;
  base.hidden_dim = 100;
  base.budget = 80;  // reduced epoch budget for cell selection only
  base.seeds = seed_range(3);
  base.stop_when_test_at_least = 0.9;

  HyperGrid grid;
  grid.input_dims = {2};
  grid.hidden_dims = {100};
  auto result = grid_search(base, grid, 3);

  RunConfig cfg = result.best;
  cfg.budget = 500;
  cfg.seeds = seed_range(5);
  cfg.stop_when_test_at_least = 0.9;
  cfg.schedule.clear();
  for (long long e = 0; e <= 500; e += 10) cfg.schedule.push_back(e);
  auto curve = run(cfg);

  int reached = 0;
  for (std::uint64_t s : cfg.seeds) {
    for (const auto& r : curve.records) {
      if (r.seed == s && r.split == "test" && r.class_tag.empty() &&
          r.accuracy >= 0.9) {
        ++reached;
        break;
      }
    }
  }

  // The train-over-test gap is a property of seed-averaged learning curves;
  // per-seed train accuracy is quantized to 1/20 by the 20 training prompts
  // and too noisy at single checkpoints.
  std::map<long long, std::pair<double, double>> sums;  // epoch -> (train, test)
  std::map<long long, std::pair<int, int>> counts;
  for (const auto& r : curve.records) {
    if (!r.class_tag.empty()) continue;
    if (r.split == "train") {
      sums[r.examples_seen].first += r.accuracy;
      counts[r.examples_seen].first++;
    } else {
      sums[r.examples_seen].second += r.accuracy;
      counts[r.examples_seen].second++;
    }
  }
  bool gap_ok = true;
  for (const auto& [at, s] : sums) {
    double mean_train = s.first / std::max(counts[at].first, 1);
    double mean_test = s.second / std::max(counts[at].second, 1);
    if (mean_test >= 0.9) break;
    if (mean_train < mean_test) gap_ok = false;
  }
  report(4, reached >= 3 && gap_ok,
         "exp2 (lr=" + fmt(cfg.lr) + ", l2=" + fmt(cfg.l2) + "): " +
             std::to_string(reached) +
             "/5 seeds reach 0.9 on the held-out assessment within 500 "
             "epochs; seed-mean train >= test at every checkpoint before "
             "the mean test curve crosses 0.9: " + (gap_ok ? "yes" : "no"));
}

void criterion5() {
  RunConfig base;
  base.experiment = Experiment::kExp3;
  base.scheme = random_scheme();
  base.input_dim = 10;
  base.hidden_dim = 100;
  base.budget = 40000;
  base.seeds = seed_range(5);
  base.stop_when_test_at_least = 0.95;

  HyperGrid grid;
  grid.input_dims = {10};
  grid.hidden_dims = {100};
  auto result = grid_search(base, grid, 5);
  double mean = mean_final_test(run(result.best));

  RunConfig cmp = result.best;
  cmp.seeds = seed_range(10);
  cmp.schedule.clear();
  for (long long e = 0; e <= cmp.budget; e += 2000) cmp.schedule.push_back(e);
  RunConfig plain = cmp;
  plain.scheme = random_scheme();
  RunConfig pre = cmp;
  pre.scheme = pretrained_scheme(10);
  double to_plain = mean_of(examples_to(run(plain), 0.95));
  double to_pre = mean_of(examples_to(run(pre), 0.95));

  report(5, mean >= 0.95 && to_pre < to_plain,
         "exp3 best cell mean test accuracy " + fmt(mean) +
             " within 40000 examples; mean examples to 0.95: pretrained k=10 " +
             fmt(to_pre) + " vs k=0 " + fmt(to_plain));
}

LearningCurve criterion6() {
  RunConfig base;
  base.experiment = Experiment::kExp4;
  base.scheme = random_scheme();
  // The shared equality module maps pairs of m-dim entities to an m-dim code,
  // so hidden width equals entity width; zero-shot transfer needs enough
  // module training that same-pairs land near each other in code space.
  base.input_dim = 50;
  base.hidden_dim = 50;
  base.budget = 2000;
  base.module_pretrain_budget = 20000;
  base.seeds = seed_range(20);

  HyperGrid grid;
  grid.input_dims = {50};
  grid.hidden_dims = {50};
  auto result = grid_search(base, grid, 3);

  RunConfig cfg = result.best;
  cfg.schedule.clear();
  for (long long e = 0; e <= 2000; e += 100) cfg.schedule.push_back(e);
  auto curve = run(cfg);

  double zero_shot = 0.0;
  int zero_count = 0;
  for (const auto& r : curve.records) {
    if (r.split == "test" && r.class_tag.empty() && r.examples_seen == 0) {
      zero_shot += r.accuracy;
      ++zero_count;
    }
  }
  zero_shot /= std::max(zero_count, 1);
  double mean = mean_final_test(curve);

  report(6, zero_shot > 0.55 && mean >= 0.95,
         "exp4 (lr=" + fmt(cfg.lr) + ", l2=" + fmt(cfg.l2) +
             "): zero-shot test accuracy " + fmt(zero_shot) +
             " (20 seeds), fine-tuned mean " + fmt(mean) +
             " within 2000 examples");
  return curve;
}

void criterion7() {
  bool ok = true;
  std::string note;

  // Output formula on random pairs, and the half-margin false positive.
  Rng rng(700);
  for (double margin : {0.01, 0.1, 1.0}) {
    AnalyticEqualityConfig cfg;
    cfg.dim = 5;
    cfg.b1 = 0.0;
    cfg.b2 = margin;
    auto p = build_analytic_equality(cfg);
    for (int i = 0; i < 10000; ++i) {
      RowVec a = uniform_matrix(1, 5, -1.0, 1.0, rng);
      RowVec b = uniform_matrix(1, 5, -1.0, 1.0, rng);
      auto out = analytic_equality_outputs(p, cfg, a, b);
      double l1 = (a - b).cwiseAbs().sum() + cfg.b1;
      if (std::abs(out.o1 - l1) > 1e-12) ok = false;
    }
    RowVec r = uniform_matrix(1, 5, -1.0, 1.0, rng);
    RowVec shifted = r;
    shifted(0) += margin / 2.0;
    auto t = equality_forward(p, r, shifted);
    if (predict_from_probs(t.probs) != kPositiveClass) {
      ok = false;
      note += " no witness at margin " + fmt(margin) + ";";
    }
  }

  // Every trained basic-equality checkpoint admits an off-diagonal
  // acceptance near an accepted diagonal point.
  int falsified = 0;
  const int kNets = 3;
  for (int i = 0; i < kNets; ++i) {
    std::uint64_t seed = 7000 + i;
    auto split = make_split(2200, 600, 10, random_scheme(), seed);
    auto stream = equality_stream(split, 4000, derive_seed(seed, "stream"));
    auto p = EqualityNetParams::init(20, 100, derive_seed(seed, "init"));
    AdamConfig ac;
    ac.lr = 1e-3;
    ac.l2 = 1e-4;
    auto state = AdamState::init(
        ac, p.tensors());
    for (const auto& ex : stream) {
      train_step(p, state, {split.train.row(ex.left), split.train.row(ex.right)},
                 ex.positive ? kPositiveClass : kNegativeClass);
    }
    auto score = [&](const RowVec& a, const RowVec& b) {
      return equality_forward(p, a, b).probs(kPositiveClass) - 0.5;
    };
    auto res = falsify_perfect_solution(score, 10, 2000, seed);
    if (res.accepted_diagonal && res.found) ++falsified;
  }
  if (falsified != kNets) ok = false;

  report(7, ok,
         "closed-form equality: output formula exact to 1e-12 on 10^4 pairs, "
         "half-margin false positives at margins {0.01, 0.1, 1.0};" + note +
             " falsification found for " + std::to_string(falsified) + "/" +
             std::to_string(kNets) + " trained checkpoints");
}

void criterion8() {
  bool ok = true;
  Rng rng(800);
  for (int n : {1, 2, 4, 8}) {
    AnalyticAbaConfig cfg;
    cfg.dim = n;
    cfg.big_n = 100.0;
    auto p = build_analytic_aba(cfg);
    for (int trial = 0; trial < 50; ++trial) {
      RowVec x1 = uniform_matrix(1, n, 0.1, 1.0, rng);
      RowVec x2 = uniform_matrix(1, n, 0.1, 1.0, rng);
      auto trace = run_analytic_aba(p, x1, x2);
      if ((trace.y1 - 0.5 * x1).cwiseAbs().maxCoeff() > 1e-3) ok = false;
      if ((trace.y2 - x1).cwiseAbs().maxCoeff() > 1e-3) ok = false;
      if ((trace.gates1.f.array() - 1.0).abs().maxCoeff() > 1e-6) ok = false;
      if ((trace.gates1.i.array() - 1.0).abs().maxCoeff() > 1e-6) ok = false;
      if (std::abs(trace.gates1.o(0) - 0.5) > 1e-6) ok = false;
    }
  }

  // Decoded pipeline over the standard assessment prompts, on a vocabulary
  // shifted into the positive orthant as the construction requires.
  auto split = make_split(20, 26, 2, random_scheme(), 801);
  for (auto& v : split.train.vectors) v = v.array() + 0.6;
  for (auto& v : split.assess.vectors) v = v.array() + 0.6;
  split.eos = split.eos.array() + 0.6;
  TokenInventory inv(split);
  AnalyticAbaConfig cfg;
  cfg.dim = 2;
  auto p = build_analytic_aba(cfg);
  auto pipeline = verify_aba_pipeline(p, inv, aba_test_prompts(split));
  if (pipeline.accuracy() != 1.0) ok = false;

  report(8, ok,
         "closed-form sequence predictor: y1 = x/2 and y2 = x within 1e-3, "
         "gates saturated within 1e-6 for n in {1,2,4,8}; decoded pipeline "
         "copy accuracy " + fmt(pipeline.accuracy()) + " on " +
             std::to_string(pipeline.prompts) + " assessment prompts");
}

void criterion9() {
  RunConfig cfg;
  cfg.experiment = Experiment::kExp1;
  cfg.scheme.scheme = Scheme::kLocalist;
  cfg.hidden_dim = 100;
  cfg.lr = 1e-3;
  cfg.budget = 4000;
  cfg.seeds = {1};
  auto r = localist_blocker_check(cfg);
  report(9, r.pass(),
         "one-hot scheme: train accuracy " + fmt(r.train_accuracy) +
             ", disjoint-vocabulary test accuracy " + fmt(r.test_accuracy) +
             " (chance band), untouched input rows bit-identical: " +
             (r.untouched_rows_identical ? "yes" : "no") +
             ", random-scheme control " + fmt(r.control_test_accuracy));
}

void criterion10(const LearningCurve& exp4_curve) {
  // Tendency check: at each seed's final checkpoint, is different/different
  // the (possibly tied) lowest class accuracy?
  int lowest = 0;
  int seeds = 0;
  for (std::uint64_t s : exp4_curve.config.seeds) {
    std::map<std::string, double> per_class;
    long long last = -1;
    for (const auto& r : exp4_curve.records) {
      if (r.seed != s || r.split != "test" || r.class_tag.empty()) continue;
      if (r.examples_seen > last) {
        last = r.examples_seen;
        per_class.clear();
      }
      if (r.examples_seen == last) per_class[r.class_tag] = r.accuracy;
    }
    if (per_class.size() != 4) continue;
    ++seeds;
    double min_acc = 1.0;
    for (const auto& [tag, acc] : per_class) min_acc = std::min(min_acc, acc);
    if (per_class.at("diff/diff") <= min_acc) ++lowest;
  }
  report(10, 2 * lowest > seeds,
         "exp4 per-class tendency: different/different is the lowest class "
         "accuracy at the final checkpoint in " + std::to_string(lowest) +
             "/" + std::to_string(seeds) +
             " seeds (tendency check, ties count)");
}

}  // namespace

int main() {
  criterion1();
  RunConfig best_exp1;
  criterion2(&best_exp1);
  criterion3(best_exp1);
  criterion4();
  criterion5();
  auto exp4_curve = criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10(exp4_curve);
  if (g_failures > 0) {
    std::printf("%d criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
