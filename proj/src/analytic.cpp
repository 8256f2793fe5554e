#include "eqlab/analytic.hpp"

#include "eqlab/rng.hpp"

namespace eqlab {

EqualityNetParams build_analytic_equality(const AnalyticEqualityConfig& cfg) {
  if (cfg.dim < 1) {
    throw ConfigError("build_analytic_equality: dim must be >= 1");
  }
  const int n = cfg.dim;
  EqualityNetParams p;
  // Hidden layer computes ReLU of (x1 - x2) and (x2 - x1); summing both
  // halves yields the L1 distance.
  p.w_xh = Matrix::Zero(2 * n, 2 * n);
  p.w_xh.topLeftCorner(n, n) = Matrix::Identity(n, n);
  p.w_xh.topRightCorner(n, n) = -Matrix::Identity(n, n);
  p.w_xh.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  p.w_xh.bottomRightCorner(n, n) = Matrix::Identity(n, n);
  p.b_h = Matrix::Zero(1, 2 * n);
  // o1 = L1 + b1 feeds the negative class logit, o2 = b2 the positive one,
  // so argmax realizes "same iff L1 < b2 - b1".
  p.w_hy = Matrix::Zero(2 * n, 2);
  p.w_hy.col(kNegativeClass).setOnes();
  p.b_y = Matrix::Zero(1, 2);
  p.b_y(0, kNegativeClass) = cfg.b1;
  p.b_y(0, kPositiveClass) = cfg.b2;
  return p;
}

AnalyticOutputs analytic_equality_outputs(const EqualityNetParams& p,
                                          const AnalyticEqualityConfig&,
                                          const RowVec& x1, const RowVec& x2) {
  const EqualityTrace t = equality_forward(p, x1, x2);
  return {t.logits[kNegativeClass], t.logits[kPositiveClass]};
}

DecisionRegionReport check_decision_region(
    const EqualityNetParams& p, const AnalyticEqualityConfig& cfg,
    const std::vector<std::pair<RowVec, RowVec>>& pairs) {
  DecisionRegionReport report;
  const double margin = cfg.margin();
  for (const auto& [x1, x2] : pairs) {
    ++report.tested;
    const EqualityTrace t = equality_forward(p, x1, x2);
    const bool network_same = predict_from_probs(t.probs) == kPositiveClass;
    const double l1 = (x1 - x2).cwiseAbs().sum();
    const bool rule_same = l1 < margin;
    if (network_same != rule_same) ++report.rule_violations;
    if (network_same && l1 > 0.0) {
      report.false_positive_witnesses.emplace_back(x1, x2);
    }
  }
  return report;
}

FalsifyResult falsify_perfect_solution(
    const std::function<double(const RowVec&, const RowVec&)>& score, int dim,
    int trials, std::uint64_t seed) {
  Rng rng(seed);
  FalsifyResult result;
  for (int t = 0; t < trials; ++t) {
    const RowVec x = uniform_matrix(1, dim, -1.0, 1.0, rng).row(0);
    if (score(x, x) <= 0.0) continue;  // diagonal point not accepted
    result.accepted_diagonal = true;
    double eps = 1.0;
    for (int step = 0; step < 200 && eps > 0.0; ++step) {
      RowVec shifted = x;
      shifted[0] += eps;
      if (score(x, shifted) > 0.0) {
        // Refine once: a half-step witness is also accepted whenever the
        // acceptance region is contiguous around the diagonal.
        RowVec refined = x;
        refined[0] += eps / 2.0;
        if (refined[0] != x[0] && score(x, refined) > 0.0) eps /= 2.0;
        result.found = true;
        result.x = x;
        result.eps = eps;
        return result;
      }
      eps *= 0.5;
    }
  }
  return result;
}

SeqPredictorParams build_analytic_aba(const AnalyticAbaConfig& cfg) {
  if (cfg.dim < 1 || cfg.big_n <= 0.0) {
    throw ConfigError("build_analytic_aba: dim >= 1 and N > 0 required");
  }
  const int n = cfg.dim;
  const int d = cfg.hidden();
  const double N = cfg.big_n;
  SeqPredictorParams p;

  // Forget gate: always open.
  p.w_f = Matrix::Zero(n, d);
  p.u_f = Matrix::Zero(d, d);
  p.b_f = Matrix::Constant(1, d, N);
  // Input gate: open from the zero state, slammed shut once the first hidden
  // unit (which stores N/2) is set.
  p.w_i = Matrix::Zero(n, d);
  p.u_i = Matrix::Zero(d, d);
  p.u_i.row(0) = RowVec::Constant(d, -4.0);
  p.b_i = Matrix::Constant(1, d, N);
  // Output gate: half open at the first step, fully open afterwards.
  p.w_o = Matrix::Zero(n, d);
  p.u_o = Matrix::Zero(d, d);
  p.u_o.row(0) = RowVec::Ones(d);
  p.b_o = Matrix::Zero(1, d);
  // Cell candidate stores [N, -x, x].
  p.w_c = Matrix::Zero(n, d);
  p.w_c.block(0, 1, n, n) = -Matrix::Identity(n, n);
  p.w_c.block(0, 1 + n, n, n) = Matrix::Identity(n, n);
  p.u_c = Matrix::Zero(d, d);
  p.b_c = Matrix::Zero(1, d);
  p.b_c(0, 0) = N;
  // Projection recovers x from the (-x, x) halves; no bias.
  p.w_proj = Matrix::Zero(d, n);
  p.w_proj.block(1, 0, n, n) = -Matrix::Identity(n, n);
  p.w_proj.block(1 + n, 0, n, n) = Matrix::Identity(n, n);
  p.b_proj = Matrix::Zero(1, n);
  return p;
}

AbaTrace run_analytic_aba(const SeqPredictorParams& p, const RowVec& x1,
                          const RowVec& x2) {
  AbaTrace trace;
  LstmState state = lstm_zero_state(p);
  state = lstm_step(p, x1, state, &trace.gates1);
  trace.y1 = seq_project(p, state.h);
  state = lstm_step(p, x2, state);
  trace.y2 = seq_project(p, state.h);
  return trace;
}

AbaPipelineReport verify_aba_pipeline(
    const SeqPredictorParams& p, const TokenInventory& inv,
    const std::vector<std::vector<int>>& prompts) {
  AbaPipelineReport report;
  for (const auto& prompt : prompts) {
    ++report.prompts;
    int x = prompt.back();
    const RowVec& xv = inv.vector(x);
    LstmState state = lstm_zero_state(p);
    state = lstm_step(p, xv, state);
    RowVec y1 = seq_project(p, state.h);
    auto continuation = seq_forward(p, inv, prompt, 4);
    if (continuation.size() >= 2 && continuation[1] == x &&
        (y1 - xv).norm() > 0.0) {
      ++report.copied;
    }
  }
  return report;
}

}  // namespace eqlab
