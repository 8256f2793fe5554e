#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eqlab/nets.hpp"
#include "eqlab/types.hpp"

namespace eqlab {

// Closed-form feed-forward identity network. The raw outputs follow the
// source formulas, o1 = sum_i |x1_i - x2_i| + b1 and o2 = b2, and the
// network's argmax decision realizes the margin rule "same iff L1 distance
// < margin" with margin = b2 - b1. (The source text orients the margin as
// b1 - b2, which is inconsistent with its own output formulas; the margin
// rule, the decision-region picture, and the false-positive family all
// agree with the b2 - b1 orientation used here.)
struct AnalyticEqualityConfig {
  int dim = 1;
  double b1 = 0.0;  // added to the L1-distance output o1
  double b2 = 0.0;  // the constant output o2

  double margin() const { return b2 - b1; }
};

EqualityNetParams build_analytic_equality(const AnalyticEqualityConfig& cfg);

// Raw (o1, o2) outputs of the constructed network for one pair.
struct AnalyticOutputs {
  double o1 = 0.0;
  double o2 = 0.0;
};
AnalyticOutputs analytic_equality_outputs(const EqualityNetParams& p,
                                          const AnalyticEqualityConfig& cfg,
                                          const RowVec& x1, const RowVec& x2);

struct DecisionRegionReport {
  long tested = 0;
  // Disagreements between the network argmax and the L1-margin rule.
  long rule_violations = 0;
  // Unequal pairs inside the decision region: (r, r + delta) with
  // 0 < |delta|_1 < margin.
  std::vector<std::pair<RowVec, RowVec>> false_positive_witnesses;
};

DecisionRegionReport check_decision_region(
    const EqualityNetParams& p, const AnalyticEqualityConfig& cfg,
    const std::vector<std::pair<RowVec, RowVec>>& pairs);

// Constructive embodiment of the no-perfect-solution argument: any
// continuous classifier that accepts a diagonal point (x, x) also accepts
// some off-diagonal point (x, x + eps). `score` must be positive exactly
// when the classifier predicts "same".
struct FalsifyResult {
  bool accepted_diagonal = false;
  bool found = false;
  RowVec x;
  double eps = 0.0;
};

FalsifyResult falsify_perfect_solution(
    const std::function<double(const RowVec&, const RowVec&)>& score, int dim,
    int trials, std::uint64_t seed);

// Closed-form ABA sequence predictor: hidden size d = 2n + 1, gates driven
// to saturation by the constant N.
struct AnalyticAbaConfig {
  int dim = 1;       // entity representation size n
  double big_n = 100.0;

  int hidden() const { return 2 * dim + 1; }
};

SeqPredictorParams build_analytic_aba(const AnalyticAbaConfig& cfg);

// Two-step trace of the constructed network from the zero state: feed x1,
// then x2, recording first-step gates and both projected outputs.
struct AbaTrace {
  LstmGates gates1;
  RowVec y1;
  RowVec y2;
};
AbaTrace run_analytic_aba(const SeqPredictorParams& p, const RowVec& x1,
                          const RowVec& x2);

// Decoded-pipeline check of the closed-form predictor. The construction's
// defining property is that the raw first output differs from the seed while
// the second output reproduces it exactly; this verifies that property
// through greedy nearest-neighbor decoding for every prompt. (The
// construction holds the seed in its cell state forever, so it never emits
// the terminator; the three-token accept predicate used for trained models
// is not satisfiable by this family.)
struct AbaPipelineReport {
  int prompts = 0;
  int copied = 0;

  double accuracy() const {
    return prompts == 0 ? 0.0 : static_cast<double>(copied) / prompts;
  }
};
AbaPipelineReport verify_aba_pipeline(const SeqPredictorParams& p,
                                      const TokenInventory& inv,
                                      const std::vector<std::vector<int>>& prompts);

}  // namespace eqlab
