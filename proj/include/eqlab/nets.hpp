#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqlab/adam.hpp"
#include "eqlab/taskgen.hpp"
#include "eqlab/types.hpp"

namespace eqlab {

// Class index convention for the two-way classifiers: 0 = positive,
// 1 = negative. Argmax prediction breaks ties toward negative.
inline constexpr int kPositiveClass = 0;
inline constexpr int kNegativeClass = 1;

int predict_from_probs(const RowVec& probs);

struct Grads {
  double loss = 0.0;
  std::vector<Matrix> grads;  // aligned with the params' tensors() order
};

// ---------------------------------------------------------------------------
// Single hidden layer classifier over a concatenated input. Covers the basic
// equality model (input 2m) and its four-slot variant on the hierarchical
// task (input 4m).

struct EqualityNetParams {
  Matrix w_xh;  // input_dim x hidden
  Matrix b_h;   // 1 x hidden
  Matrix w_hy;  // hidden x 2
  Matrix b_y;   // 1 x 2

  static EqualityNetParams init(int input_dim, int hidden, std::uint64_t seed);

  int input_dim() const { return static_cast<int>(w_xh.rows()); }
  int hidden_dim() const { return static_cast<int>(w_xh.cols()); }
  std::vector<Matrix*> tensors();
  std::vector<const Matrix*> tensors() const;
  static const std::vector<std::string>& tensor_names();
};

struct EqualityTrace {
  RowVec hidden;
  RowVec logits;
  RowVec probs;
};

EqualityTrace equality_forward(const EqualityNetParams& p, const RowVec& a,
                               const RowVec& b);
// Four-slot forward used by the one-hidden-layer hierarchical variant.
EqualityTrace concat_forward(const EqualityNetParams& p,
                             const std::vector<RowVec>& inputs);

Grads equality_loss_grads(const EqualityNetParams& p,
                          const std::vector<RowVec>& inputs, int gold);

// ---------------------------------------------------------------------------
// LSTM vector predictor for the sequential task. Cell candidate and hidden
// output use ReLU activation, keeping trained networks in the same family as
// the closed-form construction.

struct SeqPredictorParams {
  Matrix w_f, u_f, b_f;
  Matrix w_i, u_i, b_i;
  Matrix w_o, u_o, b_o;
  Matrix w_c, u_c, b_c;
  Matrix w_proj;  // d x m
  Matrix b_proj;  // 1 x m

  static SeqPredictorParams init(int input_dim, int hidden,
                                 std::uint64_t seed);

  int input_dim() const { return static_cast<int>(w_f.rows()); }
  int hidden_dim() const { return static_cast<int>(w_f.cols()); }
  std::vector<Matrix*> tensors();
  std::vector<const Matrix*> tensors() const;
  static const std::vector<std::string>& tensor_names();
};

struct LstmGates {
  RowVec f, i, o;
};

struct LstmState {
  RowVec h, c;
};

LstmState lstm_zero_state(const SeqPredictorParams& p);
LstmState lstm_step(const SeqPredictorParams& p, const RowVec& x,
                    const LstmState& prev, LstmGates* gates = nullptr);
RowVec seq_project(const SeqPredictorParams& p, const RowVec& h);

// Consumes the prompt (which must start with BOS; BOS itself carries no
// vector and stands for the zero initial state), then generates greedily by
// nearest-neighbor decoding until EOS or the overall length cap. Returns the
// generated token ids.
std::vector<int> seq_forward(const SeqPredictorParams& p,
                             const TokenInventory& inv,
                             const std::vector<int>& prompt,
                             int max_total_len = 6);

// Teacher-forced squared-Euclidean loss over one BOS a b a EOS sequence.
double seq_loss(const SeqPredictorParams& p, const SequenceExample& seq,
                const TokenInventory& inv);
Grads seq_loss_grads(const SeqPredictorParams& p, const SequenceExample& seq,
                     const TokenInventory& inv);

// ---------------------------------------------------------------------------
// Two-hidden-layer feed-forward net for the hierarchical task.

struct DeepHierNetParams {
  Matrix w_xh;   // 4m x n
  Matrix b_h1;   // 1 x n
  Matrix w_hh;   // n x n
  Matrix b_h2;   // 1 x n
  Matrix w_hy;   // n x 2
  Matrix b_y;    // 1 x 2

  static DeepHierNetParams init(int entity_dim, int hidden,
                                std::uint64_t seed);

  int entity_dim() const { return static_cast<int>(w_xh.rows()) / 4; }
  int hidden_dim() const { return static_cast<int>(w_xh.cols()); }
  std::vector<Matrix*> tensors();
  std::vector<const Matrix*> tensors() const;
  static const std::vector<std::string>& tensor_names();
};

struct DeepHierTrace {
  RowVec h1, h2;
  RowVec probs;
};

DeepHierTrace hier_forward_deep(const DeepHierNetParams& p, const RowVec& a,
                                const RowVec& b, const RowVec& c,
                                const RowVec& d);
Grads deep_hier_loss_grads(const DeepHierNetParams& p, const RowVec& a,
                           const RowVec& b, const RowVec& c, const RowVec& d,
                           int gold);

// ---------------------------------------------------------------------------
// Modular reuse model: one shared equality layer applied at both tree
// levels. Requires hidden == entity dim so [h1;h2] is a legal input to the
// shared weights; the constraint is enforced at construction.

struct ModularHierNetParams {
  EqualityNetParams core;

  explicit ModularHierNetParams(EqualityNetParams base);
  static ModularHierNetParams init(int entity_dim, std::uint64_t seed);

  int entity_dim() const { return core.hidden_dim(); }
  std::vector<Matrix*> tensors() { return core.tensors(); }
  std::vector<const Matrix*> tensors() const { return core.tensors(); }
  static const std::vector<std::string>& tensor_names() {
    return EqualityNetParams::tensor_names();
  }
};

struct ModularTrace {
  RowVec h1, h2, h3;
  RowVec probs;
};

ModularTrace hier_forward_modular(const ModularHierNetParams& p,
                                  const RowVec& a, const RowVec& b,
                                  const RowVec& c, const RowVec& d);
Grads modular_loss_grads(const ModularHierNetParams& p, const RowVec& a,
                         const RowVec& b, const RowVec& c, const RowVec& d,
                         int gold);

// ---------------------------------------------------------------------------
// One forward/backward/Adam update. The L2 coefficient comes from the Adam
// state and is folded into the gradients before the step.

double train_step(EqualityNetParams& p, AdamState& state,
                  const std::vector<RowVec>& inputs, int gold);
double train_step(SeqPredictorParams& p, AdamState& state,
                  const SequenceExample& seq, const TokenInventory& inv);
double train_step(DeepHierNetParams& p, AdamState& state, const RowVec& a,
                  const RowVec& b, const RowVec& c, const RowVec& d, int gold);
double train_step(ModularHierNetParams& p, AdamState& state, const RowVec& a,
                  const RowVec& b, const RowVec& c, const RowVec& d, int gold);

}  // namespace eqlab
