#include "eqlab/nets.hpp"

#include "eqlab/ops.hpp"
#include "eqlab/rng.hpp"
#include "eqlab/tape.hpp"

namespace eqlab {

int predict_from_probs(const RowVec& probs) {
  if (probs.size() != 2) {
    throw DimensionError("predict_from_probs expects 2 classes");
  }
  return probs[kPositiveClass] > probs[kNegativeClass] ? kPositiveClass
                                                       : kNegativeClass;
}

// --------------------------------------------------------------------------
// EqualityNet

EqualityNetParams EqualityNetParams::init(int input_dim, int hidden,
                                          std::uint64_t seed) {
  if (input_dim < 1 || hidden < 1) {
    throw ConfigError("EqualityNetParams::init: dimensions must be >= 1");
  }
  Rng rng(seed);
  EqualityNetParams p;
  p.w_xh = scaled_uniform(input_dim, hidden, input_dim, rng);
  p.b_h = Matrix::Zero(1, hidden);
  p.w_hy = scaled_uniform(hidden, 2, hidden, rng);
  p.b_y = Matrix::Zero(1, 2);
  return p;
}

std::vector<Matrix*> EqualityNetParams::tensors() {
  return {&w_xh, &b_h, &w_hy, &b_y};
}
std::vector<const Matrix*> EqualityNetParams::tensors() const {
  return {&w_xh, &b_h, &w_hy, &b_y};
}
const std::vector<std::string>& EqualityNetParams::tensor_names() {
  static const std::vector<std::string> names = {"w_xh", "b_h", "w_hy", "b_y"};
  return names;
}

EqualityTrace concat_forward(const EqualityNetParams& p,
                             const std::vector<RowVec>& inputs) {
  Eigen::Index total = 0;
  for (const auto& v : inputs) total += v.size();
  if (total != p.w_xh.rows()) {
    throw DimensionError("concat_forward: concatenated input length " +
                         std::to_string(total) + " vs weight rows " +
                         std::to_string(p.w_xh.rows()));
  }
  RowVec x(total);
  Eigen::Index at = 0;
  for (const auto& v : inputs) {
    x.segment(at, v.size()) = v;
    at += v.size();
  }
  EqualityTrace t;
  t.hidden = relu(x * p.w_xh + p.b_h.row(0));
  t.logits = t.hidden * p.w_hy + p.b_y.row(0);
  t.probs = softmax(t.logits);
  return t;
}

EqualityTrace equality_forward(const EqualityNetParams& p, const RowVec& a,
                               const RowVec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("equality_forward: input dims " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  return concat_forward(p, {a, b});
}

Grads equality_loss_grads(const EqualityNetParams& p,
                          const std::vector<RowVec>& inputs, int gold) {
  GradTape tape;
  std::vector<GradTape::Var> params;
  params.reserve(4);
  for (const Matrix* t : p.tensors()) params.push_back(tape.leaf(*t));
  GradTape::Var x = tape.leaf(Matrix(inputs.front()));
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    x = tape.hcat(x, tape.leaf(Matrix(inputs[i])));
  }
  auto h = tape.relu(tape.add(tape.matmul(x, params[0]), params[1]));
  auto logits = tape.add(tape.matmul(h, params[2]), params[3]);
  auto loss = tape.softmax_cross_entropy(logits, gold);
  tape.backward(loss);
  Grads g;
  g.loss = tape.value(loss)(0, 0);
  for (auto v : params) g.grads.push_back(tape.grad(v));
  return g;
}

// --------------------------------------------------------------------------
// SeqPredictor

SeqPredictorParams SeqPredictorParams::init(int input_dim, int hidden,
                                            std::uint64_t seed) {
  if (input_dim < 1 || hidden < 1) {
    throw ConfigError("SeqPredictorParams::init: dimensions must be >= 1");
  }
  Rng rng(seed);
  SeqPredictorParams p;
  auto gate = [&](Matrix& w, Matrix& u, Matrix& b) {
    w = scaled_uniform(input_dim, hidden, input_dim, rng);
    u = scaled_uniform(hidden, hidden, hidden, rng);
    b = Matrix::Zero(1, hidden);
  };
  gate(p.w_f, p.u_f, p.b_f);
  gate(p.w_i, p.u_i, p.b_i);
  gate(p.w_o, p.u_o, p.b_o);
  gate(p.w_c, p.u_c, p.b_c);
  p.w_proj = scaled_uniform(hidden, input_dim, hidden, rng);
  p.b_proj = Matrix::Zero(1, input_dim);
  return p;
}

std::vector<Matrix*> SeqPredictorParams::tensors() {
  return {&w_f, &u_f, &b_f, &w_i, &u_i, &b_i, &w_o,    &u_o,
          &b_o, &w_c, &u_c, &b_c, &w_proj, &b_proj};
}
std::vector<const Matrix*> SeqPredictorParams::tensors() const {
  return {&w_f, &u_f, &b_f, &w_i, &u_i, &b_i, &w_o,    &u_o,
          &b_o, &w_c, &u_c, &b_c, &w_proj, &b_proj};
}
const std::vector<std::string>& SeqPredictorParams::tensor_names() {
  static const std::vector<std::string> names = {
      "w_f", "u_f", "b_f", "w_i", "u_i", "b_i", "w_o",    "u_o",
      "b_o", "w_c", "u_c", "b_c", "w_proj", "b_proj"};
  return names;
}

LstmState lstm_zero_state(const SeqPredictorParams& p) {
  return {RowVec::Zero(p.hidden_dim()), RowVec::Zero(p.hidden_dim())};
}

LstmState lstm_step(const SeqPredictorParams& p, const RowVec& x,
                    const LstmState& prev, LstmGates* gates) {
  if (x.size() != p.input_dim()) {
    throw DimensionError("lstm_step: input dim " + std::to_string(x.size()) +
                         " vs " + std::to_string(p.input_dim()));
  }
  const RowVec f = sigmoid(x * p.w_f + prev.h * p.u_f + p.b_f.row(0));
  const RowVec i = sigmoid(x * p.w_i + prev.h * p.u_i + p.b_i.row(0));
  const RowVec o = sigmoid(x * p.w_o + prev.h * p.u_o + p.b_o.row(0));
  const RowVec cand = relu(x * p.w_c + prev.h * p.u_c + p.b_c.row(0));
  LstmState next;
  next.c = f.cwiseProduct(prev.c) + i.cwiseProduct(cand);
  next.h = o.cwiseProduct(relu(next.c));
  if (gates) *gates = {f, i, o};
  return next;
}

RowVec seq_project(const SeqPredictorParams& p, const RowVec& h) {
  return h * p.w_proj + p.b_proj.row(0);
}

std::vector<int> seq_forward(const SeqPredictorParams& p,
                             const TokenInventory& inv,
                             const std::vector<int>& prompt,
                             int max_total_len) {
  if (prompt.empty() || prompt.front() != inv.bos_id()) {
    throw UsageError("seq_forward: prompt must begin with BOS");
  }
  if (inv.decode_size() <= 0) {
    throw ConfigError("seq_forward: empty token inventory");
  }
  LstmState state = lstm_zero_state(p);
  // BOS stands for the zero initial state; remaining prompt tokens are fed.
  for (std::size_t i = 1; i < prompt.size(); ++i) {
    state = lstm_step(p, inv.vector(prompt[i]), state);
  }
  std::vector<int> generated;
  int total = static_cast<int>(prompt.size());
  while (total < max_total_len) {
    const int id = inv.nearest(seq_project(p, state.h));
    generated.push_back(id);
    ++total;
    if (id == inv.eos_id()) break;
    state = lstm_step(p, inv.vector(id), state);
  }
  return generated;
}

namespace {

void check_sequence(const SequenceExample& seq, const TokenInventory& inv) {
  if (seq.tokens.size() < 3 || seq.tokens.front() != inv.bos_id() ||
      seq.tokens.back() != inv.eos_id()) {
    throw ConfigError("sequence must be BOS ... EOS");
  }
}

}  // namespace

double seq_loss(const SeqPredictorParams& p, const SequenceExample& seq,
                const TokenInventory& inv) {
  check_sequence(seq, inv);
  LstmState state = lstm_zero_state(p);
  double loss = 0.0;
  // Teacher forcing: feed actual token t, score the prediction of t+1.
  for (std::size_t t = 1; t + 1 < seq.tokens.size(); ++t) {
    state = lstm_step(p, inv.vector(seq.tokens[t]), state);
    loss += squared_euclidean(seq_project(p, state.h),
                              inv.vector(seq.tokens[t + 1]));
  }
  return loss;
}

Grads seq_loss_grads(const SeqPredictorParams& p, const SequenceExample& seq,
                     const TokenInventory& inv) {
  check_sequence(seq, inv);
  GradTape tape;
  std::vector<GradTape::Var> params;
  for (const Matrix* t : p.tensors()) params.push_back(tape.leaf(*t));
  const auto w_f = params[0], u_f = params[1], b_f = params[2];
  const auto w_i = params[3], u_i = params[4], b_i = params[5];
  const auto w_o = params[6], u_o = params[7], b_o = params[8];
  const auto w_c = params[9], u_c = params[10], b_c = params[11];
  const auto w_proj = params[12], b_proj = params[13];

  GradTape::Var h = tape.leaf(Matrix::Zero(1, p.hidden_dim()));
  GradTape::Var c = tape.leaf(Matrix::Zero(1, p.hidden_dim()));
  GradTape::Var loss = -1;
  for (std::size_t t = 1; t + 1 < seq.tokens.size(); ++t) {
    auto x = tape.leaf(Matrix(inv.vector(seq.tokens[t])));
    auto f = tape.sigmoid(
        tape.add(tape.add(tape.matmul(x, w_f), tape.matmul(h, u_f)), b_f));
    auto i = tape.sigmoid(
        tape.add(tape.add(tape.matmul(x, w_i), tape.matmul(h, u_i)), b_i));
    auto o = tape.sigmoid(
        tape.add(tape.add(tape.matmul(x, w_o), tape.matmul(h, u_o)), b_o));
    auto cand = tape.relu(
        tape.add(tape.add(tape.matmul(x, w_c), tape.matmul(h, u_c)), b_c));
    c = tape.add(tape.hadamard(f, c), tape.hadamard(i, cand));
    h = tape.hadamard(o, tape.relu(c));
    auto y = tape.add(tape.matmul(h, w_proj), b_proj);
    auto step_loss = tape.squared_error(y, inv.vector(seq.tokens[t + 1]));
    loss = (loss < 0) ? step_loss : tape.add(loss, step_loss);
  }
  tape.backward(loss);
  Grads g;
  g.loss = tape.value(loss)(0, 0);
  for (auto v : params) g.grads.push_back(tape.grad(v));
  return g;
}

// --------------------------------------------------------------------------
// DeepHierNet

DeepHierNetParams DeepHierNetParams::init(int entity_dim, int hidden,
                                          std::uint64_t seed) {
  if (entity_dim < 1 || hidden < 1) {
    throw ConfigError("DeepHierNetParams::init: dimensions must be >= 1");
  }
  Rng rng(seed);
  DeepHierNetParams p;
  p.w_xh = scaled_uniform(4 * entity_dim, hidden, 4 * entity_dim, rng);
  p.b_h1 = Matrix::Zero(1, hidden);
  p.w_hh = scaled_uniform(hidden, hidden, hidden, rng);
  p.b_h2 = Matrix::Zero(1, hidden);
  p.w_hy = scaled_uniform(hidden, 2, hidden, rng);
  p.b_y = Matrix::Zero(1, 2);
  return p;
}

std::vector<Matrix*> DeepHierNetParams::tensors() {
  return {&w_xh, &b_h1, &w_hh, &b_h2, &w_hy, &b_y};
}
std::vector<const Matrix*> DeepHierNetParams::tensors() const {
  return {&w_xh, &b_h1, &w_hh, &b_h2, &w_hy, &b_y};
}
const std::vector<std::string>& DeepHierNetParams::tensor_names() {
  static const std::vector<std::string> names = {"w_xh", "b_h1", "w_hh",
                                                 "b_h2", "w_hy", "b_y"};
  return names;
}

DeepHierTrace hier_forward_deep(const DeepHierNetParams& p, const RowVec& a,
                                const RowVec& b, const RowVec& c,
                                const RowVec& d) {
  const Eigen::Index m = a.size();
  if (b.size() != m || c.size() != m || d.size() != m ||
      4 * m != p.w_xh.rows()) {
    throw DimensionError("hier_forward_deep: input dims inconsistent");
  }
  RowVec x(4 * m);
  x << a, b, c, d;
  DeepHierTrace t;
  t.h1 = relu(x * p.w_xh + p.b_h1.row(0));
  t.h2 = relu(t.h1 * p.w_hh + p.b_h2.row(0));
  t.probs = softmax(t.h2 * p.w_hy + p.b_y.row(0));
  return t;
}

Grads deep_hier_loss_grads(const DeepHierNetParams& p, const RowVec& a,
                           const RowVec& b, const RowVec& c, const RowVec& d,
                           int gold) {
  GradTape tape;
  std::vector<GradTape::Var> params;
  for (const Matrix* t : p.tensors()) params.push_back(tape.leaf(*t));
  auto x = tape.hcat(tape.hcat(tape.leaf(Matrix(a)), tape.leaf(Matrix(b))),
                     tape.hcat(tape.leaf(Matrix(c)), tape.leaf(Matrix(d))));
  auto h1 = tape.relu(tape.add(tape.matmul(x, params[0]), params[1]));
  auto h2 = tape.relu(tape.add(tape.matmul(h1, params[2]), params[3]));
  auto logits = tape.add(tape.matmul(h2, params[4]), params[5]);
  auto loss = tape.softmax_cross_entropy(logits, gold);
  tape.backward(loss);
  Grads g;
  g.loss = tape.value(loss)(0, 0);
  for (auto v : params) g.grads.push_back(tape.grad(v));
  return g;
}

// --------------------------------------------------------------------------
// ModularHierNet

ModularHierNetParams::ModularHierNetParams(EqualityNetParams base)
    : core(std::move(base)) {
  if (core.input_dim() != 2 * core.hidden_dim()) {
    throw DimensionError(
        "ModularHierNetParams: shared layer must map 2m -> m so [h1;h2] can "
        "re-enter it; got " +
        shape_str(core.w_xh));
  }
}

ModularHierNetParams ModularHierNetParams::init(int entity_dim,
                                                std::uint64_t seed) {
  return ModularHierNetParams(
      EqualityNetParams::init(2 * entity_dim, entity_dim, seed));
}

ModularTrace hier_forward_modular(const ModularHierNetParams& p,
                                  const RowVec& a, const RowVec& b,
                                  const RowVec& c, const RowVec& d) {
  const int m = p.entity_dim();
  if (a.size() != m || b.size() != m || c.size() != m || d.size() != m) {
    throw DimensionError("hier_forward_modular: inputs must have dim " +
                         std::to_string(m));
  }
  auto shared = [&](const RowVec& left, const RowVec& right) -> RowVec {
    RowVec x(2 * m);
    x << left, right;
    return relu(x * p.core.w_xh + p.core.b_h.row(0));
  };
  ModularTrace t;
  t.h1 = shared(a, b);
  t.h2 = shared(c, d);
  t.h3 = shared(t.h1, t.h2);
  t.probs = softmax(t.h3 * p.core.w_hy + p.core.b_y.row(0));
  return t;
}

Grads modular_loss_grads(const ModularHierNetParams& p, const RowVec& a,
                         const RowVec& b, const RowVec& c, const RowVec& d,
                         int gold) {
  GradTape tape;
  auto w_xh = tape.leaf(p.core.w_xh);
  auto b_h = tape.leaf(p.core.b_h);
  auto w_hy = tape.leaf(p.core.w_hy);
  auto b_y = tape.leaf(p.core.b_y);
  auto shared = [&](GradTape::Var x) {
    return tape.relu(tape.add(tape.matmul(x, w_xh), b_h));
  };
  auto h1 = shared(tape.hcat(tape.leaf(Matrix(a)), tape.leaf(Matrix(b))));
  auto h2 = shared(tape.hcat(tape.leaf(Matrix(c)), tape.leaf(Matrix(d))));
  auto h3 = shared(tape.hcat(h1, h2));
  auto logits = tape.add(tape.matmul(h3, w_hy), b_y);
  auto loss = tape.softmax_cross_entropy(logits, gold);
  tape.backward(loss);
  Grads g;
  g.loss = tape.value(loss)(0, 0);
  for (auto v : {w_xh, b_h, w_hy, b_y}) g.grads.push_back(tape.grad(v));
  return g;
}

// --------------------------------------------------------------------------
// Train steps

namespace {

template <typename Params>
double apply_update(Params& p, AdamState& state, Grads g) {
  auto tensors = p.tensors();
  apply_l2(g.grads, tensors, state.cfg.l2);
  adam_step(tensors, g.grads, state);
  return g.loss;
}

}  // namespace

double train_step(EqualityNetParams& p, AdamState& state,
                  const std::vector<RowVec>& inputs, int gold) {
  return apply_update(p, state, equality_loss_grads(p, inputs, gold));
}

double train_step(SeqPredictorParams& p, AdamState& state,
                  const SequenceExample& seq, const TokenInventory& inv) {
  return apply_update(p, state, seq_loss_grads(p, seq, inv));
}

double train_step(DeepHierNetParams& p, AdamState& state, const RowVec& a,
                  const RowVec& b, const RowVec& c, const RowVec& d,
                  int gold) {
  return apply_update(p, state, deep_hier_loss_grads(p, a, b, c, d, gold));
}

double train_step(ModularHierNetParams& p, AdamState& state, const RowVec& a,
                  const RowVec& b, const RowVec& c, const RowVec& d,
                  int gold) {
  return apply_update(p, state, modular_loss_grads(p, a, b, c, d, gold));
}

}  // namespace eqlab
