#include "eqlab/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eqlab/adam.hpp"
#include "eqlab/ops.hpp"
#include "eqlab/rng.hpp"
#include "eqlab/tape.hpp"

namespace eqlab {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kLocalist: return "localist";
    case Scheme::kProperty: return "property";
    case Scheme::kRandom: return "random";
    case Scheme::kPretrained: return "pretrained";
  }
  throw ConfigError("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "localist") return Scheme::kLocalist;
  if (name == "property") return Scheme::kProperty;
  if (name == "random") return Scheme::kRandom;
  if (name == "pretrained") return Scheme::kPretrained;
  throw SchemeError("unknown scheme name: " + name);
}

const RowVec& EmbeddingTable::row(int i) const {
  if (i < 0 || i >= size()) {
    throw IndexError("EmbeddingTable::row: index " + std::to_string(i) +
                     " out of range for size " + std::to_string(size()));
  }
  return vectors[static_cast<std::size_t>(i)];
}

EmbeddingTable make_random_vocab(int size, int dim, std::uint64_t seed) {
  if (size < 1 || dim < 1) {
    throw ConfigError("make_random_vocab: size and dim must be >= 1");
  }
  Rng rng(seed);
  EmbeddingTable t;
  t.scheme = Scheme::kRandom;
  t.dim = dim;
  t.seed = seed;
  t.vectors.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    t.vectors.push_back(uniform_matrix(1, dim, -0.5, 0.5, rng).row(0));
  }
  return t;
}

EmbeddingTable make_localist_vocab(int size) {
  if (size < 2) {
    throw ConfigError("make_localist_vocab: size must be >= 2");
  }
  EmbeddingTable t;
  t.scheme = Scheme::kLocalist;
  t.dim = size;
  t.seed = 0;
  t.vectors.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    RowVec v = RowVec::Zero(size);
    v[i] = 1.0;
    t.vectors.push_back(std::move(v));
  }
  return t;
}

EmbeddingTable make_property_vocab(
    const std::vector<PropertyFeature>& features) {
  if (features.empty()) {
    throw ConfigError("make_property_vocab: at least one feature required");
  }
  const std::size_t n = features.front().values.size();
  for (const auto& f : features) {
    if (f.values.size() != n) {
      throw DimensionError("make_property_vocab: feature '" + f.name +
                           "' has a different entity count");
    }
  }
  EmbeddingTable t;
  t.scheme = Scheme::kProperty;
  t.dim = static_cast<int>(features.size());
  t.vectors.reserve(n);
  std::set<std::vector<double>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    RowVec v(t.dim);
    std::vector<double> key(features.size());
    for (std::size_t j = 0; j < features.size(); ++j) {
      v[static_cast<Eigen::Index>(j)] = features[j].values[i];
      key[j] = features[j].values[i];
    }
    if (!seen.insert(key).second) {
      throw ConfigError("make_property_vocab: duplicate entity row at index " +
                        std::to_string(i));
    }
    t.vectors.push_back(std::move(v));
  }
  return t;
}

EmbeddingTable make_random_binary_property_vocab(int size, int dim,
                                                 std::uint64_t seed) {
  if (size < 1 || dim < 1) {
    throw ConfigError("binary property vocab: size and dim must be >= 1");
  }
  if (dim < 63 && (1ULL << dim) < static_cast<unsigned long long>(size)) {
    throw CapacityError("binary property vocab: 2^" + std::to_string(dim) +
                        " rows cannot cover " + std::to_string(size) +
                        " distinct entities");
  }
  Rng rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  EmbeddingTable t;
  t.scheme = Scheme::kProperty;
  t.dim = dim;
  t.seed = seed;
  std::set<std::vector<int>> seen;
  while (t.size() < size) {
    std::vector<int> bits(static_cast<std::size_t>(dim));
    for (auto& b : bits) b = coin(rng);
    if (!seen.insert(bits).second) continue;
    RowVec v(dim);
    for (int j = 0; j < dim; ++j) v[j] = static_cast<double>(bits[j]);
    t.vectors.push_back(std::move(v));
  }
  return t;
}

TaskLabelMatrix make_task_labels(int vocab_size, int tasks,
                                 std::uint64_t seed) {
  if (tasks < 1) throw ConfigError("make_task_labels: tasks must be >= 1");
  Rng rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  TaskLabelMatrix labels(vocab_size, tasks);
  for (int i = 0; i < vocab_size; ++i)
    for (int j = 0; j < tasks; ++j) labels(i, j) = coin(rng);
  return labels;
}

namespace {

// Per-row Adam bookkeeping for embedding rows that only receive gradient on
// the step that visits them.
struct RowAdam {
  RowVec m, v;
  std::int64_t t = 0;
};

void row_adam_step(RowVec& row, const RowVec& grad, RowAdam& st,
                   const AdamConfig& cfg) {
  st.t += 1;
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(st.t));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(st.t));
  st.m = cfg.beta1 * st.m + (1.0 - cfg.beta1) * grad;
  st.v = cfg.beta2 * st.v + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
  const RowVec mhat = st.m / bc1;
  const RowVec vhat = st.v / bc2;
  row -= cfg.lr * mhat.cwiseQuotient(
                      (vhat.cwiseSqrt().array() + cfg.eps).matrix());
}

}  // namespace

PretrainResult pretrain(const EmbeddingTable& table,
                        const TaskLabelMatrix& labels,
                        const PretrainConfig& cfg) {
  if (table.scheme != Scheme::kRandom) {
    throw SchemeError("pretrain: input table must use the random scheme, got " +
                      scheme_name(table.scheme));
  }
  if (labels.rows() != table.size()) {
    throw DimensionError("pretrain: label rows " +
                         std::to_string(labels.rows()) +
                         " vs vocabulary size " + std::to_string(table.size()));
  }
  const int vocab = table.size();
  const int m = table.dim;
  const int tasks = static_cast<int>(labels.cols());
  const int hidden = cfg.linear_head ? 0 : cfg.hidden;

  Rng init_rng(derive_seed(cfg.seed, "pretrain-init"));
  std::vector<RowVec> embed(table.vectors);

  Matrix w_xh, b_h;
  std::vector<Matrix> w_heads, b_heads;
  const int head_in = cfg.linear_head ? m : hidden;
  if (!cfg.linear_head) {
    w_xh = scaled_uniform(m, hidden, m, init_rng);
    b_h = Matrix::Zero(1, hidden);
  }
  for (int j = 0; j < tasks; ++j) {
    w_heads.push_back(scaled_uniform(head_in, 2, head_in, init_rng));
    b_heads.push_back(Matrix::Zero(1, 2));
  }

  std::vector<Matrix*> shared_params;
  if (!cfg.linear_head) {
    shared_params.push_back(&w_xh);
    shared_params.push_back(&b_h);
  }
  for (int j = 0; j < tasks; ++j) {
    shared_params.push_back(&w_heads[static_cast<std::size_t>(j)]);
    shared_params.push_back(&b_heads[static_cast<std::size_t>(j)]);
  }
  AdamConfig acfg;
  acfg.lr = cfg.lr;
  acfg.l2 = cfg.l2;
  std::vector<const Matrix*> shared_const(shared_params.begin(),
                                          shared_params.end());
  AdamState shared_state = AdamState::init(acfg, shared_const);
  std::vector<RowAdam> row_states(static_cast<std::size_t>(vocab));
  for (auto& rs : row_states) {
    rs.m = RowVec::Zero(m);
    rs.v = RowVec::Zero(m);
  }

  std::vector<int> order(static_cast<std::size_t>(vocab));
  std::iota(order.begin(), order.end(), 0);
  Rng order_rng(derive_seed(cfg.seed, "pretrain-order"));

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), order_rng);
    for (int item : order) {
      GradTape tape;
      auto e = tape.leaf(Matrix(embed[static_cast<std::size_t>(item)]));
      GradTape::Var rep = e;
      std::vector<GradTape::Var> shared_vars;
      if (!cfg.linear_head) {
        auto w = tape.leaf(w_xh);
        auto b = tape.leaf(b_h);
        rep = tape.relu(tape.add(tape.matmul(e, w), b));
        shared_vars = {w, b};
      }
      GradTape::Var loss = -1;
      std::vector<GradTape::Var> head_vars;
      for (int j = 0; j < tasks; ++j) {
        auto wj = tape.leaf(w_heads[static_cast<std::size_t>(j)]);
        auto bj = tape.leaf(b_heads[static_cast<std::size_t>(j)]);
        head_vars.push_back(wj);
        head_vars.push_back(bj);
        auto logits = tape.add(tape.matmul(rep, wj), bj);
        auto task_loss = tape.softmax_cross_entropy(logits, labels(item, j));
        loss = (loss < 0) ? task_loss : tape.add(loss, task_loss);
      }
      tape.backward(loss);

      std::vector<Matrix> shared_grads;
      for (auto v : shared_vars) shared_grads.push_back(tape.grad(v));
      for (auto v : head_vars) shared_grads.push_back(tape.grad(v));
      apply_l2(shared_grads, shared_params, cfg.l2);
      adam_step(shared_params, shared_grads, shared_state);

      RowVec erow_grad = tape.grad(e).row(0);
      erow_grad += 2.0 * cfg.l2 * embed[static_cast<std::size_t>(item)];
      row_adam_step(embed[static_cast<std::size_t>(item)], erow_grad,
                    row_states[static_cast<std::size_t>(item)], acfg);
    }
  }

  // Measure classifier fit before discarding its parameters.
  PretrainResult result;
  result.per_task_accuracy.assign(static_cast<std::size_t>(tasks), 0.0);
  for (int item = 0; item < vocab; ++item) {
    RowVec rep = embed[static_cast<std::size_t>(item)];
    if (!cfg.linear_head) {
      rep = relu(rep * w_xh + b_h.row(0));
    }
    for (int j = 0; j < tasks; ++j) {
      RowVec logits =
          rep * w_heads[static_cast<std::size_t>(j)] +
          b_heads[static_cast<std::size_t>(j)].row(0);
      const int pred = logits[1] > logits[0] ? 1 : 0;
      if (pred == labels(item, j)) {
        result.per_task_accuracy[static_cast<std::size_t>(j)] += 1.0;
      }
    }
  }
  double total = 0.0;
  for (auto& acc : result.per_task_accuracy) {
    acc /= vocab;
    total += acc;
  }
  result.task_accuracy = tasks > 0 ? total / tasks : 0.0;

  result.table = table;
  result.table.scheme = Scheme::kPretrained;
  result.table.vectors = std::move(embed);
  PretrainMeta meta;
  meta.tasks = tasks;
  meta.epochs = cfg.epochs;
  meta.hidden = hidden;
  meta.lr = cfg.lr;
  meta.l2 = cfg.l2;
  meta.linear_head = cfg.linear_head;
  result.table.pretrain_meta = meta;
  return result;
}

}  // namespace eqlab
