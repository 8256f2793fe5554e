#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqlab/types.hpp"

namespace eqlab {

enum class Scheme { kLocalist, kProperty, kRandom, kPretrained };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct PretrainConfig {
  int epochs = 10;  // one epoch = one shuffled pass over the vocabulary
  int hidden = 100;
  // Default is the rate that reliably drives the classifier to perfect task
  // accuracy within the fixed 10-epoch budget on desk-scale vocabularies.
  double lr = 1e-2;
  double l2 = 0.0;
  // When true, each task head reads the embedding directly (no hidden
  // layer). Default is the hidden-layer classifier.
  bool linear_head = false;
  std::uint64_t seed = 0;
};

struct PretrainMeta {
  int tasks = 0;
  int epochs = 0;
  int hidden = 0;
  double lr = 0.0;
  double l2 = 0.0;
  bool linear_head = false;
};

// Vocabulary of entity vectors under one representation scheme.
struct EmbeddingTable {
  Scheme scheme = Scheme::kRandom;
  int dim = 0;
  std::uint64_t seed = 0;
  std::vector<RowVec> vectors;
  std::optional<PretrainMeta> pretrain_meta;

  int size() const { return static_cast<int>(vectors.size()); }
  const RowVec& row(int i) const;
};

// i.i.d. uniform entries in [-0.5, 0.5].
EmbeddingTable make_random_vocab(int size, int dim, std::uint64_t seed);

// Identity-matrix rows (one-hot); dim equals size.
EmbeddingTable make_localist_vocab(int size);

// One interpretable column per feature; values[i] is the feature value of
// entity i. All features must list the same entity count and the resulting
// rows must be pairwise distinct.
struct PropertyFeature {
  std::string name;
  std::vector<double> values;
};
EmbeddingTable make_property_vocab(const std::vector<PropertyFeature>& features);

// Random distinct binary property rows; used when a split requests the
// property scheme without an explicit feature list.
EmbeddingTable make_random_binary_property_vocab(int size, int dim,
                                                 std::uint64_t seed);

// |V| x J matrix of fair-coin binary labels.
using TaskLabelMatrix = Eigen::MatrixXi;
TaskLabelMatrix make_task_labels(int vocab_size, int tasks,
                                 std::uint64_t seed);

struct PretrainResult {
  EmbeddingTable table;
  // Post-training classifier accuracy over all (item, task) pairs.
  double task_accuracy = 0.0;
  // Per-task accuracies, length J.
  std::vector<double> per_task_accuracy;
};

// Multi-task pretraining: trains the classifier with batch-size-1 Adam and
// backpropagates into the embedding rows; returns the updated table
// (scheme=pretrained) with classifier parameters discarded.
PretrainResult pretrain(const EmbeddingTable& table,
                        const TaskLabelMatrix& labels,
                        const PretrainConfig& cfg);

}  // namespace eqlab
