#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eqlab/embedding.hpp"
#include "eqlab/types.hpp"

namespace eqlab {

struct SchemeConfig {
  Scheme scheme = Scheme::kRandom;
  int pretrain_tasks = 0;  // used when scheme == kPretrained
  PretrainConfig pretrain;
};

// Strictly disjoint train/assessment vocabularies of a shared dimension.
// The end-of-sequence token has a fixed random vector shared by both sides;
// the start token is virtual: it marks the zero initial recurrent state and
// has no vector (see nets::seq_forward).
struct VocabSplit {
  EmbeddingTable train;
  EmbeddingTable assess;
  RowVec eos;
  std::uint64_t seed = 0;

  int dim() const { return train.dim; }
};

VocabSplit make_split(int train_size, int assess_size, int dim,
                      const SchemeConfig& scheme, std::uint64_t seed);

struct EqualityExample {
  int left = 0;
  int right = 0;
  bool positive = false;  // positive iff left == right
};

// Balanced, shuffled stream over the train vocabulary; no ordered pair
// occurs twice. Requires |V_T| >= n/2 distinct identity pairs and
// |V_T|^2 - |V_T| >= n/2 distinct non-identity pairs.
std::vector<EqualityExample> equality_stream(const VocabSplit& split, int n,
                                             std::uint64_t seed);
// Same construction over the assessment vocabulary.
std::vector<EqualityExample> equality_testset(const VocabSplit& split,
                                              int n, std::uint64_t seed);

enum class ClassTag { kSameSame, kDiffDiff, kSameDiff, kDiffSame };
std::string class_tag_name(ClassTag tag);

struct HierExample {
  std::array<int, 4> ids{};
  bool positive = false;
  ClassTag tag = ClassTag::kSameSame;
};

// Balanced across the four class tags, n/4 each; no repeated 4-tuple.
std::vector<HierExample> hier_stream(const VocabSplit& split, int n,
                                     std::uint64_t seed);
std::vector<HierExample> hier_testset(const VocabSplit& split, int n,
                                      std::uint64_t seed);

// Token ids for the sequential task. Train entities come first, then
// assessment entities, then EOS; BOS is last and is excluded from decoding.
class TokenInventory {
 public:
  explicit TokenInventory(const VocabSplit& split);

  int train_size() const { return n_train_; }
  int assess_size() const { return n_assess_; }
  int eos_id() const { return n_train_ + n_assess_; }
  int bos_id() const { return eos_id() + 1; }
  // Number of decodable tokens (entities + EOS).
  int decode_size() const { return eos_id() + 1; }

  bool is_entity(int id) const { return id >= 0 && id < eos_id(); }
  int train_id(int local) const { return local; }
  int assess_id(int local) const { return n_train_ + local; }

  const RowVec& vector(int id) const;
  // Nearest decodable token by Euclidean distance; ties -> lowest id.
  int nearest(const RowVec& predicted) const;

 private:
  const VocabSplit* split_;
  int n_train_;
  int n_assess_;
};

struct SequenceExample {
  // Token ids in the form BOS a b a EOS with a != b (train entities).
  std::vector<int> tokens;
};

// Every BOS a b a EOS sequence over the train vocabulary.
std::vector<SequenceExample> aba_train_set(const VocabSplit& split);

// One prompt [BOS, x] per assessment entity x.
std::vector<std::vector<int>> aba_test_prompts(const VocabSplit& split);

// Acceptance predicate: the generated continuation is y x EOS with y any
// entity (train or assessment) other than x.
bool aba_accepts(const TokenInventory& inv, int x_id,
                 const std::vector<int>& continuation);

}  // namespace eqlab
