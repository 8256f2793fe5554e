#include "eqlab/taskgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "eqlab/rng.hpp"

namespace eqlab {

namespace {

EmbeddingTable make_table(Scheme scheme, int size, int dim,
                          const SchemeConfig& cfg, std::uint64_t seed) {
  switch (scheme) {
    case Scheme::kRandom:
      return make_random_vocab(size, dim, seed);
    case Scheme::kProperty:
      return make_random_binary_property_vocab(size, dim, seed);
    case Scheme::kPretrained: {
      EmbeddingTable base = make_random_vocab(size, dim, seed);
      if (cfg.pretrain_tasks <= 0) {
        // Zero pretraining tasks degrade to purely random representations.
        return base;
      }
      TaskLabelMatrix labels = make_task_labels(
          size, cfg.pretrain_tasks, derive_seed(seed, "task-labels"));
      PretrainConfig pcfg = cfg.pretrain;
      pcfg.seed = derive_seed(seed, "pretrain");
      return pretrain(base, labels, pcfg).table;
    }
    case Scheme::kLocalist:
      throw ConfigError("make_table: localist tables are built jointly");
  }
  throw ConfigError("make_table: unknown scheme");
}

}  // namespace

VocabSplit make_split(int train_size, int assess_size, int dim,
                      const SchemeConfig& scheme, std::uint64_t seed) {
  if (train_size < 2 || assess_size < 2) {
    throw ConfigError("make_split: vocabulary sizes must be >= 2");
  }
  VocabSplit split;
  split.seed = seed;
  if (scheme.scheme == Scheme::kLocalist) {
    // One shared one-hot space; train entities take the leading hot
    // indices, assessment entities the trailing ones, so the two sides are
    // disjoint and assessment units are never active during training.
    const int total = train_size + assess_size;
    EmbeddingTable all = make_localist_vocab(total);
    split.train.scheme = Scheme::kLocalist;
    split.train.dim = total;
    split.assess.scheme = Scheme::kLocalist;
    split.assess.dim = total;
    for (int i = 0; i < train_size; ++i)
      split.train.vectors.push_back(all.vectors[static_cast<std::size_t>(i)]);
    for (int i = 0; i < assess_size; ++i)
      split.assess.vectors.push_back(
          all.vectors[static_cast<std::size_t>(train_size + i)]);
  } else {
    // Assessment vectors are generated and (for the pretrained scheme)
    // pretrained independently with fresh labels; nothing is shared.
    split.train = make_table(scheme.scheme, train_size, dim, scheme,
                             derive_seed(seed, "train-vocab"));
    split.assess = make_table(scheme.scheme, assess_size, dim, scheme,
                              derive_seed(seed, "assess-vocab"));
  }
  if (split.train.dim != split.assess.dim) {
    throw DimensionError("make_split: train/assess dimension mismatch");
  }
  Rng eos_rng(derive_seed(seed, "eos"));
  split.eos = uniform_matrix(1, split.train.dim, -0.5, 0.5, eos_rng).row(0);
  return split;
}

namespace {

std::vector<EqualityExample> balanced_pairs(int vocab, int n,
                                            std::uint64_t seed,
                                            const char* what) {
  if (n < 2 || n % 2 != 0) {
    throw ConfigError(std::string(what) + ": n must be even and >= 2");
  }
  const int half = n / 2;
  if (vocab < half) {
    throw CapacityError(std::string(what) + ": " + std::to_string(half) +
                        " distinct identity pairs unattainable for vocabulary "
                        "size " +
                        std::to_string(vocab));
  }
  const long long neg_capacity =
      static_cast<long long>(vocab) * (vocab - 1);
  if (neg_capacity < half) {
    throw CapacityError(std::string(what) + ": " + std::to_string(half) +
                        " distinct non-identity pairs unattainable for "
                        "vocabulary size " +
                        std::to_string(vocab));
  }

  Rng rng(seed);
  std::vector<EqualityExample> out;
  out.reserve(static_cast<std::size_t>(n));

  std::vector<int> ids(static_cast<std::size_t>(vocab));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (int i = 0; i < half; ++i) {
    out.push_back({ids[static_cast<std::size_t>(i)],
                   ids[static_cast<std::size_t>(i)], true});
  }

  std::uniform_int_distribution<int> pick(0, vocab - 1);
  std::unordered_set<long long> used;
  used.reserve(static_cast<std::size_t>(half) * 2);
  if (half * 2 >= neg_capacity) {
    // Near capacity: enumerate and shuffle instead of rejection sampling.
    std::vector<std::pair<int, int>> all;
    all.reserve(static_cast<std::size_t>(neg_capacity));
    for (int a = 0; a < vocab; ++a)
      for (int b = 0; b < vocab; ++b)
        if (a != b) all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    for (int i = 0; i < half; ++i) {
      out.push_back({all[static_cast<std::size_t>(i)].first,
                     all[static_cast<std::size_t>(i)].second, false});
    }
  } else {
    while (static_cast<int>(out.size()) < n) {
      const int a = pick(rng);
      const int b = pick(rng);
      if (a == b) continue;
      const long long key = static_cast<long long>(a) * vocab + b;
      if (!used.insert(key).second) continue;
      out.push_back({a, b, false});
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

std::vector<EqualityExample> equality_stream(const VocabSplit& split, int n,
                                             std::uint64_t seed) {
  return balanced_pairs(split.train.size(), n, seed, "equality_stream");
}

std::vector<EqualityExample> equality_testset(const VocabSplit& split, int n,
                                              std::uint64_t seed) {
  return balanced_pairs(split.assess.size(), n, seed, "equality_testset");
}

std::string class_tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::kSameSame: return "same/same";
    case ClassTag::kDiffDiff: return "diff/diff";
    case ClassTag::kSameDiff: return "same/diff";
    case ClassTag::kDiffSame: return "diff/same";
  }
  throw ConfigError("unknown class tag");
}

namespace {

std::vector<HierExample> balanced_tuples(int vocab, int n, std::uint64_t seed,
                                         const char* what) {
  if (n < 4 || n % 4 != 0) {
    throw ConfigError(std::string(what) + ": n must be divisible by 4");
  }
  const long long quarter = n / 4;
  const long long v = vocab;
  const long long diff_pairs = v * (v - 1);
  // Saturating multiply: tuple counts grow as vocab^4 and overflow long long
  // for large vocabularies, where the capacity check is vacuous anyway.
  auto sat_mul = [](long long a, long long b) {
    constexpr long long kMax = std::numeric_limits<long long>::max();
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  const long long capacity[4] = {sat_mul(v, v), sat_mul(diff_pairs, diff_pairs),
                                 sat_mul(v, diff_pairs), sat_mul(diff_pairs, v)};
  const ClassTag tags[4] = {ClassTag::kSameSame, ClassTag::kDiffDiff,
                            ClassTag::kSameDiff, ClassTag::kDiffSame};
  for (int k = 0; k < 4; ++k) {
    if (capacity[k] < quarter) {
      throw CapacityError(std::string(what) + ": class " +
                          class_tag_name(tags[k]) + " cannot supply " +
                          std::to_string(quarter) +
                          " distinct tuples from vocabulary size " +
                          std::to_string(vocab));
    }
  }

  Rng rng(seed);
  std::uniform_int_distribution<int> pick(0, vocab - 1);
  auto pick_same = [&](int& a, int& b) { a = b = pick(rng); };
  auto pick_diff = [&](int& a, int& b) {
    do {
      a = pick(rng);
      b = pick(rng);
    } while (a == b);
  };

  std::vector<HierExample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < 4; ++k) {
    std::unordered_set<unsigned long long> used;
    used.reserve(static_cast<std::size_t>(quarter) * 2);
    while (static_cast<long long>(used.size()) < quarter) {
      HierExample ex;
      ex.tag = tags[k];
      switch (tags[k]) {
        case ClassTag::kSameSame:
          pick_same(ex.ids[0], ex.ids[1]);
          pick_same(ex.ids[2], ex.ids[3]);
          ex.positive = true;
          break;
        case ClassTag::kDiffDiff:
          pick_diff(ex.ids[0], ex.ids[1]);
          pick_diff(ex.ids[2], ex.ids[3]);
          ex.positive = true;
          break;
        case ClassTag::kSameDiff:
          pick_same(ex.ids[0], ex.ids[1]);
          pick_diff(ex.ids[2], ex.ids[3]);
          ex.positive = false;
          break;
        case ClassTag::kDiffSame:
          pick_diff(ex.ids[0], ex.ids[1]);
          pick_same(ex.ids[2], ex.ids[3]);
          ex.positive = false;
          break;
      }
      unsigned long long key = 0;
      for (int i = 0; i < 4; ++i) {
        key = key * static_cast<unsigned long long>(vocab) +
              static_cast<unsigned long long>(ex.ids[static_cast<std::size_t>(i)]);
      }
      if (!used.insert(key).second) continue;
      out.push_back(ex);
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

std::vector<HierExample> hier_stream(const VocabSplit& split, int n,
                                     std::uint64_t seed) {
  return balanced_tuples(split.train.size(), n, seed, "hier_stream");
}

std::vector<HierExample> hier_testset(const VocabSplit& split, int n,
                                      std::uint64_t seed) {
  return balanced_tuples(split.assess.size(), n, seed, "hier_testset");
}

TokenInventory::TokenInventory(const VocabSplit& split)
    : split_(&split),
      n_train_(split.train.size()),
      n_assess_(split.assess.size()) {}

const RowVec& TokenInventory::vector(int id) const {
  if (id >= 0 && id < n_train_) return split_->train.row(id);
  if (id >= n_train_ && id < n_train_ + n_assess_)
    return split_->assess.row(id - n_train_);
  if (id == eos_id()) return split_->eos;
  throw IndexError("TokenInventory::vector: token " + std::to_string(id) +
                   " has no vector (BOS is virtual)");
}

int TokenInventory::nearest(const RowVec& predicted) const {
  if (decode_size() <= 0) {
    throw ConfigError("TokenInventory::nearest: empty inventory");
  }
  int best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (int id = 0; id < decode_size(); ++id) {
    const double d = (vector(id) - predicted).squaredNorm();
    if (d < best_dist) {
      best_dist = d;
      best = id;
    }
  }
  return best;
}

std::vector<SequenceExample> aba_train_set(const VocabSplit& split) {
  const int v = split.train.size();
  if (v < 2) throw ConfigError("aba_train_set: train vocabulary must be >= 2");
  TokenInventory inv(split);
  std::vector<SequenceExample> out;
  out.reserve(static_cast<std::size_t>(v) * (v - 1));
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      if (a == b) continue;
      out.push_back({{inv.bos_id(), a, b, a, inv.eos_id()}});
    }
  }
  return out;
}

std::vector<std::vector<int>> aba_test_prompts(const VocabSplit& split) {
  TokenInventory inv(split);
  std::vector<std::vector<int>> prompts;
  prompts.reserve(static_cast<std::size_t>(split.assess.size()));
  for (int i = 0; i < split.assess.size(); ++i) {
    prompts.push_back({inv.bos_id(), inv.assess_id(i)});
  }
  return prompts;
}

bool aba_accepts(const TokenInventory& inv, int x_id,
                 const std::vector<int>& continuation) {
  if (continuation.size() != 3) return false;
  const int y = continuation[0];
  return inv.is_entity(y) && y != x_id && continuation[1] == x_id &&
         continuation[2] == inv.eos_id();
}

}  // namespace eqlab
