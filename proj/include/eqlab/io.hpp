#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqlab/embedding.hpp"
#include "eqlab/nets.hpp"
#include "eqlab/taskgen.hpp"
#include "eqlab/types.hpp"

namespace eqlab {

using Json = nlohmann::json;

// Tensor wire format: {"name", "rows", "cols", "data"} with data row-major.
Json tensor_to_json(const std::string& name, const Matrix& m);
Matrix tensor_from_json(const Json& j);

// Model checkpoint: named tensors plus an architecture tag, dimension
// record, init seed, and provenance ("trained" or "analytic").
struct Checkpoint {
  std::string arch;
  std::string provenance = "trained";
  std::uint64_t init_seed = 0;
  std::vector<std::pair<std::string, int>> dims;
  std::vector<std::pair<std::string, Matrix>> tensors;
};

Json checkpoint_to_json(const Checkpoint& c);
Checkpoint checkpoint_from_json(const Json& j);

template <typename Params>
Checkpoint make_checkpoint(const Params& p, const std::string& arch,
                           const std::string& provenance,
                           std::uint64_t init_seed,
                           std::vector<std::pair<std::string, int>> dims) {
  Checkpoint c;
  c.arch = arch;
  c.provenance = provenance;
  c.init_seed = init_seed;
  c.dims = std::move(dims);
  const auto& names = Params::tensor_names();
  auto tensors = p.tensors();
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    c.tensors.emplace_back(names[i], *tensors[i]);
  }
  return c;
}

template <typename Params>
void load_tensors(Params& p, const Checkpoint& c) {
  const auto& names = Params::tensor_names();
  auto tensors = p.tensors();
  if (c.tensors.size() != tensors.size()) {
    throw IoError("checkpoint tensor count mismatch for arch " + c.arch);
  }
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    if (c.tensors[i].first != names[i]) {
      throw IoError("checkpoint tensor order mismatch: expected " + names[i] +
                    ", got " + c.tensors[i].first);
    }
    *tensors[i] = c.tensors[i].second;
  }
}

EqualityNetParams equality_params_from_checkpoint(const Checkpoint& c);
SeqPredictorParams seq_params_from_checkpoint(const Checkpoint& c);

// Embedding table wire format.
Json table_to_json(const EmbeddingTable& t);
EmbeddingTable table_from_json(const Json& j);

// Dataset serialization: one JSON object per line plus a sidecar header.
Json equality_example_to_json(const EqualityExample& e);
Json hier_example_to_json(const HierExample& e);
Json sequence_example_to_json(const SequenceExample& e);

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);
std::string read_text_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

}  // namespace eqlab
