#include "eqlab/io.hpp"

#include <fstream>
#include <sstream>

namespace eqlab {

Json tensor_to_json(const std::string& name, const Matrix& m) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  return Json{{"name", name},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", data}};
}

Matrix tensor_from_json(const Json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw IoError("tensor object missing rows/cols/data");
  }
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto data = j.at("data").get<std::vector<double>>();
  if (rows < 0 || cols < 0 ||
      data.size() != static_cast<std::size_t>(rows * cols)) {
    throw IoError("tensor data length does not match rows*cols");
  }
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[k++];
  }
  return m;
}

Json checkpoint_to_json(const Checkpoint& c) {
  Json dims = Json::object();
  for (const auto& [k, v] : c.dims) dims[k] = v;
  Json tensors = Json::array();
  for (const auto& [name, m] : c.tensors) {
    tensors.push_back(tensor_to_json(name, m));
  }
  return Json{{"arch", c.arch},
              {"provenance", c.provenance},
              {"init_seed", c.init_seed},
              {"dims", dims},
              {"tensors", tensors}};
}

Checkpoint checkpoint_from_json(const Json& j) {
  Checkpoint c;
  c.arch = j.at("arch").get<std::string>();
  c.provenance = j.at("provenance").get<std::string>();
  c.init_seed = j.at("init_seed").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("dims").items()) {
    c.dims.emplace_back(k, v.get<int>());
  }
  for (const auto& t : j.at("tensors")) {
    c.tensors.emplace_back(t.at("name").get<std::string>(),
                           tensor_from_json(t));
  }
  return c;
}

static int dim_of(const Checkpoint& c, const std::string& key) {
  for (const auto& [k, v] : c.dims) {
    if (k == key) return v;
  }
  throw IoError("checkpoint missing dimension " + key);
}

EqualityNetParams equality_params_from_checkpoint(const Checkpoint& c) {
  if (c.arch != "equality") {
    throw IoError("checkpoint arch is not an equality classifier: " + c.arch);
  }
  auto p = EqualityNetParams::init(dim_of(c, "input_dim"),
                                   dim_of(c, "hidden_dim"), 0);
  load_tensors(p, c);
  return p;
}

SeqPredictorParams seq_params_from_checkpoint(const Checkpoint& c) {
  if (c.arch != "seq") throw IoError("checkpoint arch is not seq: " + c.arch);
  auto p = SeqPredictorParams::init(dim_of(c, "input_dim"),
                                    dim_of(c, "hidden_dim"), 0);
  load_tensors(p, c);
  return p;
}

Json table_to_json(const EmbeddingTable& t) {
  Json vectors = Json::array();
  for (const auto& v : t.vectors) {
    vectors.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  }
  Json meta = nullptr;
  if (t.pretrain_meta) {
    meta = Json{{"tasks", t.pretrain_meta->tasks},
                {"epochs", t.pretrain_meta->epochs},
                {"hidden", t.pretrain_meta->hidden},
                {"lr", t.pretrain_meta->lr},
                {"l2", t.pretrain_meta->l2},
                {"linear_head", t.pretrain_meta->linear_head}};
  }
  return Json{{"scheme", scheme_name(t.scheme)},
              {"dim", t.dim},
              {"seed", t.seed},
              {"pretrain_meta", meta},
              {"vectors", vectors}};
}

EmbeddingTable table_from_json(const Json& j) {
  EmbeddingTable t;
  t.scheme = scheme_from_name(j.at("scheme").get<std::string>());
  t.dim = j.at("dim").get<int>();
  t.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("pretrain_meta") && !j.at("pretrain_meta").is_null()) {
    PretrainMeta meta;
    const auto& m = j.at("pretrain_meta");
    meta.tasks = m.at("tasks").get<int>();
    meta.epochs = m.at("epochs").get<int>();
    meta.hidden = m.at("hidden").get<int>();
    meta.lr = m.at("lr").get<double>();
    meta.l2 = m.at("l2").get<double>();
    meta.linear_head = m.at("linear_head").get<bool>();
    t.pretrain_meta = meta;
  }
  for (const auto& row : j.at("vectors")) {
    auto vals = row.get<std::vector<double>>();
    if (static_cast<int>(vals.size()) != t.dim) {
      throw IoError("embedding row length does not match dim");
    }
    RowVec v(t.dim);
    for (int i = 0; i < t.dim; ++i) v(i) = vals[i];
    t.vectors.push_back(std::move(v));
  }
  return t;
}

Json equality_example_to_json(const EqualityExample& e) {
  return Json{{"left", e.left}, {"right", e.right}, {"positive", e.positive}};
}

Json hier_example_to_json(const HierExample& e) {
  return Json{{"ids", e.ids},
              {"positive", e.positive},
              {"class_tag", class_tag_name(e.tag)}};
}

Json sequence_example_to_json(const SequenceExample& e) {
  return Json{{"tokens", e.tokens}};
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << contents;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw IoError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace eqlab
