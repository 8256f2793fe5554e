#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "eqlab/io.hpp"
#include "eqlab/rng.hpp"

using namespace eqlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("eqlab-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("tensor JSON round-trip is bit exact") {
  Rng rng(1);
  Matrix m = uniform_matrix(3, 5, -2.0, 2.0, rng);
  Json j = tensor_to_json("w", m);
  CHECK(j.at("name") == "w");
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 5);
  Matrix back = tensor_from_json(j);
  CHECK((back.array() == m.array()).all());

  Json bad = j;
  bad["data"] = std::vector<double>{1.0};
  CHECK_THROWS_AS(tensor_from_json(bad), IoError);
}

TEST_CASE("checkpoint round-trip restores equality parameters") {
  auto p = EqualityNetParams::init(6, 4, 99);
  auto ckpt = make_checkpoint(p, "equality", "trained", 99,
                              {{"input_dim", 6}, {"hidden_dim", 4}});
  Json j = checkpoint_to_json(ckpt);
  auto back = checkpoint_from_json(j);
  CHECK(back.arch == "equality");
  CHECK(back.provenance == "trained");
  CHECK(back.init_seed == 99);
  auto q = equality_params_from_checkpoint(back);
  CHECK((q.w_xh.array() == p.w_xh.array()).all());
  CHECK((q.b_h.array() == p.b_h.array()).all());
  CHECK((q.w_hy.array() == p.w_hy.array()).all());
  CHECK((q.b_y.array() == p.b_y.array()).all());
}

TEST_CASE("checkpoint round-trip restores sequence parameters") {
  auto p = SeqPredictorParams::init(3, 7, 42);
  auto ckpt = make_checkpoint(p, "seq", "analytic", 42,
                              {{"input_dim", 3}, {"hidden_dim", 7}});
  auto back = checkpoint_from_json(checkpoint_to_json(ckpt));
  auto q = seq_params_from_checkpoint(back);
  CHECK((q.w_f.array() == p.w_f.array()).all());
  CHECK((q.u_c.array() == p.u_c.array()).all());
  CHECK((q.b_proj.array() == p.b_proj.array()).all());

  back.arch = "equality";
  CHECK_THROWS_AS(seq_params_from_checkpoint(back), IoError);
}

TEST_CASE("embedding table JSON round-trip") {
  auto t = make_random_vocab(10, 4, 5);
  t.pretrain_meta = PretrainMeta{3, 10, 100, 1e-3, 0.0, false};
  auto back = table_from_json(table_to_json(t));
  CHECK(back.scheme == t.scheme);
  CHECK(back.dim == t.dim);
  CHECK(back.seed == t.seed);
  REQUIRE(back.pretrain_meta.has_value());
  CHECK(back.pretrain_meta->tasks == 3);
  for (int i = 0; i < t.size(); ++i) {
    CHECK((back.row(i).array() == t.row(i).array()).all());
  }
}

TEST_CASE("dataset example serialization") {
  Json e = equality_example_to_json({3, 3, true});
  CHECK(e.at("left") == 3);
  CHECK(e.at("positive") == true);
  Json h = hier_example_to_json({{1, 1, 2, 3}, false, ClassTag::kSameDiff});
  CHECK(h.at("class_tag") == "same/diff");
  Json s = sequence_example_to_json({{4, 0, 1, 0, 3}});
  CHECK(s.at("tokens").size() == 5);
}

TEST_CASE("file I/O") {
  TempDir tmp;
  Json j{{"a", 1}};
  write_json_file(tmp.path / "x.json", j);
  CHECK(read_json_file(tmp.path / "x.json") == j);
  CHECK_THROWS_AS(read_json_file(tmp.path / "missing.json"), IoError);
  write_text_file(tmp.path / "bad.json", "{not json");
  CHECK_THROWS_AS(read_json_file(tmp.path / "bad.json"), IoError);
}
