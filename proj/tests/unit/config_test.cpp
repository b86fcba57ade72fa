// Copyright 2026 The CPQA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include "cpqa/config.hpp"
#include "cpqa/errors.hpp"
#include "support/test_support.hpp"

using namespace cpqa;
using cpqa::testing::TempDir;
using cpqa::testing::write_file;

TEST_SUITE("config") {

TEST_CASE("defaults") {
  const PipelineConfig cfg;
  CHECK(cfg.chat.kind == "scripted");
  CHECK(cfg.embedding.kind == "bigram");
  CHECK(cfg.generation.temperature == 0.0);
  const RetryPolicy p = cfg.generation.retry_policy();
  CHECK(p.retry_budget == 3);
  CHECK(p.base_delay.count() == 1.0);
  CHECK(p.factor == 2.0);
}

TEST_CASE("commented config with relative paths") {
  TempDir dir;
  write_file(dir / "responses.json", R"({"c1": "Q: a\nA: b c"})");
  write_file(dir / "pipeline.jsonc", R"(// comment
{
  /* block */
  "condense": {"duration_min": 10, "duration_max": 40},
  "validation": {"min_answer_words": 3},
  "chat_provider": {"kind": "scripted", "responses": "responses.json"},
  "generation": {"parallelism": 2, "retry_budget": 1},
  "label_sets": {"iemocap": ["angry", "happy"]}
})");
  const PipelineConfig cfg = load_pipeline_config(dir / "pipeline.jsonc");
  CHECK(cfg.condense.duration_min == 10.0);
  CHECK(cfg.validation.min_answer_words == 3);
  CHECK(cfg.chat.responses == dir / "responses.json");
  CHECK(cfg.generation.parallelism == 2);
  CHECK(cfg.label_sets.at("iemocap") == std::vector<std::string>{"angry", "happy"});
  auto provider = make_chat_provider(cfg.chat);
  CHECK(provider->chat({.prompt = "p", .request_id = "c1"}) == "Q: a\nA: b c");
  const PipelineConfig back =
      pipeline_config_from_json(nlohmann::json::parse(to_json(cfg).dump()), dir.path());
  CHECK(back.generation.retry_budget == 1);
  CHECK(back.chat.responses == cfg.chat.responses);
}

TEST_CASE("config errors") {
  TempDir dir;
  CHECK_THROWS_AS(load_pipeline_config(dir / "absent.json"), IoError);
  write_file(dir / "bad.json", "{ not json");
  CHECK_THROWS_AS(load_pipeline_config(dir / "bad.json"), ConfigError);
  write_file(dir / "unknown.json", R"({"condence": {}})");
  CHECK_THROWS_AS(load_pipeline_config(dir / "unknown.json"), ConfigError);
  write_file(dir / "key.json", R"({"chat_provider": {"kind": "http", "api_key": "sk-123"}})");
  CHECK_THROWS_AS(load_pipeline_config(dir / "key.json"), ConfigError);
  CHECK_THROWS_AS(make_chat_provider(ProviderSettings{.kind = "carrier-pigeon"}), ConfigError);
  CHECK_THROWS_AS(make_embedding_provider(ProviderSettings{.kind = "carrier-pigeon"}), ConfigError);
  CHECK_THROWS_AS(make_chat_provider(ProviderSettings{.kind = "scripted"}), ConfigError);
}

TEST_CASE("label config") {
  TempDir dir;
  write_file(dir / "labels.json", R"({"task": "ser", "labels": ["angry", "happy", "sad"]})");
  const LabelConfig lc = load_label_config(dir / "labels.json");
  CHECK(lc.task == "ser");
  CHECK(lc.labels.labels() == std::vector<std::string>{"angry", "happy", "sad"});
  CHECK(make_embedding_provider(lc.embedding)->identity() == "bigram-128");
  write_file(dir / "nolabels.json", R"({"task": "ser"})");
  try {
    load_label_config(dir / "nolabels.json");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("labels") != std::string::npos);
  }
  write_file(dir / "dup.json", R"({"labels": ["a", "a"]})");
  CHECK_THROWS_AS(load_label_config(dir / "dup.json"), ConfigError);
}

TEST_CASE("http settings are checked up front") {
  ProviderSettings s{.kind = "http", .model = "m"};
  CHECK_THROWS_AS(make_chat_provider(s), ConfigError);
  s.url = "no-scheme/v1/chat";
  CHECK_THROWS_AS(make_chat_provider(s), ConfigError);
  s.url = "http://127.0.0.1:1/v1/chat";
  s.model.clear();
  CHECK_THROWS_AS(make_embedding_provider(s), ConfigError);
}

TEST_CASE("shipped example configs load") {
  const std::string dir = cpqa::testing::test_data("../config/");
  const PipelineConfig cfg = load_pipeline_config(dir + "example.jsonc");
  const PipelineConfig defaults;
  CHECK(to_json(cfg)["condense"] == to_json(defaults)["condense"]);
  CHECK(to_json(cfg)["validation"] == to_json(defaults)["validation"]);
  CHECK(to_json(cfg)["generation"] == to_json(defaults)["generation"]);
  CHECK(make_chat_provider(cfg.chat)->chat({.prompt = "p", .request_id = "example-clip"}).starts_with("Q:"));
  const LabelConfig labels = load_label_config(dir + "labels.example.jsonc");
  CHECK(labels.labels.size() == 4);
}

}  // TEST_SUITE
