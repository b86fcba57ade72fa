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

#ifndef CPQA_CONFIG_HPP_
#define CPQA_CONFIG_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpqa/condense.hpp"
#include "cpqa/eval_metrics.hpp"
#include "cpqa/llm_gateway.hpp"
#include "cpqa/qa_extract.hpp"

namespace cpqa {

// Chat or embedding provider selection. Credentials are read from the
// environment variable named by api_key_env, never from the file.
struct ProviderSettings {
  std::string kind;  // chat: scripted | http; embedding: bigram | http
  std::filesystem::path responses;  // scripted: JSON object id -> response
  std::string url;
  std::string model;
  std::string auth_header = "Authorization";
  std::string auth_scheme = "Bearer";
  std::string api_key_env = "CPQA_API_KEY";
  std::size_t dimension = 0;  // http embedding only
  int timeout_seconds = 120;
};

struct GenerationSettings {
  double temperature = 0.0;
  int max_output_tokens = 2048;
  int parallelism = 4;
  int retry_budget = 3;
  double backoff_base_seconds = 1.0;
  double backoff_factor = 2.0;
  double backoff_jitter = 0.25;

  RetryPolicy retry_policy() const;
};

struct PipelineConfig {
  CondenseConfig condense;
  ValidationRuleSet validation;
  ProviderSettings chat{.kind = "scripted"};
  ProviderSettings embedding{.kind = "bigram"};
  GenerationSettings generation;
  // Task name -> ordered labels.
  std::map<std::string, std::vector<std::string>> label_sets;
};

nlohmann::ordered_json to_json(const PipelineConfig& cfg);
// Relative paths resolve against `base_dir`. Throws ConfigError.
PipelineConfig pipeline_config_from_json(const nlohmann::json& j,
                                         const std::filesystem::path& base_dir);
// JSON with // and /* */ comments allowed. Throws IoError or ConfigError.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

// Parses a file as JSON (comments allowed). Throws IoError or ConfigError.
nlohmann::json read_json_file(const std::filesystem::path& path);

struct LabelConfig {
  std::string task;
  LabelSet labels;
  ProviderSettings embedding{.kind = "bigram"};
};

// {"task": ..., "labels": [...], "embedding_provider": {...}}; "labels"
// required.
LabelConfig load_label_config(const std::filesystem::path& path);

std::unique_ptr<ChatProvider> make_chat_provider(const ProviderSettings& s);
std::unique_ptr<EmbeddingProvider> make_embedding_provider(
    const ProviderSettings& s);

}  // namespace cpqa

#endif  // CPQA_CONFIG_HPP_
