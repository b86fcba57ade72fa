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

#include "cpqa/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cpqa/errors.hpp"

namespace cpqa {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ProviderSettings provider_from_json(const json& j, std::string default_kind,
                                    const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("provider settings must be an object");
  if (j.contains("api_key")) {
    throw ConfigError("api keys must not be stored in config files; set 'api_key_env'");
  }
  ProviderSettings s;
  s.kind = std::move(default_kind);
  try {
    s.kind = j.value("kind", s.kind);
    if (j.contains("responses")) {
      std::filesystem::path p = j.at("responses").get<std::string>();
      s.responses = p.is_absolute() ? p : base_dir / p;
    }
    s.url = j.value("url", s.url);
    s.model = j.value("model", s.model);
    s.auth_header = j.value("auth_header", s.auth_header);
    s.auth_scheme = j.value("auth_scheme", s.auth_scheme);
    s.api_key_env = j.value("api_key_env", s.api_key_env);
    s.dimension = j.value("dimension", s.dimension);
    s.timeout_seconds = j.value("timeout_seconds", s.timeout_seconds);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("provider settings: ") + e.what());
  }
  return s;
}

ordered_json provider_to_json(const ProviderSettings& s) {
  ordered_json j;
  j["kind"] = s.kind;
  if (!s.responses.empty()) j["responses"] = s.responses.string();
  if (!s.url.empty()) {
    j["url"] = s.url;
    j["model"] = s.model;
    j["auth_header"] = s.auth_header;
    j["auth_scheme"] = s.auth_scheme;
    j["api_key_env"] = s.api_key_env;
    j["timeout_seconds"] = s.timeout_seconds;
  }
  if (s.dimension) j["dimension"] = s.dimension;
  return j;
}

HttpEndpoint endpoint_for(const ProviderSettings& s) {
  if (s.url.empty()) throw ConfigError("http provider requires 'url'");
  if (s.model.empty()) throw ConfigError("http provider requires 'model'");
  HttpEndpoint ep;
  ep.url = s.url;
  ep.model = s.model;
  ep.auth_header = s.auth_header;
  ep.auth_scheme = s.auth_scheme;
  ep.timeout = std::chrono::seconds(s.timeout_seconds);
  if (!s.api_key_env.empty()) {
    if (const char* key = std::getenv(s.api_key_env.c_str())) ep.api_key = key;
  }
  return ep;
}

}  // namespace

RetryPolicy GenerationSettings::retry_policy() const {
  RetryPolicy p;
  p.retry_budget = retry_budget;
  p.base_delay = std::chrono::duration<double>(backoff_base_seconds);
  p.factor = backoff_factor;
  p.jitter = backoff_jitter;
  return p;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

ordered_json to_json(const PipelineConfig& cfg) {
  ordered_json j;
  j["condense"] = to_json(cfg.condense);
  j["validation"] = to_json(cfg.validation);
  j["chat_provider"] = provider_to_json(cfg.chat);
  j["embedding_provider"] = provider_to_json(cfg.embedding);
  const GenerationSettings& g = cfg.generation;
  j["generation"] = {{"temperature", g.temperature},
                     {"max_output_tokens", g.max_output_tokens},
                     {"parallelism", g.parallelism},
                     {"retry_budget", g.retry_budget},
                     {"backoff_base_seconds", g.backoff_base_seconds},
                     {"backoff_factor", g.backoff_factor},
                     {"backoff_jitter", g.backoff_jitter}};
  j["label_sets"] = cfg.label_sets;
  return j;
}

PipelineConfig pipeline_config_from_json(const json& j,
                                         const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> kKnown = {
      "condense", "validation", "chat_provider", "embedding_provider",
      "generation", "label_sets"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  PipelineConfig cfg;
  if (j.contains("condense")) cfg.condense = condense_config_from_json(j.at("condense"));
  if (j.contains("validation")) cfg.validation = rule_set_from_json(j.at("validation"));
  if (j.contains("chat_provider")) {
    cfg.chat = provider_from_json(j.at("chat_provider"), "scripted", base_dir);
  }
  if (j.contains("embedding_provider")) {
    cfg.embedding = provider_from_json(j.at("embedding_provider"), "bigram", base_dir);
  }
  try {
    if (j.contains("generation")) {
      const json& g = j.at("generation");
      GenerationSettings& s = cfg.generation;
      s.temperature = g.value("temperature", s.temperature);
      s.max_output_tokens = g.value("max_output_tokens", s.max_output_tokens);
      s.parallelism = g.value("parallelism", s.parallelism);
      s.retry_budget = g.value("retry_budget", s.retry_budget);
      s.backoff_base_seconds = g.value("backoff_base_seconds", s.backoff_base_seconds);
      s.backoff_factor = g.value("backoff_factor", s.backoff_factor);
      s.backoff_jitter = g.value("backoff_jitter", s.backoff_jitter);
    }
    if (j.contains("label_sets")) {
      cfg.label_sets = j.at("label_sets").get<std::map<std::string, std::vector<std::string>>>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  const GenerationSettings& g = cfg.generation;
  if (g.parallelism < 1) throw ConfigError("generation.parallelism must be at least 1");
  if (g.retry_budget < 0) throw ConfigError("generation.retry_budget must be non-negative");
  if (g.temperature < 0) throw ConfigError("generation.temperature must be non-negative");
  if (g.max_output_tokens < 1) throw ConfigError("generation.max_output_tokens must be positive");
  if (g.backoff_jitter < 0 || g.backoff_jitter > 1) {
    throw ConfigError("generation.backoff_jitter must be within [0, 1]");
  }
  for (const auto& [task, labels] : cfg.label_sets) (void)LabelSet(labels);
  if (cfg.chat.kind == "scripted" && !cfg.chat.responses.empty() &&
      !std::filesystem::exists(cfg.chat.responses)) {
    throw ConfigError("scripted responses file not found: " + cfg.chat.responses.string());
  }
  return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  return pipeline_config_from_json(read_json_file(path), path.parent_path());
}

LabelConfig load_label_config(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_object()) throw ConfigError(path.string() + ": label config must be an object");
  if (!j.contains("labels")) throw ConfigError(path.string() + ": missing key 'labels'");
  std::vector<std::string> labels;
  try {
    labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": 'labels' must be a list of strings");
  }
  LabelConfig cfg{.task = j.value("task", std::string("default")), .labels = LabelSet(std::move(labels))};
  if (j.contains("embedding_provider")) {
    cfg.embedding = provider_from_json(j.at("embedding_provider"), "bigram", path.parent_path());
  }
  return cfg;
}

std::unique_ptr<ChatProvider> make_chat_provider(const ProviderSettings& s) {
  if (s.kind == "scripted") {
    if (s.responses.empty()) throw ConfigError("scripted provider requires 'responses'");
    const json j = read_json_file(s.responses);
    if (!j.is_object()) throw ConfigError("scripted responses must be a JSON object");
    std::map<std::string, std::string> responses;
    for (const auto& [id, text] : j.items()) {
      if (!text.is_string()) throw ConfigError("scripted response '" + id + "' must be a string");
      responses[id] = text.get<std::string>();
    }
    return std::make_unique<ScriptedChatProvider>(std::move(responses));
  }
  if (s.kind == "http") return std::make_unique<HttpChatProvider>(endpoint_for(s));
  throw ConfigError("unknown chat provider kind '" + s.kind + "'");
}

std::unique_ptr<EmbeddingProvider> make_embedding_provider(
    const ProviderSettings& s) {
  if (s.kind == "bigram") return std::make_unique<BigramEmbeddingProvider>();
  if (s.kind == "http") {
    return std::make_unique<HttpEmbeddingProvider>(endpoint_for(s), s.dimension);
  }
  throw ConfigError("unknown embedding provider kind '" + s.kind + "'");
}

}  // namespace cpqa
