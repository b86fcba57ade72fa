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

#ifndef CPQA_LLM_GATEWAY_HPP_
#define CPQA_LLM_GATEWAY_HPP_

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpqa {

struct ChatRequest {
  std::string prompt;
  double temperature = 0.0;
  int max_output_tokens = 2048;
  std::string request_id;
};

struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
  bool is_zero() const;
  bool operator==(const EmbeddingVector&) const = default;
};

using EmbedFn = std::function<EmbeddingVector(std::string_view)>;

// Implementations must tolerate concurrent calls.
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  // Throws ProviderError; retryable() tells batch_generate whether to retry.
  virtual std::string chat(const ChatRequest& request) = 0;
  virtual std::string identity() const = 0;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual EmbeddingVector embed(std::string_view text) = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::string identity() const = 0;

  EmbedFn as_function();
};

// Answers from a fixed request_id -> response map. Misses are
// non-retryable errors.
class ScriptedChatProvider : public ChatProvider {
 public:
  explicit ScriptedChatProvider(std::map<std::string, std::string> responses);

  std::string chat(const ChatRequest& request) override;
  std::string identity() const override { return "scripted"; }

 private:
  std::map<std::string, std::string> responses_;
};

// Deterministic test embedding: the lowercased text, padded with one space
// on each side, is reduced to a 128-bin histogram of byte bigrams with bin
// (31 * first + second) mod 128. No normalization.
class BigramEmbeddingProvider : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDimension = 128;

  static std::size_t bin(unsigned char first, unsigned char second) {
    return (31u * first + second) % kDimension;
  }

  EmbeddingVector embed(std::string_view text) override;
  std::size_t dimension() const override { return kDimension; }
  std::string identity() const override { return "bigram-128"; }
};

struct HttpEndpoint {
  std::string url;                         // full https://host/path
  std::string model;
  std::string auth_header = "Authorization";
  std::string auth_scheme = "Bearer";      // prefix before the key, may be empty
  std::string api_key;                     // taken from the environment
  std::chrono::seconds timeout{120};
};

// OpenAI-style chat completions: POST {model, messages, temperature,
// max_tokens}, reads choices[0].message.content.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(HttpEndpoint endpoint);
  std::string chat(const ChatRequest& request) override;
  std::string identity() const override;

 private:
  HttpEndpoint endpoint_;
};

// OpenAI-style embeddings: POST {model, input}, reads data[0].embedding.
class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(HttpEndpoint endpoint, std::size_t dimension);
  EmbeddingVector embed(std::string_view text) override;
  std::size_t dimension() const override { return dimension_; }
  std::string identity() const override;

 private:
  HttpEndpoint endpoint_;
  std::size_t dimension_;
};

struct RetryPolicy {
  int retry_budget = 3;
  std::chrono::duration<double> base_delay{1.0};
  double factor = 2.0;
  // Each delay is scaled by a uniform factor in [1 - jitter, 1 + jitter].
  double jitter = 0.25;

  std::chrono::duration<double> delay_before_retry(int retry,
                                                   double unit_random) const;
};

struct BatchOutcome {
  std::optional<std::string> response;
  std::string error;  // set when response is empty
  int attempts = 0;

  bool ok() const { return response.has_value(); }
};

// Resolves every request exactly once with at most `parallelism` in flight.
// A failing request never aborts the batch. Throws InvalidArgument for
// duplicate request ids or parallelism < 1.
std::map<std::string, BatchOutcome> batch_generate(
    ChatProvider& provider, std::span<const ChatRequest> requests,
    int parallelism, const RetryPolicy& retry = {});

}  // namespace cpqa

#endif  // CPQA_LLM_GATEWAY_HPP_
