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

#include "cpqa/llm_gateway.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {

bool EmbeddingVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

EmbedFn EmbeddingProvider::as_function() {
  return [this](std::string_view text) { return embed(text); };
}

ScriptedChatProvider::ScriptedChatProvider(
    std::map<std::string, std::string> responses)
    : responses_(std::move(responses)) {}

std::string ScriptedChatProvider::chat(const ChatRequest& request) {
  if (text::trim(request.prompt).empty()) {
    throw ProviderError("request '" + request.request_id + "' has an empty prompt", false);
  }
  auto it = responses_.find(request.request_id);
  if (it == responses_.end()) {
    throw ProviderError("no scripted response for request '" + request.request_id + "'", false);
  }
  if (text::trim(it->second).empty()) {
    throw ProviderError("empty response for request '" + request.request_id + "'", false);
  }
  return it->second;
}

EmbeddingVector BigramEmbeddingProvider::embed(std::string_view input) {
  if (text::trim(input).empty()) throw InvalidArgument("cannot embed empty text");
  const std::string padded = " " + text::to_lower(input) + " ";
  EmbeddingVector v{std::vector<double>(kDimension, 0.0)};
  for (std::size_t i = 0; i + 1 < padded.size(); ++i) {
    v.values[bin(static_cast<unsigned char>(padded[i]),
                 static_cast<unsigned char>(padded[i + 1]))] += 1.0;
  }
  return v;
}

std::chrono::duration<double> RetryPolicy::delay_before_retry(
    int retry, double unit_random) const {
  const double scale = 1.0 - jitter + 2.0 * jitter * unit_random;
  return base_delay * std::pow(factor, std::max(0, retry - 1)) * scale;
}

namespace {

BatchOutcome run_with_retries(ChatProvider& provider, const ChatRequest& request,
                              const RetryPolicy& retry, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BatchOutcome outcome;
  const int budget = std::max(0, retry.retry_budget);
  for (int attempt = 0; attempt <= budget; ++attempt) {
    ++outcome.attempts;
    try {
      outcome.response = provider.chat(request);
      outcome.error.clear();
      return outcome;
    } catch (const ProviderError& e) {
      outcome.error = e.what();
      if (!e.retryable()) return outcome;
    } catch (const std::exception& e) {
      outcome.error = e.what();
      return outcome;
    }
    if (attempt < budget) {
      std::this_thread::sleep_for(retry.delay_before_retry(attempt + 1, unit(rng)));
    }
  }
  outcome.error = "retry budget exhausted: " + outcome.error;
  return outcome;
}

}  // namespace

std::map<std::string, BatchOutcome> batch_generate(
    ChatProvider& provider, std::span<const ChatRequest> requests,
    int parallelism, const RetryPolicy& retry) {
  if (parallelism < 1) throw InvalidArgument("parallelism must be at least 1");
  std::set<std::string_view> ids;
  for (const ChatRequest& r : requests) {
    if (!ids.insert(r.request_id).second) {
      throw InvalidArgument("duplicate request id '" + r.request_id + "'");
    }
  }

  std::vector<BatchOutcome> outcomes(requests.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned seed) {
    std::mt19937 rng(seed);
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      outcomes[i] = run_with_retries(provider, requests[i], retry, rng);
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(parallelism), requests.size());
  {
    std::random_device rd;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker, rd());
  }

  std::map<std::string, BatchOutcome> results;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    results.emplace(requests[i].request_id, std::move(outcomes[i]));
  }
  return results;
}

}  // namespace cpqa
