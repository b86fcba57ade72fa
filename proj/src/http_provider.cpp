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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <json.hpp>

#include "cpqa/errors.hpp"
#include "cpqa/llm_gateway.hpp"
#include "cpqa/text.hpp"

namespace cpqa {
namespace {

using nlohmann::json;

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("provider url must include a scheme: '" + url + "'");
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

json post_json(const HttpEndpoint& ep, const json& body) {
  const SplitUrl target = split_url(ep.url);
  httplib::Client client(target.origin);
  client.set_connection_timeout(ep.timeout);
  client.set_read_timeout(ep.timeout);
  httplib::Headers headers;
  if (!ep.api_key.empty()) {
    headers.emplace(ep.auth_header, ep.auth_scheme.empty()
                                        ? ep.api_key
                                        : ep.auth_scheme + " " + ep.api_key);
  }
  auto res = client.Post(target.path, headers, body.dump(), "application/json");
  if (!res) {
    throw ProviderError("transport failure: " + httplib::to_string(res.error()), true);
  }
  if (res->status == 429 || res->status >= 500) {
    throw ProviderError("HTTP " + std::to_string(res->status) + " from " + ep.url, true);
  }
  if (res->status != 200) {
    throw ProviderError("HTTP " + std::to_string(res->status) + " from " + ep.url +
                            ": " + res->body.substr(0, 500), false);
  }
  try {
    return json::parse(res->body);
  } catch (const json::parse_error& e) {
    throw ProviderError(std::string("unparseable provider response: ") + e.what(), false);
  }
}

}  // namespace

HttpChatProvider::HttpChatProvider(HttpEndpoint endpoint)
    : endpoint_(std::move(endpoint)) {
  split_url(endpoint_.url);
}

std::string HttpChatProvider::identity() const {
  return "http:" + endpoint_.url + "#" + endpoint_.model;
}

std::string HttpChatProvider::chat(const ChatRequest& request) {
  if (text::trim(request.prompt).empty()) {
    throw ProviderError("request '" + request.request_id + "' has an empty prompt", false);
  }
  json body = {{"model", endpoint_.model},
               {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})},
               {"temperature", request.temperature},
               {"max_tokens", request.max_output_tokens}};
  const json reply = post_json(endpoint_, body);
  try {
    const json& choice = reply.at("choices").at(0);
    if (choice.value("finish_reason", "") == "content_filter") {
      throw ProviderError("provider refused request '" + request.request_id + "'", false);
    }
    const json& content = choice.at("message").at("content");
    if (!content.is_string() || text::trim(content.get<std::string>()).empty()) {
      throw ProviderError("empty completion for request '" + request.request_id + "'", false);
    }
    return content.get<std::string>();
  } catch (const json::exception& e) {
    throw ProviderError(std::string("malformed completion: ") + e.what(), false);
  }
}

HttpEmbeddingProvider::HttpEmbeddingProvider(HttpEndpoint endpoint,
                                             std::size_t dimension)
    : endpoint_(std::move(endpoint)), dimension_(dimension) {
  split_url(endpoint_.url);
  if (dimension_ == 0) throw ConfigError("embedding dimension must be positive");
}

std::string HttpEmbeddingProvider::identity() const {
  return "http:" + endpoint_.url + "#" + endpoint_.model;
}

EmbeddingVector HttpEmbeddingProvider::embed(std::string_view input) {
  if (text::trim(input).empty()) throw InvalidArgument("cannot embed empty text");
  const json reply = post_json(endpoint_, {{"model", endpoint_.model}, {"input", std::string(input)}});
  EmbeddingVector v;
  try {
    v.values = reply.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ProviderError(std::string("malformed embedding response: ") + e.what(), false);
  }
  if (v.dimension() != dimension_) {
    throw ProviderError("embedding has dimension " + std::to_string(v.dimension()) +
                            ", expected " + std::to_string(dimension_), false);
  }
  return v;
}

}  // namespace cpqa
