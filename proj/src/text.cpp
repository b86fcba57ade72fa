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

#include "cpqa/text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>

namespace cpqa::text {
namespace {

char lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool equal_ignore_case_at(std::string_view hay, std::size_t pos,
                          std::string_view needle) {
  for (std::size_t i = 0; i < needle.size(); ++i) {
    if (lower(hay[pos + i]) != lower(needle[i])) return false;
  }
  return true;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z') || u >= 0x80;
}

bool contains_whole_word(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t pos = 0; pos + needle.size() <= haystack.size(); ++pos) {
    if (!equal_ignore_case_at(haystack, pos, needle)) continue;
    const bool left_ok = pos == 0 || !is_word_char(haystack[pos - 1]);
    const std::size_t after = pos + needle.size();
    const bool right_ok =
        after == haystack.size() || !is_word_char(haystack[after]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool contains_ignore_case(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  for (std::size_t pos = 0; pos + needle.size() <= haystack.size(); ++pos) {
    if (equal_ignore_case_at(haystack, pos, needle)) return true;
  }
  return false;
}

std::size_t count_words(std::string_view s) {
  std::size_t count = 0;
  bool in_token = false;
  bool token_has_word = false;
  for (char c : s) {
    if (is_space(c)) {
      if (in_token && token_has_word) ++count;
      in_token = token_has_word = false;
    } else {
      in_token = true;
      token_has_word = token_has_word || is_word_char(c);
    }
  }
  if (in_token && token_has_word) ++count;
  return count;
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_seconds(double seconds) {
  std::array<char, 64> buf{};
  if (std::isfinite(seconds) && std::nearbyint(seconds) == seconds &&
      std::fabs(seconds) < 9.0e15) {
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                   static_cast<std::int64_t>(seconds));
    return std::string(buf.data(), ptr);
  }
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), seconds);
  return std::string(buf.data(), ptr);
}

}  // namespace cpqa::text
