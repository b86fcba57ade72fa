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

#ifndef CPQA_TEXT_HPP_
#define CPQA_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cpqa::text {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

// ASCII letters and digits are word characters, as are all non-ASCII bytes
// so that UTF-8 words are never split.
bool is_word_char(char c);

// Case-insensitive search for `needle` bounded by non-word characters (or
// the ends of `haystack`) on both sides.
bool contains_whole_word(std::string_view haystack, std::string_view needle);

// Case-insensitive substring search.
bool contains_ignore_case(std::string_view haystack, std::string_view needle);

// Whitespace-separated tokens that contain at least one word character.
std::size_t count_words(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Integral values print without decimals ("2"); anything else uses the
// shortest round-trip decimal form ("1.3").
std::string format_seconds(double seconds);

}  // namespace cpqa::text

#endif  // CPQA_TEXT_HPP_
