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

#include <random>

#include "cpqa/alignment.hpp"
#include "support/test_support.hpp"

using namespace cpqa;
using cpqa::testing::window;

TEST_SUITE("alignment") {

TEST_CASE("window lookup is half-open") {
  const std::vector<EmotionWindow> ws = {window(2, 4, "sad"), window(4, 6, "angry")};
  REQUIRE(window_for_time(3.0, ws) != nullptr);
  CHECK(window_for_time(3.0, ws)->category == "sad");
  CHECK(window_for_time(4.0, ws)->category == "angry");
  CHECK(window_for_time(2.0, ws)->category == "sad");
  CHECK(window_for_time(6.0, ws) == nullptr);
  CHECK(window_for_time(9.0, ws) == nullptr);
  CHECK(window_for_time(1.0, ws) == nullptr);
  CHECK(window_for_time(1.0, std::span<const EmotionWindow>{}) == nullptr);
}

TEST_CASE("words take the window under their midpoint") {
  const std::vector<EmotionWindow> ws = {window(2, 4, "sad", 0.2, Gender::kMale),
                                         window(4, 6, "angry", 0.1)};
  const std::vector<WordToken> words = {{"in", 2.5, 3.5}, {"across", 3.5, 4.5}, {"out", 8.0, 8.5}};
  const std::vector<AlignedWord> a = align_words(words, ws);
  REQUIRE(a.size() == 3);
  CHECK(a[0].category == "sad");
  CHECK(a[0].gender == Gender::kMale);
  CHECK(a[1].category == "angry");
  CHECK(a[2].category == "neutral");
  CHECK_FALSE(a[2].dims.has_value());
  CHECK_FALSE(a[2].gender.has_value());
  CHECK(a[1].word == words[1]);
}

TEST_CASE("alignment properties on random clips") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 300; ++i) {
    ClipRecord c = cpqa::testing::random_valid_clip(rng, "a");
    // Drop some windows so that gaps exist.
    if (c.windows.size() > 3) c.windows.erase(c.windows.begin() + 1);
    const std::vector<AlignedWord> a = align_words(c.words, c.windows);
    REQUIRE(a.size() == c.words.size());
    CHECK(a == align_words(c.words, c.windows));
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].word == c.words[k]);
      const double mid = c.words[k].midpoint();
      const EmotionWindow* hit = nullptr;
      for (const EmotionWindow& w : c.windows) {
        if (w.start <= mid && mid < w.end) hit = &w;
      }
      if (hit == nullptr) {
        CHECK(a[k].category == "neutral");
      } else {
        CHECK(a[k].category == hit->category);
        CHECK(a[k].dims == hit->dims);
        CHECK(a[k].gender == hit->gender);
      }
    }
  }
}

}  // TEST_SUITE
