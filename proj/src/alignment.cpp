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

#include "cpqa/alignment.hpp"

#include <algorithm>

namespace cpqa {

const EmotionWindow* window_for_time(double t,
                                     std::span<const EmotionWindow> windows) {
  // First window starting after t; the candidate is the one before it.
  auto it = std::upper_bound(
      windows.begin(), windows.end(), t,
      [](double value, const EmotionWindow& w) { return value < w.start; });
  if (it == windows.begin()) return nullptr;
  const EmotionWindow& candidate = *std::prev(it);
  return t < candidate.end ? &candidate : nullptr;
}

std::vector<AlignedWord> align_words(std::span<const WordToken> words,
                                     std::span<const EmotionWindow> windows) {
  std::vector<AlignedWord> aligned;
  aligned.reserve(words.size());
  for (const WordToken& word : words) {
    AlignedWord a{.word = word};
    if (const EmotionWindow* w = window_for_time(word.midpoint(), windows)) {
      a.category = w->category;
      a.dims = w->dims;
      a.gender = w->gender;
    }
    aligned.push_back(std::move(a));
  }
  return aligned;
}

}  // namespace cpqa
