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

#ifndef CPQA_ALIGNMENT_HPP_
#define CPQA_ALIGNMENT_HPP_

#include <optional>
#include <span>
#include <vector>

#include "cpqa/corpus.hpp"

namespace cpqa {

struct AlignedWord {
  WordToken word;
  EmotionCategory category{kNeutral};
  std::optional<DimScores> dims;
  std::optional<Gender> gender;

  bool operator==(const AlignedWord&) const = default;
};

// The window with start <= t < end, or nullptr. `windows` must be sorted
// and non-overlapping.
const EmotionWindow* window_for_time(double t,
                                     std::span<const EmotionWindow> windows);

// Matches every word to the window containing its midpoint. Uncovered words
// are neutral with no dims or gender.
std::vector<AlignedWord> align_words(std::span<const WordToken> words,
                                     std::span<const EmotionWindow> windows);

}  // namespace cpqa

#endif  // CPQA_ALIGNMENT_HPP_
