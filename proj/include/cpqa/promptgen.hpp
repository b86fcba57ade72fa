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

#ifndef CPQA_PROMPTGEN_HPP_
#define CPQA_PROMPTGEN_HPP_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpqa/alignment.hpp"
#include "cpqa/corpus.hpp"

namespace cpqa {

// CPQA uses the full QA-generation prompt. PQA_STAR drops the contextual
// reasoning example questions and keeps the paralinguistic ones.
enum class GenerationMode { kCpqa, kPqaStar };

std::string_view to_string(GenerationMode m);
// Accepts "cpqa", "pqa-star", "pqa_star" (case-insensitive).
GenerationMode parse_generation_mode(std::string_view s);

struct MetadataEntry {
  double start = 0.0;
  double end = 0.0;
  EmotionCategory label;
};

// Non-neutral windows in start order.
using MetadataBlock = std::vector<MetadataEntry>;

MetadataBlock metadata_block(std::span<const EmotionWindow> windows);

// Substitutes `{name}` placeholders in a single left-to-right pass, so slot
// values are never re-scanned. Unknown placeholders are left verbatim.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& slots);

// Markers from the PQA* omission asset; a template line containing any of
// them is dropped in PQA_STAR mode.
std::vector<std::string> pqa_star_omission_markers();

// The QA-generation template for `mode`, slots unfilled.
std::string qa_generation_template(GenerationMode mode);

// Compact JSON array with one {word, predict_emo2vec, predict_dim, gender}
// object per word; predict_dim and gender are omitted when unknown.
std::string serialize_word_metadata(std::span<const AlignedWord> aligned);

// Fills {utterance} and {emotion_gender_level_data}. Throws InvalidArgument
// for a clip without words or when `aligned` does not match the clip.
std::string build_qa_generation_prompt(const ClipRecord& clip,
                                       std::span<const AlignedWord> aligned,
                                       GenerationMode mode);

// "2-4 second: sad, 10-12 second: angry." for the non-neutral windows;
// empty string when there are none.
std::string format_emotion_labels(std::span<const EmotionWindow> windows);

// question + " " + instruction1 (with #XXXX# replaced by the formatted
// labels) + " " + instruction2.
std::string augment_question_with_metadata(
    std::string_view question, std::span<const EmotionWindow> windows);

std::string_view metadata_instruction1();
std::string_view metadata_instruction2();

// SHA-256 over every prompt asset, for run manifests.
std::string template_checksum();

}  // namespace cpqa

#endif  // CPQA_PROMPTGEN_HPP_
