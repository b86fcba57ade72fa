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

#include "cpqa/promptgen.hpp"

#include <algorithm>

#include <json.hpp>

#include "cpqa/assets.hpp"
#include "cpqa/checksum.hpp"
#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {
namespace {

constexpr std::string_view kLabelSlot = "#XXXX#";

bool is_slot_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::string replace_all(std::string_view s, std::string_view from,
                        std::string_view to) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = s.find(from, pos);
    if (hit == std::string_view::npos) break;
    out.append(s.substr(pos, hit - pos));
    out.append(to);
    pos = hit + from.size();
  }
  out.append(s.substr(pos));
  return out;
}

}  // namespace

std::string_view to_string(GenerationMode m) {
  return m == GenerationMode::kCpqa ? "cpqa" : "pqa-star";
}

GenerationMode parse_generation_mode(std::string_view s) {
  const std::string v = text::to_lower(s);
  if (v == "cpqa") return GenerationMode::kCpqa;
  if (v == "pqa-star" || v == "pqa_star" || v == "pqa*") return GenerationMode::kPqaStar;
  throw ConfigError("unknown generation mode '" + std::string(s) + "'");
}

MetadataBlock metadata_block(std::span<const EmotionWindow> windows) {
  MetadataBlock block;
  for (const EmotionWindow& w : windows) {
    if (w.category != kNeutral) block.push_back({w.start, w.end, w.category});
  }
  std::stable_sort(block.begin(), block.end(),
                   [](const MetadataEntry& a, const MetadataEntry& b) {
                     return a.start < b.start;
                   });
  return block;
}

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& slots) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      std::size_t j = i + 1;
      while (j < tmpl.size() && is_slot_char(tmpl[j])) ++j;
      if (j < tmpl.size() && tmpl[j] == '}' && j > i + 1) {
        auto it = slots.find(std::string(tmpl.substr(i + 1, j - i - 1)));
        if (it != slots.end()) {
          out += it->second;
          i = j + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

std::vector<std::string> pqa_star_omission_markers() {
  std::vector<std::string> markers;
  for (const std::string& line : text::split_lines(assets::pqa_star_omit())) {
    std::string_view t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    markers.emplace_back(t);
  }
  return markers;
}

std::string qa_generation_template(GenerationMode mode) {
  const std::string_view full = assets::qa_generation();
  if (mode == GenerationMode::kCpqa) return std::string(full);
  const std::vector<std::string> markers = pqa_star_omission_markers();
  std::vector<std::string> kept;
  for (std::string& line : text::split_lines(full)) {
    const bool omit = std::any_of(markers.begin(), markers.end(),
                                  [&](const std::string& m) {
                                    return line.find(m) != std::string::npos;
                                  });
    if (!omit) kept.push_back(std::move(line));
  }
  return text::join(kept, "\n");
}

std::string serialize_word_metadata(std::span<const AlignedWord> aligned) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AlignedWord& a : aligned) {
    nlohmann::ordered_json w;
    w["word"] = a.word.text;
    w["predict_emo2vec"] = a.category;
    if (a.dims) w["predict_dim"] = {a.dims->arousal, a.dims->dominance, a.dims->valence};
    if (a.gender) w["gender"] = to_string(*a.gender);
    arr.push_back(std::move(w));
  }
  return arr.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

std::string build_qa_generation_prompt(const ClipRecord& clip,
                                       std::span<const AlignedWord> aligned,
                                       GenerationMode mode) {
  if (clip.words.empty()) {
    throw InvalidArgument("clip '" + clip.clip_id + "' has no words to prompt about");
  }
  if (aligned.size() != clip.words.size() ||
      !std::equal(aligned.begin(), aligned.end(), clip.words.begin(),
                  [](const AlignedWord& a, const WordToken& w) { return a.word == w; })) {
    throw InvalidArgument("aligned words do not belong to clip '" + clip.clip_id + "'");
  }
  std::vector<std::string> words;
  words.reserve(clip.words.size());
  for (const WordToken& w : clip.words) words.push_back(w.text);
  return render_template(qa_generation_template(mode),
                         {{"utterance", text::join(words, " ")},
                          {"emotion_gender_level_data", serialize_word_metadata(aligned)}});
}

std::string format_emotion_labels(std::span<const EmotionWindow> windows) {
  const MetadataBlock block = metadata_block(windows);
  if (block.empty()) return "";
  std::vector<std::string> entries;
  entries.reserve(block.size());
  for (const MetadataEntry& e : block) {
    entries.push_back(text::format_seconds(e.start) + "-" +
                      text::format_seconds(e.end) + " second: " + e.label);
  }
  return text::join(entries, ", ") + ".";
}

std::string_view metadata_instruction1() { return assets::instruction1(); }
std::string_view metadata_instruction2() { return assets::instruction2(); }

std::string augment_question_with_metadata(
    std::string_view question, std::span<const EmotionWindow> windows) {
  if (text::trim(question).empty()) throw InvalidArgument("question is empty");
  std::string out(question);
  out += ' ';
  out += replace_all(assets::instruction1(), kLabelSlot, format_emotion_labels(windows));
  out += ' ';
  out += assets::instruction2();
  return out;
}

std::string template_checksum() {
  std::string all;
  for (std::string_view part : {assets::qa_generation(), assets::pqa_star_omit(),
                                assets::instruction1(), assets::instruction2()}) {
    all.append(part);
    all.push_back('\0');
  }
  return sha256_hex(all);
}

}  // namespace cpqa
