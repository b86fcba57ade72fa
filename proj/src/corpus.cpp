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

#include "cpqa/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {

std::string_view to_string(Gender g) {
  return g == Gender::kMale ? "male" : "female";
}

std::optional<Gender> parse_gender(std::string_view s) {
  const std::string v = text::to_lower(text::trim(s));
  if (v == "male") return Gender::kMale;
  if (v == "female") return Gender::kFemale;
  return std::nullopt;
}

std::string_view to_string(QuestionType t) {
  switch (t) {
    case QuestionType::kC: return "C";
    case QuestionType::kCE: return "CE";
    case QuestionType::kCG: return "CG";
    case QuestionType::kPQA: return "PQA";
    case QuestionType::kUntyped: return "UNTYPED";
  }
  return "UNTYPED";
}

std::optional<QuestionType> parse_question_type(std::string_view s) {
  for (auto t : {QuestionType::kC, QuestionType::kCE, QuestionType::kCG,
                 QuestionType::kPQA, QuestionType::kUntyped}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kGenerated: return "generated";
    case Provenance::kHuman: return "human";
    case Provenance::kTemplate: return "template";
  }
  return "generated";
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  for (auto p : {Provenance::kGenerated, Provenance::kHuman,
                 Provenance::kTemplate}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

EmotionVocabulary::EmotionVocabulary(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) throw ConfigError("emotion vocabulary is empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty() || n != text::to_lower(n)) {
      throw ConfigError("emotion category must be non-empty lowercase: '" +
                        n + "'");
    }
    if (std::find(names_.begin(), names_.begin() + i, n) !=
        names_.begin() + i) {
      throw ConfigError("duplicate emotion category '" + n + "'");
    }
  }
}

const EmotionVocabulary& EmotionVocabulary::default_vocabulary() {
  static const EmotionVocabulary kDefault({"angry", "disgusted", "fearful",
                                           "happy", "sad", "surprised",
                                           "embarrassment", "sarcasm",
                                           "worry", "neutral"});
  return kDefault;
}

bool EmotionVocabulary::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::string_view code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kClipIdEmpty: return "CLIP_ID_EMPTY";
    case ViolationCode::kDurationInvalid: return "DURATION_INVALID";
    case ViolationCode::kWordTextEmpty: return "WORD_TEXT_EMPTY";
    case ViolationCode::kNegativeTime: return "NEGATIVE_TIME";
    case ViolationCode::kWordTimeOrder: return "WORD_TIME_ORDER";
    case ViolationCode::kWordsUnsorted: return "WORDS_UNSORTED";
    case ViolationCode::kWindowEmpty: return "WINDOW_EMPTY";
    case ViolationCode::kWindowLength: return "WINDOW_LENGTH";
    case ViolationCode::kWindowsOverlap: return "WINDOWS_OVERLAP";
    case ViolationCode::kUnknownCategory: return "UNKNOWN_CATEGORY";
    case ViolationCode::kDimRange: return "DIM_RANGE";
    case ViolationCode::kTimeOverrun: return "TIME_OVERRUN";
  }
  return "UNKNOWN";
}

bool ValidationReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << code_name(violations[i].code) << ": " << violations[i].detail;
  }
  return os.str();
}

namespace {

bool in_unit_range(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

bool valid_time(double t) { return std::isfinite(t) && t >= 0.0; }

}  // namespace

ValidationReport validate_clip(const ClipRecord& clip,
                               const ValidationOptions& options) {
  ValidationReport report;
  auto add = [&](ViolationCode code, std::string detail) {
    report.violations.push_back({code, std::move(detail)});
  };
  const double limit = clip.duration + options.time_tolerance;

  if (text::trim(clip.clip_id).empty()) add(ViolationCode::kClipIdEmpty, "clip_id is empty");
  if (!std::isfinite(clip.duration) || clip.duration <= 0.0) {
    add(ViolationCode::kDurationInvalid, "duration must be positive");
  }

  for (std::size_t i = 0; i < clip.words.size(); ++i) {
    const WordToken& w = clip.words[i];
    const std::string where = "word " + std::to_string(i);
    if (text::trim(w.text).empty()) add(ViolationCode::kWordTextEmpty, where);
    if (!valid_time(w.start) || !valid_time(w.end)) {
      add(ViolationCode::kNegativeTime, where);
      continue;
    }
    if (w.start > w.end) add(ViolationCode::kWordTimeOrder, where + ": start > end");
    if (i > 0) {
      const WordToken& prev = clip.words[i - 1];
      if (w.start < prev.start || w.midpoint() < prev.midpoint()) {
        add(ViolationCode::kWordsUnsorted, where + " precedes word " + std::to_string(i - 1));
      }
    }
    if (w.end > limit) add(ViolationCode::kTimeOverrun, where + " ends past duration");
  }

  const std::size_t n = clip.windows.size();
  for (std::size_t i = 0; i < n; ++i) {
    const EmotionWindow& win = clip.windows[i];
    const std::string where = "window " + std::to_string(i);
    if (!valid_time(win.start) || !valid_time(win.end)) {
      add(ViolationCode::kNegativeTime, where);
    } else {
      const double len = win.end - win.start;
      if (len <= 0.0) {
        add(ViolationCode::kWindowEmpty, where + ": start >= end");
      } else if (len > options.window_length + options.time_tolerance ||
                 (i + 1 < n &&
                  len < options.window_length - options.time_tolerance)) {
        add(ViolationCode::kWindowLength, where + ": length " + text::format_seconds(len));
      }
      if (i > 0 && win.start < clip.windows[i - 1].end) {
        add(ViolationCode::kWindowsOverlap, where + " overlaps window " + std::to_string(i - 1));
      }
      if (win.end > limit) add(ViolationCode::kTimeOverrun, where + " ends past duration");
    }
    if (options.vocabulary && !options.vocabulary->contains(win.category)) {
      add(ViolationCode::kUnknownCategory, where + ": '" + win.category + "'");
    }
    if (win.dims && !(in_unit_range(win.dims->arousal) &&
                      in_unit_range(win.dims->dominance) &&
                      in_unit_range(win.dims->valence))) {
      add(ViolationCode::kDimRange, where + ": dimension outside [0,1]");
    }
  }
  return report;
}

}  // namespace cpqa
