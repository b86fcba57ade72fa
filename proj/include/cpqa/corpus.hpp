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

#ifndef CPQA_CORPUS_HPP_
#define CPQA_CORPUS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpqa {

inline constexpr std::string_view kNeutral = "neutral";

// Emotion categories are lowercase names checked against an
// EmotionVocabulary at validation time.
using EmotionCategory = std::string;

enum class Gender { kMale, kFemale };

std::string_view to_string(Gender g);
std::optional<Gender> parse_gender(std::string_view s);

struct WordToken {
  std::string text;
  double start = 0.0;
  double end = 0.0;

  double midpoint() const { return 0.5 * (start + end); }
  bool operator==(const WordToken&) const = default;
};

// Dimensional emotion scores, each in [0, 1].
struct DimScores {
  double arousal = 0.0;
  double dominance = 0.0;
  double valence = 0.0;

  bool operator==(const DimScores&) const = default;
};

// A nominally 2-second interval [start, end) with SER/gender predictions.
struct EmotionWindow {
  double start = 0.0;
  double end = 0.0;
  EmotionCategory category{kNeutral};
  std::optional<DimScores> dims;
  std::optional<Gender> gender;

  bool operator==(const EmotionWindow&) const = default;
};

struct ClipRecord {
  std::string clip_id;
  std::string language;
  double duration = 0.0;
  std::vector<WordToken> words;
  std::vector<EmotionWindow> windows;

  bool operator==(const ClipRecord&) const = default;
};

enum class QuestionType { kC, kCE, kCG, kPQA, kUntyped };
enum class Provenance { kGenerated, kHuman, kTemplate };

std::string_view to_string(QuestionType t);
std::optional<QuestionType> parse_question_type(std::string_view s);
std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view s);

struct QAPair {
  std::string question;
  std::string answer;
  QuestionType qtype = QuestionType::kUntyped;
  std::string clip_id;
  Provenance provenance = Provenance::kGenerated;

  bool operator==(const QAPair&) const = default;
};

// Closed, ordered set of lowercase category names.
class EmotionVocabulary {
 public:
  // Throws ConfigError on empty, non-lowercase or duplicate names.
  explicit EmotionVocabulary(std::vector<std::string> names);

  // angry, disgusted, fearful, happy, sad, surprised, embarrassment,
  // sarcasm, worry, neutral.
  static const EmotionVocabulary& default_vocabulary();

  bool contains(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

enum class ViolationCode {
  kClipIdEmpty,
  kDurationInvalid,
  kWordTextEmpty,
  kNegativeTime,
  kWordTimeOrder,
  kWordsUnsorted,
  kWindowEmpty,
  kWindowLength,
  kWindowsOverlap,
  kUnknownCategory,
  kDimRange,
  kTimeOverrun,
};

// Machine-readable code, e.g. "WINDOW_EMPTY".
std::string_view code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationCode code) const;
  std::string summary() const;
};

struct ValidationOptions {
  const EmotionVocabulary* vocabulary = &EmotionVocabulary::default_vocabulary();
  // Allowed overrun of word/window times past the clip duration.
  double time_tolerance = 0.1;
  // Nominal window length; only the last window may be shorter.
  double window_length = 2.0;
};

// Collects every violated ClipRecord invariant. Never throws.
ValidationReport validate_clip(const ClipRecord& clip,
                               const ValidationOptions& options = {});

}  // namespace cpqa

#endif  // CPQA_CORPUS_HPP_
