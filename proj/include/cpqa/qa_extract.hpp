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

#ifndef CPQA_QA_EXTRACT_HPP_
#define CPQA_QA_EXTRACT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpqa/corpus.hpp"

namespace cpqa {

struct ValidationRuleSet {
  // Whole-word, case-insensitive.
  std::vector<std::string> forbidden_terms{"text",  "transcript", "metadata",
                                           "label", "timestamp",  "labeled"};
  std::size_t min_answer_words = 2;
  // Substring, case-insensitive.
  std::vector<std::string> forbidden_name_fragments{"emotion2vec"};

  // Throws ConfigError for empty or non-lowercase entries.
  void validate() const;
};

nlohmann::ordered_json to_json(const ValidationRuleSet& rules);
ValidationRuleSet rule_set_from_json(const nlohmann::json& j);

struct ParseDiagnostic {
  std::size_t line = 0;  // 1-based line of the offending tag
  std::string code;      // ORPHAN_QUESTION, ORPHAN_ANSWER, EMPTY_QUESTION, EMPTY_ANSWER
  std::string detail;
};

struct ParseResult {
  std::vector<QAPair> pairs;
  std::vector<ParseDiagnostic> diagnostics;
};

// Extracts Q:/A: pairs from raw model output. Leading list markers and
// markdown bold around tags are ignored, text before the first tag is
// dropped, and a segment runs until the next tag. Never throws.
ParseResult parse_qa_pairs(std::string_view raw, std::string_view clip_id);

// "Q: ...\nA: ...\n" per pair.
std::string serialize_qa_pairs(std::span<const QAPair> pairs);

enum class RejectKind { kForbiddenTerm, kOneWordAnswer, kForbiddenName };

struct RejectReason {
  RejectKind kind;
  std::string detail;  // the matched term or fragment

  // FORBIDDEN_TERM(transcript), ONE_WORD_ANSWER, FORBIDDEN_NAME(emotion2vec)
  std::string to_string() const;
  // Same without the detail, for yield counters.
  std::string_view code() const;
  bool operator==(const RejectReason&) const = default;
};

struct QaVerdict {
  std::vector<RejectReason> reasons;
  bool accepted() const { return reasons.empty(); }
};

QaVerdict validate_qa(const QAPair& pair, const ValidationRuleSet& rules);

}  // namespace cpqa

#endif  // CPQA_QA_EXTRACT_HPP_
