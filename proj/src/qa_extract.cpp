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

#include "cpqa/qa_extract.hpp"

#include <optional>

#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {

using nlohmann::json;
using nlohmann::ordered_json;

void ValidationRuleSet::validate() const {
  auto check = [](const std::vector<std::string>& list, const char* what) {
    for (const std::string& s : list) {
      if (text::trim(s).empty() || s != text::to_lower(s)) {
        throw ConfigError(std::string(what) + " entries must be non-empty lowercase: '" + s + "'");
      }
    }
  };
  check(forbidden_terms, "forbidden_terms");
  check(forbidden_name_fragments, "forbidden_name_fragments");
  if (min_answer_words == 0) throw ConfigError("min_answer_words must be positive");
}

ordered_json to_json(const ValidationRuleSet& rules) {
  return {{"forbidden_terms", rules.forbidden_terms},
          {"min_answer_words", rules.min_answer_words},
          {"forbidden_name_fragments", rules.forbidden_name_fragments}};
}

ValidationRuleSet rule_set_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("validation rules must be an object");
  ValidationRuleSet rules;
  try {
    if (j.contains("forbidden_terms")) {
      rules.forbidden_terms = j.at("forbidden_terms").get<std::vector<std::string>>();
    }
    if (j.contains("min_answer_words")) {
      const int n = j.at("min_answer_words").get<int>();
      if (n <= 0) throw ConfigError("min_answer_words must be positive");
      rules.min_answer_words = static_cast<std::size_t>(n);
    }
    if (j.contains("forbidden_name_fragments")) {
      rules.forbidden_name_fragments =
          j.at("forbidden_name_fragments").get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("validation rules: ") + e.what());
  }
  rules.validate();
  return rules;
}

namespace {

enum class Tag { kQuestion, kAnswer };

struct Segment {
  Tag tag;
  std::size_t line;
  std::string text;
};

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Drops bullets ("-", "*", "•"), enumerators ("3.", "3)") and markdown bold
// in front of a tag.
std::string_view strip_markers(std::string_view s) {
  while (true) {
    s = text::trim(s);
    if (starts_with(s, "**")) {
      s.remove_prefix(2);
    } else if (starts_with(s, "\xE2\x80\xA2")) {
      s.remove_prefix(3);
    } else if (s.size() >= 2 && (s[0] == '-' || s[0] == '*') && s[1] == ' ') {
      s.remove_prefix(2);
    } else {
      std::size_t digits = 0;
      while (digits < s.size() && s[digits] >= '0' && s[digits] <= '9') ++digits;
      if (digits > 0 && digits + 1 < s.size() && (s[digits] == '.' || s[digits] == ')') &&
          s[digits + 1] == ' ') {
        s.remove_prefix(digits + 1);
      } else {
        return s;
      }
    }
  }
}

std::optional<Tag> leading_tag(std::string_view& s) {
  std::optional<Tag> tag;
  if (starts_with(s, "Q:")) tag = Tag::kQuestion;
  if (starts_with(s, "A:")) tag = Tag::kAnswer;
  if (!tag) return std::nullopt;
  s.remove_prefix(2);
  s = text::trim(s);
  if (starts_with(s, "**")) s = text::trim(s.substr(2));
  return tag;
}

// Position of an inline "A:" tag inside a question line, if any.
std::size_t inline_answer_tag(std::string_view s) {
  for (std::size_t pos = s.find("A:"); pos != std::string_view::npos;
       pos = s.find("A:", pos + 1)) {
    std::size_t before = pos;
    while (before >= 2 && s.substr(before - 2, 2) == "**") before -= 2;
    if (before > 0 && (s[before - 1] == ' ' || s[before - 1] == '\t')) return before;
  }
  return std::string_view::npos;
}

std::vector<Segment> segment(std::string_view raw) {
  std::vector<Segment> segments;
  const std::vector<std::string> lines = text::split_lines(raw);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view body = strip_markers(lines[i]);
    std::optional<Tag> tag = leading_tag(body);
    if (!tag) {
      if (!segments.empty()) {
        segments.back().text += '\n';
        segments.back().text += text::trim(lines[i]);
      }
      continue;
    }
    if (*tag == Tag::kQuestion) {
      const std::size_t split = inline_answer_tag(body);
      if (split != std::string_view::npos) {
        segments.push_back({Tag::kQuestion, line_no, std::string(text::trim(body.substr(0, split)))});
        std::string_view rest = strip_markers(body.substr(split));
        leading_tag(rest);
        segments.push_back({Tag::kAnswer, line_no, std::string(rest)});
        continue;
      }
    }
    segments.push_back({*tag, line_no, std::string(body)});
  }
  for (Segment& s : segments) s.text = std::string(text::trim(s.text));
  return segments;
}

}  // namespace

ParseResult parse_qa_pairs(std::string_view raw, std::string_view clip_id) {
  ParseResult result;
  std::optional<Segment> pending;
  for (Segment& seg : segment(raw)) {
    if (seg.tag == Tag::kQuestion) {
      if (pending) {
        result.diagnostics.push_back({pending->line, "ORPHAN_QUESTION", pending->text});
      }
      pending = std::move(seg);
      continue;
    }
    if (!pending) {
      result.diagnostics.push_back({seg.line, "ORPHAN_ANSWER", seg.text});
      continue;
    }
    if (pending->text.empty()) {
      result.diagnostics.push_back({pending->line, "EMPTY_QUESTION", ""});
    } else if (seg.text.empty()) {
      result.diagnostics.push_back({seg.line, "EMPTY_ANSWER", pending->text});
    } else {
      result.pairs.push_back({.question = std::move(pending->text),
                              .answer = std::move(seg.text),
                              .qtype = QuestionType::kUntyped,
                              .clip_id = std::string(clip_id),
                              .provenance = Provenance::kGenerated});
    }
    pending.reset();
  }
  if (pending) {
    result.diagnostics.push_back({pending->line, "ORPHAN_QUESTION", pending->text});
  }
  return result;
}

std::string serialize_qa_pairs(std::span<const QAPair> pairs) {
  std::string out;
  for (const QAPair& p : pairs) {
    out += "Q: " + p.question + "\nA: " + p.answer + "\n";
  }
  return out;
}

std::string_view RejectReason::code() const {
  switch (kind) {
    case RejectKind::kForbiddenTerm: return "FORBIDDEN_TERM";
    case RejectKind::kOneWordAnswer: return "ONE_WORD_ANSWER";
    case RejectKind::kForbiddenName: return "FORBIDDEN_NAME";
  }
  return "UNKNOWN";
}

std::string RejectReason::to_string() const {
  if (detail.empty()) return std::string(code());
  return std::string(code()) + "(" + detail + ")";
}

QaVerdict validate_qa(const QAPair& pair, const ValidationRuleSet& rules) {
  QaVerdict verdict;
  for (const std::string& term : rules.forbidden_terms) {
    if (text::contains_whole_word(pair.question, term) ||
        text::contains_whole_word(pair.answer, term)) {
      verdict.reasons.push_back({RejectKind::kForbiddenTerm, term});
    }
  }
  if (text::count_words(pair.answer) < rules.min_answer_words) {
    verdict.reasons.push_back({RejectKind::kOneWordAnswer, ""});
  }
  for (const std::string& fragment : rules.forbidden_name_fragments) {
    if (text::contains_ignore_case(pair.question, fragment) ||
        text::contains_ignore_case(pair.answer, fragment)) {
      verdict.reasons.push_back({RejectKind::kForbiddenName, fragment});
    }
  }
  return verdict;
}

}  // namespace cpqa
