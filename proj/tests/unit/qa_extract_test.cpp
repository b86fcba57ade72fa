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

#include "cpqa/errors.hpp"
#include "cpqa/qa_extract.hpp"

using namespace cpqa;

namespace {

QAPair pair(std::string q, std::string a) {
  return {std::move(q), std::move(a), QuestionType::kUntyped, "c", Provenance::kGenerated};
}

std::vector<std::string> reasons(const QaVerdict& v) {
  std::vector<std::string> out;
  for (const RejectReason& r : v.reasons) out.push_back(r.to_string());
  return out;
}

}  // namespace

TEST_SUITE("qa_extract") {

TEST_CASE("single pair") {
  const ParseResult r = parse_qa_pairs(
      "Q: What is the primary emotion in the audio clip?\nA: The speaker sounds happy.", "c1");
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].question == "What is the primary emotion in the audio clip?");
  CHECK(r.pairs[0].answer == "The speaker sounds happy.");
  CHECK(r.pairs[0].clip_id == "c1");
  CHECK(r.pairs[0].qtype == QuestionType::kUntyped);
  CHECK(r.pairs[0].provenance == Provenance::kGenerated);
  CHECK(r.diagnostics.empty());
}

TEST_CASE("pairs keep their order") {
  const ParseResult r = parse_qa_pairs("Q: one\nA: a1\nQ: two\nA: a2", "c");
  REQUIRE(r.pairs.size() == 2);
  CHECK(r.pairs[0].question == "one");
  CHECK(r.pairs[0].answer == "a1");
  CHECK(r.pairs[1].question == "two");
  CHECK(r.pairs[1].answer == "a2");
}

TEST_CASE("orphans") {
  ParseResult r = parse_qa_pairs("A: answer with no question", "c");
  CHECK(r.pairs.empty());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "ORPHAN_ANSWER");
  r = parse_qa_pairs("Q: first\nQ: second\nA: answer two", "c");
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].question == "second");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "ORPHAN_QUESTION");
  CHECK(r.diagnostics[0].line == 1);
  r = parse_qa_pairs("Q: \nA: something", "c");
  CHECK(r.pairs.empty());
  CHECK(r.diagnostics.at(0).code == "EMPTY_QUESTION");
  r = parse_qa_pairs("Q: something\nA:", "c");
  CHECK(r.pairs.empty());
  CHECK(r.diagnostics.at(0).code == "EMPTY_ANSWER");
}

TEST_CASE("formatting noise around tags") {
  const ParseResult r = parse_qa_pairs(
      "Here are some pairs:\n\n1. **Q:** How old?\n   **A:** Hard to say.\n"
      "- Q: Inline? A: Yes, inline.\n* Q: Wrapped?\n  A: First line\n  second line.\n",
      "c");
  REQUIRE(r.pairs.size() == 3);
  CHECK(r.pairs[0].question == "How old?");
  CHECK(r.pairs[0].answer == "Hard to say.");
  CHECK(r.pairs[1].question == "Inline?");
  CHECK(r.pairs[1].answer == "Yes, inline.");
  CHECK(r.pairs[2].answer == "First line\nsecond line.");
  CHECK(r.diagnostics.empty());
}

TEST_CASE("parse of serialized pairs is the identity") {
  std::mt19937 rng(17);
  const std::vector<std::string> vocab = {"the", "speaker", "sounds", "happy", "why", "does",
                                          "change", "over", "time", "calm", "voice", "fast"};
  for (int round = 0; round < 200; ++round) {
    std::vector<QAPair> pairs;
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < n; ++i) {
      auto sentence = [&](int len) {
        std::string s;
        for (int k = 0; k < len; ++k) {
          if (k) s += ' ';
          s += vocab[rng() % vocab.size()];
        }
        return s;
      };
      pairs.push_back(pair(sentence(1 + static_cast<int>(rng() % 8)) + "?",
                           sentence(1 + static_cast<int>(rng() % 12)) + "."));
    }
    const ParseResult r = parse_qa_pairs(serialize_qa_pairs(pairs), "c");
    CHECK(r.diagnostics.empty());
    CHECK(r.pairs == pairs);
  }
}

TEST_CASE("validation rules") {
  const ValidationRuleSet rules;
  CHECK(reasons(validate_qa(pair("How does the speaker feel?", "happy"), rules)) ==
        std::vector<std::string>{"ONE_WORD_ANSWER"});
  CHECK(reasons(validate_qa(pair("According to the transcript, why is the speaker upset?",
                                 "Because the door was open."), rules)) ==
        std::vector<std::string>{"FORBIDDEN_TERM(transcript)"});
  CHECK(validate_qa(pair("What is the gender of the speaker in this clip?",
                         "The speaker is female."), rules).accepted());
  CHECK(reasons(validate_qa(pair("What did emotion2vec predict?", "Sadness overall."), rules)) ==
        std::vector<std::string>{"FORBIDDEN_NAME(emotion2vec)"});
  CHECK(reasons(validate_qa(pair("Name the TIMESTAMP.", "Noon."), rules)) ==
        std::vector<std::string>{"FORBIDDEN_TERM(timestamp)", "ONE_WORD_ANSWER"});
}

TEST_CASE("every avoid-term rejects in questions and answers") {
  const ValidationRuleSet rules;
  for (const std::string& term : {"text", "transcript", "metadata", "label", "timestamp", "labeled"}) {
    CHECK_FALSE(validate_qa(pair("Is the " + term + " clear?", "It seems clear enough."), rules).accepted());
    CHECK_FALSE(validate_qa(pair("Is it clear?", "The " + term + " is clear."), rules).accepted());
  }
}

TEST_CASE("whole-word boundary: labels does not trip label") {
  const ValidationRuleSet rules;
  CHECK(validate_qa(pair("Which labels fit the speaker?", "Calm and tired, mostly."), rules).accepted());
  CHECK(validate_qa(pair("Do they collaborate?", "They seem to collaborate well."), rules).accepted());
  CHECK(validate_qa(pair("Is the context clear?", "The context is clear."), rules).accepted());
  CHECK_FALSE(validate_qa(pair("Which label fits?", "Calm and tired."), rules).accepted());
  CHECK_FALSE(validate_qa(pair("Is it from Emotion2Vec-Large?", "Probably it is."), rules).accepted());
}

TEST_CASE("adding forbidden terms never turns a reject into an accept") {
  std::mt19937 rng(23);
  const std::vector<std::string> words = {"why", "speaker", "text", "label", "labels", "calm",
                                          "voice", "happy", "metadata", "tone", "clip", "seems"};
  for (int i = 0; i < 1000; ++i) {
    auto sentence = [&](int len) {
      std::string s;
      for (int k = 0; k < len; ++k) s += (k ? " " : "") + words[rng() % words.size()];
      return s;
    };
    const QAPair p = pair(sentence(1 + static_cast<int>(rng() % 6)),
                          sentence(1 + static_cast<int>(rng() % 6)));
    ValidationRuleSet small;
    small.forbidden_terms = {words[rng() % words.size()]};
    ValidationRuleSet larger = small;
    larger.forbidden_terms.push_back(words[rng() % words.size()]);
    const QaVerdict a = validate_qa(p, small);
    const QaVerdict b = validate_qa(p, larger);
    if (!a.accepted()) CHECK_FALSE(b.accepted());
    CHECK(b.reasons.size() >= a.reasons.size());
  }
}

TEST_CASE("rule set config") {
  ValidationRuleSet rules;
  CHECK_NOTHROW(rules.validate());
  const ValidationRuleSet back = rule_set_from_json(nlohmann::json::parse(to_json(rules).dump()));
  CHECK(back.forbidden_terms == rules.forbidden_terms);
  CHECK(back.min_answer_words == rules.min_answer_words);
  CHECK(back.forbidden_name_fragments == rules.forbidden_name_fragments);
  rules.forbidden_terms.push_back("Text");
  CHECK_THROWS_AS(rules.validate(), ConfigError);
  CHECK_THROWS_AS(rule_set_from_json(nlohmann::json::parse(R"({"forbidden_terms":[""]})")),
                  ConfigError);
  const RejectReason r{RejectKind::kForbiddenTerm, "text"};
  CHECK(r.code() == "FORBIDDEN_TERM");
}

}  // TEST_SUITE
