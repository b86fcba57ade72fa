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
#include <regex>

#include "cpqa/alignment.hpp"
#include "cpqa/errors.hpp"
#include "cpqa/promptgen.hpp"
#include "cpqa/text.hpp"
#include "support/test_support.hpp"

using namespace cpqa;
using cpqa::testing::read_file;
using cpqa::testing::example_windows;
using cpqa::testing::golden_clip;
using cpqa::testing::window;

namespace {

const std::string kGolden = cpqa::testing::test_data("golden/");

}  // namespace

TEST_SUITE("promptgen") {

TEST_CASE("CPQA prompt matches the golden file") {
  const ClipRecord c = golden_clip();
  const std::string prompt =
      build_qa_generation_prompt(c, align_words(c.words, c.windows), GenerationMode::kCpqa);
  CHECK(prompt == read_file(kGolden + "cpqa_prompt.txt"));
  CHECK(prompt.find("\nOutput Format: Format each QA pair clearly with Q: and A: tags") !=
        std::string::npos);
  CHECK(prompt.find("   - predict_dim provides three scores in the order [arousal, dominance, valence]\n") !=
        std::string::npos);
  CHECK(prompt.find("Utterance: `I left the keys`") != std::string::npos);
}

TEST_CASE("PQA* prompt matches the golden file") {
  const ClipRecord c = golden_clip();
  const std::string prompt =
      build_qa_generation_prompt(c, align_words(c.words, c.windows), GenerationMode::kPqaStar);
  CHECK(prompt == read_file(kGolden + "pqa_star_prompt.txt"));
  CHECK(prompt.find("What makes") == std::string::npos);
  CHECK(prompt.find("Why speaker is feeling") == std::string::npos);
  CHECK(prompt.find("Why does the speaker become") == std::string::npos);
  CHECK(prompt.find("What is the gender of the speaker in this clip?") != std::string::npos);
  CHECK(prompt.find("How does the speaker's emotion change over time?") != std::string::npos);
}

TEST_CASE("PQA* template differs from CPQA only by the omitted lines") {
  const std::string full = qa_generation_template(GenerationMode::kCpqa);
  const std::string reduced = qa_generation_template(GenerationMode::kPqaStar);
  const std::vector<std::string> markers = pqa_star_omission_markers();
  CHECK(markers == std::vector<std::string>{"What makes", "Why speaker is feeling",
                                            "Why does the speaker become"});
  std::vector<std::string> kept;
  std::size_t dropped = 0;
  for (const std::string& line : cpqa::text::split_lines(full)) {
    bool hit = false;
    for (const std::string& m : markers) hit = hit || line.find(m) != std::string::npos;
    if (hit) {
      ++dropped;
    } else {
      kept.push_back(line);
    }
  }
  CHECK(dropped == 3);
  CHECK(cpqa::text::join(kept, "\n") == reduced);
}

TEST_CASE("utterance slot") {
  ClipRecord c;
  c.clip_id = "u";
  c.language = "en";
  c.duration = 2.0;
  c.words = {{"I", 0.0, 0.2}, {"left", 0.3, 0.6}};
  const std::string p = build_qa_generation_prompt(c, align_words(c.words, c.windows),
                                                   GenerationMode::kCpqa);
  CHECK(p.find("Utterance: `I left`") != std::string::npos);
  CHECK(p.find(R"([{"word":"I","predict_emo2vec":"neutral"},{"word":"left","predict_emo2vec":"neutral"}])") !=
        std::string::npos);
}

TEST_CASE("prompt preconditions") {
  ClipRecord c = golden_clip();
  const std::vector<AlignedWord> aligned = align_words(c.words, c.windows);
  c.words.pop_back();
  CHECK_THROWS_AS(build_qa_generation_prompt(c, aligned, GenerationMode::kCpqa), InvalidArgument);
  c.words.clear();
  CHECK_THROWS_AS(build_qa_generation_prompt(c, {}, GenerationMode::kCpqa), InvalidArgument);
}

TEST_CASE("render_template is single pass") {
  CHECK(render_template("{a} and {b}", {{"a", "{b}"}, {"b", "x"}}) == "{b} and x");
  CHECK(render_template("{unknown} {a}", {{"a", "1"}}) == "{unknown} 1");
  CHECK(render_template("{ a}{", {{"a", "1"}}) == "{ a}{");
}

TEST_CASE("mode parsing") {
  CHECK(parse_generation_mode("cpqa") == GenerationMode::kCpqa);
  CHECK(parse_generation_mode("PQA-STAR") == GenerationMode::kPqaStar);
  CHECK(parse_generation_mode("pqa_star") == GenerationMode::kPqaStar);
  CHECK_THROWS_AS(parse_generation_mode("other"), ConfigError);
}

TEST_CASE("emotion label formatting") {
  CHECK(format_emotion_labels(example_windows()) ==
        "2-4 second: sad, 10-12 second: angry, 12-14 second: angry.");
  CHECK(format_emotion_labels(std::vector<EmotionWindow>{window(0, 2, "neutral"),
                                                         window(2, 4, "neutral")}) == "");
  CHECK(format_emotion_labels(std::vector<EmotionWindow>{window(0, 2, "happy")}) ==
        "0-2 second: happy.");
  CHECK(format_emotion_labels(std::vector<EmotionWindow>{window(28, 29.3, "sad")}) ==
        "28-29.3 second: sad.");
  const MetadataBlock block = metadata_block(example_windows());
  REQUIRE(block.size() == 3);
  CHECK(block[1].start == 10.0);
}

TEST_CASE("formatted labels follow the entry grammar") {
  const std::regex grammar(R"(^\d+-\d+ second: [a-z]+(, \d+-\d+ second: [a-z]+)*\.$)");
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const ClipRecord c = cpqa::testing::tiled_clip("g", 2.0 * std::uniform_int_distribution<int>(1, 15)(rng), {});
    std::vector<EmotionWindow> ws = c.windows;
    for (EmotionWindow& w : ws) {
      w.category = cpqa::testing::emotion_names()[std::uniform_int_distribution<std::size_t>(0, 9)(rng)];
    }
    const std::string s = format_emotion_labels(ws);
    const bool any = std::any_of(ws.begin(), ws.end(),
                                 [](const EmotionWindow& w) { return w.category != "neutral"; });
    if (!any) {
      CHECK(s.empty());
      continue;
    }
    CHECK(std::regex_match(s, grammar));
    CHECK(s.find("neutral") == std::string::npos);
  }
}

TEST_CASE("augmentation reproduces both instructions") {
  const std::string i1 = std::string(metadata_instruction1());
  const std::string i2 = std::string(metadata_instruction2());
  CHECK(i1 ==
        "If relevant, incorporate the following speech-derived emotion estimations "
        "(recorded every two seconds) when generating your answer: #XXXX#");
  CHECK(i2 ==
        "All other time intervals without explicit emotion labels should be considered "
        "neutral. However, these emotion labels may not always be accurate. Analyze the "
        "content carefully and refine your response accordingly.");
  const std::string out = augment_question_with_metadata("Why is the man angry?", example_windows());
  CHECK(out ==
        "Why is the man angry? If relevant, incorporate the following speech-derived emotion "
        "estimations (recorded every two seconds) when generating your answer: 2-4 second: "
        "sad, 10-12 second: angry, 12-14 second: angry. " + i2);
  CHECK(out.ends_with(i2));
  CHECK(out.find("2-4 second: sad") != std::string::npos);
  CHECK(out == augment_question_with_metadata("Why is the man angry?", example_windows()));

  const std::string empty = augment_question_with_metadata("Q?", {});
  CHECK(empty == "Q? " + i1.substr(0, i1.size() - 6) + " " + i2);
}

TEST_CASE("augmentation is plain concatenation") {
  std::mt19937 rng(11);
  const std::string i2 = std::string(metadata_instruction2());
  for (int i = 0; i < 200; ++i) {
    const ClipRecord c = cpqa::testing::random_valid_clip(rng, "q");
    const std::string q = "Question " + std::to_string(i) + "?";
    std::string i1 = std::string(metadata_instruction1());
    i1.replace(i1.find("#XXXX#"), 6, format_emotion_labels(c.windows));
    const std::string out = augment_question_with_metadata(q, c.windows);
    CHECK(out.size() == q.size() + 1 + i1.size() + 1 + i2.size());
    CHECK(out.starts_with(q + " "));
  }
}

TEST_CASE("template checksum is stable hex") {
  const std::string sum = template_checksum();
  CHECK(sum.size() == 64);
  CHECK(sum == template_checksum());
}

}  // TEST_SUITE
