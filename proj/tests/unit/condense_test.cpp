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

#include "cpqa/condense.hpp"
#include "cpqa/errors.hpp"
#include "support/test_support.hpp"

using namespace cpqa;
using cpqa::testing::tiled_clip;
using cpqa::testing::window;

namespace {

ClipRecord with_windows(std::vector<EmotionWindow> ws) {
  ClipRecord c;
  c.clip_id = "x";
  c.language = "en";
  c.duration = 2.0 * static_cast<double>(ws.size());
  c.windows = std::move(ws);
  return c;
}

}  // namespace

TEST_SUITE("condense") {

TEST_CASE("language filter") {
  const std::vector<ClipRecord> all_en = {tiled_clip("a", 4, {}), tiled_clip("b", 4, {})};
  CHECK(language_filter(all_en, "en").kept.size() == 2);
  const std::vector<ClipRecord> mixed = {tiled_clip("a", 4, {}), tiled_clip("b", 4, {}, "zh")};
  const LanguageSplit split = language_filter(mixed, "en");
  REQUIRE(split.kept.size() == 1);
  CHECK(split.kept[0].clip_id == "a");
  CHECK(split.rejected[0].clip_id == "b");
  CHECK(language_filter(all_en, "EN").kept.size() == 2);
}

TEST_CASE("polarity under the default map") {
  const PolarityMap& m = CondenseConfig{}.polarity_map;
  CHECK(polarity_of("sad", m) == Polarity::kNegative);
  CHECK(polarity_of("happy", m) == Polarity::kPositive);
  CHECK(polarity_of("surprised", m) == Polarity::kPositive);
  CHECK(polarity_of("sarcasm", m) == Polarity::kPositive);
  CHECK(polarity_of("neutral", m) == Polarity::kNeutral);
  CHECK_THROWS_AS(polarity_of("elated", m), ConfigError);
}

TEST_CASE("consistency filter relabels by valence") {
  const CondenseConfig cfg;
  const ClipRecord in = with_windows({window(0, 2, "sad", 0.3), window(2, 4, "happy", 0.3),
                                      window(4, 6, "neutral", 0.5), window(6, 8, "angry"),
                                      window(8, 10, "happy", 0.5), window(10, 12, "sad", 0.5)});
  const ClipRecord out = ser_consistency_filter(in, cfg);
  REQUIRE(out.windows.size() == in.windows.size());
  CHECK(out.windows[0].category == "sad");
  CHECK(out.windows[1].category == "neutral");
  CHECK(out.windows[2].category == "neutral");
  CHECK(out.windows[3].category == "angry");
  CHECK(out.windows[4].category == "neutral");
  CHECK(out.windows[5].category == "neutral");
  for (std::size_t i = 0; i < in.windows.size(); ++i) {
    CHECK(out.windows[i].start == in.windows[i].start);
    CHECK(out.windows[i].dims == in.windows[i].dims);
  }
}

TEST_CASE("occurrence filter") {
  const CondenseConfig cfg;
  OccurrenceResult r = emotion_occurrence_filter(
      with_windows({window(0, 2, "angry"), window(2, 4, "angry"), window(4, 6, "angry")}), cfg);
  CHECK(r.pass);
  CHECK(r.qualifying == std::set<std::string>{"angry"});
  r = emotion_occurrence_filter(
      with_windows({window(0, 2, "angry"), window(2, 4, "angry"), window(4, 6, "happy")}), cfg);
  CHECK_FALSE(r.pass);
  r = emotion_occurrence_filter(with_windows({window(0, 2, "fearful")}), cfg);
  CHECK(r.pass);
  CHECK(r.qualifying == std::set<std::string>{"fearful"});
  r = emotion_occurrence_filter(
      with_windows({window(0, 2, "worry"), window(2, 4, "worry"), window(4, 6, "worry")}), cfg);
  CHECK_FALSE(r.pass);
}

TEST_CASE("empty corpus and short clip") {
  const CondenseConfig cfg;
  const CondenseResult empty = condense_corpus({}, cfg);
  CHECK(empty.selected.empty());
  CHECK(empty.report.input_count == 0);
  const std::vector<ClipRecord> one = {tiled_clip("short", 15.0, {{0, {"fearful", 0.2}}})};
  const CondenseResult r = condense_corpus(one, cfg);
  CHECK(r.selected.empty());
  CHECK(r.report.rejected.at("short") == RejectionStage::kDuration);
}

TEST_CASE("ten-clip corpus selects the hand-derived set") {
  const std::vector<ClipRecord> corpus = cpqa::testing::ten_clip_corpus();
  const CondenseResult r = condense_corpus(corpus, CondenseConfig{});
  CHECK(r.report.kept == std::vector<std::string>{"k01", "k05", "k07", "k08"});
  CHECK(r.report.rejected.at("k02") == RejectionStage::kLanguage);
  CHECK(r.report.rejected.at("k03") == RejectionStage::kDuration);
  for (const char* id : {"k04", "k06", "k09", "k10"}) {
    CHECK(r.report.rejected.at(id) == RejectionStage::kOccurrence);
  }
  CHECK(r.report.relabeled_windows.at("k06") == 1);
  CHECK(r.report.relabeled_windows.at("k10") == 1);
  CHECK(r.report.qualification_counts.at("angry") == 1);
  for (const ClipRecord& c : corpus) {
    const std::string expected = cpqa::testing::brute_force_condense_stage(c);
    const bool kept = std::find(r.report.kept.begin(), r.report.kept.end(), c.clip_id) !=
                      r.report.kept.end();
    CHECK(kept == expected.empty());
  }
  const nlohmann::ordered_json j = to_json(r.report);
  CHECK(j["rejected_by_stage"]["OCCURRENCE"] == 4);
  CHECK(j["kept_count"] == 4);
}

TEST_CASE("condensation properties on random corpora") {
  std::mt19937 rng(42);
  const CondenseConfig cfg;
  for (int round = 0; round < 20; ++round) {
    std::vector<ClipRecord> clips;
    for (int i = 0; i < 40; ++i) {
      clips.push_back(cpqa::testing::random_condense_clip(rng, "r" + std::to_string(i)));
    }
    const CondenseResult r = condense_corpus(clips, cfg);
    CHECK(r.report.input_count == clips.size());
    CHECK(r.report.kept.size() + r.report.rejected.size() == clips.size());
    std::set<std::string> seen(r.report.kept.begin(), r.report.kept.end());
    for (const auto& [id, stage] : r.report.rejected) CHECK(seen.insert(id).second);
    CHECK(seen.size() == clips.size());
    for (const ClipRecord& c : clips) {
      const std::string expected = cpqa::testing::brute_force_condense_stage(c);
      if (expected.empty()) {
        CHECK(std::count(r.report.kept.begin(), r.report.kept.end(), c.clip_id) == 1);
      } else {
        CHECK(std::string(to_string(r.report.rejected.at(c.clip_id))) == expected);
      }
    }
    for (const ClipRecord& s : r.selected) {
      CHECK(emotion_occurrence_filter(s, cfg).pass);
      const auto it = std::find_if(clips.begin(), clips.end(),
                                   [&](const ClipRecord& c) { return c.clip_id == s.clip_id; });
      CHECK(s.windows.size() == it->windows.size());
    }
    const CondenseResult again = condense_corpus(r.selected, cfg);
    CHECK(again.selected == r.selected);
    CHECK(again.report.rejected.empty());
  }
}

TEST_CASE("config validation and JSON round trip") {
  CondenseConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.valence_negative.to_string() == "[0, 0.5)");
  CHECK(cfg.valence_positive.to_string() == "(0.5, 1]");
  CHECK(cfg.valence_neutral.to_string() == "[0.4, 0.6]");
  CHECK(cfg.valence_negative.contains(0.0));
  CHECK_FALSE(cfg.valence_negative.contains(0.5));
  CHECK_FALSE(cfg.valence_positive.contains(0.5));
  CHECK(cfg.valence_positive.contains(1.0));
  const CondenseConfig back = condense_config_from_json(nlohmann::json::parse(to_json(cfg).dump()));
  CHECK(back.valence_negative == cfg.valence_negative);
  CHECK(back.valence_positive == cfg.valence_positive);
  CHECK(back.valence_neutral == cfg.valence_neutral);
  CHECK(back.min_counts == cfg.min_counts);
  CHECK(back.polarity_map == cfg.polarity_map);
  CHECK(back.duration_min == cfg.duration_min);

  cfg.duration_min = 40.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = CondenseConfig{};
  cfg.valence_neutral.hi = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = CondenseConfig{};
  cfg.min_counts["angry"] = -1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(condense_config_from_json(nlohmann::json::parse(R"({"valence_negative":"0..1"})")),
                  ConfigError);
  const CondenseConfig custom = condense_config_from_json(
      nlohmann::json::parse(R"({"min_counts":{"worry":2},"polarity_map":{"worry":"negative","neutral":"neutral"}})"));
  CHECK(custom.min_counts.size() == 1);
  CHECK(emotion_occurrence_filter(with_windows({window(0, 2, "worry"), window(2, 4, "worry")}), custom).pass);
}

}  // TEST_SUITE
