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

#ifndef CPQA_CONDENSE_HPP_
#define CPQA_CONDENSE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpqa/corpus.hpp"

namespace cpqa {

enum class Polarity { kNegative, kPositive, kNeutral };

std::string_view to_string(Polarity p);

// Real interval with independently open or closed ends.
struct ValueRange {
  double lo = 0.0;
  double hi = 1.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x) const;
  std::string to_string() const;
  bool operator==(const ValueRange&) const = default;
};

using PolarityMap = std::map<std::string, Polarity, std::less<>>;

struct CondenseConfig {
  std::string target_language = "en";
  ValueRange valence_negative{0.0, 0.5, true, false};
  ValueRange valence_positive{0.5, 1.0, false, true};
  ValueRange valence_neutral{0.4, 0.6, true, true};
  std::map<std::string, int, std::less<>> min_counts{
      {"angry", 3}, {"happy", 3},     {"sad", 2},
      {"surprised", 2}, {"disgusted", 1}, {"fearful", 1}};
  double duration_min = 20.0;
  double duration_max = 30.0;
  PolarityMap polarity_map = default_polarity_map();

  static PolarityMap default_polarity_map();

  // Throws ConfigError when a range leaves [0,1], the duration bounds are
  // not increasing, or a count is negative.
  void validate() const;
  const ValueRange& valence_range(Polarity p) const;
};

nlohmann::ordered_json to_json(const CondenseConfig& cfg);
// Missing keys keep their defaults. Throws ConfigError.
CondenseConfig condense_config_from_json(const nlohmann::json& j);

enum class RejectionStage { kLanguage, kDuration, kOccurrence };

std::string_view to_string(RejectionStage s);

struct CondenseReport {
  std::size_t input_count = 0;
  std::vector<std::string> kept;
  std::map<std::string, RejectionStage> rejected;
  // Number of selected clips in which each category met its threshold.
  std::map<std::string, int> qualification_counts;
  // Windows relabeled neutral by the consistency filter, per clip that
  // reached that stage.
  std::map<std::string, int> relabeled_windows;
};

nlohmann::ordered_json to_json(const CondenseReport& report);

struct LanguageSplit {
  std::vector<ClipRecord> kept;
  std::vector<ClipRecord> rejected;
};

// Case-insensitive language tag match.
LanguageSplit language_filter(std::span<const ClipRecord> clips,
                              std::string_view target);

// Throws ConfigError for a category missing from the map.
Polarity polarity_of(std::string_view category, const PolarityMap& map);

// Relabels neutral every window whose valence falls outside the range of
// its category's polarity. Windows without dims are left alone.
ClipRecord ser_consistency_filter(const ClipRecord& clip,
                                  const CondenseConfig& cfg);

struct OccurrenceResult {
  bool pass = false;
  std::set<std::string> qualifying;
};

// Passes when any category with a positive minimum count has at least that
// many windows.
OccurrenceResult emotion_occurrence_filter(const ClipRecord& clip,
                                           const CondenseConfig& cfg);

struct CondenseResult {
  std::vector<ClipRecord> selected;
  CondenseReport report;
};

// language -> duration -> consistency -> occurrence. Selected clips carry
// their consistency-filtered windows and keep input order.
CondenseResult condense_corpus(std::span<const ClipRecord> clips,
                               const CondenseConfig& cfg);

}  // namespace cpqa

#endif  // CPQA_CONDENSE_HPP_
