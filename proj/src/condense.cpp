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

#include "cpqa/condense.hpp"

#include <cmath>
#include <regex>

#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::kNegative: return "negative";
    case Polarity::kPositive: return "positive";
    case Polarity::kNeutral: return "neutral";
  }
  return "neutral";
}

namespace {

Polarity parse_polarity(const std::string& s) {
  for (auto p : {Polarity::kNegative, Polarity::kPositive, Polarity::kNeutral}) {
    if (s == to_string(p)) return p;
  }
  throw ConfigError("unknown polarity '" + s + "'");
}

ValueRange parse_range(const std::string& s) {
  static const std::regex kRange(
      R"(^\s*([\[\(])\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*([\]\)])\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, kRange)) {
    throw ConfigError("bad interval '" + s + "', expected e.g. \"[0, 0.5)\"");
  }
  try {
    return ValueRange{std::stod(m[2].str()), std::stod(m[3].str()),
                      m[1].str() == "[", m[4].str() == "]"};
  } catch (const std::exception&) {
    throw ConfigError("bad interval bound in '" + s + "'");
  }
}

bool language_matches(const ClipRecord& clip, std::string_view target) {
  return text::to_lower(clip.language) == text::to_lower(target);
}

bool duration_in_range(const ClipRecord& clip, const CondenseConfig& cfg) {
  return clip.duration >= cfg.duration_min && clip.duration <= cfg.duration_max;
}

}  // namespace

bool ValueRange::contains(double x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::string ValueRange::to_string() const {
  return std::string(lo_closed ? "[" : "(") + text::format_seconds(lo) + ", " +
         text::format_seconds(hi) + (hi_closed ? "]" : ")");
}

PolarityMap CondenseConfig::default_polarity_map() {
  return {{"angry", Polarity::kNegative},     {"sad", Polarity::kNegative},
          {"disgusted", Polarity::kNegative}, {"fearful", Polarity::kNegative},
          {"embarrassment", Polarity::kNegative},
          {"worry", Polarity::kNegative},     {"happy", Polarity::kPositive},
          {"surprised", Polarity::kPositive}, {"sarcasm", Polarity::kPositive},
          {"neutral", Polarity::kNeutral}};
}

void CondenseConfig::validate() const {
  for (const ValueRange* r : {&valence_negative, &valence_positive, &valence_neutral}) {
    if (!(r->lo >= 0.0 && r->hi <= 1.0 && r->lo <= r->hi)) {
      throw ConfigError("valence range " + r->to_string() + " must lie within [0, 1]");
    }
  }
  if (!(duration_min < duration_max)) {
    throw ConfigError("duration_min must be smaller than duration_max");
  }
  for (const auto& [category, count] : min_counts) {
    if (count < 0) throw ConfigError("min_counts['" + category + "'] is negative");
  }
}

const ValueRange& CondenseConfig::valence_range(Polarity p) const {
  switch (p) {
    case Polarity::kNegative: return valence_negative;
    case Polarity::kPositive: return valence_positive;
    case Polarity::kNeutral: return valence_neutral;
  }
  return valence_neutral;
}

ordered_json to_json(const CondenseConfig& cfg) {
  ordered_json j;
  j["target_language"] = cfg.target_language;
  j["valence_negative"] = cfg.valence_negative.to_string();
  j["valence_positive"] = cfg.valence_positive.to_string();
  j["valence_neutral"] = cfg.valence_neutral.to_string();
  ordered_json counts = ordered_json::object();
  for (const auto& [c, n] : cfg.min_counts) counts[c] = n;
  j["min_counts"] = std::move(counts);
  j["duration_min"] = cfg.duration_min;
  j["duration_max"] = cfg.duration_max;
  ordered_json pol = ordered_json::object();
  for (const auto& [c, p] : cfg.polarity_map) pol[c] = to_string(p);
  j["polarity_map"] = std::move(pol);
  return j;
}

CondenseConfig condense_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("condense config must be an object");
  CondenseConfig cfg;
  try {
    if (j.contains("target_language")) cfg.target_language = j.at("target_language").get<std::string>();
    if (j.contains("valence_negative")) cfg.valence_negative = parse_range(j.at("valence_negative").get<std::string>());
    if (j.contains("valence_positive")) cfg.valence_positive = parse_range(j.at("valence_positive").get<std::string>());
    if (j.contains("valence_neutral")) cfg.valence_neutral = parse_range(j.at("valence_neutral").get<std::string>());
    if (j.contains("min_counts")) {
      cfg.min_counts.clear();
      for (const auto& [c, n] : j.at("min_counts").items()) cfg.min_counts[c] = n.get<int>();
    }
    if (j.contains("duration_min")) cfg.duration_min = j.at("duration_min").get<double>();
    if (j.contains("duration_max")) cfg.duration_max = j.at("duration_max").get<double>();
    if (j.contains("polarity_map")) {
      cfg.polarity_map.clear();
      for (const auto& [c, p] : j.at("polarity_map").items()) {
        cfg.polarity_map[c] = parse_polarity(p.get<std::string>());
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("condense config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string_view to_string(RejectionStage s) {
  switch (s) {
    case RejectionStage::kLanguage: return "LANGUAGE";
    case RejectionStage::kDuration: return "DURATION";
    case RejectionStage::kOccurrence: return "OCCURRENCE";
  }
  return "LANGUAGE";
}

ordered_json to_json(const CondenseReport& report) {
  ordered_json j;
  j["input_count"] = report.input_count;
  j["kept_count"] = report.kept.size();
  j["rejected_count"] = report.rejected.size();
  j["kept"] = report.kept;
  ordered_json rejected = ordered_json::object();
  for (const auto& [id, stage] : report.rejected) rejected[id] = to_string(stage);
  j["rejected"] = std::move(rejected);
  ordered_json by_stage = {{"LANGUAGE", 0}, {"DURATION", 0}, {"OCCURRENCE", 0}};
  for (const auto& [id, stage] : report.rejected) {
    by_stage[std::string(to_string(stage))] = by_stage[std::string(to_string(stage))].get<int>() + 1;
  }
  j["rejected_by_stage"] = std::move(by_stage);
  j["qualification_counts"] = report.qualification_counts;
  j["relabeled_windows"] = report.relabeled_windows;
  return j;
}

LanguageSplit language_filter(std::span<const ClipRecord> clips,
                              std::string_view target) {
  LanguageSplit split;
  for (const ClipRecord& clip : clips) {
    (language_matches(clip, target) ? split.kept : split.rejected).push_back(clip);
  }
  return split;
}

Polarity polarity_of(std::string_view category, const PolarityMap& map) {
  auto it = map.find(category);
  if (it == map.end()) {
    throw ConfigError("no polarity configured for category '" + std::string(category) + "'");
  }
  return it->second;
}

ClipRecord ser_consistency_filter(const ClipRecord& clip,
                                  const CondenseConfig& cfg) {
  ClipRecord out = clip;
  for (EmotionWindow& w : out.windows) {
    if (!w.dims || w.category == kNeutral) continue;
    const Polarity p = polarity_of(w.category, cfg.polarity_map);
    if (!cfg.valence_range(p).contains(w.dims->valence)) {
      w.category = std::string(kNeutral);
    }
  }
  return out;
}

OccurrenceResult emotion_occurrence_filter(const ClipRecord& clip,
                                           const CondenseConfig& cfg) {
  OccurrenceResult result;
  for (const auto& [category, min_count] : cfg.min_counts) {
    if (min_count <= 0) continue;
    int count = 0;
    for (const EmotionWindow& w : clip.windows) count += (w.category == category);
    if (count >= min_count) result.qualifying.insert(category);
  }
  result.pass = !result.qualifying.empty();
  return result;
}

CondenseResult condense_corpus(std::span<const ClipRecord> clips,
                               const CondenseConfig& cfg) {
  cfg.validate();
  CondenseResult result;
  CondenseReport& report = result.report;
  report.input_count = clips.size();
  for (const auto& [category, n] : cfg.min_counts) {
    if (n > 0) report.qualification_counts[category] = 0;
  }

  for (const ClipRecord& clip : clips) {
    if (!language_matches(clip, cfg.target_language)) {
      report.rejected[clip.clip_id] = RejectionStage::kLanguage;
      continue;
    }
    if (!duration_in_range(clip, cfg)) {
      report.rejected[clip.clip_id] = RejectionStage::kDuration;
      continue;
    }
    ClipRecord filtered = ser_consistency_filter(clip, cfg);
    int relabeled = 0;
    for (std::size_t i = 0; i < clip.windows.size(); ++i) {
      relabeled += clip.windows[i].category != filtered.windows[i].category;
    }
    report.relabeled_windows[clip.clip_id] = relabeled;

    OccurrenceResult occurrence = emotion_occurrence_filter(filtered, cfg);
    if (!occurrence.pass) {
      report.rejected[clip.clip_id] = RejectionStage::kOccurrence;
      continue;
    }
    for (const std::string& c : occurrence.qualifying) ++report.qualification_counts[c];
    report.kept.push_back(clip.clip_id);
    result.selected.push_back(std::move(filtered));
  }
  return result;
}

}  // namespace cpqa
