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

#include "cpqa/eval_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {

using nlohmann::json;
using nlohmann::ordered_json;

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ConfigError("label set is empty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const std::string& l = labels_[i];
    if (text::trim(l).empty() || l != text::to_lower(l)) {
      throw ConfigError("labels must be non-empty lowercase: '" + l + "'");
    }
    if (std::find(labels_.begin(), labels_.begin() + i, l) != labels_.begin() + i) {
      throw ConfigError("duplicate label '" + l + "'");
    }
  }
}

bool LabelSet::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

ordered_json to_json(const EvalRecord& r) {
  ordered_json j;
  j["question_id"] = r.question_id;
  j["answer"] = r.answer_text;
  if (r.reference_label) j["reference_label"] = *r.reference_label;
  if (r.estimated_label) j["estimated_label"] = *r.estimated_label;
  if (r.judge_score) j["judge_score"] = *r.judge_score;
  return j;
}

EvalRecord eval_record_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("eval record is not a JSON object");
  auto optional_string = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
    return text::to_lower(text::trim(it->get<std::string>()));
  };
  EvalRecord r;
  auto qid = j.find("question_id");
  if (qid == j.end()) throw ConfigError("missing field 'question_id'");
  r.question_id = qid->is_string() ? qid->get<std::string>() : qid->dump();
  auto answer = j.find("answer");
  if (answer == j.end() || !answer->is_string()) {
    throw ConfigError("missing string field 'answer'");
  }
  r.answer_text = answer->get<std::string>();
  r.reference_label = optional_string("reference_label");
  r.estimated_label = optional_string("estimated_label");
  auto score = j.find("judge_score");
  if (score != j.end() && !score->is_null()) {
    if (!score->is_number_integer() || score->get<int>() < 0 || score->get<int>() > 5) {
      throw ConfigError("field 'judge_score' must be an integer in 0..5");
    }
    r.judge_score = score->get<int>();
  }
  return r;
}

std::optional<std::string> keyword_match(std::string_view answer,
                                         const LabelSet& labels) {
  for (const std::string& label : labels.labels()) {
    if (text::contains_whole_word(answer, label)) return label;
  }
  return std::nullopt;
}

double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dimension() != v.dimension() || u.dimension() == 0) {
    throw InvalidArgument("cosine: dimension mismatch");
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    dot += u.values[i] * v.values[i];
    uu += u.values[i] * u.values[i];
    vv += v.values[i] * v.values[i];
  }
  if (uu == 0.0 || vv == 0.0) throw InvalidArgument("cosine: zero vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

LabelEstimator::LabelEstimator(LabelSet labels, EmbedFn embed)
    : labels_(std::move(labels)), embed_(std::move(embed)) {}

LabelEstimate LabelEstimator::estimate(std::string_view answer) {
  if (text::trim(answer).empty()) throw InvalidArgument("answer is empty");
  if (auto hit = keyword_match(answer, labels_)) {
    return {*hit, EstimateMethod::kKeyword};
  }
  if (label_embeddings_.empty()) {
    std::vector<EmbeddingVector> computed;
    computed.reserve(labels_.size());
    for (const std::string& label : labels_.labels()) computed.push_back(embed_(label));
    label_embeddings_ = std::move(computed);
  }
  const EmbeddingVector answer_embedding = embed_(answer);
  std::size_t best = 0;
  double best_score = cosine(label_embeddings_[0], answer_embedding);
  for (std::size_t i = 1; i < label_embeddings_.size(); ++i) {
    const double s = cosine(label_embeddings_[i], answer_embedding);
    if (s > best_score) {
      best = i;
      best_score = s;
    }
  }
  return {labels_.labels()[best], EstimateMethod::kSemantic};
}

LabelEstimate estimate_label(std::string_view answer, const LabelSet& labels,
                             const EmbedFn& embed) {
  return LabelEstimator(labels, embed).estimate(answer);
}

namespace {

void require_labels(std::span<const EvalRecord> records) {
  if (records.empty()) throw InvalidArgument("no records to score");
  for (const EvalRecord& r : records) {
    if (!r.reference_label || !r.estimated_label) {
      throw InvalidArgument("record '" + r.question_id + "' lacks a reference or estimated label");
    }
  }
}

}  // namespace

double weighted_accuracy(std::span<const EvalRecord> records) {
  require_labels(records);
  const auto correct = std::count_if(records.begin(), records.end(), [](const EvalRecord& r) {
    return *r.reference_label == *r.estimated_label;
  });
  return static_cast<double>(correct) / static_cast<double>(records.size());
}

double weighted_f1(std::span<const EvalRecord> records) {
  require_labels(records);
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0, support = 0;
  };
  std::map<std::string, Counts> classes;
  for (const EvalRecord& r : records) {
    const std::string& ref = *r.reference_label;
    const std::string& est = *r.estimated_label;
    ++classes[ref].support;
    if (ref == est) {
      ++classes[ref].tp;
    } else {
      ++classes[ref].fn;
      ++classes[est].fp;
    }
  }
  const double n = static_cast<double>(records.size());
  double total = 0.0;
  for (const auto& [label, c] : classes) {
    if (c.support == 0) continue;
    const double p = c.tp + c.fp ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
    const double r = c.tp + c.fn ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
    const double f1 = p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
    total += static_cast<double>(c.support) * f1;
  }
  return total / n;
}

double rescale_judge_score(int score) {
  if (score < 0 || score > 5) {
    throw InvalidArgument("judge score " + std::to_string(score) + " outside 0..5");
  }
  return score * 20.0;
}

std::optional<double> ScoreBin::correct_ratio() const {
  if (count == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(count);
}

ordered_json to_json(const JudgeCorrelationReport& report) {
  ordered_json bins = ordered_json::array();
  for (std::size_t s = 0; s < report.bins.size(); ++s) {
    const ScoreBin& b = report.bins[s];
    ordered_json bj;
    bj["score"] = s;
    bj["rescaled"] = rescale_judge_score(static_cast<int>(s));
    bj["count"] = b.count;
    bj["correct"] = b.correct;
    bj["incorrect"] = b.incorrect;
    if (auto ratio = b.correct_ratio()) {
      bj["correct_ratio"] = *ratio;
    } else {
      bj["correct_ratio"] = nullptr;
    }
    bins.push_back(std::move(bj));
  }
  ordered_json j;
  j["total"] = report.total;
  if (report.mean_rescaled_score) {
    j["mean_rescaled_score"] = *report.mean_rescaled_score;
  } else {
    j["mean_rescaled_score"] = nullptr;
  }
  j["bins"] = std::move(bins);
  return j;
}

JudgeCorrelationReport judge_correlation(std::span<const EvalRecord> records) {
  JudgeCorrelationReport report;
  double rescaled_sum = 0.0;
  for (const EvalRecord& r : records) {
    if (!r.judge_score || !r.reference_label || !r.estimated_label) continue;
    rescaled_sum += rescale_judge_score(*r.judge_score);
    ScoreBin& bin = report.bins[static_cast<std::size_t>(*r.judge_score)];
    ++bin.count;
    if (*r.reference_label == *r.estimated_label) {
      ++bin.correct;
    } else {
      ++bin.incorrect;
    }
    ++report.total;
  }
  if (report.total > 0) report.mean_rescaled_score = rescaled_sum / report.total;
  return report;
}

}  // namespace cpqa
