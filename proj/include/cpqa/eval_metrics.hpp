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

#ifndef CPQA_EVAL_METRICS_HPP_
#define CPQA_EVAL_METRICS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpqa/llm_gateway.hpp"

namespace cpqa {

// Ordered, distinct, lowercase class labels. Order decides which label wins
// when an answer mentions several.
class LabelSet {
 public:
  // Throws ConfigError when empty, duplicated or not lowercase.
  explicit LabelSet(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool contains(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

struct EvalRecord {
  std::string question_id;
  std::string answer_text;
  std::optional<std::string> reference_label;
  std::optional<std::string> estimated_label;
  std::optional<int> judge_score;  // 0..5

  bool operator==(const EvalRecord&) const = default;
};

nlohmann::ordered_json to_json(const EvalRecord& r);
// Fields: question_id, answer, reference_label, estimated_label,
// judge_score. Throws ConfigError.
EvalRecord eval_record_from_json(const nlohmann::json& j);

// First label (in LabelSet order) that appears as a whole word in the
// answer, case-insensitively.
std::optional<std::string> keyword_match(std::string_view answer,
                                         const LabelSet& labels);

// Throws InvalidArgument on dimension mismatch or a zero vector.
double cosine(const EmbeddingVector& u, const EmbeddingVector& v);

enum class EstimateMethod { kKeyword, kSemantic };

struct LabelEstimate {
  std::string label;
  EstimateMethod method = EstimateMethod::kKeyword;
};

// Keyword match first; otherwise the label whose embedding has the highest
// cosine with the answer's, ties going to the earlier label. Label
// embeddings are computed on first semantic use and cached. The embedding
// function is never called when a keyword matches.
class LabelEstimator {
 public:
  LabelEstimator(LabelSet labels, EmbedFn embed);

  LabelEstimate estimate(std::string_view answer);
  const LabelSet& labels() const { return labels_; }

 private:
  LabelSet labels_;
  EmbedFn embed_;
  std::vector<EmbeddingVector> label_embeddings_;
};

// Throws InvalidArgument for an empty answer; embed failures propagate.
LabelEstimate estimate_label(std::string_view answer, const LabelSet& labels,
                             const EmbedFn& embed);

// Overall accuracy: matching records / all records. Throws InvalidArgument
// for empty input or records missing either label.
double weighted_accuracy(std::span<const EvalRecord> records);

// Support-weighted mean of per-class F1 over the union of reference and
// predicted classes. Same preconditions as weighted_accuracy.
double weighted_f1(std::span<const EvalRecord> records);

// 0..5 -> 0..100. Throws InvalidArgument outside 0..5.
double rescale_judge_score(int score);

struct ScoreBin {
  std::size_t count = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;

  std::optional<double> correct_ratio() const;
};

struct JudgeCorrelationReport {
  std::array<ScoreBin, 6> bins{};
  std::size_t total = 0;
  std::optional<double> mean_rescaled_score;
};

nlohmann::ordered_json to_json(const JudgeCorrelationReport& report);

// Bins records that carry a judge score and both labels; others are
// skipped.
JudgeCorrelationReport judge_correlation(std::span<const EvalRecord> records);

}  // namespace cpqa

#endif  // CPQA_EVAL_METRICS_HPP_
