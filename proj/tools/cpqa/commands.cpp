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

#include "cpqa/commands.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpqa/alignment.hpp"
#include "cpqa/checksum.hpp"
#include "cpqa/condense.hpp"
#include "cpqa/config.hpp"
#include "cpqa/errors.hpp"
#include "cpqa/eval_metrics.hpp"
#include "cpqa/llm_gateway.hpp"
#include "cpqa/manifest.hpp"
#include "cpqa/promptgen.hpp"
#include "cpqa/qa_extract.hpp"

namespace cpqa::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

class ProviderExhausted : public Error {
 public:
  using Error::Error;
};

struct RunContext {
  std::string subcommand;
  std::vector<std::string> argv;
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::optional<fs::path> config_path;
  std::string chat_provider = "none";
  std::string embedding_provider = "none";
  fs::path manifest_path;
  Clock::time_point started = Clock::now();
  std::string started_utc;
  ordered_json timings = ordered_json::object();
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Records the wall time of one pipeline stage in the run manifest.
class StageTimer {
 public:
  StageTimer(RunContext& ctx, std::string name)
      : ctx_(ctx), name_(std::move(name)), start_(Clock::now()) {}
  ~StageTimer() { ctx_.timings[name_] = seconds_since(start_); }

 private:
  RunContext& ctx_;
  std::string name_;
  Clock::time_point start_;
};

ordered_json file_entry(const fs::path& p) {
  ordered_json j;
  j["path"] = p.string();
  std::error_code ec;
  if (fs::is_regular_file(p, ec)) {
    j["sha256"] = sha256_file(p);
  } else {
    j["sha256"] = nullptr;
  }
  return j;
}

void write_run_manifest(const RunContext& ctx, int exit_code,
                        const std::string& error, std::ostream& err) {
  if (ctx.manifest_path.empty()) return;
  ordered_json j;
  j["tool"] = "cpqa";
  j["version"] = kVersion;
  j["subcommand"] = ctx.subcommand;
  j["argv"] = ctx.argv;
  ordered_json inputs = ordered_json::array();
  for (const fs::path& p : ctx.inputs) inputs.push_back(file_entry(p));
  j["inputs"] = std::move(inputs);
  ordered_json outputs = ordered_json::array();
  for (const fs::path& p : ctx.outputs) outputs.push_back(file_entry(p));
  j["outputs"] = std::move(outputs);
  if (ctx.config_path) {
    j["config"] = file_entry(*ctx.config_path);
  } else {
    j["config"] = nullptr;
  }
  j["template_checksum"] = template_checksum();
  j["chat_provider"] = ctx.chat_provider;
  j["embedding_provider"] = ctx.embedding_provider;
  j["started_at"] = ctx.started_utc;
  j["elapsed_seconds"] = seconds_since(ctx.started);
  j["timings"] = ctx.timings;
  j["exit_code"] = exit_code;
  if (!error.empty()) j["error"] = error;
  std::ofstream out(ctx.manifest_path);
  out << j.dump(2) << '\n';
  if (!out) err << "cpqa: warning: could not write run manifest " << ctx.manifest_path << '\n';
}

void write_json(const ordered_json& j, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

void require_file(const fs::path& p) {
  std::error_code ec;
  if (!fs::is_regular_file(p, ec)) throw IoError("input not found: " + p.string());
}

fs::path derived_path(const fs::path& primary, const std::string& suffix) {
  return fs::path(primary.string() + suffix);
}

void report_diagnostics(const std::vector<LineDiagnostic>& diags,
                        const fs::path& source, std::ostream& err) {
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < diags.size() && i < kShown; ++i) {
    err << source.string() << ":" << diags[i].line << ": " << diags[i].reason << '\n';
  }
  if (diags.size() > kShown) {
    err << source.string() << ": ... " << diags.size() - kShown << " more diagnostics\n";
  }
}

PipelineConfig load_config(const std::optional<fs::path>& path, RunContext& ctx) {
  if (!path) return PipelineConfig{};
  ctx.config_path = *path;
  ctx.inputs.push_back(*path);
  return load_pipeline_config(*path);
}

std::vector<ClipRecord> load_clips(const fs::path& path, RunContext& ctx,
                                   std::ostream& err) {
  require_file(path);
  ctx.inputs.push_back(path);
  LoadResult<ClipRecord> loaded = load_manifest(path);
  report_diagnostics(loaded.diagnostics, path, err);
  return std::move(loaded.records);
}

std::vector<EvalRecord> load_eval_records(const fs::path& path, RunContext& ctx) {
  require_file(path);
  ctx.inputs.push_back(path);
  LoadResult<json> rows = read_jsonl(path);
  if (!rows.diagnostics.empty()) {
    throw ConfigError(path.string() + ":" + std::to_string(rows.diagnostics[0].line) +
                      ": " + rows.diagnostics[0].reason);
  }
  std::vector<EvalRecord> records;
  records.reserve(rows.records.size());
  for (std::size_t i = 0; i < rows.records.size(); ++i) {
    try {
      records.push_back(eval_record_from_json(rows.records[i]));
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ": record " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Subcommands

struct IngestArgs {
  fs::path in, out;
  std::optional<fs::path> diagnostics;
};

void cmd_ingest(const IngestArgs& a, RunContext& ctx, std::ostream& out, std::ostream& err) {
  std::vector<ClipRecord> clips;
  LoadResult<ClipRecord> loaded;
  {
    StageTimer t(ctx, "load");
    require_file(a.in);
    ctx.inputs.push_back(a.in);
    loaded = load_manifest(a.in);
  }
  report_diagnostics(loaded.diagnostics, a.in, err);
  write_manifest(loaded.records, a.out);
  ctx.outputs.push_back(a.out);
  if (a.diagnostics) {
    std::vector<ordered_json> rows;
    for (const LineDiagnostic& d : loaded.diagnostics) {
      rows.push_back({{"line", d.line}, {"reason", d.reason}});
    }
    write_jsonl(rows, *a.diagnostics);
    ctx.outputs.push_back(*a.diagnostics);
  }
  out << "ingest: " << loaded.records.size() << " valid clips, "
      << loaded.diagnostics.size() << " rejected lines\n";
}

struct CondenseArgs {
  std::optional<fs::path> config;
  fs::path in, out, report;
};

void cmd_condense(const CondenseArgs& a, RunContext& ctx, std::ostream& out, std::ostream& err) {
  const PipelineConfig cfg = load_config(a.config, ctx);
  const std::vector<ClipRecord> clips = load_clips(a.in, ctx, err);
  CondenseResult result;
  {
    StageTimer t(ctx, "condense");
    result = condense_corpus(clips, cfg.condense);
  }
  write_manifest(result.selected, a.out);
  ordered_json report = to_json(result.report);
  report["config"] = to_json(cfg.condense);
  write_json(report, a.report);
  ctx.outputs.push_back(a.out);
  ctx.outputs.push_back(a.report);

  const json& by_stage = report["rejected_by_stage"];
  out << "condense: " << result.report.input_count << " clips in, "
      << result.selected.size() << " selected; rejected LANGUAGE="
      << by_stage["LANGUAGE"] << " DURATION=" << by_stage["DURATION"]
      << " OCCURRENCE=" << by_stage["OCCURRENCE"] << '\n';
}

struct GenqaArgs {
  std::optional<fs::path> config;
  fs::path clips, out, quarantine;
  std::optional<fs::path> yield_report;
  std::string mode = "cpqa";
  std::optional<int> parallelism;
};

void cmd_genqa(const GenqaArgs& a, RunContext& ctx, std::ostream& out, std::ostream& err) {
  const PipelineConfig cfg = load_config(a.config, ctx);
  const GenerationMode mode = parse_generation_mode(a.mode);
  const int parallelism = a.parallelism.value_or(cfg.generation.parallelism);
  if (parallelism < 1) throw ConfigError("--parallelism must be at least 1");
  std::unique_ptr<ChatProvider> provider = make_chat_provider(cfg.chat);
  ctx.chat_provider = provider->identity();
  if (!cfg.chat.responses.empty()) ctx.inputs.push_back(cfg.chat.responses);

  const std::vector<ClipRecord> clips = load_clips(a.clips, ctx, err);
  std::vector<ChatRequest> requests;
  ordered_json skipped = ordered_json::array();
  {
    StageTimer t(ctx, "prompts");
    for (const ClipRecord& clip : clips) {
      if (clip.words.empty()) {
        skipped.push_back(clip.clip_id);
        continue;
      }
      const std::vector<AlignedWord> aligned = align_words(clip.words, clip.windows);
      requests.push_back({.prompt = build_qa_generation_prompt(clip, aligned, mode),
                          .temperature = cfg.generation.temperature,
                          .max_output_tokens = cfg.generation.max_output_tokens,
                          .request_id = clip.clip_id});
    }
  }
  err << "genqa: " << requests.size() << " requests, parallelism " << parallelism
      << ", mode " << to_string(mode) << '\n';

  std::map<std::string, BatchOutcome> outcomes;
  {
    StageTimer t(ctx, "generate");
    outcomes = batch_generate(*provider, requests, parallelism, cfg.generation.retry_policy());
  }

  std::vector<QAPair> accepted;
  std::vector<ordered_json> quarantined;
  std::map<std::string, int> rejected_by_reason;
  std::map<std::string, int> diagnostics_by_code;
  ordered_json failed = ordered_json::object();
  std::size_t parsed = 0;
  {
    StageTimer t(ctx, "extract");
    for (const ChatRequest& req : requests) {
      const BatchOutcome& outcome = outcomes.at(req.request_id);
      if (!outcome.ok()) {
        failed[req.request_id] = {{"error", outcome.error}, {"attempts", outcome.attempts}};
        continue;
      }
      ParseResult pr = parse_qa_pairs(*outcome.response, req.request_id);
      for (const ParseDiagnostic& d : pr.diagnostics) ++diagnostics_by_code[d.code];
      parsed += pr.pairs.size();
      for (QAPair& pair : pr.pairs) {
        const QaVerdict verdict = validate_qa(pair, cfg.validation);
        if (verdict.accepted()) {
          accepted.push_back(std::move(pair));
          continue;
        }
        ordered_json row = qa_to_json(pair);
        ordered_json reasons = ordered_json::array();
        for (const RejectReason& r : verdict.reasons) {
          reasons.push_back(r.to_string());
          ++rejected_by_reason[std::string(r.code())];
        }
        row["reasons"] = std::move(reasons);
        quarantined.push_back(std::move(row));
      }
    }
  }

  write_qa_manifest(accepted, a.out);
  write_jsonl(quarantined, a.quarantine);
  const fs::path yield_path = a.yield_report.value_or(derived_path(a.out, ".yield.json"));
  ordered_json yield;
  yield["mode"] = to_string(mode);
  yield["clips"] = clips.size();
  yield["skipped_clips"] = skipped;
  yield["requests"] = requests.size();
  yield["requests_failed"] = failed.size();
  yield["failed"] = failed;
  yield["parsed"] = parsed;
  yield["accepted"] = accepted.size();
  yield["quarantined"] = quarantined.size();
  yield["rejected_by_reason"] = rejected_by_reason;
  yield["parse_diagnostics"] = diagnostics_by_code;
  write_json(yield, yield_path);
  ctx.outputs.insert(ctx.outputs.end(), {a.out, a.quarantine, yield_path});

  out << "genqa: " << parsed << " pairs parsed, " << accepted.size() << " accepted, "
      << quarantined.size() << " quarantined, " << failed.size() << " requests failed\n";
  if (!failed.empty()) {
    throw ProviderExhausted(std::to_string(failed.size()) + " request(s) failed after retries");
  }
}

struct AugmentArgs {
  fs::path in, clips, out;
};

void cmd_augment(const AugmentArgs& a, RunContext& ctx, std::ostream& out, std::ostream& err) {
  require_file(a.in);
  ctx.inputs.push_back(a.in);
  LoadResult<QAPair> qa = load_qa_manifest(a.in);
  report_diagnostics(qa.diagnostics, a.in, err);
  const std::vector<ClipRecord> clips = load_clips(a.clips, ctx, err);
  std::map<std::string, const ClipRecord*> by_id;
  for (const ClipRecord& c : clips) by_id[c.clip_id] = &c;

  std::vector<QAPair> augmented;
  augmented.reserve(qa.records.size());
  for (const QAPair& pair : qa.records) {
    auto it = by_id.find(pair.clip_id);
    if (it == by_id.end()) {
      throw IoError("clip '" + pair.clip_id + "' referenced by " + a.in.string() +
                    " is not in " + a.clips.string());
    }
    QAPair p = pair;
    p.question = augment_question_with_metadata(pair.question, it->second->windows);
    augmented.push_back(std::move(p));
  }
  write_qa_manifest(augmented, a.out);
  ctx.outputs.push_back(a.out);
  out << "augment: " << augmented.size() << " questions rewritten\n";
}

struct EvaluateArgs {
  fs::path answers, labels, metrics;
  std::optional<fs::path> out;
};

void cmd_evaluate(const EvaluateArgs& a, RunContext& ctx, std::ostream& out, std::ostream&) {
  require_file(a.labels);
  ctx.inputs.push_back(a.labels);
  ctx.config_path = a.labels;
  const LabelConfig label_cfg = load_label_config(a.labels);
  std::vector<EvalRecord> records = load_eval_records(a.answers, ctx);
  std::unique_ptr<EmbeddingProvider> embedder = make_embedding_provider(label_cfg.embedding);
  ctx.embedding_provider = embedder->identity();

  for (const EvalRecord& r : records) {
    if (r.reference_label && !label_cfg.labels.contains(*r.reference_label)) {
      throw ConfigError("record '" + r.question_id + "': reference label '" +
                        *r.reference_label + "' is not in the label set");
    }
    if (r.answer_text.find_first_not_of(" \t\r\n") == std::string::npos) {
      throw ConfigError("record '" + r.question_id + "' has an empty answer");
    }
  }

  LabelEstimator estimator(label_cfg.labels, embedder->as_function());
  std::size_t keyword = 0, semantic = 0;
  {
    StageTimer t(ctx, "estimate");
    for (EvalRecord& r : records) {
      const LabelEstimate e = estimator.estimate(r.answer_text);
      r.estimated_label = e.label;
      (e.method == EstimateMethod::kKeyword ? keyword : semantic)++;
    }
  }

  std::vector<EvalRecord> labeled;
  for (const EvalRecord& r : records) {
    if (r.reference_label) labeled.push_back(r);
  }
  if (labeled.empty()) throw ConfigError("no records carry a reference_label");

  ordered_json per_class = ordered_json::object();
  for (const std::string& label : label_cfg.labels.labels()) {
    std::size_t support = 0, predicted = 0, correct = 0;
    for (const EvalRecord& r : labeled) {
      support += *r.reference_label == label;
      predicted += *r.estimated_label == label;
      correct += *r.reference_label == label && *r.estimated_label == label;
    }
    per_class[label] = {{"support", support}, {"predicted", predicted}, {"correct", correct}};
  }

  ordered_json metrics;
  metrics["task"] = label_cfg.task;
  metrics["label_order"] = label_cfg.labels.labels();
  metrics["embedding_provider"] = embedder->identity();
  metrics["records"] = records.size();
  metrics["scored_records"] = labeled.size();
  metrics["weighted_accuracy"] = weighted_accuracy(labeled);
  metrics["weighted_f1"] = weighted_f1(labeled);
  metrics["keyword_matches"] = keyword;
  metrics["semantic_matches"] = semantic;
  metrics["per_class"] = std::move(per_class);
  const JudgeCorrelationReport judge = judge_correlation(records);
  if (judge.mean_rescaled_score) {
    metrics["judge_mean_rescaled_score"] = *judge.mean_rescaled_score;
  }
  write_json(metrics, a.metrics);
  ctx.outputs.push_back(a.metrics);
  if (a.out) {
    std::vector<ordered_json> rows;
    for (const EvalRecord& r : records) rows.push_back(to_json(r));
    write_jsonl(rows, *a.out);
    ctx.outputs.push_back(*a.out);
  }
  out << "evaluate: " << labeled.size() << " scored, weighted accuracy "
      << metrics["weighted_accuracy"].get<double>() << ", weighted F1 "
      << metrics["weighted_f1"].get<double>() << " (" << keyword << " keyword, "
      << semantic << " semantic)\n";
}

struct CorrelateArgs {
  fs::path answers, report;
  std::optional<fs::path> labels;
};

void cmd_correlate(const CorrelateArgs& a, RunContext& ctx, std::ostream& out, std::ostream&) {
  std::vector<EvalRecord> records = load_eval_records(a.answers, ctx);
  std::size_t estimated = 0;
  if (a.labels) {
    require_file(*a.labels);
    ctx.inputs.push_back(*a.labels);
    ctx.config_path = *a.labels;
    const LabelConfig label_cfg = load_label_config(*a.labels);
    std::unique_ptr<EmbeddingProvider> embedder = make_embedding_provider(label_cfg.embedding);
    ctx.embedding_provider = embedder->identity();
    LabelEstimator estimator(label_cfg.labels, embedder->as_function());
    for (EvalRecord& r : records) {
      if (r.estimated_label || r.answer_text.find_first_not_of(" \t\r\n") == std::string::npos) {
        continue;
      }
      r.estimated_label = estimator.estimate(r.answer_text).label;
      ++estimated;
    }
  }
  const JudgeCorrelationReport report = judge_correlation(records);
  ordered_json j = to_json(report);
  j["records"] = records.size();
  j["skipped"] = records.size() - report.total;
  j["labels_estimated"] = estimated;
  write_json(j, a.report);
  ctx.outputs.push_back(a.report);

  out << "score  count  correct  incorrect  ratio\n";
  for (std::size_t s = 0; s < report.bins.size(); ++s) {
    const ScoreBin& b = report.bins[s];
    out << std::setw(5) << s << std::setw(7) << b.count << std::setw(9) << b.correct
        << std::setw(11) << b.incorrect << "  ";
    if (auto r = b.correct_ratio()) {
      out << std::fixed << std::setprecision(3) << *r << std::defaultfloat;
    } else {
      out << "-";
    }
    out << '\n';
  }
}

struct StatsArgs {
  std::optional<fs::path> qa, clips;
  fs::path report;
};

void cmd_stats(const StatsArgs& a, RunContext& ctx, std::ostream& out, std::ostream& err) {
  if (!a.qa && !a.clips) throw ConfigError("stats needs --qa or --clips");
  ordered_json report;
  if (a.qa) {
    require_file(*a.qa);
    ctx.inputs.push_back(*a.qa);
    LoadResult<QAPair> qa = load_qa_manifest(*a.qa);
    report_diagnostics(qa.diagnostics, *a.qa, err);
    std::map<std::string, std::size_t> by_type, by_provenance;
    for (auto t : {QuestionType::kC, QuestionType::kCE, QuestionType::kCG,
                   QuestionType::kPQA, QuestionType::kUntyped}) {
      by_type[std::string(to_string(t))] = 0;
    }
    std::set<std::string> clip_ids;
    for (const QAPair& p : qa.records) {
      ++by_type[std::string(to_string(p.qtype))];
      ++by_provenance[std::string(to_string(p.provenance))];
      clip_ids.insert(p.clip_id);
    }
    ordered_json types;
    for (const char* t : {"C", "CE", "CG", "PQA", "UNTYPED"}) types[t] = by_type[t];
    report["qa"] = {{"pairs", qa.records.size()},
                    {"clips", clip_ids.size()},
                    {"invalid_lines", qa.diagnostics.size()},
                    {"by_qtype", types},
                    {"by_provenance", by_provenance}};
    out << "qa pairs: " << qa.records.size() << " over " << clip_ids.size() << " clips\n";
    for (const char* t : {"C", "CE", "CG", "PQA", "UNTYPED"}) {
      out << "  " << t << ": " << by_type[t] << '\n';
    }
  }
  if (a.clips) {
    const std::vector<ClipRecord> clips = load_clips(*a.clips, ctx, err);
    double total = 0.0;
    std::map<std::string, std::size_t> languages, windows;
    for (const ClipRecord& c : clips) {
      total += c.duration;
      ++languages[c.language];
      for (const EmotionWindow& w : c.windows) ++windows[w.category];
    }
    report["clips"] = {{"clips", clips.size()},
                       {"total_duration", total},
                       {"mean_duration", clips.empty() ? 0.0 : total / clips.size()},
                       {"languages", languages},
                       {"windows_by_category", windows}};
    out << "clips: " << clips.size() << ", total duration " << total << " s\n";
  }
  write_json(report, a.report);
  ctx.outputs.push_back(a.report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contextual-paralinguistic QA dataset factory and evaluation harness", "cpqa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::optional<fs::path> run_manifest;
  auto add_manifest_option = [&](CLI::App* sub) {
    sub->add_option("--run-manifest", run_manifest,
                    "Where to write the run manifest (default: <primary output>.run.json)");
  };

  IngestArgs ingest;
  CLI::App* s_ingest = app.add_subcommand("ingest", "Validate a clip manifest and keep the valid records");
  s_ingest->add_option("--in", ingest.in, "Input clip manifest")->required();
  s_ingest->add_option("--out", ingest.out, "Output clip manifest")->required();
  s_ingest->add_option("--diagnostics", ingest.diagnostics, "Write per-line diagnostics (JSONL)");
  add_manifest_option(s_ingest);

  CondenseArgs condense;
  CLI::App* s_condense = app.add_subcommand("condense", "Select emotion-rich clips");
  s_condense->add_option("--config", condense.config, "Pipeline config file");
  s_condense->add_option("--in", condense.in, "Input clip manifest")->required();
  s_condense->add_option("--out", condense.out, "Selected clip manifest")->required();
  s_condense->add_option("--report", condense.report, "Selection report (JSON)")->required();
  add_manifest_option(s_condense);

  GenqaArgs genqa;
  CLI::App* s_genqa = app.add_subcommand("genqa", "Generate QA pairs with an LLM");
  s_genqa->add_option("--config", genqa.config, "Pipeline config file");
  s_genqa->add_option("--clips", genqa.clips, "Clip manifest")->required();
  s_genqa->add_option("--mode", genqa.mode, "cpqa | pqa-star")->check(CLI::IsMember({"cpqa", "pqa-star"}));
  s_genqa->add_option("--out", genqa.out, "Accepted QA manifest")->required();
  s_genqa->add_option("--quarantine", genqa.quarantine, "Rejected QA manifest")->required();
  s_genqa->add_option("--yield-report", genqa.yield_report, "Yield report (default: <out>.yield.json)");
  s_genqa->add_option("--parallelism", genqa.parallelism, "Requests in flight (overrides config)");
  add_manifest_option(s_genqa);

  AugmentArgs augment;
  CLI::App* s_augment = app.add_subcommand("augment", "Append emotion metadata instructions to questions");
  s_augment->add_option("--in", augment.in, "Input QA manifest")->required();
  s_augment->add_option("--clips", augment.clips, "Clip manifest with emotion windows")->required();
  s_augment->add_option("--out", augment.out, "Output QA manifest")->required();
  add_manifest_option(s_augment);

  EvaluateArgs evaluate;
  CLI::App* s_evaluate = app.add_subcommand("evaluate", "Estimated weighted accuracy and F1 of free-text answers");
  s_evaluate->add_option("--answers", evaluate.answers, "Answer manifest (JSONL)")->required();
  s_evaluate->add_option("--labels", evaluate.labels, "Label config (JSON)")->required();
  s_evaluate->add_option("--metrics", evaluate.metrics, "Metrics output (JSON)")->required();
  s_evaluate->add_option("--out", evaluate.out, "Answers annotated with estimated labels (JSONL)");
  add_manifest_option(s_evaluate);

  CorrelateArgs correlate;
  CLI::App* s_correlate = app.add_subcommand("correlate", "Judge score vs. correctness report");
  s_correlate->add_option("--answers", correlate.answers, "Answer manifest (JSONL)")->required();
  s_correlate->add_option("--report", correlate.report, "Report output (JSON)")->required();
  s_correlate->add_option("--labels", correlate.labels, "Label config, to estimate missing labels");
  add_manifest_option(s_correlate);

  StatsArgs stats;
  CLI::App* s_stats = app.add_subcommand("stats", "Counts for QA or clip manifests");
  s_stats->add_option("--qa", stats.qa, "QA manifest");
  s_stats->add_option("--clips", stats.clips, "Clip manifest");
  s_stats->add_option("--report", stats.report, "Report output (JSON)")->required();
  add_manifest_option(s_stats);

  if (args.size() > 1 && !args[1].empty() && args[1][0] != '-' &&
      app.get_subcommand_no_throw(args[1]) == nullptr) {
    err << "cpqa: unknown subcommand '" << args[1] << "'\n\n" << app.help();
    return kConfigError;
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cpqa: " << e.what() << "\n\n" << app.help();
    return kConfigError;
  }

  RunContext ctx;
  ctx.argv = args;
  ctx.started_utc = utc_now();
  CLI::App* chosen = app.get_subcommands().front();
  ctx.subcommand = chosen->get_name();
  const std::map<std::string, fs::path> primary = {
      {"ingest", ingest.out},   {"condense", condense.out}, {"genqa", genqa.out},
      {"augment", augment.out}, {"evaluate", evaluate.metrics},
      {"correlate", correlate.report}, {"stats", stats.report}};
  ctx.manifest_path = run_manifest.value_or(derived_path(primary.at(ctx.subcommand), ".run.json"));

  int code = kOk;
  std::string error;
  try {
    if (ctx.subcommand == "ingest") cmd_ingest(ingest, ctx, out, err);
    if (ctx.subcommand == "condense") cmd_condense(condense, ctx, out, err);
    if (ctx.subcommand == "genqa") cmd_genqa(genqa, ctx, out, err);
    if (ctx.subcommand == "augment") cmd_augment(augment, ctx, out, err);
    if (ctx.subcommand == "evaluate") cmd_evaluate(evaluate, ctx, out, err);
    if (ctx.subcommand == "correlate") cmd_correlate(correlate, ctx, out, err);
    if (ctx.subcommand == "stats") cmd_stats(stats, ctx, out, err);
  } catch (const ConfigError& e) {
    code = kConfigError;
    error = e.what();
  } catch (const IoError& e) {
    code = kIoError;
    error = e.what();
  } catch (const ProviderExhausted& e) {
    code = kProviderExhausted;
    error = e.what();
  } catch (const std::exception& e) {
    code = kInternalError;
    error = e.what();
  }
  if (code != kOk) err << "cpqa " << ctx.subcommand << ": " << error << '\n';
  write_run_manifest(ctx, code, error, err);
  return code;
}

}  // namespace cpqa::cli
