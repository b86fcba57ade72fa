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


#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <json.hpp>

#include "cpqa/alignment.hpp"
#include "cpqa/condense.hpp"
#include "cpqa/config.hpp"
#include "cpqa/corpus.hpp"
#include "cpqa/errors.hpp"
#include "cpqa/eval_metrics.hpp"
#include "cpqa/llm_gateway.hpp"
#include "cpqa/manifest.hpp"
#include "cpqa/promptgen.hpp"
#include "cpqa/qa_extract.hpp"

namespace py = pybind11;
using namespace cpqa;

namespace {

template <typename Json>
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_python(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).template cast<std::string>());
}

CondenseConfig condense_config(const py::object& cfg) {
  return cfg.is_none() ? CondenseConfig{} : condense_config_from_json(from_python(cfg));
}

ValidationRuleSet rules(const py::object& cfg) {
  return cfg.is_none() ? ValidationRuleSet{} : rule_set_from_json(from_python(cfg));
}

std::vector<EvalRecord> pairs_to_records(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EvalRecord> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back({.question_id = std::to_string(i), .answer_text = "",
                   .reference_label = pairs[i].first, .estimated_label = pairs[i].second});
  }
  return out;
}

EmbedFn python_embed(const py::object& embed) {
  if (embed.is_none()) {
    auto provider = std::make_shared<BigramEmbeddingProvider>();
    return [provider](std::string_view t) { return provider->embed(t); };
  }
  return [embed](std::string_view t) {
    py::gil_scoped_acquire gil;
    return EmbeddingVector{embed(std::string(t)).cast<std::vector<double>>()};
  };
}

}  // namespace

PYBIND11_MODULE(_cpqa, m) {
  m.doc() = "CPQA dataset factory and evaluation harness";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ConfigError>(m, "ConfigError", error);
  py::register_exception<IoError>(m, "IoError", error);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
  py::register_exception<ProviderError>(m, "ProviderError", error);

  py::enum_<Gender>(m, "Gender").value("MALE", Gender::kMale).value("FEMALE", Gender::kFemale);
  py::enum_<QuestionType>(m, "QuestionType")
      .value("C", QuestionType::kC)
      .value("CE", QuestionType::kCE)
      .value("CG", QuestionType::kCG)
      .value("PQA", QuestionType::kPQA)
      .value("UNTYPED", QuestionType::kUntyped);
  py::enum_<Provenance>(m, "Provenance")
      .value("GENERATED", Provenance::kGenerated)
      .value("HUMAN", Provenance::kHuman)
      .value("TEMPLATE", Provenance::kTemplate);

  py::class_<WordToken>(m, "WordToken")
      .def(py::init<>())
      .def(py::init([](std::string text, double start, double end) {
             return WordToken{std::move(text), start, end};
           }),
           py::arg("text"), py::arg("start"), py::arg("end"))
      .def_readwrite("text", &WordToken::text)
      .def_readwrite("start", &WordToken::start)
      .def_readwrite("end", &WordToken::end)
      .def_property_readonly("midpoint", &WordToken::midpoint)
      .def(py::self == py::self);

  py::class_<DimScores>(m, "DimScores")
      .def(py::init([](double a, double d, double v) { return DimScores{a, d, v}; }),
           py::arg("arousal"), py::arg("dominance"), py::arg("valence"))
      .def_readwrite("arousal", &DimScores::arousal)
      .def_readwrite("dominance", &DimScores::dominance)
      .def_readwrite("valence", &DimScores::valence)
      .def(py::self == py::self);

  py::class_<EmotionWindow>(m, "EmotionWindow")
      .def(py::init([](double start, double end, std::string category,
                       std::optional<DimScores> dims, std::optional<Gender> gender) {
             return EmotionWindow{start, end, std::move(category), dims, gender};
           }),
           py::arg("start"), py::arg("end"), py::arg("category") = std::string(kNeutral),
           py::arg("dims") = std::nullopt, py::arg("gender") = std::nullopt)
      .def_readwrite("start", &EmotionWindow::start)
      .def_readwrite("end", &EmotionWindow::end)
      .def_readwrite("category", &EmotionWindow::category)
      .def_readwrite("dims", &EmotionWindow::dims)
      .def_readwrite("gender", &EmotionWindow::gender)
      .def(py::self == py::self);

  py::class_<ClipRecord>(m, "ClipRecord")
      .def(py::init([](std::string id, std::string language, double duration,
                       std::vector<WordToken> words, std::vector<EmotionWindow> windows) {
             return ClipRecord{std::move(id), std::move(language), duration, std::move(words),
                               std::move(windows)};
           }),
           py::arg("clip_id"), py::arg("language"), py::arg("duration"),
           py::arg("words") = std::vector<WordToken>{},
           py::arg("windows") = std::vector<EmotionWindow>{})
      .def_readwrite("clip_id", &ClipRecord::clip_id)
      .def_readwrite("language", &ClipRecord::language)
      .def_readwrite("duration", &ClipRecord::duration)
      .def_readwrite("words", &ClipRecord::words)
      .def_readwrite("windows", &ClipRecord::windows)
      .def("to_dict", [](const ClipRecord& c) { return to_python(clip_to_json(c)); })
      .def_static("from_dict", [](const py::object& d) { return clip_from_json(from_python(d)); })
      .def(py::self == py::self);

  py::class_<QAPair>(m, "QAPair")
      .def(py::init([](std::string q, std::string a, QuestionType t, std::string clip,
                       Provenance p) {
             return QAPair{std::move(q), std::move(a), t, std::move(clip), p};
           }),
           py::arg("question"), py::arg("answer"), py::arg("qtype") = QuestionType::kUntyped,
           py::arg("clip_id") = "", py::arg("provenance") = Provenance::kGenerated)
      .def_readwrite("question", &QAPair::question)
      .def_readwrite("answer", &QAPair::answer)
      .def_readwrite("qtype", &QAPair::qtype)
      .def_readwrite("clip_id", &QAPair::clip_id)
      .def_readwrite("provenance", &QAPair::provenance)
      .def(py::self == py::self);

  py::class_<AlignedWord>(m, "AlignedWord")
      .def_readonly("word", &AlignedWord::word)
      .def_readonly("category", &AlignedWord::category)
      .def_readonly("dims", &AlignedWord::dims)
      .def_readonly("gender", &AlignedWord::gender);

  m.def("validate_clip", [](const ClipRecord& c) {
    std::vector<std::string> codes;
    for (const Violation& v : validate_clip(c).violations) codes.emplace_back(code_name(v.code));
    return codes;
  }, "Violated invariant codes; empty when the clip is valid.");

  m.def("load_manifest", [](const std::filesystem::path& p) {
    auto r = load_manifest(p);
    std::vector<std::pair<std::size_t, std::string>> diags;
    for (const LineDiagnostic& d : r.diagnostics) diags.emplace_back(d.line, d.reason);
    return py::make_tuple(r.records, diags);
  }, "Returns (clips, [(line, reason), ...]).");
  m.def("write_manifest", [](const std::vector<ClipRecord>& clips, const std::filesystem::path& p) {
    write_manifest(clips, p);
  });
  m.def("load_qa_manifest", [](const std::filesystem::path& p) { return load_qa_manifest(p).records; });
  m.def("write_qa_manifest", [](const std::vector<QAPair>& pairs, const std::filesystem::path& p) {
    write_qa_manifest(pairs, p);
  });

  m.def("align_words", [](const std::vector<WordToken>& words,
                          const std::vector<EmotionWindow>& windows) {
    return align_words(words, windows);
  });

  m.def("default_condense_config", [] { return to_python(to_json(CondenseConfig{})); });
  m.def("condense_corpus", [](const std::vector<ClipRecord>& clips, const py::object& cfg) {
    const CondenseResult r = condense_corpus(clips, condense_config(cfg));
    return py::make_tuple(r.selected, to_python(to_json(r.report)));
  }, py::arg("clips"), py::arg("config") = py::none(),
     "Returns (selected clips, report dict). `config` overrides defaults key by key.");

  m.def("build_qa_generation_prompt", [](const ClipRecord& clip, const std::string& mode) {
    return build_qa_generation_prompt(clip, align_words(clip.words, clip.windows),
                                      parse_generation_mode(mode));
  }, py::arg("clip"), py::arg("mode") = "cpqa");
  m.def("format_emotion_labels", [](const std::vector<EmotionWindow>& windows) {
    return format_emotion_labels(windows);
  });
  m.def("augment_question_with_metadata", [](const std::string& q,
                                             const std::vector<EmotionWindow>& windows) {
    return augment_question_with_metadata(q, windows);
  });
  m.def("template_checksum", &template_checksum);

  m.def("parse_qa_pairs", [](const std::string& raw, const std::string& clip_id) {
    const ParseResult r = parse_qa_pairs(raw, clip_id);
    std::vector<std::pair<std::size_t, std::string>> diags;
    for (const ParseDiagnostic& d : r.diagnostics) diags.emplace_back(d.line, d.code);
    return py::make_tuple(r.pairs, diags);
  }, py::arg("raw"), py::arg("clip_id") = "");
  m.def("validate_qa", [](const QAPair& pair, const py::object& cfg) {
    std::vector<std::string> reasons;
    for (const RejectReason& r : validate_qa(pair, rules(cfg)).reasons) reasons.push_back(r.to_string());
    return reasons;
  }, py::arg("pair"), py::arg("rules") = py::none(), "Reject reasons; empty when accepted.");

  m.def("bigram_embed", [](const std::string& text) {
    return BigramEmbeddingProvider().embed(text).values;
  });
  m.def("estimate_label", [](const std::string& answer, std::vector<std::string> labels,
                             const py::object& embed) {
    return estimate_label(answer, LabelSet(std::move(labels)), python_embed(embed)).label;
  }, py::arg("answer"), py::arg("labels"), py::arg("embed") = py::none(),
     "Keyword match, else cosine argmax with `embed` (default: bigram test embedding).");
  m.def("weighted_accuracy", [](const std::vector<std::pair<std::string, std::string>>& pairs) {
    return weighted_accuracy(pairs_to_records(pairs));
  }, "Takes [(reference, estimate), ...].");
  m.def("weighted_f1", [](const std::vector<std::pair<std::string, std::string>>& pairs) {
    return weighted_f1(pairs_to_records(pairs));
  }, "Takes [(reference, estimate), ...].");
  m.def("rescale_judge_score", &rescale_judge_score);
  m.def("judge_correlation", [](const std::vector<std::tuple<std::string, std::string, int>>& rows) {
    std::vector<EvalRecord> records;
    for (const auto& [ref, est, score] : rows) {
      records.push_back({.question_id = std::to_string(records.size()), .answer_text = "",
                         .reference_label = ref, .estimated_label = est, .judge_score = score});
    }
    return to_python(to_json(judge_correlation(records)));
  }, "Takes [(reference, estimate, judge_score), ...].");
}
