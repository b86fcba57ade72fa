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

#include "cpqa/manifest.hpp"

#include <fstream>
#include <set>
#include <string>

#include "cpqa/errors.hpp"
#include "cpqa/text.hpp"

namespace cpqa {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& j, const char* field) {
  if (!j.is_object()) throw ConfigError("record is not a JSON object");
  auto it = j.find(field);
  if (it == j.end()) throw ConfigError(std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_string()) throw ConfigError(std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

double require_number(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number()) throw ConfigError(std::string("field '") + field + "' must be a number");
  return v.get<double>();
}

const json& require_array(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_array()) throw ConfigError(std::string("field '") + field + "' must be an array");
  return v;
}

bool present(const json& j, const char* field) {
  auto it = j.find(field);
  return it != j.end() && !it->is_null();
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

ordered_json clip_to_json(const ClipRecord& clip) {
  ordered_json j;
  j["clip_id"] = clip.clip_id;
  j["language"] = clip.language;
  j["duration"] = clip.duration;
  ordered_json words = ordered_json::array();
  for (const WordToken& w : clip.words) {
    words.push_back({{"text", w.text}, {"start", w.start}, {"end", w.end}});
  }
  j["words"] = std::move(words);
  ordered_json windows = ordered_json::array();
  for (const EmotionWindow& win : clip.windows) {
    ordered_json wj;
    wj["start"] = win.start;
    wj["end"] = win.end;
    wj["predict_emo2vec"] = win.category;
    if (win.dims) {
      wj["predict_dim"] = {win.dims->arousal, win.dims->dominance, win.dims->valence};
    }
    if (win.gender) wj["gender"] = to_string(*win.gender);
    windows.push_back(std::move(wj));
  }
  j["windows"] = std::move(windows);
  return j;
}

ClipRecord clip_from_json(const json& j) {
  ClipRecord clip;
  clip.clip_id = require_string(j, "clip_id");
  clip.language = require_string(j, "language");
  clip.duration = require_number(j, "duration");
  for (const json& wj : require_array(j, "words")) {
    WordToken w;
    w.text = require_string(wj, "text");
    w.start = require_number(wj, "start");
    w.end = require_number(wj, "end");
    clip.words.push_back(std::move(w));
  }
  for (const json& wj : require_array(j, "windows")) {
    EmotionWindow win;
    win.start = require_number(wj, "start");
    win.end = require_number(wj, "end");
    win.category = text::to_lower(require_string(wj, "predict_emo2vec"));
    if (present(wj, "predict_dim")) {
      const json& d = wj["predict_dim"];
      if (!d.is_array() || d.size() != 3 || !d[0].is_number() ||
          !d[1].is_number() || !d[2].is_number()) {
        throw ConfigError("field 'predict_dim' must be 3 numbers [arousal, dominance, valence]");
      }
      win.dims = DimScores{d[0].get<double>(), d[1].get<double>(), d[2].get<double>()};
    }
    if (present(wj, "gender")) {
      const std::string g = require_string(wj, "gender");
      win.gender = parse_gender(g);
      if (!win.gender) throw ConfigError("field 'gender' has unknown value '" + g + "'");
    }
    clip.windows.push_back(std::move(win));
  }
  return clip;
}

ordered_json qa_to_json(const QAPair& pair) {
  ordered_json j;
  j["question"] = pair.question;
  j["answer"] = pair.answer;
  j["qtype"] = to_string(pair.qtype);
  j["clip_id"] = pair.clip_id;
  j["provenance"] = to_string(pair.provenance);
  return j;
}

QAPair qa_from_json(const json& j) {
  QAPair pair;
  pair.question = require_string(j, "question");
  pair.answer = require_string(j, "answer");
  if (text::trim(pair.question).empty()) throw ConfigError("field 'question' is empty");
  if (text::trim(pair.answer).empty()) throw ConfigError("field 'answer' is empty");
  const std::string qtype = require_string(j, "qtype");
  auto t = parse_question_type(qtype);
  if (!t) throw ConfigError("field 'qtype' has unknown value '" + qtype + "'");
  pair.qtype = *t;
  pair.clip_id = require_string(j, "clip_id");
  const std::string prov = require_string(j, "provenance");
  auto p = parse_provenance(prov);
  if (!p) throw ConfigError("field 'provenance' has unknown value '" + prov + "'");
  pair.provenance = *p;
  return pair;
}

namespace {

// Calls `handle(line_no, parsed)` for every non-blank line; JSON syntax
// errors and ConfigErrors thrown by the handler become diagnostics.
template <typename Record, typename Handler>
LoadResult<Record> load_lines(const std::filesystem::path& path,
                              Handler handle) {
  std::ifstream in = open_for_read(path);
  LoadResult<Record> result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      handle(line_no, json::parse(line), result);
    } catch (const json::exception& e) {
      result.diagnostics.push_back({line_no, std::string("invalid JSON: ") + e.what()});
    } catch (const ConfigError& e) {
      result.diagnostics.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw IoError("read failed for " + path.string());
  return result;
}

}  // namespace

LoadResult<json> read_jsonl(const std::filesystem::path& path) {
  return load_lines<json>(path, [](std::size_t, json row, LoadResult<json>& r) {
    r.records.push_back(std::move(row));
  });
}

void write_jsonl(std::span<const ordered_json> rows,
                 const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (const ordered_json& row : rows) out << row.dump() << '\n';
  finish_write(out, path);
}

LoadResult<ClipRecord> load_manifest(const std::filesystem::path& path,
                                     const ValidationOptions& options) {
  std::set<std::string> seen;
  return load_lines<ClipRecord>(
      path, [&](std::size_t line_no, const json& row, LoadResult<ClipRecord>& r) {
        ClipRecord clip = clip_from_json(row);
        ValidationReport report = validate_clip(clip, options);
        if (!report.ok()) {
          r.diagnostics.push_back({line_no, "invalid clip '" + clip.clip_id + "': " + report.summary()});
        } else if (!seen.insert(clip.clip_id).second) {
          r.diagnostics.push_back({line_no, "duplicate clip_id '" + clip.clip_id + "'"});
        } else {
          r.records.push_back(std::move(clip));
        }
      });
}

void write_manifest(std::span<const ClipRecord> records,
                    const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (const ClipRecord& clip : records) out << clip_to_json(clip).dump() << '\n';
  finish_write(out, path);
}

LoadResult<QAPair> load_qa_manifest(const std::filesystem::path& path) {
  return load_lines<QAPair>(
      path, [](std::size_t, const json& row, LoadResult<QAPair>& r) {
        r.records.push_back(qa_from_json(row));
      });
}

void write_qa_manifest(std::span<const QAPair> pairs,
                       const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (const QAPair& p : pairs) out << qa_to_json(p).dump() << '\n';
  finish_write(out, path);
}

}  // namespace cpqa
