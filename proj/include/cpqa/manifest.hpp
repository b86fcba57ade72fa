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

#ifndef CPQA_MANIFEST_HPP_
#define CPQA_MANIFEST_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpqa/corpus.hpp"

// Line-delimited JSON manifests: one clip (or QA pair) per line.
namespace cpqa {

struct LineDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

template <typename Record>
struct LoadResult {
  std::vector<Record> records;
  std::vector<LineDiagnostic> diagnostics;
};

nlohmann::ordered_json clip_to_json(const ClipRecord& clip);
// Throws ConfigError naming the offending field.
ClipRecord clip_from_json(const nlohmann::json& j);

nlohmann::ordered_json qa_to_json(const QAPair& pair);
QAPair qa_from_json(const nlohmann::json& j);

// Unreadable file throws IoError. Malformed, invalid or duplicate lines are
// reported as diagnostics and skipped; blank lines are ignored.
LoadResult<ClipRecord> load_manifest(const std::filesystem::path& path,
                                     const ValidationOptions& options = {});
void write_manifest(std::span<const ClipRecord> records,
                    const std::filesystem::path& path);

LoadResult<QAPair> load_qa_manifest(const std::filesystem::path& path);
void write_qa_manifest(std::span<const QAPair> pairs,
                       const std::filesystem::path& path);

// Reads every non-blank line as JSON; bad lines become diagnostics.
LoadResult<nlohmann::json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(std::span<const nlohmann::ordered_json> rows,
                 const std::filesystem::path& path);

}  // namespace cpqa

#endif  // CPQA_MANIFEST_HPP_
