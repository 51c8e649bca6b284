#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "skig/core/types.hpp"

namespace skig::core {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const BenchmarkItem& item);
BenchmarkItem item_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Transcript& transcript);
Transcript transcript_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RunResult& result);
RunResult result_from_json(const nlohmann::json& j);

// One compact JSON object per line, UTF-8. Loaders reject records without the
// schema version field "v" and discard a partial (unterminated) trailing line.
std::string jsonl_line(const nlohmann::json& record);
std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

std::vector<BenchmarkItem> read_items(const std::filesystem::path& path);
void write_items(const std::filesystem::path& path, const std::vector<BenchmarkItem>& items);

}  // namespace skig::core
