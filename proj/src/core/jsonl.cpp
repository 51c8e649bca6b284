#include "skig/core/jsonl.hpp"

#include <fstream>

#include "skig/common.hpp"
#include "skig/util/fs.hpp"

namespace skig::core {

using nlohmann::json;

namespace {

void check_version(const json& j, const char* what) {
  if (!j.contains("v") || !j["v"].is_number_integer()) {
    fail(Errc::invalid_argument, std::string(what) + " record missing schema version 'v'");
  }
  if (j["v"].get<int>() != kSchemaVersion) {
    fail(Errc::invalid_argument,
         std::string(what) + " record has unsupported schema version " + j["v"].dump());
  }
}

std::string label_str(char label) { return std::string(1, label); }

char label_chr(const json& j, const char* field) {
  std::string s = j.at(field).get<std::string>();
  if (s.size() != 1) fail(Errc::invalid_argument, std::string(field) + " must be a single char");
  return s[0];
}

}  // namespace

json to_json(const BenchmarkItem& item) {
  json choices = json::array();
  for (const auto& c : item.choices) {
    choices.push_back({{"label", label_str(c.label)}, {"text", c.text}});
  }
  json j{
      {"v", kSchemaVersion},
      {"id", item.id},
      {"benchmark", benchmark_name(item.benchmark)},
      {"scenarios", item.scenarios},
      {"choices", choices},
      {"gold", label_str(item.gold)},
      {"meta", item.meta},
  };
  if (!item.preamble.empty()) j["preamble"] = item.preamble;
  return j;
}

BenchmarkItem item_from_json(const json& j) {
  check_version(j, "item");
  BenchmarkItem item;
  item.id = j.at("id").get<std::string>();
  item.benchmark = benchmark_from_name(j.at("benchmark").get<std::string>());
  item.preamble = j.value("preamble", "");
  item.scenarios = j.at("scenarios").get<std::vector<std::string>>();
  for (const auto& c : j.at("choices")) {
    Choice choice;
    choice.label = label_chr(c, "label");
    choice.text = c.at("text").get<std::string>();
    item.choices.push_back(choice);
  }
  item.gold = label_chr(j, "gold");
  item.meta = j.value("meta", std::map<std::string, std::string>{});
  item.validate();
  return item;
}

json to_json(const Transcript& t) {
  json turns = json::array();
  for (const auto& turn : t.turns) {
    json jt{{"role", role_name(turn.role)}, {"text", turn.text}};
    if (turn.tag) jt["tag"] = component_tag_name(*turn.tag);
    turns.push_back(jt);
  }
  json j{
      {"v", kSchemaVersion},
      {"item_id", t.item_id},
      {"strategy_id", t.strategy_id},
      {"model_id", t.model_id},
      {"turns", turns},
      {"final_raw", t.final_raw},
      {"usage",
       {{"prompt_tokens", t.usage.prompt_tokens},
        {"completion_tokens", t.usage.completion_tokens},
        {"requests", t.usage.requests},
        {"latency_ms", t.usage.latency_ms}}},
      {"temperature", t.temperature},
      {"run_id", t.run_id},
      {"seed", t.seed},
  };
  if (t.final_label) j["final_label"] = label_str(*t.final_label);
  return j;
}

Transcript transcript_from_json(const json& j) {
  check_version(j, "transcript");
  Transcript t;
  t.item_id = j.at("item_id").get<std::string>();
  t.strategy_id = j.at("strategy_id").get<std::string>();
  t.model_id = j.at("model_id").get<std::string>();
  for (const auto& jt : j.at("turns")) {
    Turn turn;
    turn.role = role_from_name(jt.at("role").get<std::string>());
    turn.text = jt.at("text").get<std::string>();
    if (jt.contains("tag")) turn.tag = component_tag_from_name(jt["tag"].get<std::string>());
    t.turns.push_back(std::move(turn));
  }
  t.final_raw = j.at("final_raw").get<std::string>();
  if (j.contains("final_label")) t.final_label = label_chr(j, "final_label");
  const json& u = j.at("usage");
  t.usage.prompt_tokens = u.at("prompt_tokens").get<int64_t>();
  t.usage.completion_tokens = u.at("completion_tokens").get<int64_t>();
  t.usage.requests = u.at("requests").get<int64_t>();
  t.usage.latency_ms = u.at("latency_ms").get<int64_t>();
  t.temperature = j.at("temperature").get<double>();
  t.run_id = j.value("run_id", "");
  t.seed = j.value("seed", uint64_t{0});
  t.validate();
  return t;
}

json to_json(const RunResult& r) {
  json j{
      {"v", kSchemaVersion},
      {"item_id", r.item_id},
      {"strategy_id", r.strategy_id},
      {"model_id", r.model_id},
      {"correct", r.correct},
      {"parse_failed", r.parse_failed},
  };
  if (r.predicted) j["predicted"] = label_str(*r.predicted);
  return j;
}

RunResult result_from_json(const json& j) {
  check_version(j, "result");
  RunResult r;
  r.item_id = j.at("item_id").get<std::string>();
  r.strategy_id = j.at("strategy_id").get<std::string>();
  r.model_id = j.at("model_id").get<std::string>();
  if (j.contains("predicted")) r.predicted = label_chr(j, "predicted");
  r.correct = j.at("correct").get<bool>();
  r.parse_failed = j.at("parse_failed").get<bool>();
  if (r.correct && !r.predicted)
    fail(Errc::invalid_argument, "result marked correct without a prediction");
  if (r.parse_failed && r.predicted)
    fail(Errc::invalid_argument, "result marked parse_failed but has a prediction");
  return r;
}

std::string jsonl_line(const json& record) {
  return record.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::string text = util::read_file(path);
  std::vector<json> records;
  size_t start = 0;
  size_t line_no = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) break;  // unterminated trailing line: not committed
    ++line_no;
    std::string_view line(text.data() + start, nl - start);
    start = nl + 1;
    if (line.empty()) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      fail(Errc::corrupt_manifest,
           path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

std::vector<BenchmarkItem> read_items(const std::filesystem::path& path) {
  std::vector<BenchmarkItem> items;
  for (const auto& record : read_jsonl(path)) items.push_back(item_from_json(record));
  return items;
}

void write_items(const std::filesystem::path& path, const std::vector<BenchmarkItem>& items) {
  std::string out;
  for (const auto& item : items) {
    out += jsonl_line(to_json(item));
    out += '\n';
  }
  util::write_file_atomic(path, out);
}

}  // namespace skig::core
