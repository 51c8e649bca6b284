#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skig::core {

enum class Benchmark { mmlu_ms, moral_stories, ethics_cm, social_chem };

const char* benchmark_name(Benchmark b);
Benchmark benchmark_from_name(const std::string& name);

// Tags for the multi-turn reasoning components. Turns in baseline strategies
// (plain answer elicitation, step-by-step nudge) carry no tag.
enum class ComponentTag {
  stakeholder_id,
  motivation,
  consequence,
  empathy,
  risk_worst,
  risk_best,
  outcome_summary,
  morality_eval,
  final_answer,
};

const char* component_tag_name(ComponentTag tag);
ComponentTag component_tag_from_name(const std::string& name);

struct Choice {
  char label = '?';  // single uppercase letter, presentation order
  std::string text;
};

// One multiple-choice moral question.
struct BenchmarkItem {
  std::string id;
  Benchmark benchmark = Benchmark::mmlu_ms;
  std::string preamble;  // shared context; empty when the task has none
  std::vector<std::string> scenarios;
  std::vector<Choice> choices;
  char gold = '?';
  std::map<std::string, std::string> meta;

  bool has_choice(char label) const;
  // Throws Errc::invalid_argument when a structural invariant is broken
  // (gold outside the choice set, wrong arity for the benchmark, duplicate
  // or non-uppercase labels).
  void validate() const;
};

enum class Role { system, user, assistant };

const char* role_name(Role role);
Role role_from_name(const std::string& name);

struct Turn {
  Role role = Role::user;
  std::optional<ComponentTag> tag;
  std::string text;
};

struct Usage {
  int64_t prompt_tokens = 0;
  int64_t completion_tokens = 0;
  int64_t requests = 0;
  int64_t latency_ms = 0;
};

// Full record of one (item, strategy, model) run.
struct Transcript {
  std::string item_id;
  std::string strategy_id;
  std::string model_id;
  std::vector<Turn> turns;
  std::string final_raw;
  std::optional<char> final_label;
  Usage usage;
  double temperature = 0.0;
  std::string run_id;
  uint64_t seed = 0;

  // Checks turn alternation (optional leading system turn, then strict
  // user/assistant pairs) and, given the item, the final label.
  void validate(const BenchmarkItem* item = nullptr) const;
};

struct RunResult {
  std::string item_id;
  std::string strategy_id;
  std::string model_id;
  std::optional<char> predicted;
  bool correct = false;
  bool parse_failed = false;
};

// Grades a prediction against the item's gold label. A missing prediction is
// a parse failure and counts as incorrect; an out-of-set label is rejected.
RunResult score(const BenchmarkItem& item, std::optional<char> predicted,
                const std::string& strategy_id = "", const std::string& model_id = "");

}  // namespace skig::core
