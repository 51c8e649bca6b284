#include "skig/core/types.hpp"

#include <algorithm>
#include <cctype>

#include "skig/common.hpp"

namespace skig::core {

const char* benchmark_name(Benchmark b) {
  switch (b) {
    case Benchmark::mmlu_ms: return "mmlu_ms";
    case Benchmark::moral_stories: return "moral_stories";
    case Benchmark::ethics_cm: return "ethics_cm";
    case Benchmark::social_chem: return "social_chem";
  }
  return "?";
}

Benchmark benchmark_from_name(const std::string& name) {
  if (name == "mmlu_ms") return Benchmark::mmlu_ms;
  if (name == "moral_stories") return Benchmark::moral_stories;
  if (name == "ethics_cm") return Benchmark::ethics_cm;
  if (name == "social_chem") return Benchmark::social_chem;
  fail(Errc::invalid_argument, "unknown benchmark '" + name + "'");
}

const char* component_tag_name(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::stakeholder_id: return "STAKEHOLDER_ID";
    case ComponentTag::motivation: return "MOTIVATION";
    case ComponentTag::consequence: return "CONSEQUENCE";
    case ComponentTag::empathy: return "EMPATHY";
    case ComponentTag::risk_worst: return "RISK_WORST";
    case ComponentTag::risk_best: return "RISK_BEST";
    case ComponentTag::outcome_summary: return "OUTCOME_SUMMARY";
    case ComponentTag::morality_eval: return "MORALITY_EVAL";
    case ComponentTag::final_answer: return "FINAL_ANSWER";
  }
  return "?";
}

ComponentTag component_tag_from_name(const std::string& name) {
  static const std::pair<const char*, ComponentTag> table[] = {
      {"STAKEHOLDER_ID", ComponentTag::stakeholder_id},
      {"MOTIVATION", ComponentTag::motivation},
      {"CONSEQUENCE", ComponentTag::consequence},
      {"EMPATHY", ComponentTag::empathy},
      {"RISK_WORST", ComponentTag::risk_worst},
      {"RISK_BEST", ComponentTag::risk_best},
      {"OUTCOME_SUMMARY", ComponentTag::outcome_summary},
      {"MORALITY_EVAL", ComponentTag::morality_eval},
      {"FINAL_ANSWER", ComponentTag::final_answer},
  };
  for (const auto& [text, tag] : table) {
    if (name == text) return tag;
  }
  fail(Errc::invalid_argument, "unknown component tag '" + name + "'");
}

const char* role_name(Role role) {
  switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "?";
}

Role role_from_name(const std::string& name) {
  if (name == "system") return Role::system;
  if (name == "user") return Role::user;
  if (name == "assistant") return Role::assistant;
  fail(Errc::invalid_argument, "unknown role '" + name + "'");
}

bool BenchmarkItem::has_choice(char label) const {
  return std::any_of(choices.begin(), choices.end(),
                     [label](const Choice& c) { return c.label == label; });
}

void BenchmarkItem::validate() const {
  if (id.empty()) fail(Errc::invalid_argument, "item id empty");
  if (choices.empty()) fail(Errc::invalid_argument, id + ": no choices");
  for (size_t i = 0; i < choices.size(); ++i) {
    char label = choices[i].label;
    if (!std::isupper(static_cast<unsigned char>(label))) {
      fail(Errc::invalid_argument, id + ": label not uppercase");
    }
    for (size_t j = i + 1; j < choices.size(); ++j) {
      if (choices[j].label == label) fail(Errc::invalid_argument, id + ": duplicate label");
    }
  }
  const size_t n_scenarios = scenarios.size();
  const size_t n_choices = choices.size();
  switch (benchmark) {
    case Benchmark::mmlu_ms:
      if (n_scenarios != 2 || n_choices != 4)
        fail(Errc::invalid_argument, id + ": mmlu_ms needs 2 scenarios / 4 choices");
      break;
    case Benchmark::moral_stories:
    case Benchmark::ethics_cm:
      if (n_scenarios != 2 || n_choices != 2)
        fail(Errc::invalid_argument,
             id + ": " + benchmark_name(benchmark) + " needs 2 scenarios / 2 choices");
      break;
    case Benchmark::social_chem:
      if (n_scenarios != 1)
        fail(Errc::invalid_argument, id + ": social_chem needs exactly 1 scenario");
      if (!meta.count("gold_stakeholders"))
        fail(Errc::invalid_argument, id + ": social_chem needs meta.gold_stakeholders");
      break;
  }
  if (!has_choice(gold)) fail(Errc::invalid_label, id + ": gold label not among choices");
}

void Transcript::validate(const BenchmarkItem* item) const {
  size_t i = 0;
  while (i < turns.size() && turns[i].role == Role::system) ++i;
  Role expected = Role::user;
  for (; i < turns.size(); ++i) {
    if (turns[i].role == Role::system)
      fail(Errc::invalid_argument, "system turn after conversation start");
    if (turns[i].role != expected)
      fail(Errc::invalid_argument, "turns must alternate user/assistant");
    expected = expected == Role::user ? Role::assistant : Role::user;
  }
  if (item && final_label && !item->has_choice(*final_label))
    fail(Errc::invalid_label, "final label not among item choices");
}

RunResult score(const BenchmarkItem& item, std::optional<char> predicted,
                const std::string& strategy_id, const std::string& model_id) {
  if (predicted && !item.has_choice(*predicted)) {
    fail(Errc::invalid_label,
         item.id + ": predicted label '" + std::string(1, *predicted) + "' not among choices");
  }
  RunResult result;
  result.item_id = item.id;
  result.strategy_id = strategy_id;
  result.model_id = model_id;
  result.predicted = predicted;
  result.correct = predicted.has_value() && *predicted == item.gold;
  result.parse_failed = !predicted.has_value();
  return result;
}

}  // namespace skig::core
