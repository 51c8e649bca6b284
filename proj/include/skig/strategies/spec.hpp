#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skig/core/types.hpp"

namespace skig::strategies {

// One prompt-chain step. Templates may reference the item through the
// {question} slot; earlier answers are carried implicitly by the
// conversation, never spliced into later templates.
struct StepSpec {
  std::optional<core::ComponentTag> tag;
  std::string template_text;
  bool enabled = true;

  bool operator==(const StepSpec&) const = default;
};

// Declarative prompt chain. The answer block closes every chain and renders
// the item's choices through the {choices} slot — "(A)text" lines — or the
// {choices_plain} slot — "A) text" lines, matching the two layouts the
// benchmarks use.
struct StrategySpec {
  std::string id;
  bool single_turn = false;
  std::vector<StepSpec> steps;
  std::string answer_block_template;

  std::vector<const StepSpec*> enabled_steps() const;
  void validate() const;

  bool operator==(const StrategySpec&) const = default;
};

nlohmann::json to_json(const StrategySpec& spec);
StrategySpec spec_from_json(const nlohmann::json& j);

// All strategies used in the experiments, keyed by id: io, cot, te, skig,
// the four risk-objective variants, the turn variants (st_all, st_best,
// mt_best), the reduced-coverage consequence variant, and two paraphrase
// sets. Prompt texts are fixed verbatim; golden-file tests pin them.
const std::map<std::string, StrategySpec>& builtin_strategies();

StrategySpec get_strategy(const std::string& id);

// Cumulative component-addition sequence over the skig chain:
// stakeholder-only, +motivation, +empathy (with consequence exploration),
// +risk, +outcome-summary, +morality-eval. The last element is full skig.
std::vector<StrategySpec> ablation_plan(const StrategySpec& base, bool cumulative = true);

// Display labels for ablation report rows, parallel to ablation_plan order.
std::vector<std::string> ablation_row_labels();

// The bare question text a component asks (template minus the {question}
// slot and the "Question: " prefix); used by the consistency judge prompt.
std::string component_question(const StrategySpec& spec, core::ComponentTag tag);

}  // namespace skig::strategies
