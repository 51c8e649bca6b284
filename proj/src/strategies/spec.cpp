#include "skig/strategies/spec.hpp"

#include <algorithm>

#include "skig/common.hpp"
#include "skig/util/strings.hpp"

namespace skig::strategies {

using core::ComponentTag;
using nlohmann::json;

namespace {

// Answer blocks. The baselines label options "(A)text"; the thought-experiment
// and skin-in-the-game chains label them "A) text".
constexpr const char* kAnswerBlockParen = "Answer Choices:\n{choices}\n\nThe answer:";
constexpr const char* kAnswerBlockPlain = "Answer Choices:\n{choices_plain}\n\nThe answer:";
constexpr const char* kAnswerBlockPick =
    "Pick one of the choices which closely represents your conclusion about the actions of the "
    "main character:\n{choices_plain}\n\nThe answer:";

// Skin-in-the-game chain steps, in order.
constexpr const char* kStakeholder =
    "{question}\n\nQuestion: For each scenario, identify the different stakeholders including "
    "the main character. Imagine you are the main character.";
constexpr const char* kMotivationNorms =
    "Question: What are the motivations for the main character's actions in each of the "
    "scenarios, and are the motivations as per acceptable societal norms?";
constexpr const char* kMotivationIntent =
    "Question: Are the motivations of the main character's actions intending to do good or bad "
    "for the different stakeholders?";
constexpr const char* kConsequenceAll =
    "Question: Imagine all possible consequences of the main character's actions on the "
    "different stakeholders in each of the scenarios.";
constexpr const char* kConsequenceSome =
    "Question: Imagine some of the possible consequences of the main character's actions on the "
    "different stakeholders in each of the scenarios.";
constexpr const char* kEmpathy =
    "Question: Emulate yourself as each of the stakeholders including the main character, for "
    "each stakeholder and scenario. and identify the degree of impact of the main character's "
    "action on you and whether the consequences of the main character's action benefit or harm "
    "you.";
constexpr const char* kRiskWorstOverall =
    "Question: What is the absolute worst case consequence that could result from the main "
    "character's actions in each of the scenarios, and how likely is it to happen?";
constexpr const char* kRiskBestOverall =
    "Question: What is the absolute best case consequence that could result from the main "
    "character's actions in each of the scenarios, and how likely is it to happen?";
constexpr const char* kRiskBestStakeholder =
    "Question: What is the absolute best case consequence that could result from the main "
    "character's actions for each stakeholder in the scenarios, and how likely is it to happen?";
constexpr const char* kRiskWorstStakeholder =
    "Question: What is the absolute worst case consequence that could result from the main "
    "character's actions for each stakeholder the scenarios, and how likely is it to happen?";
constexpr const char* kOutcomeSummary =
    "Question: Given the worst and best case consequences and their likelihood of happening, "
    "summarize the outcomes of the main character's actions in each scenario.";
constexpr const char* kMoralityEval =
    "Question: Based on the summary of outcomes for each scenario, evaluate if the main "
    "character's actions are right or wrong for collective good of all different stakeholders, "
    "in each of the scenarios.";

StepSpec step(std::optional<ComponentTag> tag, std::string text) {
  StepSpec s;
  s.tag = tag;
  s.template_text = std::move(text);
  return s;
}

StrategySpec make_io() {
  StrategySpec s;
  s.id = "io";
  s.single_turn = true;
  s.steps = {step(std::nullopt, "{question}")};
  s.answer_block_template = kAnswerBlockParen;
  return s;
}

StrategySpec make_cot() {
  StrategySpec s;
  s.id = "cot";
  s.single_turn = true;
  s.steps = {step(std::nullopt, "{question}\n\nLet's think step by step.")};
  s.answer_block_template = kAnswerBlockParen;
  return s;
}

StrategySpec make_te() {
  StrategySpec s;
  s.id = "te";
  s.steps = {
      step(std::nullopt,
           "{question}\n\nQuestion: Let's do a thought experiment. For each scenario, pose as "
           "many detailed moral counterfactual questions as you can."),
      step(std::nullopt,
           "Question: For each scenario, answer the questions as detailed as you can. Discuss "
           "moral implications of each question. Highlight when there is a moral conflict."),
      step(std::nullopt,
           "Question: Consider all the counterfactuals, for each scenario, summarize if I did "
           "something morally wrong and why."),
      step(std::nullopt, "Question: Which one of the explanations summarizes each scenario the best?"),
      step(std::nullopt, "Question: For each scenario, did I do something morally wrong?"),
  };
  s.answer_block_template = kAnswerBlockPlain;
  return s;
}

StrategySpec make_skig() {
  StrategySpec s;
  s.id = "skig";
  s.steps = {
      step(ComponentTag::stakeholder_id, kStakeholder),
      step(ComponentTag::motivation, kMotivationNorms),
      step(ComponentTag::motivation, kMotivationIntent),
      step(ComponentTag::consequence, kConsequenceAll),
      step(ComponentTag::empathy, kEmpathy),
      step(ComponentTag::risk_worst, kRiskWorstOverall),
      step(ComponentTag::risk_best, kRiskBestOverall),
      step(ComponentTag::outcome_summary, kOutcomeSummary),
      step(ComponentTag::morality_eval, kMoralityEval),
  };
  s.answer_block_template = kAnswerBlockPick;
  return s;
}

// skig with the two risk turns replaced by a single objective.
StrategySpec make_risk_variant(const std::string& id, ComponentTag tag, const char* text) {
  StrategySpec s = make_skig();
  s.id = id;
  std::vector<StepSpec> steps;
  bool inserted = false;
  for (const auto& st : s.steps) {
    if (st.tag == ComponentTag::risk_worst || st.tag == ComponentTag::risk_best) {
      if (!inserted) {
        steps.push_back(step(tag, text));
        inserted = true;
      }
      continue;
    }
    steps.push_back(st);
  }
  s.steps = std::move(steps);
  return s;
}

StrategySpec make_st_all() {
  StrategySpec s;
  s.id = "st_all";
  s.single_turn = true;
  s.steps = {step(
      std::nullopt,
      "{question}\n\nQuestion: For each scenario, identify the stakeholders including the main "
      "character (assuming you're the main character), analyze the motivations behind their "
      "actions and whether these are aligned with societal norms, consider the potential impacts "
      "(good or bad) on all stakeholders, and assess both the best and worst-case outcomes of "
      "these actions. Conclude by evaluating the overall consequences of the main character's "
      "actions on the collective well-being of all stakeholders.")};
  s.answer_block_template = kAnswerBlockPick;
  return s;
}

StrategySpec make_st_best() {
  StrategySpec s;
  s.id = "st_best";
  s.single_turn = true;
  s.steps = {step(
      std::nullopt,
      "{question}\n\nQuestion: For each scenario, identify the different stakeholders including "
      "the main character. Imagine all possible consequences of the main character's actions on "
      "the different stakeholders in each of the scenarios. What are the best case and worst "
      "case consequences and their likelihood of happening, summarize the outcomes of the main "
      "character's actions in each scenario.")};
  s.answer_block_template = kAnswerBlockPick;
  return s;
}

StrategySpec make_mt_best() {
  StrategySpec s;
  s.id = "mt_best";
  s.steps = {
      step(ComponentTag::stakeholder_id, kStakeholder),
      step(ComponentTag::empathy, kEmpathy),
      step(ComponentTag::outcome_summary,
           "Question: Consider the worst and best case consequences and their likelihood of "
           "happening, summarize the outcomes of the main character's actions in each scenario."),
      step(ComponentTag::morality_eval, kMoralityEval),
  };
  s.answer_block_template = kAnswerBlockPick;
  return s;
}

StrategySpec make_some_consequences() {
  StrategySpec s = make_skig();
  s.id = "skig_some_consequences";
  for (auto& st : s.steps) {
    if (st.tag == ComponentTag::consequence) st.template_text = kConsequenceSome;
  }
  return s;
}

StrategySpec make_paraphrase_01() {
  StrategySpec s;
  s.id = "skig_paraphrase_01";
  s.steps = {
      step(ComponentTag::stakeholder_id,
           "{question}\n\nQuestion: For each scenario, identify all relevant parties, including "
           "yourself as a key participant."),
      step(ComponentTag::motivation,
           "Question: Analyze the driving forces behind the protagonist's decisions in each "
           "scenario, and assess whether these motivations align with socially accepted "
           "standards."),
      step(ComponentTag::consequence,
           "Question: Consider the full range of potential impacts of the protagonist's "
           "decisions on all parties involved in each scenario."),
      step(ComponentTag::empathy,
           "Question: Place yourself in the position of each stakeholder, including the "
           "protagonist, in every scenario. Assess how significantly the protagonist's decisions "
           "affect you, and determine whether these effects are beneficial or detrimental."),
      step(ComponentTag::risk_worst,
           "Question: Identify the most critical adverse outcome that the central figure's "
           "actions could potentially lead to in each setting and its likelihood."),
      step(ComponentTag::risk_best,
           "Question: Determine the optimal outcome that could result from the central figure's "
           "actions in each setting and the probability of such outcomes."),
      step(ComponentTag::outcome_summary,
           "Question: With consideration of both the best and worst possible outcomes and their "
           "chances of happening, summarize the impact of the protagonist's actions in each "
           "scenario."),
      step(ComponentTag::morality_eval,
           "Question: Reflect on these summaries to conclude whether the central figure's "
           "actions are beneficial for the collective interest of all involved parties in each "
           "setting."),
  };
  s.answer_block_template = kAnswerBlockPick;
  return s;
}

StrategySpec make_paraphrase_02() {
  StrategySpec s;
  s.id = "skig_paraphrase_02";
  s.steps = {
      step(ComponentTag::stakeholder_id,
           "{question}\n\nQuestion: For every setting, identify all individuals and groups "
           "affected, positioning yourself as the narrative's central figure. Visualize from the "
           "central figure's standpoint."),
      step(ComponentTag::motivation,
           "Question:Examine the central figure's rationale in each setting. Are these "
           "rationales aligned with societal norms?"),
      step(ComponentTag::consequence,
           "Question: Predict the range of potential impacts stemming from the central figure's "
           "actions on everyone involved in each setting."),
      step(ComponentTag::empathy,
           "Question: Step into the shoes of every stakeholder, including the protagonist, in "
           "every scenario. Assess how the protagonist's actions affect you, determining if they "
           "result in benefit or detriment."),
      step(ComponentTag::risk_worst,
           "Question: Determine the most severe negative outcome that could arise from the "
           "protagonist's actions in each scenario, along with its probability of occurring."),
      step(ComponentTag::risk_best,
           "Question: Identify the most favorable potential outcome that could arise from the "
           "protagonist's decisions in each scenario, and gauge the probability of its "
           "occurrence."),
      step(ComponentTag::outcome_summary,
           "Question: Reflecting on the most severe outcomes and their chances of occurrence, "
           "provide a summary of the effects of the protagonist's decisions in each scenario."),
      step(ComponentTag::morality_eval,
           "Question: Based on the summarized effects for each scenario, judge whether the "
           "protagonist's decisions serve the collective interests of all parties involved."),
  };
  s.answer_block_template = kAnswerBlockPick;
  return s;
}

std::map<std::string, StrategySpec> build_registry() {
  std::map<std::string, StrategySpec> registry;
  auto add = [&registry](StrategySpec spec) {
    spec.validate();
    registry.emplace(spec.id, std::move(spec));
  };
  add(make_io());
  add(make_cot());
  add(make_te());
  add(make_skig());
  add(make_risk_variant("best_only_overall", ComponentTag::risk_best, kRiskBestOverall));
  add(make_risk_variant("worst_only_overall", ComponentTag::risk_worst, kRiskWorstOverall));
  add(make_risk_variant("best_only_stakeholder", ComponentTag::risk_best, kRiskBestStakeholder));
  add(make_risk_variant("worst_only_stakeholder", ComponentTag::risk_worst, kRiskWorstStakeholder));
  add(make_st_all());
  add(make_st_best());
  add(make_mt_best());
  add(make_some_consequences());
  add(make_paraphrase_01());
  add(make_paraphrase_02());
  return registry;
}

}  // namespace

std::vector<const StepSpec*> StrategySpec::enabled_steps() const {
  std::vector<const StepSpec*> out;
  for (const auto& s : steps) {
    if (s.enabled) out.push_back(&s);
  }
  return out;
}

void StrategySpec::validate() const {
  if (id.empty()) fail(Errc::invalid_argument, "strategy id empty");
  if (steps.empty()) fail(Errc::invalid_argument, id + ": strategy needs at least one step");
  if (single_turn && steps.size() != 1) {
    fail(Errc::invalid_argument, id + ": single-turn strategy must have exactly one step");
  }
  if (enabled_steps().empty()) fail(Errc::invalid_argument, id + ": all steps disabled");
  for (const auto& s : steps) {
    if (s.enabled && s.template_text.empty()) {
      fail(Errc::invalid_argument, id + ": enabled step with empty template");
    }
  }
  if (answer_block_template.find("{choices}") == std::string::npos &&
      answer_block_template.find("{choices_plain}") == std::string::npos) {
    fail(Errc::invalid_argument, id + ": answer block lacks a choices slot");
  }
}

json to_json(const StrategySpec& spec) {
  json steps = json::array();
  for (const auto& s : spec.steps) {
    json js{{"template", s.template_text}, {"enabled", s.enabled}};
    if (s.tag) js["tag"] = core::component_tag_name(*s.tag);
    steps.push_back(js);
  }
  return json{
      {"v", 1},
      {"id", spec.id},
      {"single_turn", spec.single_turn},
      {"steps", steps},
      {"answer_block_template", spec.answer_block_template},
  };
}

StrategySpec spec_from_json(const json& j) {
  StrategySpec spec;
  spec.id = j.at("id").get<std::string>();
  spec.single_turn = j.value("single_turn", false);
  for (const auto& js : j.at("steps")) {
    StepSpec s;
    if (js.contains("tag") && !js["tag"].is_null()) {
      s.tag = core::component_tag_from_name(js["tag"].get<std::string>());
    }
    s.template_text = js.at("template").get<std::string>();
    s.enabled = js.value("enabled", true);
    spec.steps.push_back(std::move(s));
  }
  spec.answer_block_template = j.at("answer_block_template").get<std::string>();
  spec.validate();
  return spec;
}

const std::map<std::string, StrategySpec>& builtin_strategies() {
  static const std::map<std::string, StrategySpec> registry = build_registry();
  return registry;
}

StrategySpec get_strategy(const std::string& id) {
  const auto& registry = builtin_strategies();
  auto it = registry.find(id);
  if (it == registry.end()) fail(Errc::invalid_argument, "unknown strategy '" + id + "'");
  return it->second;
}

namespace {

// Component groups in chain order; consequence exploration travels with the
// empathy exercise (the ablation rows name five additions over the
// stakeholder base, and empathy is the step that consumes the consequences).
const std::vector<std::vector<ComponentTag>>& ablation_groups() {
  static const std::vector<std::vector<ComponentTag>> groups = {
      {ComponentTag::motivation},
      {ComponentTag::consequence, ComponentTag::empathy},
      {ComponentTag::risk_worst, ComponentTag::risk_best},
      {ComponentTag::outcome_summary},
      {ComponentTag::morality_eval},
  };
  return groups;
}

bool in_group(const StepSpec& step, const std::vector<ComponentTag>& group) {
  if (!step.tag) return false;
  return std::find(group.begin(), group.end(), *step.tag) != group.end();
}

}  // namespace

std::vector<StrategySpec> ablation_plan(const StrategySpec& base, bool cumulative) {
  if (base.id != "skig") fail(Errc::invalid_argument, "ablation plan requires the skig strategy");
  const auto& groups = ablation_groups();
  std::vector<StrategySpec> plan;
  if (cumulative) {
    static const char* names[] = {"skig_cum1_stakeholder", "skig_cum2_motivation",
                                  "skig_cum3_empathy",     "skig_cum4_risk",
                                  "skig_cum5_outcome",     "skig"};
    for (size_t row = 0; row < groups.size() + 1; ++row) {
      StrategySpec spec = base;
      spec.id = names[row];
      for (auto& step : spec.steps) {
        if (step.tag == ComponentTag::stakeholder_id) continue;
        bool enabled = false;
        for (size_t g = 0; g < row; ++g) {
          if (in_group(step, groups[g])) enabled = true;
        }
        step.enabled = enabled;
      }
      spec.validate();
      plan.push_back(std::move(spec));
    }
  } else {
    // leave-one-out over the same groups
    static const char* names[] = {"skig_drop_motivation", "skig_drop_empathy", "skig_drop_risk",
                                  "skig_drop_outcome", "skig_drop_morality"};
    for (size_t g = 0; g < groups.size(); ++g) {
      StrategySpec spec = base;
      spec.id = names[g];
      for (auto& step : spec.steps) {
        if (in_group(step, groups[g])) step.enabled = false;
      }
      spec.validate();
      plan.push_back(std::move(spec));
    }
  }
  return plan;
}

std::vector<std::string> ablation_row_labels() {
  return {"Stakeholder I.", "+ Motivation A.", "+ Empathy E.",
          "+ Risk A.",      "+ Outcome S.",    "+ Morality E."};
}

std::string component_question(const StrategySpec& spec, ComponentTag tag) {
  for (const auto& step : spec.steps) {
    if (!step.enabled || step.tag != tag) continue;
    std::string text = step.template_text;
    const std::string question_slot = "{question}\n\n";
    if (text.rfind(question_slot, 0) == 0) text = text.substr(question_slot.size());
    if (text.rfind("Question: ", 0) == 0) text = text.substr(10);
    else if (text.rfind("Question:", 0) == 0) text = text.substr(9);
    return text;
  }
  fail(Errc::invalid_argument,
       spec.id + ": no enabled step tagged " + core::component_tag_name(tag));
}

}  // namespace skig::strategies
