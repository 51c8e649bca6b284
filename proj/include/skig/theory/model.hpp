#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace skig::theory {

// Welfare aggregation over per-stakeholder utilities.
enum class Aggregator {
  mean,          // arithmetic mean
  min_rawls,     // worst-off stakeholder (veil of ignorance)
  nash_product,  // prod_k (u_k - d_k) with disagreement point d
};

const char* aggregator_name(Aggregator a);
Aggregator aggregator_from_name(const std::string& name);

// Finite decision problem: a scenario space, candidate actions, a true and a
// modeled per-action distribution over scenarios, and per-scenario stakeholder
// utilities composed by an aggregator into a single welfare value G(x).
struct DecisionModel {
  std::string id;
  size_t scenario_count = 0;
  std::vector<std::string> actions;
  // dists[action][scenario]
  std::vector<std::vector<double>> true_dist;
  std::vector<std::vector<double>> model_dist;
  // utilities[scenario][stakeholder]
  std::vector<std::vector<double>> utilities;
  Aggregator aggregator = Aggregator::mean;
  std::vector<double> disagreement;  // empty means all zeros

  void validate() const;  // distributions sum to 1 (1e-12), entries >= 0, shapes agree
};

nlohmann::json to_json(const DecisionModel& model);
DecisionModel model_from_json(const nlohmann::json& j);
DecisionModel load_model(const std::filesystem::path& path);

double aggregate(const std::vector<double>& utilities, Aggregator aggregator,
                 const std::vector<double>& disagreement = {});

// Composed welfare per scenario: G[x] = aggregate(utilities[x]).
std::vector<double> composed_utilities(const DecisionModel& model);

// Half-L1 total variation. Equals the supremum over scenario subsets of the
// probability gap (checked against a brute-force oracle in the tests).
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

double expected_value(const std::vector<double>& dist, const std::vector<double>& values);

// The decision rule: arg max over actions of E_{x ~ model_dist[a]} G(x),
// ties broken toward the lowest action index.
size_t mesa_decide(const DecisionModel& model);

}  // namespace skig::theory
