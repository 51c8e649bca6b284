#include "skig/theory/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skig/common.hpp"
#include "skig/util/fs.hpp"

namespace skig::theory {

using nlohmann::json;

const char* aggregator_name(Aggregator a) {
  switch (a) {
    case Aggregator::mean: return "mean";
    case Aggregator::min_rawls: return "min";
    case Aggregator::nash_product: return "nash";
  }
  return "?";
}

Aggregator aggregator_from_name(const std::string& name) {
  if (name == "mean") return Aggregator::mean;
  if (name == "min") return Aggregator::min_rawls;
  if (name == "nash") return Aggregator::nash_product;
  fail(Errc::invalid_argument, "unknown aggregator '" + name + "'");
}

namespace {

void check_dist(const std::vector<double>& dist, size_t m, const std::string& what) {
  if (dist.size() != m) fail(Errc::dimension_mismatch, what + ": wrong support size");
  double sum = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0) || !std::isfinite(p)) fail(Errc::invalid_argument, what + ": negative or non-finite mass");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    fail(Errc::invalid_argument, what + ": mass sums to " + std::to_string(sum));
  }
}

}  // namespace

void DecisionModel::validate() const {
  if (scenario_count == 0) fail(Errc::invalid_argument, "empty scenario space");
  if (actions.empty()) fail(Errc::invalid_argument, "no actions");
  if (true_dist.size() != actions.size() || model_dist.size() != actions.size()) {
    fail(Errc::dimension_mismatch, "per-action distribution count != action count");
  }
  for (size_t a = 0; a < actions.size(); ++a) {
    check_dist(true_dist[a], scenario_count, "true_dist[" + actions[a] + "]");
    check_dist(model_dist[a], scenario_count, "model_dist[" + actions[a] + "]");
  }
  if (utilities.size() != scenario_count) {
    fail(Errc::dimension_mismatch, "utilities rows != scenario count");
  }
  const size_t n_stakeholders = utilities.empty() ? 0 : utilities[0].size();
  if (n_stakeholders == 0) fail(Errc::invalid_argument, "no stakeholders");
  for (const auto& row : utilities) {
    if (row.size() != n_stakeholders) fail(Errc::dimension_mismatch, "ragged utility rows");
    for (double u : row) {
      if (!std::isfinite(u)) fail(Errc::invalid_argument, "non-finite utility");
    }
  }
  if (!disagreement.empty() && disagreement.size() != n_stakeholders) {
    fail(Errc::dimension_mismatch, "disagreement point size != stakeholder count");
  }
  if (aggregator == Aggregator::nash_product) {
    for (const auto& row : utilities) aggregate(row, aggregator, disagreement);
  }
}

json to_json(const DecisionModel& m) {
  json j{
      {"v", 1},
      {"id", m.id},
      {"scenario_count", m.scenario_count},
      {"actions", m.actions},
      {"true_dist", m.true_dist},
      {"model_dist", m.model_dist},
      {"utilities", m.utilities},
      {"aggregator", aggregator_name(m.aggregator)},
  };
  if (!m.disagreement.empty()) j["disagreement"] = m.disagreement;
  return j;
}

DecisionModel model_from_json(const json& j) {
  DecisionModel m;
  m.id = j.value("id", "model");
  m.scenario_count = j.at("scenario_count").get<size_t>();
  m.actions = j.at("actions").get<std::vector<std::string>>();
  m.true_dist = j.at("true_dist").get<std::vector<std::vector<double>>>();
  m.model_dist = j.at("model_dist").get<std::vector<std::vector<double>>>();
  m.utilities = j.at("utilities").get<std::vector<std::vector<double>>>();
  m.aggregator = aggregator_from_name(j.at("aggregator").get<std::string>());
  if (j.contains("disagreement")) m.disagreement = j["disagreement"].get<std::vector<double>>();
  m.validate();
  return m;
}

DecisionModel load_model(const std::filesystem::path& path) {
  return model_from_json(json::parse(util::read_file(path)));
}

double aggregate(const std::vector<double>& utilities, Aggregator aggregator,
                 const std::vector<double>& disagreement) {
  if (utilities.empty()) fail(Errc::empty_input, "aggregate over zero stakeholders");
  switch (aggregator) {
    case Aggregator::mean: {
      double sum = std::accumulate(utilities.begin(), utilities.end(), 0.0);
      return sum / static_cast<double>(utilities.size());
    }
    case Aggregator::min_rawls:
      return *std::min_element(utilities.begin(), utilities.end());
    case Aggregator::nash_product: {
      if (!disagreement.empty() && disagreement.size() != utilities.size()) {
        fail(Errc::dimension_mismatch, "disagreement point size != utility count");
      }
      double product = 1.0;
      for (size_t k = 0; k < utilities.size(); ++k) {
        double d = disagreement.empty() ? 0.0 : disagreement[k];
        double surplus = utilities[k] - d;
        if (surplus < 0.0) {
          fail(Errc::nash_domain, "utility below disagreement point at stakeholder " +
                                      std::to_string(k));
        }
        product *= surplus;
      }
      return product;
    }
  }
  fail(Errc::invalid_argument, "bad aggregator");
}

std::vector<double> composed_utilities(const DecisionModel& model) {
  std::vector<double> g(model.scenario_count);
  for (size_t x = 0; x < model.scenario_count; ++x) {
    g[x] = aggregate(model.utilities[x], model.aggregator, model.disagreement);
  }
  return g;
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) fail(Errc::dimension_mismatch, "tv_distance: support sizes differ");
  double l1 = 0.0;
  for (size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
  return 0.5 * l1;
}

double expected_value(const std::vector<double>& dist, const std::vector<double>& values) {
  if (dist.size() != values.size()) fail(Errc::dimension_mismatch, "expected_value: sizes differ");
  double sum = 0.0;
  for (size_t i = 0; i < dist.size(); ++i) sum += dist[i] * values[i];
  return sum;
}

size_t mesa_decide(const DecisionModel& model) {
  const std::vector<double> g = composed_utilities(model);
  size_t best = 0;
  double best_value = expected_value(model.model_dist[0], g);
  for (size_t a = 1; a < model.actions.size(); ++a) {
    double value = expected_value(model.model_dist[a], g);
    if (value > best_value) {  // strict: ties keep the lowest index
      best_value = value;
      best = a;
    }
  }
  return best;
}

}  // namespace skig::theory
