#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "skig/theory/model.hpp"

namespace skig::theory {

// Walker alias table; O(1) per draw after O(m) setup.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& dist);

  template <class RngT>
  size_t draw(RngT& rng) const {
    size_t slot = static_cast<size_t>(rng.below(prob_.size()));
    return rng.uniform01() < prob_[slot] ? slot : alias_[slot];
  }

  size_t support() const { return prob_.size(); }

 private:
  std::vector<double> prob_;
  std::vector<size_t> alias_;
};

enum class ExecutionPolicy { serial, parallel };

// One concentration experiment: n i.i.d. scenario draws from the model
// distribution of a fixed action, repeated `trials` times. A trial violates
// the bound when |E_true[G] - empirical mean of G| >= g_inf * tv + t, which
// happens with probability at most sigma2 / (n t^2).
struct BoundExperiment {
  DecisionModel model;
  size_t action = 0;
  size_t n = 0;
  double t = 0.0;
  size_t trials = 0;
  std::vector<double> g;  // composed welfare per scenario
  double sigma2 = 0.0;    // variance of G under the sampling (model) distribution
  double g_inf = 0.0;     // sup norm of G
  double tv = 0.0;        // TV(true_dist[action], model_dist[action])
};

BoundExperiment make_bound_experiment(const DecisionModel& model, size_t action, size_t n,
                                      double t, size_t trials);

struct BoundResult {
  double violation_rate = 0.0;
  double bound = 0.0;  // sigma2 / (n t^2)
  bool satisfied = false;
  uint64_t violations = 0;
};

// Deterministic for a given seed regardless of policy or thread count: each
// trial owns an independent RNG stream and the reduction is an integer sum.
BoundResult verify_bound(const BoundExperiment& experiment, uint64_t seed,
                         ExecutionPolicy policy = ExecutionPolicy::parallel);

// Synthetic model family for bound sweeps. The true distribution is the model
// distribution with `tv` mass moved from the heaviest scenarios onto the
// lightest one, so TV(true, model) equals `tv` exactly. Utilities are drawn
// in [0,1], keeping G nonnegative (required for the one-sided shift bound).
struct FamilyOptions {
  size_t scenario_count = 8;
  size_t stakeholder_count = 3;
  size_t action_count = 2;
};

DecisionModel make_synthetic_model(uint64_t seed, const FamilyOptions& options, double tv,
                                   Aggregator aggregator);

// Moves `tv` probability mass toward the lightest entry; result has exact
// TV distance `tv` from `dist`. Requires tv <= 1 - min(dist).
std::vector<double> shift_distribution(const std::vector<double>& dist, double tv);

struct SweepOptions {
  std::vector<size_t> n_grid;
  std::vector<double> tv_grid;
  std::vector<double> t_grid;
  size_t models_per_tv = 8;
  size_t trials = 10000;
  uint64_t seed = 1;
  FamilyOptions family;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
};

struct SweepRow {
  std::string model_id;
  size_t n = 0;
  double tv = 0.0;
  double t = 0.0;
  double sigma2 = 0.0;
  double g_inf = 0.0;
  double rate = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

std::vector<SweepRow> sweep(const SweepOptions& options);
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

}  // namespace skig::theory
