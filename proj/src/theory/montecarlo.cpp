#include "skig/theory/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "skig/common.hpp"
#include "skig/util/fs.hpp"
#include "skig/util/rng.hpp"

namespace skig::theory {

DiscreteSampler::DiscreteSampler(const std::vector<double>& dist) {
  const size_t m = dist.size();
  if (m == 0) fail(Errc::empty_input, "sampler over empty support");
  prob_.assign(m, 0.0);
  alias_.assign(m, 0);
  std::vector<double> scaled(m);
  for (size_t i = 0; i < m; ++i) scaled[i] = dist[i] * static_cast<double>(m);

  std::vector<size_t> small, large;
  for (size_t i = 0; i < m; ++i) (scaled[i] < 1.0 ? small : large).push_back(i);
  while (!small.empty() && !large.empty()) {
    size_t s = small.back();
    small.pop_back();
    size_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (size_t i : large) prob_[i] = 1.0;
  for (size_t i : small) prob_[i] = 1.0;
}

BoundExperiment make_bound_experiment(const DecisionModel& model, size_t action, size_t n,
                                      double t, size_t trials) {
  if (action >= model.actions.size()) fail(Errc::invalid_argument, "action index out of range");
  if (n < 1 || trials < 1) fail(Errc::invalid_argument, "n and trials must be >= 1");
  if (!(t > 0.0)) fail(Errc::invalid_argument, "slack t must be positive");
  BoundExperiment exp;
  exp.model = model;
  exp.action = action;
  exp.n = n;
  exp.t = t;
  exp.trials = trials;
  exp.g = composed_utilities(model);
  const auto& sampling = model.model_dist[action];
  const double mean = expected_value(sampling, exp.g);
  double second = 0.0;
  for (size_t x = 0; x < exp.g.size(); ++x) second += sampling[x] * exp.g[x] * exp.g[x];
  exp.sigma2 = std::max(0.0, second - mean * mean);
  exp.g_inf = 0.0;
  for (double v : exp.g) exp.g_inf = std::max(exp.g_inf, std::abs(v));
  exp.tv = tv_distance(model.true_dist[action], sampling);
  return exp;
}

namespace {

// One trial: empirical mean of G over n draws, compared against E_true[G].
bool trial_violates(const BoundExperiment& exp, const DiscreteSampler& sampler,
                    double true_mean, uint64_t trial_seed) {
  util::Rng rng(trial_seed);
  double sum = 0.0;
  for (size_t i = 0; i < exp.n; ++i) sum += exp.g[sampler.draw(rng)];
  const double deviation = std::abs(true_mean - sum / static_cast<double>(exp.n));
  return deviation >= exp.g_inf * exp.tv + exp.t;
}

}  // namespace

BoundResult verify_bound(const BoundExperiment& exp, uint64_t seed, ExecutionPolicy policy) {
  const DiscreteSampler sampler(exp.model.model_dist[exp.action]);
  const double true_mean = expected_value(exp.model.true_dist[exp.action], exp.g);

  const int64_t trials = static_cast<int64_t>(exp.trials);
  uint64_t violations = 0;
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : violations)
    for (int64_t trial = 0; trial < trials; ++trial) {
      violations += trial_violates(exp, sampler, true_mean,
                                   util::derive_seed(seed, {static_cast<uint64_t>(trial)}))
                        ? 1u
                        : 0u;
    }
  } else {
    for (int64_t trial = 0; trial < trials; ++trial) {
      violations += trial_violates(exp, sampler, true_mean,
                                   util::derive_seed(seed, {static_cast<uint64_t>(trial)}))
                        ? 1u
                        : 0u;
    }
  }

  BoundResult result;
  result.violations = violations;
  result.violation_rate = static_cast<double>(violations) / static_cast<double>(exp.trials);
  result.bound = exp.sigma2 / (static_cast<double>(exp.n) * exp.t * exp.t);
  if (result.bound >= 1.0) {
    result.satisfied = true;  // probability cannot exceed 1
  } else {
    const double slack =
        3.0 * std::sqrt(result.bound * (1.0 - result.bound) / static_cast<double>(exp.trials));
    result.satisfied = result.violation_rate <= result.bound + slack;
  }
  return result;
}

std::vector<double> shift_distribution(const std::vector<double>& dist, double tv) {
  if (tv < 0.0 || tv > 1.0) fail(Errc::invalid_argument, "tv must lie in [0,1]");
  std::vector<double> out = dist;
  if (tv == 0.0) return out;

  size_t recipient = 0;
  for (size_t i = 1; i < out.size(); ++i) {
    if (out[i] < out[recipient]) recipient = i;
  }
  std::vector<size_t> donors;
  for (size_t i = 0; i < out.size(); ++i) {
    if (i != recipient) donors.push_back(i);
  }
  std::sort(donors.begin(), donors.end(),
            [&](size_t a, size_t b) { return out[a] > out[b]; });

  double remaining = tv;
  for (size_t d : donors) {
    if (remaining <= 0.0) break;
    double take = std::min(out[d], remaining);
    out[d] -= take;
    remaining -= take;
  }
  if (remaining > 1e-15) fail(Errc::invalid_argument, "tv shift infeasible for this distribution");
  out[recipient] += tv;
  return out;
}

DecisionModel make_synthetic_model(uint64_t seed, const FamilyOptions& options, double tv,
                                   Aggregator aggregator) {
  util::Rng rng(seed);
  DecisionModel model;
  {
    std::ostringstream id;
    id << "syn" << std::hex << (seed & 0xffffu) << std::dec << "_tv" << tv;
    model.id = id.str();
  }
  model.scenario_count = options.scenario_count;
  model.aggregator = aggregator;
  for (size_t a = 0; a < options.action_count; ++a) {
    model.actions.push_back("a" + std::to_string(a));
    std::vector<double> base(options.scenario_count);
    double sum = 0.0;
    for (double& p : base) {
      p = 0.05 + rng.uniform01();  // floor keeps every scenario reachable
      sum += p;
    }
    for (double& p : base) p /= sum;
    // renormalization drift is fine; validate() allows 1e-12 and the floor
    // plus division keeps us well inside it
    model.model_dist.push_back(base);
    model.true_dist.push_back(shift_distribution(base, tv));
  }
  for (size_t x = 0; x < options.scenario_count; ++x) {
    std::vector<double> row(options.stakeholder_count);
    for (double& u : row) u = rng.uniform01();
    model.utilities.push_back(row);
  }
  model.validate();
  return model;
}

std::vector<SweepRow> sweep(const SweepOptions& options) {
  if (options.n_grid.empty() || options.tv_grid.empty() || options.t_grid.empty()) {
    fail(Errc::empty_input, "sweep grids must be non-empty");
  }
  static const Aggregator kAggregators[] = {Aggregator::mean, Aggregator::min_rawls,
                                            Aggregator::nash_product};
  std::vector<SweepRow> rows;
  uint64_t cell = 0;
  for (size_t tv_i = 0; tv_i < options.tv_grid.size(); ++tv_i) {
    const double tv = options.tv_grid[tv_i];
    for (size_t m_i = 0; m_i < options.models_per_tv; ++m_i) {
      const Aggregator agg = kAggregators[m_i % 3];
      const uint64_t model_seed = util::derive_seed(options.seed, {0xfa, tv_i, m_i});
      const DecisionModel model = make_synthetic_model(model_seed, options.family, tv, agg);
      const size_t action = m_i % options.family.action_count;
      for (size_t n : options.n_grid) {
        for (double t : options.t_grid) {
          const BoundExperiment exp = make_bound_experiment(model, action, n, t, options.trials);
          const BoundResult res =
              verify_bound(exp, util::derive_seed(options.seed, {0xce11, cell}), options.policy);
          ++cell;
          SweepRow row;
          row.model_id = model.id;
          row.n = n;
          row.tv = exp.tv;
          row.t = t;
          row.sigma2 = exp.sigma2;
          row.g_inf = exp.g_inf;
          row.rate = res.violation_rate;
          row.bound = res.bound;
          row.satisfied = res.satisfied;
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "model_id,n,tv,t,sigma2,g_inf,rate,bound,satisfied\n";
  out.precision(12);
  for (const auto& r : rows) {
    out << r.model_id << ',' << r.n << ',' << r.tv << ',' << r.t << ',' << r.sigma2 << ','
        << r.g_inf << ',' << r.rate << ',' << r.bound << ',' << (r.satisfied ? 1 : 0) << '\n';
  }
  util::write_file_atomic(path, out.str());
}

}  // namespace skig::theory
