#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drsub/algorithms.hpp"
#include "drsub/graph.hpp"
#include "drsub/objectives.hpp"
#include "drsub/oracles.hpp"
#include "drsub/report.hpp"
#include "drsub/rng.hpp"
#include "drsub/smoothness.hpp"

namespace drsub {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Config-driven construction. The config format is a flat JSON document; see
// the repository README for the schema.

std::unique_ptr<Objective> make_objective(const json& cfg, uint64_t seed);
std::unique_ptr<FeasibleSet> make_set(const json& cfg);
// Reads either a "graph" file path (with optional "graph_format") or inline
// "edges" (+ optional "n").
Graph graph_from_config(const json& cfg);

// Random monotone mu-strongly DR-submodular quadratic on [0,1]^n: symmetric H
// with entries drawn from [entry_lo, entry_hi] (negative), and h chosen so
// that the gradient at the box's upper corner equals a positive margin.
QuadraticObjective random_monotone_quadratic(int n, Rng& rng, double mu, double entry_lo = -10.0,
                                             double entry_hi = -5.0, double margin_lo = 0.5,
                                             double margin_hi = 3.0);

// ---------------------------------------------------------------------------
// Experiments

struct ExperimentRow {
  double s = 0;
  std::string algorithm;
  double final_value = 0;
  int K = 0;
  double L = 0;
  double mu = 0;
  double c_f = 0;
};

struct QuadraticExperimentResult {
  std::vector<ExperimentRow> rows;  // sorted by (s, algorithm)
  CheckReport monotonicity;         // sampled on the largest budget
  double L = 0;
  int K = 0;
};

// The budget-sweep comparison: one random product-form quadratic (entries in
// [-10,-5], mu = 5), sdrfw / fw_baseline / pga on {1^T x <= s, 0 <= x <= 1}
// for each s.
QuadraticExperimentResult run_quadratic_experiment(int n, const std::vector<double>& s_values,
                                                   uint64_t seed);

struct StabilityResult {
  std::vector<Trace> component_traces;
  // Summed across components, per PGA iteration (index 0 = initial point).
  std::vector<double> value_series;
  std::vector<double> estimate_series;  // sum of 1 / (2 - f_c(x_k))
  std::vector<double> elapsed_series;
  double final_estimate = 0;
  double min_sampled_f = 0;  // smallest objective value seen while sampling
  int components = 0;
  double L = 0;  // largest component smoothness constant
};

// PGA on the Motzkin-Straus objective of each connected component (simplex
// domain, mu = 2, L from the Perron-Frobenius eigenvalue); stability-number
// estimates of components sum. x1 defaults to the uniform simplex point.
StabilityResult run_stability(const Graph& g, int iterations,
                              const std::optional<Vector>& x1 = std::nullopt);

struct OnlineConfig {
  int T = 1000;
  int n = 3;
  uint64_t seed = 1;
  bool strongly_convex = true;  // eta_t = 1/(mu t); otherwise fixed R/(beta sqrt(T))
  double mu = 5.0;              // declared strong parameter of the stream
  double grid_resolution = 0.05;
};

struct OnlineResult {
  Trace trace;
  // cumulative_regret[t] = alpha * max_grid sum_{u<=t} f_u - sum_{u<=t} reward_u
  std::vector<double> cumulative_regret;
  std::vector<double> bound_curve;
  double alpha = 0;
  double beta = 0;
  double c = 0;
  double R = 0;
};

// OGA over a seeded stream of random monotone strongly DR quadratics on
// [0,1]^n, with per-prefix grid optima and the matching regret bound curve.
OnlineResult run_online(const OnlineConfig& cfg);

// ---------------------------------------------------------------------------
// Emission. CSV trace columns: iter,f_value,estimate,elapsed_s (estimate
// left empty when absent); experiment tables: s,algorithm,final_value,K,L,
// mu,c_f. Floats are printed with 17 significant digits.

void write_trace_csv(std::ostream& out, const Trace& trace,
                     const std::vector<double>* estimates = nullptr, bool dump_iterates = false);
void write_table_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
json trace_to_json(const Trace& trace, const std::vector<double>* estimates = nullptr,
                   bool dump_iterates = false);
json table_to_json(const std::vector<ExperimentRow>& rows);
json report_to_json(const CheckReport& report);
std::string format_double(double v);  // %.17g

// Writes to the given path, or stdout when path is "-" or empty.
void emit_text(const std::string& path, const std::string& content);

}  // namespace drsub
