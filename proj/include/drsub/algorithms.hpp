#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drsub/feasible_sets.hpp"
#include "drsub/numeric.hpp"
#include "drsub/objectives.hpp"

namespace drsub {

struct TraceMeta {
  std::string algorithm;
  int K = 0;
  double mu = std::numeric_limits<double>::quiet_NaN();
  double L = std::numeric_limits<double>::quiet_NaN();
  double c_f = std::numeric_limits<double>::quiet_NaN();
  // Target approximation ratio: (1 - c_f/e), 1/(1+c_f) or (1 - 1/e).
  double guarantee_ratio = std::numeric_limits<double>::quiet_NaN();
  // Additive term of the guarantee, e.g. L R^2 / 2K for the baseline.
  double additive_slack = std::numeric_limits<double>::quiet_NaN();
  // Instantiated lower bound on the final value when an OPT estimate is
  // supplied.
  double guarantee_value = std::numeric_limits<double>::quiet_NaN();
  double f_start = std::numeric_limits<double>::quiet_NaN();
};

// Per-iteration record of an algorithm run. All parallel arrays have equal
// length; iterates[k] is the point whose objective value is values[k].
struct Trace {
  std::vector<Vector> iterates;
  std::vector<double> values;
  std::vector<int> step_index;
  std::vector<double> elapsed_s;
  TraceMeta meta;

  const Vector& final_point() const { return iterates.back(); }
  double final_value() const { return values.back(); }
  void validate() const;  // length agreement; ascent for pga traces
};

// Step-size schedule for online gradient ascent.
struct StepRule {
  enum class Kind { StronglyConvex, Fixed };
  Kind kind = Kind::StronglyConvex;
  double mu = 0;                    // eta_t = 1 / (mu t)
  double R = 0, beta = 0;           // eta = R / (beta sqrt(T))
  int T = 0;

  static StepRule strongly_convex(double mu);
  static StepRule fixed(double R, double beta, int T);
  double eta(int t) const;  // t is 1-based
};

// Frank-Wolfe for monotone mu-strongly DR-submodular maximization: K =
// ceil(L/mu) steps from the origin, each solving a regularized linear
// maximization; the output is the average of the chosen vertices. Reaches a
// (1 - c_f/e) fraction of the optimum.
Trace sdrfw(const Objective& obj, const FeasibleSet& set, double mu, double L, int K_override = 0);

// Classic Frank-Wolfe variant: linear maximization oracle at each step,
// (1 - 1/e) OPT - L R^2 / 2K guarantee. L is only used to fill in the
// guarantee metadata and may be NaN.
Trace fw_baseline(const Objective& obj, const FeasibleSet& set, int K,
                  double L_for_meta = std::numeric_limits<double>::quiet_NaN());

// Projected gradient ascent with step 1/L from a feasible x1; K projected
// steps, values nondecreasing. When opt_estimate is supplied the meta records
// the strongly-DR lower bound on the final value.
Trace pga(const Objective& obj, const FeasibleSet& set, const Vector& x1, double L, int K,
          std::optional<double> opt_estimate = std::nullopt);

// Online gradient ascent over a stream of revealed objectives; plays x_t,
// records the reward f_t(x_t), then takes one projected gradient step.
Trace oga(const std::vector<const Objective*>& stream, const FeasibleSet& set, const Vector& x1,
          const StepRule& rule);

// alpha * sum_t f_t(opt_point) - sum_t reward_t for a trace produced by oga.
double alpha_regret(const Trace& trace, const std::vector<const Objective*>& stream,
                    const FeasibleSet& set, double alpha, const Vector& opt_point);

}  // namespace drsub
