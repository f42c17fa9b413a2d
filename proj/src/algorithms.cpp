#include "drsub/algorithms.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace drsub {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// c_f for trace metadata; falls back to the box estimate away from the
// origin, NaN when neither applies.
double curvature_for_meta(const Objective& obj, const FeasibleSet& set) {
  try {
    return set.contains_origin() ? curvature(obj, set) : curvature_no_origin(obj, set);
  } catch (const std::exception&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

void record(Trace& t, const Objective& obj, const Vector& x, int k, Clock::time_point start) {
  t.iterates.push_back(x);
  t.values.push_back(obj.value(x));
  t.step_index.push_back(k);
  t.elapsed_s.push_back(seconds_since(start));
}

}  // namespace

void Trace::validate() const {
  size_t n = iterates.size();
  if (values.size() != n || step_index.size() != n || elapsed_s.size() != n) {
    throw std::logic_error("Trace: parallel arrays disagree in length");
  }
  if (meta.algorithm == "pga") {
    for (size_t k = 1; k < n; ++k) {
      if (values[k] < values[k - 1] - 1e-9) {
        throw std::logic_error("Trace: pga values decreased at step " + std::to_string(k));
      }
    }
  }
}

StepRule StepRule::strongly_convex(double mu) {
  if (!(mu > 0)) throw std::invalid_argument("StepRule: mu must be > 0");
  StepRule r;
  r.kind = Kind::StronglyConvex;
  r.mu = mu;
  return r;
}

StepRule StepRule::fixed(double R, double beta, int T) {
  if (!(R > 0) || !(beta > 0) || T < 1) {
    throw std::invalid_argument("StepRule: R, beta and T must be positive");
  }
  StepRule r;
  r.kind = Kind::Fixed;
  r.R = R;
  r.beta = beta;
  r.T = T;
  return r;
}

double StepRule::eta(int t) const {
  if (t < 1) throw std::invalid_argument("StepRule: t is 1-based");
  return kind == Kind::StronglyConvex ? 1.0 / (mu * t) : R / (beta * std::sqrt(T));
}

Trace sdrfw(const Objective& obj, const FeasibleSet& set, double mu, double L, int K_override) {
  if (!set.contains_origin()) {
    throw std::invalid_argument("sdrfw: feasible set must contain the origin");
  }
  if (!(mu > 0)) {
    throw std::invalid_argument("sdrfw: mu must be > 0 (use fw_baseline for mu = 0)");
  }
  if (!(L >= mu)) throw std::invalid_argument("sdrfw: requires L >= mu");
  int K = K_override > 0 ? K_override : static_cast<int>(std::ceil(L / mu));

  auto start = Clock::now();
  int n = obj.dim();
  Vector ell = ell_vector(obj, set);
  double c_f = curvature_for_meta(obj, set);

  Trace trace;
  trace.meta.algorithm = "sdrfw";
  trace.meta.K = K;
  trace.meta.mu = mu;
  trace.meta.L = L;
  trace.meta.c_f = c_f;
  trace.meta.guarantee_ratio = 1.0 - c_f / std::exp(1.0);
  trace.meta.f_start = obj.value(zeros(n));

  Vector x = zeros(n);
  record(trace, obj, x, 0, start);
  for (int k = 0; k < K; ++k) {
    // coefficient (1 - 1/K)^(K-k-1), with the exponent-0 step defined as 1
    int e = K - k - 1;
    double coef = e == 0 ? 1.0 : std::pow(1.0 - 1.0 / K, e);
    // w = coef * grad g(x_k) + ell, where g = f - <ell, .>
    Vector w = obj.gradient(x);
    for (int i = 0; i < n; ++i) w[i] = coef * (w[i] - ell[i]) + ell[i];
    Vector v = set.reg_linear_max(w, mu * coef);
    axpy(x, 1.0 / K, v);
    record(trace, obj, x, k + 1, start);
  }
  return trace;
}

Trace fw_baseline(const Objective& obj, const FeasibleSet& set, int K, double L_for_meta) {
  if (!set.contains_origin()) {
    throw std::invalid_argument("fw_baseline: feasible set must contain the origin");
  }
  if (K < 1) throw std::invalid_argument("fw_baseline: K must be >= 1");

  auto start = Clock::now();
  Trace trace;
  trace.meta.algorithm = "fw_baseline";
  trace.meta.K = K;
  trace.meta.L = L_for_meta;
  trace.meta.c_f = curvature_for_meta(obj, set);
  trace.meta.guarantee_ratio = 1.0 - std::exp(-1.0);
  double R = set.diameter();
  trace.meta.additive_slack = (L_for_meta * R * R) / (2.0 * K);
  trace.meta.f_start = obj.value(zeros(obj.dim()));

  Vector x = zeros(obj.dim());
  record(trace, obj, x, 0, start);
  for (int k = 0; k < K; ++k) {
    Vector v = set.linear_max(obj.gradient(x));
    axpy(x, 1.0 / K, v);
    record(trace, obj, x, k + 1, start);
  }
  return trace;
}

Trace pga(const Objective& obj, const FeasibleSet& set, const Vector& x1, double L, int K,
          std::optional<double> opt_estimate) {
  if (!set.contains(x1, 1e-8)) throw std::invalid_argument("pga: x1 is not feasible");
  if (!(L > 0)) throw std::invalid_argument("pga: L must be > 0");
  if (K < 1) throw std::invalid_argument("pga: K must be >= 1");

  auto start = Clock::now();
  double mu = obj.mu();
  double c_f = curvature_for_meta(obj, set);

  Trace trace;
  trace.meta.algorithm = "pga";
  trace.meta.K = K;
  trace.meta.mu = mu;
  trace.meta.L = L;
  trace.meta.c_f = c_f;
  trace.meta.guarantee_ratio = 1.0 / (1.0 + c_f);
  trace.meta.f_start = obj.value(x1);
  if (opt_estimate) {
    double opt = *opt_estimate;
    trace.meta.guarantee_value =
        opt / (1.0 + c_f) -
        std::exp(-mu * K / L) / (1.0 + c_f) * (opt - (1.0 + c_f) * obj.value(x1));
  }

  Vector x = x1;
  record(trace, obj, x, 1, start);
  for (int k = 1; k <= K; ++k) {
    Vector y = x;
    axpy(y, 1.0 / L, obj.gradient(x));
    x = set.project(y);
    record(trace, obj, x, k + 1, start);
  }
  return trace;
}

Trace oga(const std::vector<const Objective*>& stream, const FeasibleSet& set, const Vector& x1,
          const StepRule& rule) {
  if (stream.empty()) throw std::invalid_argument("oga: stream must contain at least one objective");
  if (!set.contains(x1, 1e-8)) throw std::invalid_argument("oga: x1 is not feasible");

  auto start = Clock::now();
  Trace trace;
  trace.meta.algorithm = "oga";
  trace.meta.K = static_cast<int>(stream.size());
  trace.meta.mu = rule.kind == StepRule::Kind::StronglyConvex ? rule.mu : 0.0;

  Vector x = x1;
  for (size_t t = 0; t < stream.size(); ++t) {
    const Objective& f = *stream[t];
    record(trace, f, x, static_cast<int>(t) + 1, start);
    Vector y = x;
    axpy(y, rule.eta(static_cast<int>(t) + 1), f.gradient(x));
    x = set.project(y);
  }
  return trace;
}

double alpha_regret(const Trace& trace, const std::vector<const Objective*>& stream,
                    const FeasibleSet& set, double alpha, const Vector& opt_point) {
  if (trace.values.size() != stream.size()) {
    throw std::invalid_argument("alpha_regret: trace and stream lengths differ");
  }
  if (!set.contains(opt_point, 1e-8)) {
    throw std::invalid_argument("alpha_regret: opt_point is not feasible");
  }
  double best = 0, got = 0;
  for (size_t t = 0; t < stream.size(); ++t) {
    best += stream[t]->value(opt_point);
    got += trace.values[t];
  }
  return alpha * best - got;
}

}  // namespace drsub
