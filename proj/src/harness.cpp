#include "drsub/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace drsub {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Emission

void write_trace_csv(std::ostream& out, const Trace& trace, const std::vector<double>* estimates,
                     bool dump_iterates) {
  trace.validate();
  out << "iter,f_value,estimate,elapsed_s";
  if (dump_iterates && !trace.iterates.empty()) {
    for (size_t i = 0; i < trace.iterates[0].size(); ++i) out << ",x" << i + 1;
  }
  out << "\n";
  for (size_t k = 0; k < trace.values.size(); ++k) {
    out << trace.step_index[k] << "," << format_double(trace.values[k]) << ",";
    if (estimates && k < estimates->size()) out << format_double((*estimates)[k]);
    out << "," << format_double(trace.elapsed_s[k]);
    if (dump_iterates) {
      for (double x : trace.iterates[k]) out << "," << format_double(x);
    }
    out << "\n";
  }
}

void write_table_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "s,algorithm,final_value,K,L,mu,c_f\n";
  for (const auto& r : rows) {
    out << format_double(r.s) << "," << r.algorithm << "," << format_double(r.final_value) << ","
        << r.K << "," << format_double(r.L) << "," << format_double(r.mu) << ","
        << format_double(r.c_f) << "\n";
  }
}

namespace {

void put_if_finite(json& j, const char* key, double v) {
  if (std::isfinite(v)) j[key] = v;
}

}  // namespace

json trace_to_json(const Trace& trace, const std::vector<double>* estimates, bool dump_iterates) {
  trace.validate();
  json meta;
  meta["algorithm"] = trace.meta.algorithm;
  meta["K"] = trace.meta.K;
  put_if_finite(meta, "mu", trace.meta.mu);
  put_if_finite(meta, "L", trace.meta.L);
  put_if_finite(meta, "c_f", trace.meta.c_f);
  put_if_finite(meta, "guarantee_ratio", trace.meta.guarantee_ratio);
  put_if_finite(meta, "additive_slack", trace.meta.additive_slack);
  put_if_finite(meta, "guarantee_value", trace.meta.guarantee_value);
  put_if_finite(meta, "f_start", trace.meta.f_start);

  json rows = json::array();
  for (size_t k = 0; k < trace.values.size(); ++k) {
    json row;
    row["iter"] = trace.step_index[k];
    row["f_value"] = trace.values[k];
    if (estimates && k < estimates->size()) row["estimate"] = (*estimates)[k];
    row["elapsed_s"] = trace.elapsed_s[k];
    rows.push_back(std::move(row));
  }
  json j;
  j["type"] = "trace";
  j["meta"] = std::move(meta);
  j["rows"] = std::move(rows);
  if (dump_iterates) {
    json its = json::array();
    for (const auto& x : trace.iterates) its.push_back(x);
    j["iterates"] = std::move(its);
  }
  return j;
}

json table_to_json(const std::vector<ExperimentRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["s"] = r.s;
    row["algorithm"] = r.algorithm;
    row["final_value"] = r.final_value;
    row["K"] = r.K;
    row["L"] = r.L;
    row["mu"] = r.mu;
    if (std::isfinite(r.c_f)) row["c_f"] = r.c_f;
    arr.push_back(std::move(row));
  }
  json j;
  j["type"] = "table";
  j["rows"] = std::move(arr);
  return j;
}

json report_to_json(const CheckReport& report) {
  json j;
  j["name"] = report.name;
  j["pass"] = report.pass;
  j["samples"] = report.samples;
  j["violations"] = report.violations;
  j["precondition_skips"] = report.precondition_skips;
  j["worst"] = report.worst;
  if (!std::isnan(report.min_value)) j["min_value"] = report.min_value;
  j["notes"] = report.notes;
  return j;
}

// ---------------------------------------------------------------------------
// Instance generation and config factories

QuadraticObjective random_monotone_quadratic(int n, Rng& rng, double mu, double entry_lo,
                                             double entry_hi, double margin_lo, double margin_hi) {
  std::vector<double> entries(static_cast<size_t>(n) * n);
  for (auto& e : entries) e = rng.uniform(entry_lo, entry_hi);
  SymMatrix H(n, entries);
  // gradient at the all-ones corner equals the margin, so the objective is
  // monotone on [0,1]^n and the curvature is strictly below 1
  Vector h(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += H(i, j);
    h[i] = -row + rng.uniform(margin_lo, margin_hi);
  }
  return QuadraticObjective(std::move(H), std::move(h), 0.0, mu);
}

namespace {

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  Vector v;
  for (const auto& e : j) v.push_back(e.get<double>());
  return v;
}

SymMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(std::string(what) + ": expected a 2-d array");
  int n = static_cast<int>(j.size());
  std::vector<double> flat;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument(std::string(what) + ": expected an n x n array");
    }
    for (const auto& e : row) flat.push_back(e.get<double>());
  }
  return SymMatrix(n, flat);
}

}  // namespace

Graph graph_from_config(const json& cfg) {
  if (cfg.contains("graph")) {
    std::string fmt = cfg.value("graph_format", "edgelist");
    return parse_graph(cfg.at("graph").get<std::string>(),
                       fmt == "dimacs" ? GraphFormat::Dimacs : GraphFormat::Edgelist);
  }
  if (cfg.contains("edges")) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : cfg.at("edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    int n = cfg.contains("n") ? cfg.at("n").get<int>() : 0;
    if (n == 0) {
      for (const auto& [u, v] : edges) n = std::max({n, u, v});
    }
    return Graph::from_edges(n, std::move(edges));
  }
  throw std::invalid_argument("graph config needs a 'graph' path or inline 'edges'");
}

std::unique_ptr<Objective> make_objective(const json& cfg, uint64_t seed) {
  std::string family = cfg.at("family").get<std::string>();
  if (family == "quadratic") {
    return std::make_unique<QuadraticObjective>(matrix_from_json(cfg.at("H"), "H"),
                                                vector_from_json(cfg.at("h"), "h"),
                                                cfg.value("c0", 0.0), cfg.value("mu", 0.0));
  }
  if (family == "linear") {
    Vector h = vector_from_json(cfg.at("h"), "h");
    int n = static_cast<int>(h.size());
    return std::make_unique<QuadraticObjective>(SymMatrix(n), std::move(h), cfg.value("c0", 0.0),
                                                0.0);
  }
  if (family == "quadratic_product") {
    SymMatrix dummy = matrix_from_json(cfg.at("H"), "H");  // validates shape
    int n = dummy.n();
    std::vector<double> flat;
    for (const auto& row : cfg.at("H")) {
      for (const auto& e : row) flat.push_back(e.get<double>());
    }
    return std::make_unique<QuadraticObjective>(
        QuadraticObjective::from_product_form(n, flat, cfg.value("mu", 0.0)));
  }
  if (family == "quadratic_random") {
    int n = cfg.at("n").get<int>();
    uint64_t s = cfg.value("seed", seed);
    Rng rng(s);
    double mu = cfg.value("mu", 5.0);
    double lo = cfg.value("entry_low", -10.0), hi = cfg.value("entry_high", -5.0);
    std::string form = cfg.value("form", "monotone");
    if (form == "product") {
      std::vector<double> entries(static_cast<size_t>(n) * n);
      for (auto& e : entries) e = rng.uniform(lo, hi);
      return std::make_unique<QuadraticObjective>(
          QuadraticObjective::from_product_form(n, entries, mu));
    }
    return std::make_unique<QuadraticObjective>(random_monotone_quadratic(
        n, rng, mu, lo, hi, cfg.value("margin_low", 0.5), cfg.value("margin_high", 3.0)));
  }
  if (family == "stability") {
    return std::make_unique<StabilityObjective>(graph_from_config(cfg).adjacency());
  }
  if (family == "ndpoly") {
    std::vector<NegativeDependencePoly::DiagTerm> diag;
    for (const auto& d : cfg.at("diag")) {
      std::string type = d.at("type").get<std::string>();
      if (type == "quadratic") {
        diag.push_back(
            NegativeDependencePoly::QuadraticTerm{d.at("a").get<double>(), d.at("b").get<double>()});
      } else if (type == "power") {
        diag.push_back(
            NegativeDependencePoly::PowerTerm{d.at("a").get<double>(), d.at("p").get<double>()});
      } else {
        throw std::invalid_argument("ndpoly diag type must be 'quadratic' or 'power'");
      }
    }
    std::vector<NegativeDependencePoly::Interaction> inter;
    for (const auto& t : cfg.value("interactions", json::array())) {
      NegativeDependencePoly::Interaction it;
      for (const auto& ix : t.at("indices")) it.indices.push_back(ix.get<int>());
      it.theta = t.at("theta").get<double>();
      inter.push_back(std::move(it));
    }
    return std::make_unique<NegativeDependencePoly>(
        std::move(diag), std::move(inter), cfg.value("mu", 0.0),
        vector_from_json(cfg.at("domain_lower"), "domain_lower"),
        vector_from_json(cfg.at("domain_upper"), "domain_upper"));
  }
  if (family == "meanfield_kl") {
    int n = cfg.at("n").get<int>();
    double delta = cfg.value("delta", 0.1);
    std::vector<double> values;
    if (cfg.contains("values")) {
      for (const auto& v : cfg.at("values")) values.push_back(v.get<double>());
    } else if (cfg.value("recipe", "") == "sqrt_card") {
      values.resize(size_t{1} << n);
      for (size_t mask = 0; mask < values.size(); ++mask) {
        values[mask] = std::sqrt(static_cast<double>(__builtin_popcountll(mask)));
      }
    } else {
      throw std::invalid_argument("meanfield_kl needs 'values' or recipe 'sqrt_card'");
    }
    return std::make_unique<MeanFieldKLObjective>(n, std::move(values), delta);
  }
  throw std::invalid_argument("unknown objective family: " + family);
}

std::unique_ptr<FeasibleSet> make_set(const json& cfg) {
  std::string type = cfg.at("type").get<std::string>();
  if (type == "box") {
    return std::make_unique<BoxSet>(vector_from_json(cfg.at("lower"), "lower"),
                                    vector_from_json(cfg.at("upper"), "upper"));
  }
  if (type == "simplex") {
    return std::make_unique<SimplexSet>(cfg.at("n").get<int>(), cfg.value("radius", 1.0));
  }
  if (type == "budget_box") {
    return std::make_unique<BudgetBoxSet>(vector_from_json(cfg.at("upper"), "upper"),
                                          cfg.at("budget").get<double>());
  }
  throw std::invalid_argument("unknown set type: " + type);
}

// ---------------------------------------------------------------------------
// Experiments

QuadraticExperimentResult run_quadratic_experiment(int n, const std::vector<double>& s_in,
                                                   uint64_t seed) {
  if (s_in.empty()) throw std::invalid_argument("run_quadratic_experiment: no budgets given");
  std::vector<double> s_values = s_in;
  std::sort(s_values.begin(), s_values.end());
  Rng rng(seed);
  std::vector<double> entries(static_cast<size_t>(n) * n);
  for (auto& e : entries) e = rng.uniform(-10.0, -5.0);
  const double mu = 5.0;
  QuadraticObjective obj = QuadraticObjective::from_product_form(n, entries, mu);

  QuadraticExperimentResult result;
  {
    BudgetBoxSet probe(constant_vector(n, 1.0), s_values.front());
    result.L = smoothness_constant(obj, probe, SmoothnessMode::Constant).L;
  }
  result.K = static_cast<int>(std::ceil(result.L / mu));

  for (double s : s_values) {
    BudgetBoxSet set(constant_vector(n, 1.0), s);
    double c_f;
    try {
      c_f = curvature(obj, set);
    } catch (const std::exception&) {
      c_f = std::numeric_limits<double>::quiet_NaN();
    }
    Trace t1 = sdrfw(obj, set, mu, result.L);
    Trace t2 = fw_baseline(obj, set, result.K, result.L);
    Trace t3 = pga(obj, set, zeros(n), result.L, result.K);
    for (const Trace* t : {&t1, &t2, &t3}) {
      result.rows.push_back(
          {s, t->meta.algorithm, t->final_value(), result.K, result.L, mu, c_f});
    }
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const auto& a, const auto& b) {
    return a.s != b.s ? a.s < b.s : a.algorithm < b.algorithm;
  });

  BudgetBoxSet largest(constant_vector(n, 1.0), s_values.back());
  result.monotonicity = monotonicity_check(obj, largest, 200, Rng(seed).split(17).next_u64());
  return result;
}

StabilityResult run_stability(const Graph& g, int iterations, const std::optional<Vector>& x1) {
  if (g.n < 1) throw std::invalid_argument("run_stability: empty graph");
  if (iterations < 1) throw std::invalid_argument("run_stability: iterations must be >= 1");
  if (x1 && static_cast<int>(x1->size()) != g.n) {
    throw std::invalid_argument("run_stability: x1 must have one entry per vertex");
  }

  StabilityResult result;
  auto comps = g.components();
  result.components = static_cast<int>(comps.size());
  result.value_series.assign(static_cast<size_t>(iterations) + 1, 0.0);
  result.estimate_series.assign(static_cast<size_t>(iterations) + 1, 0.0);
  result.elapsed_series.assign(static_cast<size_t>(iterations) + 1, 0.0);
  result.min_sampled_f = std::numeric_limits<double>::infinity();

  Rng sample_rng(0x57ab1eull);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    Graph sub = g.induced(comps[ci]);
    StabilityObjective obj(sub.adjacency());
    SimplexSet set(sub.n, 1.0);
    double L = smoothness_constant(obj, set, SmoothnessMode::Constant).L;
    result.L = std::max(result.L, L);

    Vector start;
    if (x1) {
      for (int v : comps[ci]) start.push_back((*x1)[static_cast<size_t>(v) - 1]);
    } else {
      start = constant_vector(sub.n, 1.0 / sub.n);
    }
    Trace trace = pga(obj, set, start, L, iterations);
    for (size_t k = 0; k < trace.values.size(); ++k) {
      result.value_series[k] += trace.values[k];
      result.estimate_series[k] += 1.0 / (2.0 - trace.values[k]);
      result.elapsed_series[k] += trace.elapsed_s[k];
      result.min_sampled_f = std::min(result.min_sampled_f, trace.values[k]);
    }
    // report the smallest f seen on the component simplex (the PGA bounds
    // assume a non-negative objective)
    Rng rng = sample_rng.split(ci);
    for (int s = 0; s < 200; ++s) {
      result.min_sampled_f = std::min(result.min_sampled_f, obj.value(sample_feasible(set, rng)));
    }
    result.component_traces.push_back(std::move(trace));
  }
  result.final_estimate = result.estimate_series.back();
  return result;
}

OnlineResult run_online(const OnlineConfig& cfg) {
  if (cfg.T < 1 || cfg.n < 1) throw std::invalid_argument("run_online: T and n must be positive");
  Rng rng(cfg.seed);
  double mu_declared = cfg.strongly_convex ? cfg.mu : 0.0;
  if (cfg.strongly_convex && !(cfg.mu > 0)) {
    throw std::invalid_argument("run_online: strongly convex rule needs mu > 0");
  }

  std::vector<QuadraticObjective> objs;
  objs.reserve(static_cast<size_t>(cfg.T));
  for (int t = 0; t < cfg.T; ++t) {
    Rng stream_rng = rng.split(static_cast<uint64_t>(t));
    objs.push_back(random_monotone_quadratic(cfg.n, stream_rng, mu_declared));
  }
  std::vector<const Objective*> stream;
  for (const auto& o : objs) stream.push_back(&o);

  BoxSet set(zeros(cfg.n), constant_vector(cfg.n, 1.0));
  OnlineResult result;
  result.R = set.diameter();

  // c = max_t curvature; beta = max_t sup ||grad f_t|| (sampled points plus
  // the box corners; for these monotone instances the origin attains it)
  Rng beta_rng = rng.split(0xbe7a);
  for (const auto* f : stream) {
    result.c = std::max(result.c, curvature(*f, set));
    result.beta = std::max(result.beta, norm2(f->gradient(set.lower_corner())));
    result.beta = std::max(result.beta, norm2(f->gradient(set.upper_corner())));
    for (int s = 0; s < 4; ++s) {
      result.beta = std::max(result.beta, norm2(f->gradient(sample_feasible(set, beta_rng))));
    }
  }
  result.alpha = 1.0 / (1.0 + result.c);

  StepRule rule = cfg.strongly_convex
                      ? StepRule::strongly_convex(cfg.mu)
                      : StepRule::fixed(result.R, result.beta, cfg.T);
  result.trace = oga(stream, set, zeros(cfg.n), rule);

  // Per-prefix grid optimum of the running sum, evaluated incrementally over
  // the fixed feasible grid.
  std::vector<Vector> grid;
  {
    Vector lo = set.lower_corner(), hi = set.upper_corner();
    std::vector<int> steps(static_cast<size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) {
      steps[i] = static_cast<int>(std::floor((hi[i] - lo[i]) / cfg.grid_resolution + 1e-9));
    }
    std::vector<int> idx(static_cast<size_t>(cfg.n), 0);
    while (true) {
      Vector x(static_cast<size_t>(cfg.n));
      for (int i = 0; i < cfg.n; ++i) {
        x[i] = std::min(lo[i] + idx[i] * cfg.grid_resolution, hi[i]);
      }
      if (set.contains(x, 1e-9)) grid.push_back(std::move(x));
      int d = 0;
      while (d < cfg.n && ++idx[d] > steps[d]) idx[d++] = 0;
      if (d == cfg.n) break;
    }
  }
  std::vector<double> grid_sum(grid.size(), 0.0);
  double reward_sum = 0;
  for (int t = 0; t < cfg.T; ++t) {
    for (size_t p = 0; p < grid.size(); ++p) grid_sum[p] += objs[static_cast<size_t>(t)].value(grid[p]);
    reward_sum += result.trace.values[static_cast<size_t>(t)];
    double best = *std::max_element(grid_sum.begin(), grid_sum.end());
    result.cumulative_regret.push_back(result.alpha * best - reward_sum);
    double bound = cfg.strongly_convex
                       ? result.beta * result.beta * (1.0 + std::log(t + 1.0)) /
                             (2.0 * cfg.mu * (1.0 + result.c))
                       : result.R * result.beta * std::sqrt(static_cast<double>(cfg.T)) /
                             (1.0 + result.c);
    result.bound_curve.push_back(bound);
  }
  return result;
}

}  // namespace drsub
