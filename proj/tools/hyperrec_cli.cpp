// Copyright 2026 The HyperRec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hyperrec: command-line front end over the C interface.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperrec/hyperrec.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitParameter = 3;

struct Failure {
  int code;
  std::string message;
  hr_status status = HR_E_INTERNAL;
};

int ExitCodeFor(hr_status s) {
  switch (s) {
    case HR_E_PARSE:
    case HR_E_VALIDATION:
    case HR_E_IO:
    case HR_E_PRECONDITION:
      return kExitInput;
    case HR_E_PARAMETER:
    case HR_E_BUDGET:
    case HR_E_GENERATION:
      return kExitParameter;
    default:
      return kExitInternal;
  }
}

void Check(hr_status s, const std::string& context) {
  if (s != HR_OK) throw Failure{ExitCodeFor(s), context + ": " + hr_last_error(), s};
}

// Runs `f`, turning an undefined-statistic failure into a note.
template <typename F>
std::optional<std::string> Undefined(F&& f) {
  try {
    f();
  } catch (const Failure& e) {
    if (e.status != HR_E_UNDEFINED) throw;
    return e.message;
  }
  return std::nullopt;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Graph = std::unique_ptr<hr_graph, Deleter<hr_graph, hr_graph_free>>;
using Profiles = std::unique_ptr<hr_profiles, Deleter<hr_profiles, hr_profiles_free>>;
using Result = std::unique_ptr<hr_result, Deleter<hr_result, hr_result_free>>;
using Dists = std::unique_ptr<hr_dists, Deleter<hr_dists, hr_dists_free>>;
using Split = std::unique_ptr<hr_split, Deleter<hr_split, hr_split_free>>;
using Curve = std::unique_ptr<hr_curve, Deleter<hr_curve, hr_curve_free>>;
using Matrix =
    std::unique_ptr<hr_satisfaction, Deleter<hr_satisfaction, hr_satisfaction_free>>;

std::string Num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json JsonNum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? std::numeric_limits<double>::quiet_NaN()
                   : s / static_cast<double>(v.size());
}

double SampleSd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double m = Mean(v), ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Relative paths that do not exist here are looked up in $HYPERREC_DATA_DIR.
std::string ResolveInput(const std::string& path) {
  if (path.empty() || fs::exists(path) || fs::path(path).is_absolute()) return path;
  if (const char* dir = std::getenv("HYPERREC_DATA_DIR")) {
    fs::path alt = fs::path(dir) / path;
    if (fs::exists(alt)) return alt.string();
  }
  return path;
}

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitInput, "cannot write '" + path.string() + "'"};
  return out;
}

void WriteJson(const fs::path& path, const json& j) {
  std::ofstream out = OpenOut(path);
  out << j.dump(2) << "\n";
}

struct Common {
  std::string out_dir = ".";
  unsigned threads = 0;
  bool repair_overlap = false;
  std::size_t max_head = 0;
  double alpha = 1.0;
  std::size_t psi_cap = 25;
  bool continue_on_error = false;

  hr_measure_opts Measure(double a) const {
    hr_measure_opts o;
    hr_measure_opts_default(&o);
    o.alpha = a;
    o.psi_cap = psi_cap;
    o.threads = threads;
    o.continue_on_error = continue_on_error ? 1 : 0;
    return o;
  }

  json ToJson() const {
    return {{"out", out_dir},           {"threads", threads},
            {"repair_overlap", repair_overlap}, {"max_head", max_head},
            {"alpha", alpha},           {"psi_cap", psi_cap},
            {"continue_on_error", continue_on_error}};
  }
};

void AddCommon(CLI::App* app, Common& c, bool measuring) {
  app->add_option("-o,--out", c.out_dir, "Output directory")->capture_default_str();
  app->add_option("--threads", c.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();
  app->add_flag("--repair-overlap", c.repair_overlap,
                "Drop head nodes from tails instead of rejecting the arc");
  app->add_option("--max-head", c.max_head, "Skip arcs with larger head sets (0: off)");
  if (measuring) {
    app->add_option("--alpha", c.alpha, "Size-penalty exponent in (0, 1]")
        ->capture_default_str();
    app->add_option("--psi-cap", c.psi_cap, "Largest reduced search space per arc")
        ->capture_default_str();
    app->add_flag("--continue-on-error", c.continue_on_error,
                  "Keep going when an arc exceeds the search budget");
  }
}

// Creates the output directory and records the resolved configuration
// before anything else is written.
void Prepare(const Common& c, const json& config) {
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec) throw Failure{kExitInput, "cannot create '" + c.out_dir + "': " + ec.message()};
  json full = config;
  full["common"] = c.ToJson();
  full["library_version"] = hr_version();
  WriteJson(fs::path(c.out_dir) / "run_config.json", full);
}

Graph Load(const std::string& path, const Common& c) {
  hr_ingest_opts io{c.repair_overlap ? 1 : 0, c.max_head};
  hr_graph* g = nullptr;
  Check(hr_graph_load(ResolveInput(path).c_str(), HR_FORMAT_AUTO, &io, &g),
        "loading " + path);
  return Graph(g);
}

Profiles ComputeProfiles(const hr_graph* g, const hr_measure_opts& o) {
  hr_profiles* p = nullptr;
  Check(hr_profiles_compute(g, &o, &p), "measuring");
  return Profiles(p);
}

Result Evaluate(const hr_profiles* p, double alpha) {
  hr_result* r = nullptr;
  Check(hr_profiles_evaluate(p, alpha, &r), "evaluating alpha " + Num(alpha));
  return Result(r);
}

Result MeasureGraph(const hr_graph* g, const hr_measure_opts& o) {
  hr_result* r = nullptr;
  Check(hr_measure(g, &o, &r), "measuring");
  return Result(r);
}

std::vector<double> Values(const hr_result* r) {
  std::vector<double> v(hr_result_size(r));
  Check(hr_result_values(r, v.data()), "reading values");
  return v;
}

double GraphValue(const hr_result* r) {
  double v = 0.0;
  Check(hr_result_graph_value(r, &v), "hypergraph reciprocity");
  return v;
}

std::size_t FailedArcs(const hr_result* r, std::string* first) {
  std::size_t failed = 0;
  for (std::size_t i = 0; i < hr_result_size(r); ++i) {
    hr_arc_result a;
    Check(hr_result_arc(r, i, &a), "reading arc");
    if (a.error != nullptr) {
      if (failed++ == 0 && first) *first = a.error;
    }
  }
  return failed;
}

void WritePerArc(std::ostream& out, const hr_result* r, double alpha) {
  for (std::size_t i = 0; i < hr_result_size(r); ++i) {
    hr_arc_result a;
    Check(hr_result_arc(r, i, &a), "reading arc");
    out << i << ',' << Num(alpha) << ',' << Num(a.r) << ',' << a.omega << ','
        << a.psi << ',' << a.searched << ',' << a.set_size << '\n';
  }
}

// ---- measure ----

struct MeasureArgs {
  Common common;
  std::string input;
  std::vector<double> alphas;
  bool oracle_check = false;
  std::size_t max_arcs = 10;
};

int RunMeasure(const MeasureArgs& a) {
  std::vector<double> alphas = a.alphas.empty() ? std::vector<double>{a.common.alpha}
                                                : a.alphas;
  Prepare(a.common, {{"command", "measure"},
                     {"input", a.input},
                     {"alphas", alphas},
                     {"oracle_check", a.oracle_check},
                     {"max_arcs", a.max_arcs}});
  const fs::path out_dir(a.common.out_dir);
  Graph g = Load(a.input, a.common);
  auto t0 = std::chrono::steady_clock::now();
  Profiles profiles = ComputeProfiles(g.get(), a.common.Measure(alphas.front()));
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json summary = {{"input", a.input},
                  {"nodes", hr_graph_num_nodes(g.get())},
                  {"arcs", hr_graph_num_arcs(g.get())},
                  {"unit_tail", hr_graph_is_unit_tail(g.get()) == 1},
                  {"search_seconds", seconds}};
  std::ofstream per_arc = OpenOut(out_dir / "per_arc.csv");
  per_arc << "arc_id,alpha,r,omega,psi,searched,set_size\n";
  std::vector<Result> results;
  std::size_t failed = 0;
  std::string first_error;
  for (double alpha : alphas) {
    Result r = Evaluate(profiles.get(), alpha);
    WritePerArc(per_arc, r.get(), alpha);
    json row = {{"alpha", alpha}};
    failed = FailedArcs(r.get(), &first_error);
    if (failed == 0) {
      double v = GraphValue(r.get());
      row["r"] = v;
      row["r_percent"] = v * 100.0;
      std::printf("alpha=%s  r(G)=%.6f  (x100 = %.3f)\n", Num(alpha).c_str(), v,
                  v * 100.0);
    } else {
      row["r"] = nullptr;
      row["failed_arcs"] = failed;
    }
    summary["rows"].push_back(row);
    results.push_back(std::move(r));
  }
  per_arc.close();

  std::size_t mismatches = 0;
  if (a.oracle_check) {
    const std::size_t m = hr_graph_num_arcs(g.get());
    json oracle = {{"max_arcs", a.max_arcs}};
    if (m > a.max_arcs) {
      oracle["skipped"] = "hypergraph has " + std::to_string(m) + " arcs";
      std::fprintf(stderr, "warning: oracle check skipped, %zu arcs > --max-arcs %zu\n",
                   m, a.max_arcs);
    } else {
      double worst = 0.0;
      for (std::size_t k = 0; k < alphas.size(); ++k) {
        hr_measure_opts o = a.common.Measure(alphas[k]);
        o.oracle_limit = a.max_arcs;
        for (std::size_t i = 0; i < m; ++i) {
          hr_arc_result fast;
          Check(hr_result_arc(results[k].get(), i, &fast), "reading arc");
          if (fast.error != nullptr) continue;
          double exact = 0.0;
          Check(hr_brute_force(g.get(), static_cast<uint32_t>(i), &o, &exact),
                "brute force");
          double diff = std::abs(exact - fast.r);
          worst = std::max(worst, diff);
          if (diff > 1e-12) {
            ++mismatches;
            std::fprintf(stderr, "error: arc %zu alpha %s: search %s, brute force %s\n",
                         i, Num(alphas[k]).c_str(), Num(fast.r).c_str(),
                         Num(exact).c_str());
          }
        }
      }
      oracle["checked"] = m * alphas.size();
      oracle["mismatches"] = mismatches;
      oracle["max_abs_diff"] = worst;
      std::printf("oracle: %zu arc evaluations, %zu mismatches\n", m * alphas.size(),
                  mismatches);
    }
    summary["oracle"] = oracle;
  }
  WriteJson(out_dir / "summary.json", summary);
  if (failed > 0) {
    throw Failure{kExitParameter, std::to_string(failed) +
                                      " arcs could not be searched; first: " +
                                      first_error};
  }
  if (mismatches > 0) {
    throw Failure{kExitInternal, "search disagrees with brute force"};
  }
  return kExitOk;
}

// ---- generate ----

struct GenerateArgs {
  Common common;
  std::string model = "redi";
  std::string ref;
  std::string dists;
  std::size_t nodes = 0;
  std::size_t initial_arcs = 10;
  double beta1 = 0.0;
  double beta2 = 0.0;
  std::size_t seeds = 1;
  std::uint64_t seed = 0;
  std::string attachment = "group";
  std::size_t retry_budget = 100;
  std::string format = "tsv";
  bool grid = false;
  std::size_t grid_seeds = 5;
  std::optional<double> target;
  bool no_measure = false;
};

Dists LoadDists(const std::string& path) {
  std::ifstream in(ResolveInput(path));
  if (!in) throw Failure{kExitInput, "cannot open '" + path + "'"};
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Failure{kExitInput, "parsing '" + path + "': " + e.what()};
  }
  std::vector<double> h, t, np;
  try {
    h = j.at("head").get<std::vector<double>>();
    t = j.at("tail").get<std::vector<double>>();
    np = j.at("arcs_per_node").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw Failure{kExitInput, "'" + path + "': " + e.what()};
  }
  hr_dists* d = nullptr;
  Check(hr_dists_create(h.data(), h.size(), t.data(), t.size(), np.data(), np.size(), &d),
        "distributions in '" + path + "'");
  return Dists(d);
}

std::vector<double> DistVector(const hr_dists* d, hr_dist_kind kind) {
  std::size_t len = 0;
  hr_dists_get(d, kind, nullptr, 0, &len);
  std::vector<double> v(len);
  Check(hr_dists_get(d, kind, v.data(), v.size(), &len), "reading distributions");
  return v;
}

template <typename F>
std::vector<double> Grid(F&& fill) {
  std::size_t len = 0;
  fill(nullptr, 0, &len);
  std::vector<double> v(len);
  Check(fill(v.data(), v.size(), &len), "beta grid");
  return v;
}

int RunGenerate(const GenerateArgs& a) {
  if (a.model != "null" && a.model != "redi" && a.model != "baseline") {
    throw Failure{kExitParameter, "unknown model '" + a.model + "'"};
  }
  if (a.seeds == 0) throw Failure{kExitParameter, "--seeds must be positive"};
  const hr_format fmt = a.format == "json" ? HR_FORMAT_JSON : HR_FORMAT_TSV;
  json config = {{"command", "generate"}, {"model", a.model},  {"ref", a.ref},
                 {"dists", a.dists},      {"nodes", a.nodes},  {"initial_arcs", a.initial_arcs},
                 {"beta1", a.beta1},      {"beta2", a.beta2},  {"seeds", a.seeds},
                 {"seed", a.seed},        {"attachment", a.attachment},
                 {"retry_budget", a.retry_budget}, {"format", a.format},
                 {"grid", a.grid},        {"grid_seeds", a.grid_seeds},
                 {"target", a.target ? json(*a.target) : json(nullptr)},
                 {"measure", !a.no_measure}};
  Prepare(a.common, config);
  const fs::path out_dir(a.common.out_dir);
  const hr_measure_opts mopts = a.common.Measure(a.common.alpha);

  Graph ref;
  if (!a.ref.empty()) ref = Load(a.ref, a.common);
  if (a.model == "null" && !ref) {
    throw Failure{kExitParameter, "--model null needs --ref"};
  }

  Dists dists;
  hr_gen_params params;
  hr_gen_params_default(&params);
  json summary = {{"model", a.model}};
  if (a.model != "null") {
    if (!a.dists.empty()) {
      dists = LoadDists(a.dists);
    } else if (ref) {
      hr_dists* d = nullptr;
      Check(hr_dists_estimate(ref.get(), &d), "estimating distributions");
      dists.reset(d);
    } else {
      throw Failure{kExitParameter, "--model " + a.model + " needs --ref or --dists"};
    }
    params.n = a.nodes != 0 ? a.nodes : (ref ? hr_graph_num_nodes(ref.get()) : 0);
    if (params.n == 0) throw Failure{kExitParameter, "--nodes is required without --ref"};
    params.initial_arcs = a.initial_arcs;
    params.beta1 = a.beta1;
    params.beta2 = a.beta2;
    params.seed = a.seed;
    params.retry_budget = a.retry_budget;
    if (a.attachment != "group" && a.attachment != "node") {
      throw Failure{kExitParameter, "--attachment must be group or node"};
    }
    params.node_degree_attachment = a.attachment == "node" ? 1 : 0;
    summary["distributions"] = {
        {"head", DistVector(dists.get(), HR_DIST_HEAD)},
        {"tail", DistVector(dists.get(), HR_DIST_TAIL)},
        {"arcs_per_node", DistVector(dists.get(), HR_DIST_ARCS_PER_NODE)}};

    if (a.grid && a.model == "redi") {
      double target = 0.0;
      if (a.target) {
        target = *a.target;
      } else if (ref) {
        Result r = MeasureGraph(ref.get(), mopts);
        target = GraphValue(r.get());
      } else {
        throw Failure{kExitParameter, "--grid needs --target or --ref"};
      }
      std::size_t arcs_hint = ref ? hr_graph_num_arcs(ref.get()) : 0;
      if (!ref) {
        std::vector<double> np = DistVector(dists.get(), HR_DIST_ARCS_PER_NODE);
        double mean = 0.0;
        for (std::size_t k = 0; k < np.size(); ++k) mean += static_cast<double>(k) * np[k];
        arcs_hint = static_cast<std::size_t>(mean * static_cast<double>(params.n));
      }
      std::vector<double> b1 = Grid([&](double* b, std::size_t c, std::size_t* l) {
        return hr_beta1_grid(params.n, arcs_hint, b, c, l);
      });
      std::vector<double> b2 = Grid(hr_beta2_grid);
      std::vector<hr_grid_point> points(b1.size() * b2.size());
      hr_grid_point best;
      Check(hr_grid_search(&params, dists.get(), target, b1.data(), b1.size(), b2.data(),
                           b2.size(), a.grid_seeds, &mopts, points.data(), &best),
            "grid search");
      std::ofstream grid = OpenOut(out_dir / "grid.csv");
      grid << "beta1,beta2,mean_r,sd_r\n";
      for (const hr_grid_point& p : points) {
        grid << Num(p.beta1) << ',' << Num(p.beta2) << ',' << Num(p.mean_r) << ','
             << Num(p.sd_r) << '\n';
      }
      params.beta1 = best.beta1;
      params.beta2 = best.beta2;
      summary["grid"] = {{"target_r", target},
                         {"best_beta1", best.beta1},
                         {"best_beta2", best.beta2},
                         {"best_mean_r", best.mean_r}};
      std::printf("grid: beta1=%s beta2=%s mean r(G)=%.6f (target %.6f)\n",
                  Num(best.beta1).c_str(), Num(best.beta2).c_str(), best.mean_r, target);
    }
    summary["beta1"] = a.model == "baseline" ? 0.0 : params.beta1;
    summary["beta2"] = a.model == "baseline" ? 0.0 : params.beta2;
  }

  std::vector<double> rs;
  const std::string ext = fmt == HR_FORMAT_JSON ? ".json" : ".tsv";
  for (std::size_t s = 0; s < a.seeds; ++s) {
    const std::uint64_t seed = a.seed + s;
    hr_graph* raw = nullptr;
    if (a.model == "null") {
      Check(hr_generate_null(ref.get(), seed, &raw), "null model");
    } else {
      hr_gen_params p = params;
      p.seed = seed;
      Check(a.model == "redi" ? hr_generate_redi(&p, dists.get(), &raw)
                              : hr_generate_baseline(&p, dists.get(), &raw),
            a.model + " generator");
    }
    Graph g(raw);
    const std::string name = a.model + "_seed" + std::to_string(seed) + ext;
    Check(hr_graph_write(g.get(), (out_dir / name).string().c_str(), fmt), "writing " + name);
    json entry = {{"file", name},
                  {"seed", seed},
                  {"nodes", hr_graph_num_nodes(g.get())},
                  {"arcs", hr_graph_num_arcs(g.get())}};
    if (!a.no_measure) {
      Result r = MeasureGraph(g.get(), mopts);
      double v = GraphValue(r.get());
      rs.push_back(v);
      entry["r"] = v;
    }
    summary["files"].push_back(entry);
  }
  if (!rs.empty()) {
    summary["aggregate"] = {{"count", rs.size()},
                            {"alpha", a.common.alpha},
                            {"mean_r", Mean(rs)},
                            {"sd_r", SampleSd(rs)},
                            {"mean_r_percent", Mean(rs) * 100.0},
                            {"sd_r_percent", SampleSd(rs) * 100.0}};
    std::printf("%zu %s hypergraphs: mean r(G)x100 = %.3f, sd = %.3f\n", rs.size(),
                a.model.c_str(), Mean(rs) * 100.0, SampleSd(rs) * 100.0);
  }
  WriteJson(out_dir / "stats.json", summary);
  return kExitOk;
}

// ---- analyze ----

struct AnalyzeArgs {
  Common common;
  std::string input;
  std::vector<double> alphas = {1e-4, 0.5, 1.0};
  std::string against;
  std::size_t seeds = 30;
  std::uint64_t seed = 0;
  bool trim = false;
  std::size_t window = 11;
  std::size_t polyorder = 3;
  std::size_t bins = 100;
  double level = 0.05;
};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void Add(const hr_graph* g, const std::vector<double>& per_arc) {
    std::size_t n = hr_graph_num_nodes(g);
    std::vector<double> r_v(n), bal(n);
    Check(hr_node_level(g, per_arc.data(), r_v.data(), bal.data()), "node level");
    for (std::size_t v = 0; v < n; ++v) {
      if (std::isnan(r_v[v])) continue;
      lo = std::min(lo, bal[v]);
      hi = std::max(hi, bal[v]);
    }
  }
};

Curve MakeCurve(const hr_graph* g, const std::vector<double>& per_arc,
                const AnalyzeArgs& a, const std::optional<Range>& range) {
  hr_curve_opts o{a.window, a.polyorder, a.bins, 0, 0.0, 0.0};
  if (range && range->lo <= range->hi) {
    o.has_range = 1;
    o.range_lo = range->lo;
    o.range_hi = range->hi;
  }
  hr_curve* c = nullptr;
  Check(hr_balance_curve(g, per_arc.data(), &o, &c), "balance curve");
  return Curve(c);
}

void WriteCurve(const fs::path& path, const hr_curve* c) {
  std::size_t n = hr_curve_size(c);
  std::vector<double> xs(n), raw(n), smooth(n);
  std::vector<std::size_t> counts(n);
  Check(hr_curve_points(c, xs.data(), raw.data(), smooth.data(), counts.data()), "curve");
  std::ofstream out = OpenOut(path);
  out << "x,r_raw,r_smooth,nodes\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << Num(xs[i]) << ',' << Num(raw[i]) << ',' << Num(smooth[i]) << ',' << counts[i]
        << '\n';
  }
}

json QuartilesJson(const hr_quartiles& q) {
  if (!q.present) return nullptr;
  return {{"count", q.count}, {"min", q.min},   {"q1", q.q1},
          {"median", q.median}, {"q3", q.q3}, {"max", q.max}};
}

int RunAnalyze(const AnalyzeArgs& a) {
  if (a.alphas.empty()) throw Failure{kExitParameter, "--alphas is empty"};
  if (!a.against.empty() && a.against != "null:mean" && a.against.rfind("file:", 0) != 0) {
    throw Failure{kExitParameter, "--against must be null:mean or file:PATH"};
  }
  Prepare(a.common, {{"command", "analyze"},
                     {"input", a.input},
                     {"alphas", a.alphas},
                     {"against", a.against},
                     {"seeds", a.seeds},
                     {"seed", a.seed},
                     {"trim", a.trim},
                     {"window", a.window},
                     {"polyorder", a.polyorder},
                     {"bins", a.bins},
                     {"level", a.level},
                     {"z_test", "one-sided two-sample z on arc-level values, "
                                "z = (mean_null - mean_real) / sqrt(s_r^2/n_r + s_n^2/n_n), "
                                "p = Phi(z), null values pooled over replicas"}});
  const fs::path out_dir(a.common.out_dir);
  Graph g = Load(a.input, a.common);
  const std::size_t m = hr_graph_num_arcs(g.get());
  json summary = {{"input", a.input},
                  {"nodes", hr_graph_num_nodes(g.get())},
                  {"arcs", m},
                  {"alpha", a.common.alpha}};

  auto t0 = std::chrono::steady_clock::now();
  Profiles profiles = ComputeProfiles(g.get(), a.common.Measure(a.common.alpha));
  summary["search_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Observation 1: reciprocity per alpha.
  std::vector<std::vector<double>> by_alpha;
  {
    std::ofstream table = OpenOut(out_dir / "reciprocity_table.csv");
    table << "alpha,r,r_percent\n";
    for (double alpha : a.alphas) {
      Result r = Evaluate(profiles.get(), alpha);
      double v = GraphValue(r.get());
      table << Num(alpha) << ',' << Num(v) << ',' << Num(v * 100.0) << '\n';
      summary["reciprocity"].push_back({{"alpha", alpha}, {"r", v}, {"r_percent", v * 100.0}});
      by_alpha.push_back(Values(r.get()));
    }
  }
  Result primary = Evaluate(profiles.get(), a.common.alpha);
  const std::vector<double> per_arc = Values(primary.get());
  const double r_real = GraphValue(primary.get());
  std::printf("r(G) at alpha=%s: %.6f (x100 = %.3f)\n", Num(a.common.alpha).c_str(), r_real,
              r_real * 100.0);

  // Robustness of arc-level values across alphas.
  {
    std::ofstream rob = OpenOut(out_dir / "robustness.csv");
    rob << "alpha_a,alpha_b,pearson,spearman,note\n";
    for (std::size_t i = 0; i < a.alphas.size(); ++i) {
      for (std::size_t j = i + 1; j < a.alphas.size(); ++j) {
        double p = 0.0, s = 0.0;
        auto note = Undefined([&] {
          Check(hr_correlations(by_alpha[i].data(), by_alpha[j].data(), m, &p, &s),
                "correlation");
        });
        json row = {{"alpha_a", a.alphas[i]}, {"alpha_b", a.alphas[j]}};
        rob << Num(a.alphas[i]) << ',' << Num(a.alphas[j]) << ',';
        if (note) {
          rob << ",," << Quote(*note) << '\n';
          row["undefined"] = *note;
        } else {
          rob << Num(p) << ',' << Num(s) << ",\n";
          row["pearson"] = p;
          row["spearman"] = s;
        }
        summary["robustness"].push_back(row);
      }
    }
  }

  // Observation 2: degree statistics of zero vs non-zero reciprocity arcs.
  {
    hr_split* raw = nullptr;
    Check(hr_degree_split(g.get(), per_arc.data(), a.trim ? 1 : 0, &raw), "degree split");
    Split split(raw);
    std::ofstream ds = OpenOut(out_dir / "degree_split.csv");
    ds << "group,statistic,count,min,q1,median,q3,max\n";
    const struct {
      hr_split_sample which;
      const char* group;
      const char* stat;
    } samples[] = {{HR_SPLIT_ZERO_H_OUT, "zero", "d_H_out"},
                   {HR_SPLIT_ZERO_T_IN, "zero", "d_T_in"},
                   {HR_SPLIT_NONZERO_H_OUT, "nonzero", "d_H_out"},
                   {HR_SPLIT_NONZERO_T_IN, "nonzero", "d_T_in"}};
    for (const auto& s : samples) {
      hr_quartiles q;
      Check(hr_split_summary(split.get(), s.which, &q), "degree split");
      ds << s.group << ',' << s.stat << ',' << q.count;
      if (q.present) {
        ds << ',' << Num(q.min) << ',' << Num(q.q1) << ',' << Num(q.median) << ','
           << Num(q.q3) << ',' << Num(q.max);
      } else {
        ds << ",,,,,";
      }
      ds << '\n';
      summary["degree_split"][s.group][s.stat] = QuartilesJson(q);
    }
  }

  // Per-node balance and reciprocity.
  {
    std::size_t n = hr_graph_num_nodes(g.get());
    std::vector<double> r_v(n), bal(n);
    std::vector<uint32_t> d_in(n), d_out(n);
    Check(hr_node_level(g.get(), per_arc.data(), r_v.data(), bal.data()), "node level");
    Check(hr_graph_degrees(g.get(), d_in.data(), d_out.data()), "degrees");
    std::ofstream nodes = OpenOut(out_dir / "nodes.csv");
    nodes << "node_id,label,d_in,d_out,balance,r\n";
    for (std::size_t v = 0; v < n; ++v) {
      const char* label = hr_graph_label(g.get(), static_cast<uint32_t>(v));
      nodes << v << ',' << Quote(label ? label : "") << ',' << d_in[v] << ',' << d_out[v]
            << ',' << Num(bal[v]) << ',' << Num(r_v[v]) << '\n';
    }
  }

  // Comparison hypergraphs, measured like the input.
  struct Other {
    std::string name;
    Graph g;
    std::vector<double> per_arc;
    double r;
  };
  std::vector<Other> others;
  if (a.against == "null:mean") {
    for (std::size_t s = 0; s < a.seeds; ++s) {
      hr_graph* raw = nullptr;
      Check(hr_generate_null(g.get(), a.seed + s, &raw), "null model");
      Graph ng(raw);
      Result r = MeasureGraph(ng.get(), a.common.Measure(a.common.alpha));
      others.push_back({"null_seed" + std::to_string(a.seed + s), std::move(ng),
                        Values(r.get()), GraphValue(r.get())});
    }
  } else if (!a.against.empty()) {
    std::string path = a.against.substr(5);
    Graph og = Load(path, a.common);
    Result r = MeasureGraph(og.get(), a.common.Measure(a.common.alpha));
    others.push_back({path, std::move(og), Values(r.get()), GraphValue(r.get())});
  }

  // Observation 3: balance curve, on a shared range when comparing.
  std::optional<Range> range;
  if (!others.empty()) {
    range = Range{};
    range->Add(g.get(), per_arc);
    for (const Other& o : others) range->Add(o.g.get(), o.per_arc);
  }
  Curve curve;
  if (auto note = Undefined([&] { curve = MakeCurve(g.get(), per_arc, a, range); })) {
    summary["balance_curve"] = {{"undefined", *note}};
  } else {
    WriteCurve(out_dir / "balance_curve.csv", curve.get());
    summary["balance_curve"] = {{"points", hr_curve_size(curve.get())},
                                {"window", a.window},
                                {"polyorder", a.polyorder},
                                {"bins", a.bins}};
  }

  // Measure comparison at the hypergraph level.
  {
    std::ofstream ms = OpenOut(out_dir / "measures.csv");
    ms << "measure,r,note\n";
    for (hr_measure_kind k : {HR_MEASURE_HYPERREC, HR_MEASURE_B1, HR_MEASURE_B6,
                              HR_MEASURE_B7}) {
      double v = r_real;
      auto note = k == HR_MEASURE_HYPERREC ? std::nullopt : Undefined([&] {
        Check(hr_graph_measure(g.get(), k, a.common.alpha, &v), hr_measure_name(k));
      });
      ms << hr_measure_name(k) << ',';
      if (note) {
        ms << ',' << Quote(*note) << '\n';
        summary["measures"][hr_measure_name(k)] = nullptr;
      } else {
        ms << Num(v) << ",\n";
        summary["measures"][hr_measure_name(k)] = v;
      }
    }
  }

  if (!others.empty()) {
    std::vector<double> pooled, rs, gaps;
    std::ofstream rep = OpenOut(out_dir / "comparison_replicas.csv");
    rep << "source,arcs,r,ks_d,mean_gap\n";
    for (const Other& o : others) {
      pooled.insert(pooled.end(), o.per_arc.begin(), o.per_arc.end());
      rs.push_back(o.r);
      double d = 0.0;
      Check(hr_ks_statistic(per_arc.data(), per_arc.size(), o.per_arc.data(),
                            o.per_arc.size(), &d),
            "KS statistic");
      double gap = std::numeric_limits<double>::quiet_NaN();
      if (curve) {
        Undefined([&] {
          Curve oc = MakeCurve(o.g.get(), o.per_arc, a, range);
          Check(hr_mean_gap(curve.get(), oc.get(), &gap), "mean gap");
        });
      }
      if (!std::isnan(gap)) gaps.push_back(gap);
      rep << Quote(o.name) << ',' << hr_graph_num_arcs(o.g.get()) << ',' << Num(o.r) << ','
          << Num(d) << ',' << Num(gap) << '\n';
    }
    double ks = 0.0;
    Check(hr_ks_statistic(per_arc.data(), per_arc.size(), pooled.data(), pooled.size(), &ks),
          "KS statistic");
    json cmp = {{"against", a.against},
                {"count", others.size()},
                {"real_r_percent", r_real * 100.0},
                {"mean_r_percent", Mean(rs) * 100.0},
                {"sd_r_percent", SampleSd(rs) * 100.0},
                {"ks_d", ks},
                {"mean_gap", gaps.empty() ? json(nullptr) : json(Mean(gaps))}};
    double z = 0.0, p = 0.0;
    int reject = 0;
    if (auto note = Undefined([&] {
          Check(hr_significance(per_arc.data(), per_arc.size(), pooled.data(),
                                pooled.size(), a.level, &z, &p, &reject),
                "z-test");
        })) {
      cmp["z_test"] = {{"undefined", *note}};
    } else {
      cmp["z_test"] = {{"z", JsonNum(z)}, {"p", p}, {"reject", reject == 1}, {"level", a.level}};
    }
    std::ofstream table = OpenOut(out_dir / "comparison.csv");
    table << "source,count,mean_r_percent,sd_r_percent,ks_d,z,p,reject,mean_gap\n";
    table << "real,1," << Num(r_real * 100.0) << ",0,0,,,,\n";
    table << Quote(a.against) << ',' << others.size() << ',' << Num(Mean(rs) * 100.0) << ','
          << Num(SampleSd(rs) * 100.0) << ',' << Num(ks) << ',';
    if (cmp["z_test"].contains("z")) {
      table << Num(z) << ',' << Num(p) << ',' << (reject ? "yes" : "no");
    } else {
      table << ",,";
    }
    table << ',' << (gaps.empty() ? std::string() : Num(Mean(gaps))) << '\n';
    summary["comparison"] = cmp;
    std::printf("%s: mean r(G)x100 = %.3f (sd %.3f), KS D = %.3f\n", a.against.c_str(),
                Mean(rs) * 100.0, SampleSd(rs) * 100.0, ks);
  }
  WriteJson(out_dir / "summary.json", summary);
  return kExitOk;
}

// ---- compare-measures ----

struct CompareArgs {
  Common common;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

int RunCompare(const CompareArgs& a) {
  Prepare(a.common, {{"command", "compare-measures"}, {"trials", a.trials}, {"seed", a.seed}});
  hr_satisfaction* raw = nullptr;
  Check(hr_satisfaction_run(a.trials, a.seed, a.common.alpha, &raw), "satisfaction matrix");
  Matrix matrix(raw);
  std::ofstream csv = OpenOut(fs::path(a.common.out_dir) / "satisfaction.csv");
  csv << "measure,axiom,applicable,trials,violations,satisfied,witness\n";
  json cells = json::array();
  std::vector<std::string> lines(8);
  for (std::size_t i = 0; i < hr_satisfaction_size(matrix.get()); ++i) {
    hr_cell c;
    Check(hr_satisfaction_cell(matrix.get(), i, &c), "satisfaction cell");
    const char* mark = !c.applicable ? "-" : (c.violations == 0 ? "yes" : "no");
    csv << hr_measure_name(c.measure) << ',' << c.axiom << ',' << c.applicable << ','
        << c.trials << ',' << c.violations << ',' << mark << ',' << Quote(c.witness)
        << '\n';
    cells.push_back({{"measure", hr_measure_name(c.measure)},
                     {"axiom", c.axiom},
                     {"applicable", c.applicable == 1},
                     {"trials", c.trials},
                     {"violations", c.violations},
                     {"witness", c.witness}});
    std::string& line = lines[static_cast<std::size_t>(c.measure)];
    if (line.empty()) {
      char head[16];
      std::snprintf(head, sizeof head, "%-9s", hr_measure_name(c.measure));
      line = head;
    }
    char cell[8];
    std::snprintf(cell, sizeof cell, " %-4s", mark);
    line += cell;
  }
  std::printf("measure   A1   A2   A3   A4   A5   A6   A7   A8\n");
  for (const std::string& line : lines) {
    if (!line.empty()) std::printf("%s\n", line.c_str());
  }
  WriteJson(fs::path(a.common.out_dir) / "satisfaction.json",
            {{"alpha", a.common.alpha}, {"trials", a.trials}, {"seed", a.seed}, {"cells", cells}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reciprocity analysis for directed hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hr_version()));

  MeasureArgs measure;
  CLI::App* m = app.add_subcommand("measure", "Per-arc and hypergraph reciprocity");
  AddCommon(m, measure.common, true);
  m->add_option("-i,--input", measure.input, "Hypergraph file (.tsv or .json)")->required();
  m->add_option("--alphas", measure.alphas, "Evaluate several alphas from one search");
  m->add_flag("--oracle-check", measure.oracle_check,
              "Compare every arc against exhaustive search");
  m->add_option("--max-arcs", measure.max_arcs, "Largest hypergraph for --oracle-check")
      ->capture_default_str();

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "Null, ReDi, or baseline hypergraphs");
  AddCommon(g, gen.common, true);
  g->add_option("--model", gen.model, "null, redi, or baseline")
      ->check(CLI::IsMember({"null", "redi", "baseline"}))
      ->capture_default_str();
  g->add_option("--ref", gen.ref, "Reference hypergraph");
  g->add_option("--dists", gen.dists, "JSON with head, tail, arcs_per_node distributions");
  g->add_option("--nodes", gen.nodes, "Node count (default: reference node count)");
  g->add_option("--initial-arcs", gen.initial_arcs, "Initial single-node arcs")
      ->capture_default_str();
  g->add_option("--beta1", gen.beta1, "Probability an arc is reciprocal")
      ->capture_default_str();
  g->add_option("--beta2", gen.beta2, "Extent of reciprocity")->capture_default_str();
  g->add_option("--seeds", gen.seeds, "Number of hypergraphs")->capture_default_str();
  g->add_option("--seed", gen.seed, "First seed")->capture_default_str();
  g->add_option("--attachment", gen.attachment, "group or node")
      ->check(CLI::IsMember({"group", "node"}))
      ->capture_default_str();
  g->add_option("--retry-budget", gen.retry_budget, "Attempts per arc")->capture_default_str();
  g->add_option("--format", gen.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  g->add_flag("--grid", gen.grid, "Grid-search beta1 and beta2 to match the target r(G)");
  g->add_option("--grid-seeds", gen.grid_seeds, "Generations per grid point")
      ->capture_default_str();
  g->add_option("--target", gen.target, "Target r(G) in [0, 1] for --grid");
  g->add_flag("--no-measure", gen.no_measure, "Skip measuring the generated hypergraphs");

  AnalyzeArgs an;
  CLI::App* z = app.add_subcommand("analyze", "Observation tables and comparisons");
  AddCommon(z, an.common, true);
  z->add_option("-i,--input", an.input, "Hypergraph file (.tsv or .json)")->required();
  z->add_option("--alphas", an.alphas, "Alphas for the reciprocity table")
      ->capture_default_str();
  z->add_option("--against", an.against, "null:mean or file:PATH");
  z->add_option("--seeds", an.seeds, "Null replicas for --against null:mean")
      ->capture_default_str();
  z->add_option("--seed", an.seed, "First null seed")->capture_default_str();
  z->add_flag("--trim", an.trim, "Drop IQR outliers from degree samples");
  z->add_option("--window", an.window, "Savitzky-Golay window")->capture_default_str();
  z->add_option("--polyorder", an.polyorder, "Savitzky-Golay order")->capture_default_str();
  z->add_option("--bins", an.bins, "Balance bins")->capture_default_str();
  z->add_option("--level", an.level, "Significance level")->capture_default_str();

  CompareArgs cmp;
  CLI::App* c = app.add_subcommand("compare-measures", "Axiom satisfaction matrix");
  AddCommon(c, cmp.common, true);
  c->add_option("--trials", cmp.trials, "Random instances per cell")->capture_default_str();
  c->add_option("--seed", cmp.seed, "Seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParameter;
  }

  try {
    if (*m) return RunMeasure(measure);
    if (*g) return RunGenerate(gen);
    if (*z) return RunAnalyze(an);
    if (*c) return RunCompare(cmp);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitInternal;
}
