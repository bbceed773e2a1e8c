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

#include "hyperrec/hyperrec.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "hyperrec/analytics.hpp"
#include "hyperrec/axioms.hpp"
#include "hyperrec/error.hpp"
#include "hyperrec/generators.hpp"
#include "hyperrec/hypergraph.hpp"
#include "hyperrec/measure.hpp"
#include "hyperrec/search.hpp"

struct hr_graph {
  hyperrec::DirectedHypergraph g;
};

struct hr_profiles {
  std::vector<hyperrec::ReciprocityProfile> profiles;
};

struct hr_result {
  std::vector<hyperrec::ArcReciprocity> arcs;
};

struct hr_satisfaction {
  std::vector<hyperrec::SatisfactionCell> cells;
};

struct hr_dists {
  hyperrec::SizeDistributions d;
};

struct hr_split {
  hyperrec::DegreeSplit split;
};

struct hr_curve {
  hyperrec::CurveData curve;
};

namespace {

using hyperrec::Error;
using hyperrec::ErrorKind;

thread_local std::string last_error;

hr_status StatusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return HR_E_PARSE;
    case ErrorKind::kValidation: return HR_E_VALIDATION;
    case ErrorKind::kIo: return HR_E_IO;
    case ErrorKind::kPrecondition: return HR_E_PRECONDITION;
    case ErrorKind::kParameter: return HR_E_PARAMETER;
    case ErrorKind::kBudget: return HR_E_BUDGET;
    case ErrorKind::kUndefined: return HR_E_UNDEFINED;
    case ErrorKind::kGeneration: return HR_E_GENERATION;
  }
  return HR_E_INTERNAL;
}

hr_status Fail(hr_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <typename F>
hr_status Guard(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Fail(StatusOf(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(HR_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(HR_E_INTERNAL, e.what());
  } catch (...) {
    return Fail(HR_E_INTERNAL, "unknown failure");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::kParameter, std::string("null argument: ") + what);
}

template <typename T>
hr_status CopyOut(const std::vector<T>& v, T* buf, size_t cap, size_t* len) {
  Require(len != nullptr, "len");
  *len = v.size();
  if (v.size() > cap) {
    return Fail(HR_E_BUFFER, "buffer holds " + std::to_string(cap) +
                                 " entries, " + std::to_string(v.size()) +
                                 " needed");
  }
  std::copy(v.begin(), v.end(), buf);
  return HR_OK;
}

hyperrec::IngestOptions ToIngest(const hr_ingest_opts* o) {
  hyperrec::IngestOptions io;
  if (o != nullptr) {
    io.repair_overlap = o->repair_overlap != 0;
    if (o->max_head > 0) io.max_head_size = o->max_head;
  }
  return io;
}

std::optional<hyperrec::Format> ToFormat(hr_format f) {
  switch (f) {
    case HR_FORMAT_TSV: return hyperrec::Format::kTsv;
    case HR_FORMAT_JSON: return hyperrec::Format::kJson;
    case HR_FORMAT_AUTO: return std::nullopt;
  }
  throw Error(ErrorKind::kParameter, "unknown format");
}

hyperrec::ReciprocityConfig ToConfig(const hr_measure_opts* o) {
  hr_measure_opts d;
  hr_measure_opts_default(&d);
  if (o == nullptr) o = &d;
  hyperrec::ReciprocityConfig c;
  c.alpha = o->alpha;
  c.psi_cap = o->psi_cap;
  c.oracle_limit = o->oracle_limit;
  c.threads = o->threads;
  c.continue_on_error = o->continue_on_error != 0;
  hyperrec::Validate(c);
  return c;
}

hyperrec::GeneratorParams ToParams(const hr_gen_params* p) {
  Require(p != nullptr, "params");
  hyperrec::GeneratorParams g;
  g.n = p->n;
  g.initial_arcs = p->initial_arcs;
  g.beta1 = p->beta1;
  g.beta2 = p->beta2;
  g.seed = p->seed;
  g.attachment = p->node_degree_attachment ? hyperrec::AttachmentMode::kNodeDegree
                                           : hyperrec::AttachmentMode::kGroupDegree;
  g.retry_budget = p->retry_budget;
  return g;
}

hyperrec::Measure ToMeasure(hr_measure_kind m) {
  if (m < HR_MEASURE_HYPERREC || m > HR_MEASURE_B7) {
    throw Error(ErrorKind::kParameter, "unknown measure");
  }
  return static_cast<hyperrec::Measure>(m);
}

const std::vector<double>& SplitSample(const hyperrec::DegreeSplit& s,
                                       hr_split_sample which) {
  switch (which) {
    case HR_SPLIT_ZERO_H_OUT: return s.zero.d_H_out;
    case HR_SPLIT_ZERO_T_IN: return s.zero.d_T_in;
    case HR_SPLIT_NONZERO_H_OUT: return s.nonzero.d_H_out;
    case HR_SPLIT_NONZERO_T_IN: return s.nonzero.d_T_in;
  }
  throw Error(ErrorKind::kParameter, "unknown split sample");
}

const std::optional<hyperrec::Quartiles>& SplitSummary(
    const hyperrec::DegreeSplit& s, hr_split_sample which) {
  switch (which) {
    case HR_SPLIT_ZERO_H_OUT: return s.zero_h_out;
    case HR_SPLIT_ZERO_T_IN: return s.zero_t_in;
    case HR_SPLIT_NONZERO_H_OUT: return s.nonzero_h_out;
    case HR_SPLIT_NONZERO_T_IN: return s.nonzero_t_in;
  }
  throw Error(ErrorKind::kParameter, "unknown split sample");
}

template <typename T>
hr_status Emit(T value, T** out) {
  Require(out != nullptr, "out");
  *out = new T(std::move(value));
  return HR_OK;
}

}  // namespace

extern "C" {

const char* hr_last_error(void) { return last_error.c_str(); }

const char* hr_status_name(hr_status status) {
  switch (status) {
    case HR_OK: return "ok";
    case HR_E_INTERNAL: return "internal";
    case HR_E_PARSE: return "parse";
    case HR_E_VALIDATION: return "validation";
    case HR_E_IO: return "io";
    case HR_E_PRECONDITION: return "precondition";
    case HR_E_PARAMETER: return "parameter";
    case HR_E_BUDGET: return "budget";
    case HR_E_UNDEFINED: return "undefined";
    case HR_E_GENERATION: return "generation";
    case HR_E_BUFFER: return "buffer";
  }
  return "unknown";
}

const char* hr_version(void) { return "1.0.0"; }

hr_status hr_graph_load(const char* path, hr_format format,
                        const hr_ingest_opts* opts, hr_graph** out) {
  return Guard([&] {
    Require(path != nullptr, "path");
    std::optional<hyperrec::Format> f = ToFormat(format);
    hyperrec::IngestOptions io = ToIngest(opts);
    if (!f) return Emit(hr_graph{hyperrec::IngestFile(path, io)}, out);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::kIo, std::string("cannot open '") + path + "'");
    return Emit(hr_graph{hyperrec::Ingest(in, *f, io)}, out);
  });
}

hr_status hr_graph_parse(const char* text, hr_format format,
                         const hr_ingest_opts* opts, hr_graph** out) {
  return Guard([&] {
    Require(text != nullptr, "text");
    std::optional<hyperrec::Format> f = ToFormat(format);
    return Emit(hr_graph{hyperrec::IngestString(
                    text, f.value_or(hyperrec::Format::kTsv), ToIngest(opts))},
                out);
  });
}

hr_status hr_graph_write(const hr_graph* g, const char* path, hr_format format) {
  return Guard([&] {
    Require(g != nullptr && path != nullptr, "graph or path");
    hyperrec::WriteFile(g->g, path, ToFormat(format));
    return HR_OK;
  });
}

void hr_graph_free(hr_graph* g) { delete g; }

size_t hr_graph_num_nodes(const hr_graph* g) { return g ? g->g.num_nodes() : 0; }
size_t hr_graph_num_arcs(const hr_graph* g) { return g ? g->g.num_arcs() : 0; }

hr_status hr_graph_arc(const hr_graph* g, uint32_t arc, int side, uint32_t* buf,
                       size_t cap, size_t* len) {
  return Guard([&] {
    Require(g != nullptr, "graph");
    if (arc >= g->g.num_arcs()) {
      throw Error(ErrorKind::kParameter, "arc id out of range");
    }
    const hyperrec::Hyperarc& a = g->g.arc(arc);
    return CopyOut(side == 0 ? a.head : a.tail, buf, cap, len);
  });
}

const char* hr_graph_label(const hr_graph* g, uint32_t node) {
  if (g == nullptr || node >= g->g.num_nodes()) return nullptr;
  return g->g.label(node).c_str();
}

hr_status hr_graph_degrees(const hr_graph* g, uint32_t* d_in, uint32_t* d_out) {
  return Guard([&] {
    Require(g != nullptr, "graph");
    hyperrec::DegreeReport d = hyperrec::Degrees(g->g);
    if (d_in) std::copy(d.d_in.begin(), d.d_in.end(), d_in);
    if (d_out) std::copy(d.d_out.begin(), d.d_out.end(), d_out);
    return HR_OK;
  });
}

int hr_graph_is_unit_tail(const hr_graph* g) {
  return g != nullptr && hyperrec::IsUnitTail(g->g) ? 1 : 0;
}

void hr_measure_opts_default(hr_measure_opts* opts) {
  if (opts == nullptr) return;
  hyperrec::ReciprocityConfig c;
  opts->alpha = c.alpha;
  opts->psi_cap = c.psi_cap;
  opts->oracle_limit = c.oracle_limit;
  opts->threads = c.threads;
  opts->continue_on_error = c.continue_on_error ? 1 : 0;
}

hr_status hr_profiles_compute(const hr_graph* g, const hr_measure_opts* opts,
                              hr_profiles** out) {
  return Guard([&] {
    Require(g != nullptr, "graph");
    return Emit(hr_profiles{hyperrec::AllProfiles(g->g, ToConfig(opts))}, out);
  });
}

hr_status hr_profiles_evaluate(const hr_profiles* p, double alpha,
                               hr_result** out) {
  return Guard([&] {
    Require(p != nullptr, "profiles");
    hyperrec::ReciprocityConfig check;
    check.alpha = alpha;
    hyperrec::Validate(check);
    return Emit(hr_result{hyperrec::ReciprocitiesAt(p->profiles, alpha)}, out);
  });
}

void hr_profiles_free(hr_profiles* p) { delete p; }

hr_status hr_measure(const hr_graph* g, const hr_measure_opts* opts,
                     hr_result** out) {
  return Guard([&] {
    Require(g != nullptr, "graph");
    return Emit(hr_result{hyperrec::AllReciprocities(g->g, ToConfig(opts))}, out);
  });
}

size_t hr_result_size(const hr_result* r) { return r ? r->arcs.size() : 0; }

hr_status hr_result_arc(const hr_result* r, size_t arc, hr_arc_result* out) {
  return Guard([&] {
    Require(r != nullptr && out != nullptr, "result or out");
    if (arc >= r->arcs.size()) {
      throw Error(ErrorKind::kParameter, "arc id out of range");
    }
    const hyperrec::ArcReciprocity& a = r->arcs[arc];
    out->r = a.value;
    out->searched = a.searched;
    out->omega = a.omega_size;
    out->psi = a.psi_size;
    out->set_size = a.reciprocal_set.size();
    out->error = a.error.empty() ? nullptr : a.error.c_str();
    return HR_OK;
  });
}

hr_status hr_result_set(const hr_result* r, size_t arc, uint32_t* buf,
                        size_t cap, size_t* len) {
  return Guard([&] {
    Require(r != nullptr, "result");
    if (arc >= r->arcs.size()) {
      throw Error(ErrorKind::kParameter, "arc id out of range");
    }
    return CopyOut(r->arcs[arc].reciprocal_set, buf, cap, len);
  });
}

hr_status hr_result_values(const hr_result* r, double* values) {
  return Guard([&] {
    Require(r != nullptr && values != nullptr, "result or values");
    for (std::size_t i = 0; i < r->arcs.size(); ++i) values[i] = r->arcs[i].value;
    return HR_OK;
  });
}

hr_status hr_result_graph_value(const hr_result* r, double* value) {
  return Guard([&] {
    Require(r != nullptr && value != nullptr, "result or value");
    *value = hyperrec::HypergraphReciprocity(r->arcs);
    return HR_OK;
  });
}

void hr_result_free(hr_result* r) { delete r; }

hr_status hr_brute_force(const hr_graph* g, uint32_t arc,
                         const hr_measure_opts* opts, double* value) {
  return Guard([&] {
    Require(g != nullptr && value != nullptr, "graph or value");
    *value = hyperrec::BruteForceReciprocity(g->g, arc, ToConfig(opts)).value;
    return HR_OK;
  });
}

const char* hr_measure_name(hr_measure_kind m) {
  if (m < HR_MEASURE_HYPERREC || m > HR_MEASURE_B7) return "unknown";
  return hyperrec::MeasureName(static_cast<hyperrec::Measure>(m));
}

hr_status hr_graph_measure(const hr_graph* g, hr_measure_kind m, double alpha,
                           double* value) {
  return Guard([&] {
    Require(g != nullptr && value != nullptr, "graph or value");
    *value = hyperrec::GraphLevelValue(ToMeasure(m), g->g, alpha);
    return HR_OK;
  });
}

hr_status hr_satisfaction_run(size_t trials, uint64_t seed, double alpha,
                              hr_satisfaction** out) {
  return Guard([&] {
    return Emit(hr_satisfaction{hyperrec::SatisfactionMatrix(trials, seed, alpha)},
                out);
  });
}

size_t hr_satisfaction_size(const hr_satisfaction* s) {
  return s ? s->cells.size() : 0;
}

hr_status hr_satisfaction_cell(const hr_satisfaction* s, size_t i, hr_cell* out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "matrix or out");
    if (i >= s->cells.size()) throw Error(ErrorKind::kParameter, "cell out of range");
    const hyperrec::SatisfactionCell& c = s->cells[i];
    out->measure = static_cast<hr_measure_kind>(c.measure);
    out->axiom = c.axiom;
    out->applicable = c.applicable ? 1 : 0;
    out->trials = c.trials;
    out->violations = c.violations;
    out->witness = c.witness.c_str();
    return HR_OK;
  });
}

void hr_satisfaction_free(hr_satisfaction* s) { delete s; }

hr_status hr_dists_estimate(const hr_graph* ref, hr_dists** out) {
  return Guard([&] {
    Require(ref != nullptr, "graph");
    return Emit(hr_dists{hyperrec::EstimateDistributions(ref->g)}, out);
  });
}

hr_status hr_dists_create(const double* head, size_t n_head, const double* tail,
                          size_t n_tail, const double* per_node,
                          size_t n_per_node, hr_dists** out) {
  return Guard([&] {
    Require(head && tail && per_node, "distribution");
    hyperrec::SizeDistributions d{{head, head + n_head},
                                  {tail, tail + n_tail},
                                  {per_node, per_node + n_per_node}};
    hyperrec::Validate(d);
    return Emit(hr_dists{std::move(d)}, out);
  });
}

hr_status hr_dists_get(const hr_dists* d, hr_dist_kind kind, double* buf,
                       size_t cap, size_t* len) {
  return Guard([&] {
    Require(d != nullptr, "distributions");
    switch (kind) {
      case HR_DIST_HEAD: return CopyOut(d->d.head, buf, cap, len);
      case HR_DIST_TAIL: return CopyOut(d->d.tail, buf, cap, len);
      case HR_DIST_ARCS_PER_NODE: return CopyOut(d->d.arcs_per_node, buf, cap, len);
    }
    throw Error(ErrorKind::kParameter, "unknown distribution");
  });
}

void hr_dists_free(hr_dists* d) { delete d; }

void hr_gen_params_default(hr_gen_params* p) {
  if (p == nullptr) return;
  hyperrec::GeneratorParams g;
  p->n = g.n;
  p->initial_arcs = g.initial_arcs;
  p->beta1 = g.beta1;
  p->beta2 = g.beta2;
  p->seed = g.seed;
  p->node_degree_attachment = 0;
  p->retry_budget = g.retry_budget;
}

hr_status hr_generate_null(const hr_graph* ref, uint64_t seed, hr_graph** out) {
  return Guard([&] {
    Require(ref != nullptr, "graph");
    return Emit(hr_graph{hyperrec::NullModel(ref->g, seed)}, out);
  });
}

hr_status hr_generate_redi(const hr_gen_params* p, const hr_dists* d,
                           hr_graph** out) {
  return Guard([&] {
    Require(d != nullptr, "distributions");
    return Emit(hr_graph{hyperrec::RediGenerate(ToParams(p), d->d)}, out);
  });
}

hr_status hr_generate_baseline(const hr_gen_params* p, const hr_dists* d,
                               hr_graph** out) {
  return Guard([&] {
    Require(d != nullptr, "distributions");
    return Emit(hr_graph{hyperrec::BaselineGenerate(ToParams(p), d->d)}, out);
  });
}

hr_status hr_beta1_grid(size_t nodes, size_t arcs, double* buf, size_t cap,
                        size_t* len) {
  return Guard([&] { return CopyOut(hyperrec::Beta1Grid(nodes, arcs), buf, cap, len); });
}

hr_status hr_beta2_grid(double* buf, size_t cap, size_t* len) {
  return Guard([&] { return CopyOut(hyperrec::Beta2Grid(), buf, cap, len); });
}

hr_status hr_grid_search(const hr_gen_params* base, const hr_dists* d,
                         double target_r, const double* beta1s, size_t n_beta1,
                         const double* beta2s, size_t n_beta2, size_t seeds,
                         const hr_measure_opts* opts, hr_grid_point* points,
                         hr_grid_point* best) {
  return Guard([&] {
    Require(d != nullptr && beta1s && beta2s && best, "grid argument");
    hyperrec::GridSearchResult res = hyperrec::GridSearchBetas(
        ToParams(base), d->d, target_r, {beta1s, beta1s + n_beta1},
        {beta2s, beta2s + n_beta2}, seeds, ToConfig(opts));
    auto convert = [](const hyperrec::GridPoint& g) {
      return hr_grid_point{g.beta1, g.beta2, g.mean_r, g.sd_r};
    };
    if (points) {
      for (std::size_t i = 0; i < res.evaluated.size(); ++i) {
        points[i] = convert(res.evaluated[i]);
      }
    }
    *best = convert(res.best);
    return HR_OK;
  });
}

hr_status hr_correlations(const double* a, const double* b, size_t n,
                          double* pearson, double* spearman) {
  return Guard([&] {
    Require(a && b && pearson && spearman, "correlation argument");
    hyperrec::Correlation c = hyperrec::RobustnessCorrelations({a, n}, {b, n});
    *pearson = c.pearson;
    *spearman = c.spearman;
    return HR_OK;
  });
}

hr_status hr_ks_statistic(const double* a, size_t na, const double* b,
                          size_t nb, double* d) {
  return Guard([&] {
    Require(d != nullptr && (a || na == 0) && (b || nb == 0), "KS argument");
    *d = hyperrec::KsDStatistic({a, na}, {b, nb});
    return HR_OK;
  });
}

hr_status hr_significance(const double* real, size_t n_real, const double* null,
                          size_t n_null, double level, double* z, double* p,
                          int* reject) {
  return Guard([&] {
    Require(z && p && reject && (real || n_real == 0) && (null || n_null == 0),
            "z-test argument");
    hyperrec::ZTest t =
        hyperrec::SignificanceTest({real, n_real}, {null, n_null}, level);
    *z = t.z;
    *p = t.p;
    *reject = t.reject ? 1 : 0;
    return HR_OK;
  });
}

hr_status hr_degree_split(const hr_graph* g, const double* per_arc, int trim,
                          hr_split** out) {
  return Guard([&] {
    Require(g != nullptr && (per_arc || g->g.num_arcs() == 0), "split argument");
    return Emit(hr_split{hyperrec::ZeroNonzeroDegreeSplit(
                    g->g, {per_arc, g->g.num_arcs()}, trim != 0)},
                out);
  });
}

hr_status hr_split_values(const hr_split* s, hr_split_sample which, double* buf,
                          size_t cap, size_t* len) {
  return Guard([&] {
    Require(s != nullptr, "split");
    return CopyOut(SplitSample(s->split, which), buf, cap, len);
  });
}

hr_status hr_split_summary(const hr_split* s, hr_split_sample which,
                           hr_quartiles* out) {
  return Guard([&] {
    Require(s != nullptr && out != nullptr, "split or out");
    const std::optional<hyperrec::Quartiles>& q = SplitSummary(s->split, which);
    *out = hr_quartiles{};
    if (q) {
      *out = hr_quartiles{1, q->count, q->min, q->q1, q->median, q->q3, q->max};
    }
    return HR_OK;
  });
}

void hr_split_free(hr_split* s) { delete s; }

hr_status hr_node_level(const hr_graph* g, const double* per_arc, double* r_v,
                        double* balance) {
  return Guard([&] {
    Require(g != nullptr && (per_arc || g->g.num_arcs() == 0), "node argument");
    hyperrec::NodeReciprocity n =
        hyperrec::NodeLevel(g->g, {per_arc, g->g.num_arcs()});
    if (r_v) std::copy(n.r_v.begin(), n.r_v.end(), r_v);
    if (balance) std::copy(n.balance.begin(), n.balance.end(), balance);
    return HR_OK;
  });
}

void hr_curve_opts_default(hr_curve_opts* o) {
  if (o == nullptr) return;
  hyperrec::CurveOptions c;
  *o = hr_curve_opts{c.window, c.polyorder, c.bins, 0, 0.0, 0.0};
}

hr_status hr_balance_curve(const hr_graph* g, const double* per_arc,
                           const hr_curve_opts* opts, hr_curve** out) {
  return Guard([&] {
    Require(g != nullptr && (per_arc || g->g.num_arcs() == 0), "curve argument");
    hyperrec::CurveOptions c;
    if (opts != nullptr) {
      c.window = opts->window;
      c.polyorder = opts->polyorder;
      c.bins = opts->bins;
      if (opts->has_range) c.range = std::make_pair(opts->range_lo, opts->range_hi);
    }
    return Emit(hr_curve{hyperrec::BalanceCurve(g->g, {per_arc, g->g.num_arcs()}, c)},
                out);
  });
}

size_t hr_curve_size(const hr_curve* c) { return c ? c->curve.xs.size() : 0; }

hr_status hr_curve_points(const hr_curve* c, double* xs, double* raw,
                          double* smooth, size_t* counts) {
  return Guard([&] {
    Require(c != nullptr, "curve");
    const hyperrec::CurveData& d = c->curve;
    if (xs) std::copy(d.xs.begin(), d.xs.end(), xs);
    if (raw) std::copy(d.ys_raw.begin(), d.ys_raw.end(), raw);
    if (smooth) std::copy(d.ys_smooth.begin(), d.ys_smooth.end(), smooth);
    if (counts) std::copy(d.counts.begin(), d.counts.end(), counts);
    return HR_OK;
  });
}

hr_status hr_mean_gap(const hr_curve* a, const hr_curve* b, double* gap) {
  return Guard([&] {
    Require(a && b && gap, "mean gap argument");
    *gap = hyperrec::MeanGap(a->curve, b->curve);
    return HR_OK;
  });
}

void hr_curve_free(hr_curve* c) { delete c; }

}  // extern "C"
