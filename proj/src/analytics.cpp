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

#include "hyperrec/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "hyperrec/error.hpp"

namespace hyperrec {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double MeanOf(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double SampleVariance(std::span<const double> v, double mean) {
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

void CheckPaired(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kUndefined, "correlation inputs differ in length");
  }
  if (a.size() < 2) {
    throw Error(ErrorKind::kUndefined, "correlation needs at least 2 pairs");
  }
}

void CheckPerArc(const DirectedHypergraph& g, std::span<const double> per_arc) {
  if (per_arc.size() != g.num_arcs()) {
    throw Error(ErrorKind::kPrecondition,
                "expected " + std::to_string(g.num_arcs()) +
                    " per-arc values, got " + std::to_string(per_arc.size()));
  }
}

// Solves the square system in place by Gaussian elimination with partial
// pivoting; `a` is row-major n x n.
std::vector<double> Solve(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      std::swap(b[c], b[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c * n + k] * x[k];
    x[c] = s / a[c * n + c];
  }
  return x;
}

// Value at offset `at` of the degree-`order` least-squares polynomial
// through (k - centre, y[start + k]) for k in [0, window).
double FitAndEvaluate(std::span<const double> y, std::size_t start,
                      std::size_t window, std::size_t order, double at) {
  const std::size_t m = order + 1;
  const double centre = static_cast<double>(window - 1) / 2.0;
  std::vector<double> ata(m * m, 0.0), atb(m, 0.0);
  for (std::size_t k = 0; k < window; ++k) {
    double t = static_cast<double>(k) - centre;
    std::vector<double> pw(m, 1.0);
    for (std::size_t j = 1; j < m; ++j) pw[j] = pw[j - 1] * t;
    for (std::size_t r = 0; r < m; ++r) {
      atb[r] += pw[r] * y[start + k];
      for (std::size_t c = 0; c < m; ++c) ata[r * m + c] += pw[r] * pw[c];
    }
  }
  std::vector<double> coef = Solve(std::move(ata), std::move(atb));
  double t = at - centre;
  double v = 0.0;
  for (std::size_t j = m; j-- > 0;) v = v * t + coef[j];
  return v;
}

double Interpolate(const CurveData& c, double x) {
  const auto& xs = c.xs;
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return c.ys_smooth.back();
  std::size_t i = static_cast<std::size_t>(it - xs.begin());
  if (xs[i] == x || i == 0) return c.ys_smooth[i];
  double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return c.ys_smooth[i - 1] + w * (c.ys_smooth[i] - c.ys_smooth[i - 1]);
}

}  // namespace

std::vector<ArcReciprocity> ReciprocitiesAt(
    std::span<const ReciprocityProfile> profiles, double alpha) {
  std::vector<ArcReciprocity> out;
  out.reserve(profiles.size());
  for (const ReciprocityProfile& p : profiles) out.push_back(p.At(alpha));
  return out;
}

std::vector<AlphaRow> ReciprocityTable(
    std::span<const ReciprocityProfile> profiles,
    std::span<const double> alphas) {
  std::vector<AlphaRow> rows;
  for (double alpha : alphas) {
    ReciprocityConfig check;
    check.alpha = alpha;
    Validate(check);
    std::vector<ArcReciprocity> per_arc = ReciprocitiesAt(profiles, alpha);
    rows.push_back({alpha, HypergraphReciprocity(per_arc)});
  }
  return rows;
}

std::vector<AlphaRow> ReciprocityTable(const DirectedHypergraph& g,
                                       std::span<const double> alphas,
                                       const ReciprocityConfig& cfg) {
  std::vector<ReciprocityProfile> profiles = AllProfiles(g, cfg);
  return ReciprocityTable(profiles, alphas);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    double rank = static_cast<double>(i + j) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Pearson(std::span<const double> a, std::span<const double> b) {
  CheckPaired(a, b);
  double ma = MeanOf(a), mb = MeanOf(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw Error(ErrorKind::kUndefined, "correlation of a constant input");
  }
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

double Spearman(std::span<const double> a, std::span<const double> b) {
  CheckPaired(a, b);
  std::vector<double> ra = AverageRanks(a), rb = AverageRanks(b);
  return Pearson(ra, rb);
}

Correlation RobustnessCorrelations(std::span<const double> a,
                                   std::span<const double> b) {
  return {Pearson(a, b), Spearman(a, b)};
}

ArcDegreeStats ArcDegrees(const DirectedHypergraph& g) {
  DegreeReport d = Degrees(g);
  ArcDegreeStats s;
  s.d_H_out.reserve(g.num_arcs());
  s.d_T_in.reserve(g.num_arcs());
  for (const Hyperarc& a : g.arcs()) {
    double h = 0.0, t = 0.0;
    for (NodeId v : a.head) h += static_cast<double>(d.d_out[v]);
    for (NodeId v : a.tail) t += static_cast<double>(d.d_in[v]);
    s.d_H_out.push_back(h / static_cast<double>(a.head.size()));
    s.d_T_in.push_back(t / static_cast<double>(a.tail.size()));
  }
  return s;
}

double Quantile(std::span<const double> values, double q) {
  if (values.empty()) throw Error(ErrorKind::kUndefined, "empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

Quartiles Summarize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::kUndefined, "empty sample");
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return {values.size(), *lo,
          Quantile(values, 0.25), Quantile(values, 0.5), Quantile(values, 0.75),
          *hi};
}

std::vector<double> TrimOutliers(std::span<const double> values) {
  if (values.empty()) return {};
  double q1 = Quantile(values, 0.25), q3 = Quantile(values, 0.75);
  double lo = q1 - 1.5 * (q3 - q1), hi = q3 + 1.5 * (q3 - q1);
  std::vector<double> kept;
  for (double x : values) {
    if (x >= lo && x <= hi) kept.push_back(x);
  }
  return kept;
}

DegreeSplit ZeroNonzeroDegreeSplit(const DirectedHypergraph& g,
                                   std::span<const double> per_arc, bool trim) {
  CheckPerArc(g, per_arc);
  ArcDegreeStats all = ArcDegrees(g);
  DegreeSplit out;
  for (std::size_t i = 0; i < per_arc.size(); ++i) {
    if (std::isnan(per_arc[i])) {
      throw Error(ErrorKind::kUndefined,
                  "arc " + std::to_string(i) + " has no reciprocity value");
    }
    ArcDegreeStats& side = per_arc[i] > 0.0 ? out.nonzero : out.zero;
    side.d_H_out.push_back(all.d_H_out[i]);
    side.d_T_in.push_back(all.d_T_in[i]);
  }
  auto finish = [trim](std::vector<double>& v, std::optional<Quartiles>& q) {
    if (trim) v = TrimOutliers(v);
    if (!v.empty()) q = Summarize(v);
  };
  finish(out.zero.d_H_out, out.zero_h_out);
  finish(out.zero.d_T_in, out.zero_t_in);
  finish(out.nonzero.d_H_out, out.nonzero_h_out);
  finish(out.nonzero.d_T_in, out.nonzero_t_in);
  return out;
}

double KsDStatistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::kUndefined, "KS statistic of an empty sample");
  }
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx -
                             static_cast<double>(j) / ny));
  }
  return d;
}

double NormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

ZTest SignificanceTest(std::span<const double> real,
                       std::span<const double> null, double level) {
  if (real.size() < 2 || null.size() < 2) {
    throw Error(ErrorKind::kUndefined, "z-test needs at least 2 values per sample");
  }
  double mr = MeanOf(real), mn = MeanOf(null);
  double se2 = SampleVariance(real, mr) / static_cast<double>(real.size()) +
               SampleVariance(null, mn) / static_cast<double>(null.size());
  if (!(se2 > 0.0)) {
    throw Error(ErrorKind::kUndefined, "z-test with zero variance");
  }
  ZTest t;
  t.z = (mn - mr) / std::sqrt(se2);
  t.p = NormalCdf(t.z);
  t.reject = t.p < level;
  return t;
}

NodeReciprocity NodeLevel(const DirectedHypergraph& g,
                          std::span<const double> per_arc) {
  CheckPerArc(g, per_arc);
  DegreeReport d = Degrees(g);
  NodeReciprocity out;
  out.r_v.assign(g.num_nodes(), kNaN);
  out.balance.resize(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out.balance[v] = std::log(static_cast<double>(d.d_in[v]) + 1.0) -
                     std::log(static_cast<double>(d.d_out[v]) + 1.0);
    auto heads = g.head_incidence(v);
    auto tails = g.tail_incidence(v);
    std::size_t k = heads.size() + tails.size();
    if (k == 0) continue;
    double s = 0.0;
    for (ArcId e : heads) s += per_arc[e];
    for (ArcId e : tails) s += per_arc[e];
    out.r_v[v] = s / static_cast<double>(k);
  }
  return out;
}

std::vector<double> SavitzkyGolay(std::span<const double> y, std::size_t window,
                                  std::size_t polyorder) {
  if (window % 2 == 0 || window <= polyorder) {
    throw Error(ErrorKind::kParameter,
                "Savitzky-Golay window must be odd and exceed the polynomial order");
  }
  const std::size_t n = y.size();
  std::size_t w = window;
  if (w > n) w = n % 2 == 1 ? n : n - 1;
  if (w <= polyorder || w < 2) return {y.begin(), y.end()};
  std::vector<double> out(n);
  const std::size_t half = w / 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = i < half ? 0 : std::min(i - half, n - w);
    out[i] = FitAndEvaluate(y, start, w, polyorder,
                            static_cast<double>(i - start));
  }
  return out;
}

CurveData BalanceCurve(const DirectedHypergraph& g,
                       std::span<const double> per_arc,
                       const CurveOptions& opts) {
  if (opts.bins == 0) throw Error(ErrorKind::kParameter, "bins must be positive");
  if (opts.window % 2 == 0 || opts.window <= opts.polyorder) {
    throw Error(ErrorKind::kParameter,
                "Savitzky-Golay window must be odd and exceed the polynomial order");
  }
  NodeReciprocity nodes = NodeLevel(g, per_arc);
  std::vector<std::pair<double, double>> points;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (std::isnan(nodes.r_v[v])) continue;
    points.emplace_back(nodes.balance[v], nodes.r_v[v]);
  }
  if (points.empty()) {
    throw Error(ErrorKind::kUndefined, "no node is incident to an arc");
  }
  double lo, hi;
  if (opts.range) {
    std::tie(lo, hi) = *opts.range;
    if (!(lo <= hi)) throw Error(ErrorKind::kParameter, "curve range is reversed");
  } else {
    lo = hi = points.front().first;
    for (const auto& [x, r] : points) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const std::size_t bins = hi > lo ? opts.bins : 1;
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 0.0;
  std::vector<double> sums(bins, 0.0);
  std::vector<std::size_t> counts(bins, 0);
  for (const auto& [x, r] : points) {
    if (x < lo || x > hi) continue;
    std::size_t b = width > 0.0
                        ? std::min(static_cast<std::size_t>((x - lo) / width), bins - 1)
                        : 0;
    sums[b] += r;
    ++counts[b];
  }
  CurveData c;
  for (std::size_t b = 0; b < bins; ++b) {
    if (counts[b] == 0) continue;
    c.xs.push_back(width > 0.0 ? lo + (static_cast<double>(b) + 0.5) * width : lo);
    c.ys_raw.push_back(sums[b] / static_cast<double>(counts[b]));
    c.counts.push_back(counts[b]);
  }
  if (c.xs.empty()) {
    throw Error(ErrorKind::kUndefined, "no node balance falls inside the range");
  }
  c.ys_smooth = SavitzkyGolay(c.ys_raw, opts.window, opts.polyorder);
  return c;
}

double MeanGap(const CurveData& a, const CurveData& b) {
  if (a.xs.empty() || b.xs.empty()) {
    throw Error(ErrorKind::kUndefined, "mean gap of an empty curve");
  }
  double lo = std::max(a.xs.front(), b.xs.front());
  double hi = std::min(a.xs.back(), b.xs.back());
  if (lo > hi) {
    throw Error(ErrorKind::kUndefined, "curve domains do not intersect");
  }
  std::vector<double> xs;
  for (const CurveData* c : {&a, &b}) {
    for (double x : c->xs) {
      if (x >= lo && x <= hi) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  double s = 0.0;
  for (double x : xs) {
    double d = Interpolate(a, x) - Interpolate(b, x);
    s += d * d;
  }
  return s / static_cast<double>(xs.size());
}

}  // namespace hyperrec
