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

#ifndef HYPERREC_ANALYTICS_HPP_
#define HYPERREC_ANALYTICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperrec/hypergraph.hpp"
#include "hyperrec/measure.hpp"
#include "hyperrec/search.hpp"

namespace hyperrec {

struct AlphaRow {
  double alpha = 0.0;
  double r = 0.0;  // r(G) in [0, 1]
};

// Per-arc values at one alpha, read off precomputed profiles.
std::vector<ArcReciprocity> ReciprocitiesAt(
    std::span<const ReciprocityProfile> profiles, double alpha);

// r(G) for each alpha. Profiles are searched once and re-maximised per alpha.
std::vector<AlphaRow> ReciprocityTable(
    std::span<const ReciprocityProfile> profiles,
    std::span<const double> alphas);
std::vector<AlphaRow> ReciprocityTable(const DirectedHypergraph& g,
                                       std::span<const double> alphas,
                                       const ReciprocityConfig& cfg);

struct Correlation {
  double pearson = 0.0;
  double spearman = 0.0;
};

// 1-based ranks, ties share their average rank.
std::vector<double> AverageRanks(std::span<const double> values);

// Both throw kUndefined unless the lengths match, are at least 2, and
// neither input is constant.
double Pearson(std::span<const double> a, std::span<const double> b);
double Spearman(std::span<const double> a, std::span<const double> b);
Correlation RobustnessCorrelations(std::span<const double> a,
                                   std::span<const double> b);

// Per arc: mean out-degree of its head nodes and mean in-degree of its tail
// nodes, in arc order.
struct ArcDegreeStats {
  std::vector<double> d_H_out;
  std::vector<double> d_T_in;
};

ArcDegreeStats ArcDegrees(const DirectedHypergraph& g);

struct Quartiles {
  std::size_t count = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

// Linear-interpolation quantiles. Throws kUndefined on an empty sample.
double Quantile(std::span<const double> values, double q);
Quartiles Summarize(std::span<const double> values);

// Keeps values inside [Q1 - 1.5 IQR, Q3 + 1.5 IQR], original order.
std::vector<double> TrimOutliers(std::span<const double> values);

struct DegreeSplit {
  ArcDegreeStats zero;     // arcs with r(e) = 0
  ArcDegreeStats nonzero;  // arcs with r(e) > 0
  // Summaries of the (optionally trimmed) samples; empty samples have none.
  std::optional<Quartiles> zero_h_out, zero_t_in;
  std::optional<Quartiles> nonzero_h_out, nonzero_t_in;
};

// `per_arc` holds r(e) in arc order. With `trim`, each sample is
// IQR-trimmed before it is stored and summarised.
DegreeSplit ZeroNonzeroDegreeSplit(const DirectedHypergraph& g,
                                   std::span<const double> per_arc,
                                   bool trim = false);

// Two-sample Kolmogorov-Smirnov D. Throws kUndefined on an empty sample.
double KsDStatistic(std::span<const double> a, std::span<const double> b);

struct ZTest {
  double z = 0.0;
  double p = 0.0;
  bool reject = false;
};

// One-sided test of mean(real) > mean(null). z = (mean_null - mean_real) /
// sqrt(var_real / n_real + var_null / n_null) with sample variances, so
// strong evidence gives a large negative z; p = Phi(z). Throws kUndefined
// when either sample has fewer than 2 values or both variances are zero.
ZTest SignificanceTest(std::span<const double> real,
                       std::span<const double> null, double level = 0.05);

double NormalCdf(double z);

// Per node: mean r(e) over arcs holding it on either side (NaN when it has
// none) and balance log(d_in + 1) - log(d_out + 1).
struct NodeReciprocity {
  std::vector<double> r_v;
  std::vector<double> balance;
};

NodeReciprocity NodeLevel(const DirectedHypergraph& g,
                          std::span<const double> per_arc);

// Least-squares polynomial smoothing. Edge points use the polynomial fitted
// to the first or last full window. A window longer than the data shrinks
// to the largest odd length that fits; if that no longer exceeds
// `polyorder` the input is returned unchanged. Throws kParameter when
// `window` is even or not greater than `polyorder`.
std::vector<double> SavitzkyGolay(std::span<const double> y,
                                  std::size_t window, std::size_t polyorder);

struct CurveOptions {
  std::size_t window = 11;
  std::size_t polyorder = 3;
  std::size_t bins = 100;
  // Shared binning range; defaults to the observed balance range. Nodes
  // outside it are left out.
  std::optional<std::pair<double, double>> range;
};

struct CurveData {
  std::vector<double> xs;         // bin centres, ascending
  std::vector<double> ys_raw;     // mean r(v) of the nodes in each bin
  std::vector<double> ys_smooth;
  std::vector<std::size_t> counts;
};

// Nodes without arcs are skipped; empty bins are dropped before smoothing.
// Throws kUndefined when no node qualifies.
CurveData BalanceCurve(const DirectedHypergraph& g,
                       std::span<const double> per_arc,
                       const CurveOptions& opts = {});

// Mean squared difference of the smoothed curves over the overlap of their
// x ranges, at every x of either curve inside it, with linear
// interpolation. Throws kUndefined when the ranges do not meet.
double MeanGap(const CurveData& a, const CurveData& b);

}  // namespace hyperrec

#endif  // HYPERREC_ANALYTICS_HPP_
