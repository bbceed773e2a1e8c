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

#ifndef HYPERREC_GENERATORS_HPP_
#define HYPERREC_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "hyperrec/hypergraph.hpp"
#include "hyperrec/measure.hpp"

namespace hyperrec {

// Empirical distributions indexed by value: head[k] = P(|H| = k).
struct SizeDistributions {
  std::vector<double> head;
  std::vector<double> tail;
  std::vector<double> arcs_per_node;  // index 0 allowed

  double MeanHead() const;
  double MeanTail() const;
  double MeanArcsPerNode() const;
};

// Throws kParameter unless each distribution is non-negative, sums to 1
// within 1e-9, and the size distributions put no mass on 0.
void Validate(const SizeDistributions& d);

// Histograms of head sizes, tail sizes, and arcs per node, where each arc
// is attributed to its highest node id (its latest-arriving member).
SizeDistributions EstimateDistributions(const DirectedHypergraph& reference);

enum class AttachmentMode { kGroupDegree, kNodeDegree };

struct GeneratorParams {
  std::size_t n = 0;             // total nodes, initial ones included
  std::size_t initial_arcs = 10; // N; the first 2N nodes form N arcs
  double beta1 = 0.0;            // probability an arc is reciprocal
  double beta2 = 0.0;            // extent of reciprocity
  std::uint64_t seed = 0;
  AttachmentMode attachment = AttachmentMode::kGroupDegree;
  std::size_t retry_budget = 100;
};

// Same node count and per-arc head/tail sizes, nodes drawn uniformly.
// Arcs colliding with an earlier one are redrawn.
DirectedHypergraph NullModel(const DirectedHypergraph& reference,
                             std::uint64_t seed);

// Preferential-attachment generator with reciprocal arcs.
DirectedHypergraph RediGenerate(const GeneratorParams& params,
                                const SizeDistributions& dists);

// RediGenerate with beta1 = beta2 = 0.
DirectedHypergraph BaselineGenerate(GeneratorParams params,
                                    const SizeDistributions& dists);

// Search spaces for beta1 by dataset scale, and the fixed beta2 space.
std::vector<double> Beta1Grid(std::size_t nodes, std::size_t arcs);
std::vector<double> Beta2Grid();

struct GridPoint {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double mean_r = 0.0;  // mean r(G) over seeds, in [0, 1]
  double sd_r = 0.0;    // sample standard deviation
};

struct GridSearchResult {
  GridPoint best;
  std::vector<GridPoint> evaluated;
};

// Picks the (beta1, beta2) whose mean r(G) over `seeds` generations is
// closest to `target_r`. Seeds are base.seed, base.seed + 1, ...
GridSearchResult GridSearchBetas(const GeneratorParams& base,
                                 const SizeDistributions& dists,
                                 double target_r,
                                 const std::vector<double>& beta1s,
                                 const std::vector<double>& beta2s,
                                 std::size_t seeds,
                                 const ReciprocityConfig& measure);

// Mean and sample standard deviation of r(G) over seeded generations.
GridPoint EvaluateBetas(const GeneratorParams& base,
                        const SizeDistributions& dists, std::size_t seeds,
                        const ReciprocityConfig& measure);

}  // namespace hyperrec

#endif  // HYPERREC_GENERATORS_HPP_
