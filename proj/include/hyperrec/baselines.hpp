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

#ifndef HYPERREC_BASELINES_HPP_
#define HYPERREC_BASELINES_HPP_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hyperrec/hypergraph.hpp"

namespace hyperrec {

// Clique expansion: weight(u -> v) counts arcs with u in the tail and v in
// the head. Self-loops cannot occur because H ∩ T = ∅.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(std::size_t n = 0) : n_(n) {}

  void Add(NodeId from, NodeId to, std::uint32_t w = 1);
  std::uint32_t weight(NodeId from, NodeId to) const;
  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return weights_.size(); }

  // tr(A^2) = sum over u, v of w(u -> v) * w(v -> u).
  double TraceOfSquare() const;

 private:
  static std::uint64_t Key(NodeId a, NodeId b) {
    return (std::uint64_t{a} << 32) | b;
  }

  std::size_t n_;
  std::unordered_map<std::uint64_t, std::uint32_t> weights_;
};

WeightedDigraph CliqueExpand(const DirectedHypergraph& g);
WeightedDigraph CliqueExpand(std::size_t num_nodes,
                             std::span<const Hyperarc* const> arcs);

// B1: tr(A^2) / tr(A'^2), where A' expands the arcs plus the perfect
// reciprocal of every arc that lacks one. Throws kUndefined when the
// denominator is zero.
double B1Pearcy(const DirectedHypergraph& g);
double B1Pearcy(std::size_t num_nodes, std::span<const Hyperarc* const> arcs);
// Arc-level form: B1 of the graph {target} ∪ R.
double B1PearcyArc(const Hyperarc& target,
                   std::span<const Hyperarc* const> reciprocal);

// B2: Jaccard index of K(e_i) against the union of inverse pair sets.
double B2CoveredPairs(const Hyperarc& target,
                      std::span<const Hyperarc* const> reciprocal);
double B2CoveredPairs(const DirectedHypergraph& g, ArcId target,
                      std::span<const ArcId> reciprocal);

// B3: B2 times (1/|R|)^alpha.
double B3PenalizedPairs(const Hyperarc& target,
                        std::span<const Hyperarc* const> reciprocal,
                        double alpha);
double B3PenalizedPairs(const DirectedHypergraph& g, ArcId target,
                        std::span<const ArcId> reciprocal, double alpha);

// B4: (1/|R|)^alpha (|H| - sum JSD / L_max). Not bounded by 1.
double B4NoNormalization(const Hyperarc& target,
                         std::span<const Hyperarc* const> reciprocal,
                         double alpha);
double B4NoNormalization(const DirectedHypergraph& g, ArcId target,
                         std::span<const ArcId> reciprocal, double alpha);

// B5: arc reciprocity without the size penalty.
double B5NoSizePenalty(const Hyperarc& target,
                       std::span<const Hyperarc* const> reciprocal);
double B5NoSizePenalty(const DirectedHypergraph& g, ArcId target,
                       std::span<const ArcId> reciprocal);

// B6: reciprocal set fixed to every other arc; 0 for a single-arc graph.
double B6AllArcs(const DirectedHypergraph& g, ArcId target, double alpha);
// B7: reciprocal set fixed to the inversely overlapping arcs; 0 if none.
double B7OverlappingArcs(const DirectedHypergraph& g, ArcId target,
                         double alpha);

// Hypergraph-level means of B6 / B7.
double B6Hypergraph(const DirectedHypergraph& g, double alpha);
double B7Hypergraph(const DirectedHypergraph& g, double alpha);

}  // namespace hyperrec

#endif  // HYPERREC_BASELINES_HPP_
