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

#ifndef HYPERREC_PROBABILITY_HPP_
#define HYPERREC_PROBABILITY_HPP_

#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "hyperrec/hypergraph.hpp"

namespace hyperrec {

// Maximum divergence under the natural logarithm.
inline constexpr double kLMax = std::numbers::ln2;

// Tolerance on total mass before a distribution is considered broken.
inline constexpr double kMassTolerance = 1e-12;

using SparseMass = std::vector<std::pair<NodeId, double>>;

// Sparse distribution over V plus the sink, sorted by node id. The sink
// sorts last because kSinkNode is the largest id.
struct TransitionDistribution {
  NodeId source = 0;
  SparseMass mass;

  double at(NodeId v) const;
  double total() const;
};

// Walker distribution from `source` (a head node of `target`) through a
// multiset of reciprocal arcs.
TransitionDistribution TransitionDistributionOver(
    const Hyperarc& target, std::span<const Hyperarc* const> reciprocal,
    NodeId source);

// Same, with the reciprocal set given as arc ids of `g` (duplicates ignored).
TransitionDistribution TransitionDistributionFor(const DirectedHypergraph& g,
                                                 ArcId target,
                                                 std::span<const ArcId> reciprocal,
                                                 NodeId source);

// Uniform over the target's tail set.
TransitionDistribution OptimalDistribution(const Hyperarc& target);

// Jensen-Shannon divergence over the union support, in nats. Result is
// clamped into [0, ln 2] to absorb rounding. Throws if either input's mass
// differs from 1 by more than kMassTolerance.
double Jsd(const TransitionDistribution& p, const TransitionDistribution& q);
double Jsd(const SparseMass& p, const SparseMass& q);

// Divergence in an arbitrary logarithm base; the maximum is then
// ln 2 / ln base.
double JsdInBase(const SparseMass& p, const SparseMass& q, double base);

// One node's contribution: p/2 log(2p/(p+q)) + q/2 log(2q/(p+q)).
double JsdTerm(double p, double q);

}  // namespace hyperrec

#endif  // HYPERREC_PROBABILITY_HPP_
