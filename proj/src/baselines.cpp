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

#include "hyperrec/baselines.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hyperrec/error.hpp"
#include "hyperrec/measure.hpp"
#include "hyperrec/search.hpp"

namespace hyperrec {
namespace {

std::vector<const Hyperarc*> Resolve(const DirectedHypergraph& g, ArcId target,
                                     std::span<const ArcId> ids) {
  if (ids.empty()) {
    throw Error(ErrorKind::kPrecondition, "reciprocal set is empty");
  }
  std::vector<ArcId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (target >= g.num_arcs() || sorted.back() >= g.num_arcs()) {
    throw Error(ErrorKind::kPrecondition, "arc id out of range");
  }
  std::vector<const Hyperarc*> arcs;
  for (ArcId id : sorted) arcs.push_back(&g.arc(id));
  return arcs;
}

void RequireNonEmpty(std::span<const Hyperarc* const> reciprocal) {
  if (reciprocal.empty()) {
    throw Error(ErrorKind::kPrecondition, "reciprocal set is empty");
  }
}

NodeId MaxNode(const Hyperarc& a) {
  return std::max(a.head.back(), a.tail.back());
}

double FixedSetValue(const DirectedHypergraph& g, ArcId target,
                     const std::vector<ArcId>& ids, double alpha) {
  if (ids.empty()) return 0.0;
  return ArcReciprocityGiven(g, target, ids, alpha);
}

}  // namespace

void WeightedDigraph::Add(NodeId from, NodeId to, std::uint32_t w) {
  weights_[Key(from, to)] += w;
}

std::uint32_t WeightedDigraph::weight(NodeId from, NodeId to) const {
  auto it = weights_.find(Key(from, to));
  return it == weights_.end() ? 0 : it->second;
}

double WeightedDigraph::TraceOfSquare() const {
  double trace = 0.0;
  for (const auto& [key, w] : weights_) {
    NodeId from = static_cast<NodeId>(key >> 32);
    NodeId to = static_cast<NodeId>(key & 0xffffffffu);
    trace += static_cast<double>(w) * weight(to, from);
  }
  return trace;
}

WeightedDigraph CliqueExpand(std::size_t num_nodes,
                             std::span<const Hyperarc* const> arcs) {
  WeightedDigraph d(num_nodes);
  for (const Hyperarc* a : arcs) {
    for (NodeId t : a->tail) {
      for (NodeId h : a->head) d.Add(t, h);
    }
  }
  return d;
}

WeightedDigraph CliqueExpand(const DirectedHypergraph& g) {
  std::vector<const Hyperarc*> arcs;
  for (const Hyperarc& a : g.arcs()) arcs.push_back(&a);
  return CliqueExpand(g.num_nodes(), arcs);
}

double B1Pearcy(std::size_t num_nodes, std::span<const Hyperarc* const> arcs) {
  std::vector<Hyperarc> added;
  for (const Hyperarc* a : arcs) {
    Hyperarc rev = PerfectReciprocalOf(*a);
    bool present = std::any_of(arcs.begin(), arcs.end(),
                               [&](const Hyperarc* b) { return *b == rev; }) ||
                   std::find(added.begin(), added.end(), rev) != added.end();
    if (!present) added.push_back(std::move(rev));
  }
  std::vector<const Hyperarc*> augmented(arcs.begin(), arcs.end());
  for (const Hyperarc& a : added) augmented.push_back(&a);
  double denominator = CliqueExpand(num_nodes, augmented).TraceOfSquare();
  if (denominator == 0.0) {
    throw Error(ErrorKind::kUndefined, "B1 of an empty hypergraph");
  }
  return CliqueExpand(num_nodes, arcs).TraceOfSquare() / denominator;
}

double B1Pearcy(const DirectedHypergraph& g) {
  std::vector<const Hyperarc*> arcs;
  for (const Hyperarc& a : g.arcs()) arcs.push_back(&a);
  return B1Pearcy(g.num_nodes(), arcs);
}

double B1PearcyArc(const Hyperarc& target,
                   std::span<const Hyperarc* const> reciprocal) {
  RequireNonEmpty(reciprocal);
  std::vector<const Hyperarc*> arcs{&target};
  NodeId n = MaxNode(target);
  for (const Hyperarc* a : reciprocal) {
    arcs.push_back(a);
    n = std::max(n, MaxNode(*a));
  }
  return B1Pearcy(static_cast<std::size_t>(n) + 1, arcs);
}

double B2CoveredPairs(const Hyperarc& target,
                      std::span<const Hyperarc* const> reciprocal) {
  RequireNonEmpty(reciprocal);
  std::set<std::pair<NodeId, NodeId>> inverse;
  for (const Hyperarc* a : reciprocal) {
    for (NodeId h : a->head) {
      for (NodeId t : a->tail) inverse.emplace(t, h);
    }
  }
  std::size_t common = 0;
  for (NodeId h : target.head) {
    for (NodeId t : target.tail) common += inverse.count({h, t});
  }
  std::size_t pairs = target.head.size() * target.tail.size();
  return static_cast<double>(common) /
         static_cast<double>(pairs + inverse.size() - common);
}

double B2CoveredPairs(const DirectedHypergraph& g, ArcId target,
                      std::span<const ArcId> reciprocal) {
  return B2CoveredPairs(g.arc(target), Resolve(g, target, reciprocal));
}

double B3PenalizedPairs(const Hyperarc& target,
                        std::span<const Hyperarc* const> reciprocal,
                        double alpha) {
  return SizePenalty(reciprocal.size(), alpha) *
         B2CoveredPairs(target, reciprocal);
}

double B3PenalizedPairs(const DirectedHypergraph& g, ArcId target,
                        std::span<const ArcId> reciprocal, double alpha) {
  return B3PenalizedPairs(g.arc(target), Resolve(g, target, reciprocal), alpha);
}

double B4NoNormalization(const Hyperarc& target,
                         std::span<const Hyperarc* const> reciprocal,
                         double alpha) {
  RequireNonEmpty(reciprocal);
  double s = NormalizedDivergenceSum(target, reciprocal);
  return SizePenalty(reciprocal.size(), alpha) *
         (static_cast<double>(target.head.size()) - s);
}

double B4NoNormalization(const DirectedHypergraph& g, ArcId target,
                         std::span<const ArcId> reciprocal, double alpha) {
  return B4NoNormalization(g.arc(target), Resolve(g, target, reciprocal), alpha);
}

double B5NoSizePenalty(const Hyperarc& target,
                       std::span<const Hyperarc* const> reciprocal) {
  RequireNonEmpty(reciprocal);
  double s = NormalizedDivergenceSum(target, reciprocal);
  return 1.0 - s / static_cast<double>(target.head.size());
}

double B5NoSizePenalty(const DirectedHypergraph& g, ArcId target,
                       std::span<const ArcId> reciprocal) {
  return B5NoSizePenalty(g.arc(target), Resolve(g, target, reciprocal));
}

double B6AllArcs(const DirectedHypergraph& g, ArcId target, double alpha) {
  if (g.num_arcs() == 0) {
    throw Error(ErrorKind::kUndefined, "B6 of an empty hypergraph");
  }
  std::vector<ArcId> ids;
  for (ArcId k = 0; k < g.num_arcs(); ++k) {
    if (k != target) ids.push_back(k);
  }
  return FixedSetValue(g, target, ids, alpha);
}

double B7OverlappingArcs(const DirectedHypergraph& g, ArcId target,
                         double alpha) {
  return FixedSetValue(g, target, InverseOverlaps(g, target), alpha);
}

double B6Hypergraph(const DirectedHypergraph& g, double alpha) {
  if (g.num_arcs() == 0) {
    throw Error(ErrorKind::kUndefined, "B6 of an empty hypergraph");
  }
  double sum = 0.0;
  for (ArcId k = 0; k < g.num_arcs(); ++k) sum += B6AllArcs(g, k, alpha);
  return sum / static_cast<double>(g.num_arcs());
}

double B7Hypergraph(const DirectedHypergraph& g, double alpha) {
  if (g.num_arcs() == 0) {
    throw Error(ErrorKind::kUndefined, "B7 of an empty hypergraph");
  }
  double sum = 0.0;
  for (ArcId k = 0; k < g.num_arcs(); ++k) sum += B7OverlappingArcs(g, k, alpha);
  return sum / static_cast<double>(g.num_arcs());
}

}  // namespace hyperrec
