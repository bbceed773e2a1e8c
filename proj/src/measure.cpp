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

#include "hyperrec/measure.hpp"

#include <algorithm>
#include <cmath>

#include "hyperrec/error.hpp"
#include "hyperrec/probability.hpp"

namespace hyperrec {

void Validate(const ReciprocityConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
    throw Error(ErrorKind::kParameter, "alpha must lie in (0, 1]");
  }
  if (cfg.psi_cap < 1 || cfg.psi_cap > 62) {
    throw Error(ErrorKind::kParameter, "psi cap must lie in [1, 62]");
  }
}

double SizePenalty(std::size_t reciprocal_size, double alpha) {
  return std::pow(static_cast<double>(reciprocal_size), -alpha);
}

double NormalizedDivergenceSum(const Hyperarc& target,
                               std::span<const Hyperarc* const> reciprocal) {
  TransitionDistribution optimal = OptimalDistribution(target);
  double sum = 0.0;
  for (NodeId h : target.head) {
    TransitionDistribution p = TransitionDistributionOver(target, reciprocal, h);
    sum += Jsd(p, optimal) / kLMax;
  }
  return sum;
}

double ReciprocityOfArcs(const Hyperarc& target,
                         std::span<const Hyperarc* const> reciprocal,
                         double alpha) {
  if (reciprocal.empty()) {
    throw Error(ErrorKind::kPrecondition, "reciprocal set is empty");
  }
  double s = NormalizedDivergenceSum(target, reciprocal);
  double h = static_cast<double>(target.head.size());
  return SizePenalty(reciprocal.size(), alpha) * (1.0 - s / h);
}

double ArcReciprocityGiven(const DirectedHypergraph& g, ArcId target,
                           std::span<const ArcId> reciprocal, double alpha) {
  std::vector<ArcId> ids(reciprocal.begin(), reciprocal.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) {
    throw Error(ErrorKind::kPrecondition, "reciprocal set is empty");
  }
  if (target >= g.num_arcs() || ids.back() >= g.num_arcs()) {
    throw Error(ErrorKind::kPrecondition, "arc id out of range");
  }
  std::vector<const Hyperarc*> arcs;
  arcs.reserve(ids.size());
  for (ArcId id : ids) arcs.push_back(&g.arc(id));
  return ReciprocityOfArcs(g.arc(target), arcs, alpha);
}

double HypergraphReciprocity(std::span<const ArcReciprocity> per_arc) {
  if (per_arc.empty()) {
    throw Error(ErrorKind::kUndefined, "reciprocity of an empty arc list");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < per_arc.size(); ++i) {
    if (!per_arc[i].error.empty()) {
      throw Error(ErrorKind::kUndefined,
                  "arc " + std::to_string(i) + " has no value: " +
                      per_arc[i].error);
    }
    sum += per_arc[i].value;
  }
  return sum / static_cast<double>(per_arc.size());
}

double DigraphReciprocity(const DirectedHypergraph& g) {
  if (g.num_arcs() == 0) {
    throw Error(ErrorKind::kUndefined, "reciprocity of an empty graph");
  }
  std::size_t mutual = 0;
  for (const Hyperarc& a : g.arcs()) {
    if (a.head.size() != 1 || a.tail.size() != 1) {
      throw Error(ErrorKind::kPrecondition,
                  "digraph reciprocity needs |H| = |T| = 1 for every arc");
    }
    if (g.Find(PerfectReciprocalOf(a))) ++mutual;
  }
  return static_cast<double>(mutual) / static_cast<double>(g.num_arcs());
}

}  // namespace hyperrec
