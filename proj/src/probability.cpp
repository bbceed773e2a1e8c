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

#include "hyperrec/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperrec/error.hpp"

namespace hyperrec {
namespace {

double Total(const SparseMass& m) {
  double s = 0.0;
  for (const auto& [v, p] : m) s += p;
  return s;
}

void RequireNormalized(const SparseMass& m) {
  double s = Total(m);
  if (std::abs(s - 1.0) > kMassTolerance) {
    throw Error(ErrorKind::kPrecondition,
                "distribution mass " + std::to_string(s) + " is not 1");
  }
}

}  // namespace

double TransitionDistribution::at(NodeId v) const {
  auto it = std::lower_bound(
      mass.begin(), mass.end(), v,
      [](const std::pair<NodeId, double>& e, NodeId x) { return e.first < x; });
  return (it != mass.end() && it->first == v) ? it->second : 0.0;
}

double TransitionDistribution::total() const { return Total(mass); }

TransitionDistribution TransitionDistributionOver(
    const Hyperarc& target, std::span<const Hyperarc* const> reciprocal,
    NodeId source) {
  if (!std::binary_search(target.head.begin(), target.head.end(), source)) {
    throw Error(ErrorKind::kPrecondition,
                "source node " + std::to_string(source) +
                    " is not in the target head set");
  }
  TransitionDistribution d;
  d.source = source;
  std::vector<std::pair<NodeId, double>> pieces;
  std::size_t incident = 0;
  for (const Hyperarc* arc : reciprocal) {
    if (!std::binary_search(arc->tail.begin(), arc->tail.end(), source)) {
      continue;
    }
    ++incident;
    double share = 1.0 / static_cast<double>(arc->head.size());
    for (NodeId v : arc->head) pieces.emplace_back(v, share);
  }
  if (incident == 0) {
    d.mass.emplace_back(kSinkNode, 1.0);
    return d;
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [v, share] : pieces) {
    if (!d.mass.empty() && d.mass.back().first == v) {
      d.mass.back().second += share;
    } else {
      d.mass.emplace_back(v, share);
    }
  }
  double n = static_cast<double>(incident);
  for (auto& entry : d.mass) entry.second /= n;
  return d;
}

TransitionDistribution TransitionDistributionFor(const DirectedHypergraph& g,
                                                 ArcId target,
                                                 std::span<const ArcId> reciprocal,
                                                 NodeId source) {
  std::vector<ArcId> ids(reciprocal.begin(), reciprocal.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (target >= g.num_arcs() || (!ids.empty() && ids.back() >= g.num_arcs())) {
    throw Error(ErrorKind::kPrecondition, "arc id out of range");
  }
  if (ids.empty()) {
    throw Error(ErrorKind::kPrecondition, "reciprocal set is empty");
  }
  std::vector<const Hyperarc*> arcs;
  for (ArcId id : ids) arcs.push_back(&g.arc(id));
  return TransitionDistributionOver(g.arc(target), arcs, source);
}

TransitionDistribution OptimalDistribution(const Hyperarc& target) {
  TransitionDistribution d;
  d.source = target.head.empty() ? 0 : target.head.front();
  double share = 1.0 / static_cast<double>(target.tail.size());
  for (NodeId v : target.tail) d.mass.emplace_back(v, share);
  return d;
}

double JsdTerm(double p, double q) {
  double m = p + q;
  double t = 0.0;
  if (p > 0.0) t += 0.5 * p * std::log(2.0 * p / m);
  if (q > 0.0) t += 0.5 * q * std::log(2.0 * q / m);
  return t;
}

double Jsd(const SparseMass& p, const SparseMass& q) {
  RequireNormalized(p);
  RequireNormalized(q);
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size() || (i < p.size() && p[i].first < q[j].first)) {
      sum += JsdTerm(p[i++].second, 0.0);
    } else if (i == p.size() || q[j].first < p[i].first) {
      sum += JsdTerm(0.0, q[j++].second);
    } else {
      sum += JsdTerm(p[i++].second, q[j++].second);
    }
  }
  return std::clamp(sum, 0.0, kLMax);
}

double Jsd(const TransitionDistribution& p, const TransitionDistribution& q) {
  return Jsd(p.mass, q.mass);
}

double JsdInBase(const SparseMass& p, const SparseMass& q, double base) {
  if (!(base > 0.0) || base == 1.0) {
    throw Error(ErrorKind::kParameter, "logarithm base must be positive and not 1");
  }
  return Jsd(p, q) / std::log(base);
}

}  // namespace hyperrec
