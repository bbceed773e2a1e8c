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


// Synthetic generator configuration shaped like the email dataset: head
// sizes follow a geometric law on 1..20 with mean 2.354, tails are single
// nodes, and each new node brings 0..26 arcs uniformly.

#ifndef HYPERREC_TESTS_REDI_CONFIG_HPP_
#define HYPERREC_TESTS_REDI_CONFIG_HPP_

#include <cmath>
#include <vector>

#include "hyperrec/generators.hpp"

namespace redi_config {

inline constexpr double kMeanHead = 2.354;
inline constexpr std::size_t kNodes = 110;

inline std::vector<double> TruncatedGeometric(double q, std::size_t max) {
  std::vector<double> p(max + 1, 0.0);
  double total = 0.0;
  for (std::size_t k = 1; k <= max; ++k) total += p[k] = std::pow(q, static_cast<double>(k - 1));
  for (double& x : p) x /= total;
  return p;
}

inline double Mean(const std::vector<double>& p) {
  double m = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) m += static_cast<double>(k) * p[k];
  return m;
}

inline hyperrec::SizeDistributions EmailLike() {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    double mid = 0.5 * (lo + hi);
    (Mean(TruncatedGeometric(mid, 20)) < kMeanHead ? lo : hi) = mid;
  }
  hyperrec::SizeDistributions d;
  d.head = TruncatedGeometric(0.5 * (lo + hi), 20);
  d.tail = {0.0, 1.0};
  d.arcs_per_node.assign(27, 1.0 / 27.0);
  return d;
}

inline hyperrec::GeneratorParams Params(double beta1, double beta2, std::uint64_t seed) {
  hyperrec::GeneratorParams p;
  p.n = kNodes;
  p.beta1 = beta1;
  p.beta2 = beta2;
  p.seed = seed;
  return p;
}

}  // namespace redi_config

#endif  // HYPERREC_TESTS_REDI_CONFIG_HPP_
