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

#ifndef HYPERREC_MEASURE_HPP_
#define HYPERREC_MEASURE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperrec/hypergraph.hpp"

namespace hyperrec {

// Stand-in for "alpha close to zero".
inline constexpr double kAlphaNearZero = 1e-4;

struct ReciprocityConfig {
  double alpha = 1.0;            // size-penalty exponent, in (0, 1]
  std::size_t psi_cap = 25;      // largest reduced search space allowed
  std::size_t oracle_limit = 15; // brute force refuses larger |E|
  unsigned threads = 0;          // 0 means hardware concurrency
  bool continue_on_error = false;
};

// Throws kParameter on alpha outside (0, 1] or psi_cap outside [1, 62].
void Validate(const ReciprocityConfig& cfg);

struct ArcReciprocity {
  double value = 0.0;
  std::vector<ArcId> reciprocal_set;  // ascending
  std::uint64_t searched = 0;         // candidate sets evaluated
  std::uint32_t omega_size = 0;
  std::uint32_t psi_size = 0;
  std::string error;                  // set only when a search failed
};

// (1/|R|)^alpha.
double SizePenalty(std::size_t reciprocal_size, double alpha);

// Sum over head nodes of JSD(p_h, p*_h) / L_max, for a multiset of
// reciprocal arcs. Lies in [0, |H|].
double NormalizedDivergenceSum(const Hyperarc& target,
                               std::span<const Hyperarc* const> reciprocal);

// Arc reciprocity for an explicit (multi)set of reciprocal arcs.
double ReciprocityOfArcs(const Hyperarc& target,
                         std::span<const Hyperarc* const> reciprocal,
                         double alpha);

// Arc reciprocity for a set of arc ids of `g`; duplicate ids collapse.
double ArcReciprocityGiven(const DirectedHypergraph& g, ArcId target,
                           std::span<const ArcId> reciprocal, double alpha);

// Mean of per-arc values. Throws kUndefined on an empty list or on any
// entry carrying an error.
double HypergraphReciprocity(std::span<const ArcReciprocity> per_arc);

// |E<->| / |E| for graphs whose arcs all have one head and one tail node.
double DigraphReciprocity(const DirectedHypergraph& g);

}  // namespace hyperrec

#endif  // HYPERREC_MEASURE_HPP_
