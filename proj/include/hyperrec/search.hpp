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

#ifndef HYPERREC_SEARCH_HPP_
#define HYPERREC_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperrec/hypergraph.hpp"
#include "hyperrec/measure.hpp"

namespace hyperrec {

// Arcs k with H_i ∩ T_k and T_i ∩ H_k both non-empty, ascending by id.
std::vector<ArcId> InverseOverlaps(const DirectedHypergraph& g, ArcId target);

struct ReducedSpace {
  std::vector<ArcId> omega;
  // One representative per (H_i ∩ T_k, T_i ∩ H_k) group: the member with
  // the smallest head set, lowest id on ties. Ascending by id.
  std::vector<ArcId> psi;
  // An arc equal to <T_i, H_i>, when present.
  std::optional<ArcId> perfect;
};

ReducedSpace ReduceSearchSpace(const DirectedHypergraph& g, ArcId target);

// Best divergence sum for each reciprocal-set size, which fixes the optimum
// for every alpha at once.
struct ReciprocityProfile {
  enum class Kind { kNoOverlap, kPerfect, kSearched };
  Kind kind = Kind::kNoOverlap;
  std::size_t head_size = 0;
  // min_divergence[s - 1] is the smallest NormalizedDivergenceSum over the
  // examined sets of size s; argmin[s - 1] is the first set reaching it.
  std::vector<double> min_divergence;
  std::vector<std::vector<ArcId>> argmin;
  std::uint64_t searched = 0;
  std::uint32_t omega_size = 0;
  std::uint32_t psi_size = 0;
  std::string error;  // set when the search failed and errors continue

  ArcReciprocity At(double alpha) const;
};

// General path: exhaustive search over the non-empty subsets of Psi.
ReciprocityProfile SearchProfile(const DirectedHypergraph& g, ArcId target,
                                 const ReciprocityConfig& cfg);
// Unit-tail path: only prefixes of Psi sorted by head size.
ReciprocityProfile UnitTailProfile(const DirectedHypergraph& g, ArcId target,
                                   const ReciprocityConfig& cfg);

ArcReciprocity BestReciprocity(const DirectedHypergraph& g, ArcId target,
                               const ReciprocityConfig& cfg);
ArcReciprocity UnitTailBest(const DirectedHypergraph& g, ArcId target,
                            const ReciprocityConfig& cfg);

// Literal maximisation over all non-empty subsets of E.
ArcReciprocity BruteForceReciprocity(const DirectedHypergraph& g, ArcId target,
                                     const ReciprocityConfig& cfg);

bool IsUnitTail(const DirectedHypergraph& g);

// Per-arc profiles in arc order, computed in parallel. Uses the unit-tail
// path when every arc has a single tail node.
std::vector<ReciprocityProfile> AllProfiles(const DirectedHypergraph& g,
                                            const ReciprocityConfig& cfg);

std::vector<ArcReciprocity> AllReciprocities(const DirectedHypergraph& g,
                                             const ReciprocityConfig& cfg);

}  // namespace hyperrec

#endif  // HYPERREC_SEARCH_HPP_
