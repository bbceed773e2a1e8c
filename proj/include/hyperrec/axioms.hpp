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

#ifndef HYPERREC_AXIOMS_HPP_
#define HYPERREC_AXIOMS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperrec/hypergraph.hpp"

namespace hyperrec {

// A target arc with an explicit reciprocal multiset.
struct ArcConfig {
  Hyperarc target;
  std::vector<Hyperarc> reciprocal;

  std::vector<const Hyperarc*> refs() const;
};

enum class ArcAxiom { k1, k2A, k2B, k3A, k3B, k4 };

// A pair the axiom orders strictly: r(lesser) < r(greater).
struct AxiomInstance {
  ArcAxiom axiom;
  ArcConfig lesser;
  ArcConfig greater;
};

// Random configuration meeting the axiom's preconditions.
AxiomInstance SampleAxiomInstance(ArcAxiom axiom, std::mt19937_64& rng);

const char* AxiomName(ArcAxiom axiom);

// Hand-built example pair per axiom, on a four-to-six node target. These
// are the canonical illustrations used for regression values.
AxiomInstance AxiomExample(ArcAxiom axiom);

// Digraph 1->2, 2->1, 1->3 as hyperarcs <{2},{1}>, <{1},{2}>, <{3},{1}>.
DirectedHypergraph ThreeEdgeDigraph();

enum class Measure { kHyperRec, kB1, kB2, kB3, kB4, kB5, kB6, kB7 };

const char* MeasureName(Measure m);

// Arc-level value of `m` for a fixed reciprocal set. B6 and B7 coincide
// with HyperRec at this level (B7 keeps only inversely overlapping members).
double ArcLevelValue(Measure m, const ArcConfig& c, double alpha);

// Hypergraph-level value; HyperRec maximises each arc's reciprocal set.
// Throws kPrecondition for measures without a hypergraph-level form.
double GraphLevelValue(Measure m, const DirectedHypergraph& g, double alpha);

// Random hypergraph with arcs of 1..max_side nodes per side.
DirectedHypergraph RandomHypergraph(std::mt19937_64& rng, std::size_t nodes,
                                    std::size_t arcs, std::size_t max_side);
// Random simple digraph as a hypergraph with unit heads and tails.
DirectedHypergraph RandomDigraph(std::mt19937_64& rng, std::size_t nodes,
                                 std::size_t edges, double mutual_bias);
// g plus the perfect reciprocal of every arc lacking one.
DirectedHypergraph AugmentWithReciprocals(const DirectedHypergraph& g);

struct SatisfactionCell {
  Measure measure;
  int axiom = 0;              // 1..8
  bool applicable = false;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::string witness;        // first violation, human readable
};

// Measure-by-axiom matrix: empirical satisfaction of Axioms 1-8 for every
// measure, at one alpha, over `trials` random instances per cell.
std::vector<SatisfactionCell> SatisfactionMatrix(std::size_t trials,
                                                 std::uint64_t seed,
                                                 double alpha);

}  // namespace hyperrec

#endif  // HYPERREC_AXIOMS_HPP_
