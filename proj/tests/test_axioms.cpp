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


#include <random>
#include <string>

#include "axiom_check.hpp"
#include "doctest.h"
#include "hyperrec/axioms.hpp"
#include "hyperrec/error.hpp"
#include "hyperrec/measure.hpp"
#include "hyperrec/search.hpp"
#include "oracles.hpp"

using namespace hyperrec;

namespace {

constexpr ArcAxiom kAll[] = {ArcAxiom::k1,  ArcAxiom::k2A, ArcAxiom::k2B,
                             ArcAxiom::k3A, ArcAxiom::k3B, ArcAxiom::k4};

double EdgeReciprocity(const DirectedHypergraph& g) {
  std::size_t mutual = 0;
  for (ArcId k = 0; k < g.num_arcs(); ++k) {
    Hyperarc rev{g.arc(k).tail, g.arc(k).head};
    for (ArcId j = 0; j < g.num_arcs(); ++j) {
      if (g.arc(j) == rev) {
        ++mutual;
        break;
      }
    }
  }
  return static_cast<double>(mutual) / static_cast<double>(g.num_arcs());
}

}  // namespace

TEST_CASE("sampled instances meet their preconditions") {
  std::mt19937_64 rng(41);
  for (ArcAxiom ax : kAll) {
    for (int trial = 0; trial < 1000; ++trial) {
      AxiomInstance in = SampleAxiomInstance(ax, rng);
      REQUIRE(in.axiom == ax);
      CHECK_MESSAGE(axiom_check::Satisfies(in), "axiom ", AxiomName(ax), " trial ", trial);
    }
  }
}

TEST_CASE("example pairs meet their preconditions") {
  for (ArcAxiom ax : kAll) {
    CHECK_MESSAGE(axiom_check::Satisfies(AxiomExample(ax)), "axiom ", AxiomName(ax));
  }
}

TEST_CASE("property: hyperrec orders every sampled pair strictly") {
  std::mt19937_64 rng(42);
  for (ArcAxiom ax : kAll) {
    for (int trial = 0; trial < 1000; ++trial) {
      AxiomInstance in = SampleAxiomInstance(ax, rng);
      for (double alpha : {0.1, 0.5, 1.0}) {
        double lo = ArcLevelValue(Measure::kHyperRec, in.lesser, alpha);
        double hi = ArcLevelValue(Measure::kHyperRec, in.greater, alpha);
        CHECK_MESSAGE(lo < hi, "axiom ", AxiomName(ax), " alpha ", alpha);
        CHECK(lo == doctest::Approx(oracle::Reciprocity(in.lesser.target, in.lesser.refs(), alpha))
                        .epsilon(1e-12));
        CHECK(hi == doctest::Approx(oracle::Reciprocity(in.greater.target, in.greater.refs(), alpha))
                        .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("property: arc and hypergraph values stay in the unit interval") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    DirectedHypergraph g = RandomHypergraph(rng, 3 + trial % 9, 1 + trial % 12, 4);
    for (double alpha : {kAlphaNearZero, 0.5, 1.0}) {
      ReciprocityConfig cfg;
      cfg.alpha = alpha;
      cfg.threads = 1;
      std::vector<ArcReciprocity> all = AllReciprocities(g, cfg);
      for (const ArcReciprocity& a : all) {
        CHECK(a.value >= 0.0);
        CHECK(a.value <= 1.0);
      }
      double r = HypergraphReciprocity(all);
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
    }
  }
}

TEST_CASE("property: digraphs reduce to edge reciprocity") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    DirectedHypergraph g = RandomDigraph(rng, 3 + trial % 10, 1 + trial % 20, 0.3);
    double want = EdgeReciprocity(g);
    for (double alpha : {kAlphaNearZero, 0.5, 1.0}) {
      CHECK(GraphLevelValue(Measure::kHyperRec, g, alpha) == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(DigraphReciprocity(g) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("property: both bounds are reachable") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    DirectedHypergraph g = RandomHypergraph(rng, 3 + trial % 9, 1 + trial % 12, 4);
    DirectedHypergraph plus = AugmentWithReciprocals(g);
    CHECK(plus.num_arcs() >= g.num_arcs());
    for (ArcId k = 0; k < g.num_arcs(); ++k) CHECK(plus.Find(g.arc(k)).has_value());
    CHECK(GraphLevelValue(Measure::kHyperRec, plus, 1.0) == 1.0);
    DirectedHypergraph minus = DirectedHypergraph::FromArcs(g.num_nodes(), {g.arc(0)});
    CHECK(GraphLevelValue(Measure::kHyperRec, minus, 1.0) == 0.0);
  }
}

TEST_CASE("graph-level value is refused for arc-only measures") {
  DirectedHypergraph g = ThreeEdgeDigraph();
  CHECK_THROWS_AS(GraphLevelValue(Measure::kB2, g, 1.0), Error);
}

TEST_CASE("satisfaction matrix shape and hyperrec row") {
  std::vector<SatisfactionCell> cells = SatisfactionMatrix(200, 9, 1.0);
  CHECK(cells.size() == 8 * 8);
  for (const SatisfactionCell& c : cells) {
    if (c.measure != Measure::kHyperRec) continue;
    CHECK(c.applicable);
    CHECK_MESSAGE(c.violations == 0, "axiom ", c.axiom, ": ", c.witness);
  }
}
