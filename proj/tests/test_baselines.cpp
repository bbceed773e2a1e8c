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


#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "hyperrec/axioms.hpp"
#include "hyperrec/baselines.hpp"
#include "hyperrec/error.hpp"
#include "hyperrec/measure.hpp"
#include "hyperrec/search.hpp"
#include "oracles.hpp"

using namespace hyperrec;

namespace {

std::vector<const Hyperarc*> AllArcs(const DirectedHypergraph& g) {
  std::vector<const Hyperarc*> v;
  for (ArcId k = 0; k < g.num_arcs(); ++k) v.push_back(&g.arc(k));
  return v;
}

// Dense clique expansion trace ratio.
double DenseB1(std::size_t n, const std::vector<const Hyperarc*>& arcs) {
  using Matrix = std::vector<std::vector<double>>;
  auto expand = [n](const std::vector<Hyperarc>& list) {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (const Hyperarc& e : list) {
      for (NodeId u : e.tail) {
        for (NodeId v : e.head) a[u][v] += 1.0;
      }
    }
    return a;
  };
  auto trace_sq = [n](const Matrix& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) t += a[i][k] * a[k][i];
    }
    return t;
  };
  std::vector<Hyperarc> plain, augmented;
  for (const Hyperarc* e : arcs) plain.push_back(*e);
  augmented = plain;
  for (const Hyperarc& e : plain) {
    Hyperarc rev{e.tail, e.head};
    bool present = false;
    for (const Hyperarc& f : plain) present = present || f == rev;
    if (!present) augmented.push_back(rev);
  }
  return trace_sq(expand(plain)) / trace_sq(expand(augmented));
}

double PairJaccard(const Hyperarc& t, const std::vector<const Hyperarc*>& r) {
  std::set<std::pair<NodeId, NodeId>> k, inv;
  for (NodeId h : t.head) {
    for (NodeId x : t.tail) k.insert({h, x});
  }
  for (const Hyperarc* e : r) {
    for (NodeId h : e->head) {
      for (NodeId x : e->tail) inv.insert({x, h});
    }
  }
  std::size_t both = 0;
  for (const auto& p : k) both += inv.count(p);
  return static_cast<double>(both) / static_cast<double>(k.size() + inv.size() - both);
}

ReciprocityConfig Serial(double alpha) {
  ReciprocityConfig c;
  c.alpha = alpha;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("clique expansion of the three-edge digraph") {
  DirectedHypergraph g = ThreeEdgeDigraph();
  WeightedDigraph w = CliqueExpand(g);
  CHECK(w.weight(0, 1) == 1);
  CHECK(w.weight(0, 2) == 1);
  CHECK(w.weight(1, 0) == 1);
  CHECK(w.weight(2, 0) == 0);
  CHECK(w.num_edges() == 3);
  CHECK(w.TraceOfSquare() == 2.0);
  DirectedHypergraph aug = AugmentWithReciprocals(g);
  CHECK(CliqueExpand(aug).weight(2, 0) == 1);
  CHECK(CliqueExpand(aug).TraceOfSquare() == 4.0);
}

TEST_CASE("single arc expands to its biclique") {
  DirectedHypergraph g = DirectedHypergraph::FromArcs(3, {Hyperarc{{0, 1}, {2}}});
  WeightedDigraph w = CliqueExpand(g);
  CHECK(w.weight(2, 0) == 1);
  CHECK(w.weight(2, 1) == 1);
  CHECK(w.num_edges() == 2);
}

TEST_CASE("three-edge digraph values") {
  DirectedHypergraph g = ThreeEdgeDigraph();
  CHECK(GraphLevelValue(Measure::kHyperRec, g, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(B1Pearcy(g) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(B6AllArcs(g, 0, 1.0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(B6AllArcs(g, 1, 1.0) == doctest::Approx(0.3444).epsilon(1e-3));
  CHECK(B6AllArcs(g, 2, 1.0) == 0.0);
  CHECK(B6Hypergraph(g, 1.0) == doctest::Approx(0.2815).epsilon(1e-3));
}

TEST_CASE("b1 is one on perfectly reciprocal graphs and undefined when empty") {
  DirectedHypergraph g = DirectedHypergraph::FromArcs(
      4, {Hyperarc{{0, 1}, {2}}, Hyperarc{{2}, {0, 1}}, Hyperarc{{3}, {0}}, Hyperarc{{0}, {3}}});
  CHECK(B1Pearcy(g) == 1.0);
  CHECK_THROWS_AS(B1Pearcy(DirectedHypergraph::FromArcs(2, {})), Error);
}

TEST_CASE("property: b1 matches a dense trace computation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    DirectedHypergraph g = RandomHypergraph(rng, 3 + trial % 8, 1 + trial % 10, 3);
    CHECK(B1Pearcy(g) == doctest::Approx(DenseB1(g.num_nodes(), AllArcs(g))).epsilon(1e-12));
  }
}

TEST_CASE("property: b1 arc form matches the dense trace on the arc's graph") {
  std::mt19937_64 rng(32);
  for (ArcAxiom ax : {ArcAxiom::k1, ArcAxiom::k2A, ArcAxiom::k3A, ArcAxiom::k4}) {
    for (int trial = 0; trial < 100; ++trial) {
      AxiomInstance in = SampleAxiomInstance(ax, rng);
      for (const ArcConfig* c : {&in.lesser, &in.greater}) {
        std::vector<const Hyperarc*> all = c->refs();
        all.insert(all.begin(), &c->target);
        std::size_t n = oracle::Universe(c->target, c->refs());
        CHECK(B1PearcyArc(c->target, c->refs()) ==
              doctest::Approx(DenseB1(n, all)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("property: b2 and b3 match a pair-set computation") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    DirectedHypergraph g = RandomHypergraph(rng, 3 + trial % 8, 2 + trial % 8, 3);
    std::vector<ArcId> r;
    std::vector<const Hyperarc*> refs;
    for (ArcId k = 1; k < g.num_arcs(); ++k) {
      if (rng() % 2) {
        r.push_back(k);
        refs.push_back(&g.arc(k));
      }
    }
    if (r.empty()) continue;
    double want = PairJaccard(g.arc(0), refs);
    CHECK(B2CoveredPairs(g, 0, r) == doctest::Approx(want).epsilon(1e-12));
    CHECK(B3PenalizedPairs(g, 0, r, 0.5) ==
          doctest::Approx(want * std::pow(1.0 / static_cast<double>(r.size()), 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("b2 edge cases") {
  Hyperarc t{{0, 1}, {2}};
  Hyperarc perfect{{2}, {0, 1}};
  Hyperarc disjoint{{3}, {4}};
  std::vector<const Hyperarc*> one{&perfect};
  std::vector<const Hyperarc*> none{&disjoint};
  CHECK(B2CoveredPairs(t, one) == 1.0);
  CHECK(B2CoveredPairs(t, none) == 0.0);
  CHECK_THROWS_AS(B2CoveredPairs(t, std::vector<const Hyperarc*>{}), Error);
  CHECK(B3PenalizedPairs(t, one, 1.0) == B2CoveredPairs(t, one));
  std::vector<const Hyperarc*> two{&perfect, &disjoint};
  CHECK(B3PenalizedPairs(t, two, 1.0) < B3PenalizedPairs(t, two, 0.5));
}

TEST_CASE("b4 grows with the head under perfect reciprocity") {
  for (std::size_t h = 1; h <= 5; ++h) {
    Hyperarc t;
    for (NodeId v = 0; v < h; ++v) t.head.push_back(v);
    t.tail = {static_cast<NodeId>(h)};
    Hyperarc rev{t.tail, t.head};
    std::vector<const Hyperarc*> r{&rev};
    CHECK(B4NoNormalization(t, r, 1.0) == doctest::Approx(static_cast<double>(h)));
  }
  Hyperarc t{{0}, {1, 2}};
  Hyperarc part{{1}, {0}};
  std::vector<const Hyperarc*> r{&part};
  CHECK(B4NoNormalization(t, r, 0.5) == doctest::Approx(ReciprocityOfArcs(t, r, 0.5)));
}

TEST_CASE("b5 drops the size penalty") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    AxiomInstance in = SampleAxiomInstance(ArcAxiom::k3B, rng);
    std::vector<const Hyperarc*> r = in.lesser.refs();
    CHECK(B5NoSizePenalty(in.lesser.target, r) ==
          doctest::Approx(oracle::Reciprocity(in.lesser.target, r, 0.0)).epsilon(1e-12));
  }
  Hyperarc t{{0}, {1}};
  Hyperarc rev{{1}, {0}};
  CHECK(B5NoSizePenalty(t, std::vector<const Hyperarc*>{&rev}) == 1.0);
}

TEST_CASE("b7 on a perfect pair is one and b7 is zero without overlap") {
  DirectedHypergraph g = DirectedHypergraph::FromArcs(
      4, {Hyperarc{{0}, {1}}, Hyperarc{{1}, {0}}, Hyperarc{{2}, {3}}});
  CHECK(B7OverlappingArcs(g, 0, 1.0) == 1.0);
  CHECK(B7OverlappingArcs(g, 2, 1.0) == 0.0);
  CHECK(B6AllArcs(DirectedHypergraph::FromArcs(2, {Hyperarc{{0}, {1}}}), 0, 1.0) == 0.0);
}

TEST_CASE("property: the maximum dominates b6 and b7") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    DirectedHypergraph g = RandomHypergraph(rng, 4 + trial % 6, 2 + trial % 8, 3);
    for (double alpha : {kAlphaNearZero, 1.0}) {
      for (ArcId t = 0; t < g.num_arcs(); ++t) {
        double best = BruteForceReciprocity(g, t, Serial(alpha)).value;
        CHECK(best + 1e-12 >= B6AllArcs(g, t, alpha));
        CHECK(best + 1e-12 >= B7OverlappingArcs(g, t, alpha));
      }
    }
  }
}

TEST_CASE("example pairs for the measures under comparison") {
  struct Row {
    ArcAxiom ax;
    double lesser, greater;
  };
  // Reference values for the six example pairs at alpha = 1.
  for (Row row : {Row{ArcAxiom::k1, 0.0, 0.3605}, Row{ArcAxiom::k2A, 0.2697, 0.5394},
                  Row{ArcAxiom::k2B, 0.4444, 0.5394}, Row{ArcAxiom::k3A, 0.3167, 0.6466},
                  Row{ArcAxiom::k3B, 0.3233, 0.6466}, Row{ArcAxiom::k4, 0.2347, 0.2500}}) {
    AxiomInstance in = AxiomExample(row.ax);
    CHECK(std::abs(ArcLevelValue(Measure::kHyperRec, in.lesser, 1.0) - row.lesser) <= 1e-3);
    CHECK(std::abs(ArcLevelValue(Measure::kHyperRec, in.greater, 1.0) - row.greater) <= 1e-3);
  }
  for (ArcAxiom ax : {ArcAxiom::k3A, ArcAxiom::k3B}) {
    AxiomInstance in = AxiomExample(ax);
    CHECK(ArcLevelValue(Measure::kB1, in.lesser, 1.0) == doctest::Approx(0.2093).epsilon(1e-3));
    CHECK(ArcLevelValue(Measure::kB1, in.greater, 1.0) == doctest::Approx(0.2093).epsilon(1e-3));
    CHECK(ArcLevelValue(Measure::kB2, in.lesser, 1.0) == doctest::Approx(0.5625).epsilon(1e-3));
    CHECK(ArcLevelValue(Measure::kB2, in.greater, 1.0) == doctest::Approx(0.5625).epsilon(1e-3));
  }
  CHECK(ArcLevelValue(Measure::kB5, AxiomExample(ArcAxiom::k3A).lesser, 1.0) ==
        doctest::Approx(0.6333).epsilon(1e-3));
  AxiomInstance four = AxiomExample(ArcAxiom::k4);
  CHECK(ArcLevelValue(Measure::kB2, four.lesser, 1.0) == 1.0);
  CHECK(ArcLevelValue(Measure::kB2, four.greater, 1.0) == 1.0);
  CHECK(ArcLevelValue(Measure::kB3, four.lesser, 1.0) == 0.25);
  CHECK(ArcLevelValue(Measure::kB3, four.greater, 1.0) == 0.25);
}

TEST_CASE("b5 equals hyperrec for a single reciprocal arc") {
  // Both sides of the identical-head example carry this arc set.
  AxiomInstance in = AxiomExample(ArcAxiom::k3B);
  CHECK(ArcLevelValue(Measure::kB5, in.greater, 1.0) ==
        doctest::Approx(ArcLevelValue(Measure::kHyperRec, in.greater, 1.0)).epsilon(1e-12));
  CHECK(ArcLevelValue(Measure::kB5, in.lesser, 1.0) ==
        doctest::Approx(2.0 * ArcLevelValue(Measure::kHyperRec, in.lesser, 1.0)).epsilon(1e-12));
}
