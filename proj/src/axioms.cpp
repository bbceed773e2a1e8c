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

#include "hyperrec/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "hyperrec/baselines.hpp"
#include "hyperrec/error.hpp"
#include "hyperrec/measure.hpp"
#include "hyperrec/search.hpp"

namespace hyperrec {
namespace {

using Rng = std::mt19937_64;

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<NodeId> Pick(Rng& rng, std::vector<NodeId> pool, std::size_t k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<NodeId> Minus(const std::vector<NodeId>& a,
                          const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<NodeId> Range(NodeId from, std::size_t count) {
  std::vector<NodeId> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

struct Shape {
  Hyperarc target;
  NodeId fresh;

  Shape(std::size_t a, std::size_t b)
      : target{Range(0, a), Range(static_cast<NodeId>(a), b)},
        fresh(static_cast<NodeId>(a + b)) {}

  std::vector<NodeId> Fresh(std::size_t k) {
    std::vector<NodeId> v = Range(fresh, k);
    fresh += static_cast<NodeId>(k);
    return v;
  }
};

// Reciprocal arc with |H' ∩ T| = x, |T' ∩ H| = y, |H'| = hp, |T'| = tp.
Hyperarc MakeReciprocal(Rng& rng, Shape& s, std::size_t x, std::size_t y,
                        std::size_t hp, std::size_t tp) {
  const Hyperarc& t = s.target;
  std::vector<NodeId> hx = Pick(rng, t.tail, x);
  std::vector<NodeId> ty = Pick(rng, t.head, y);
  std::vector<NodeId> head_pool = Minus(t.head, ty);
  std::vector<NodeId> extra = s.Fresh(hp - x);
  head_pool.insert(head_pool.end(), extra.begin(), extra.end());
  std::vector<NodeId> head_extra = Pick(rng, head_pool, hp - x);
  std::vector<NodeId> tail_pool = Minus(t.tail, hx);
  extra = s.Fresh(tp - y);
  tail_pool.insert(tail_pool.end(), extra.begin(), extra.end());
  std::vector<NodeId> tail_extra = Pick(rng, tail_pool, tp - y);
  Hyperarc r{hx, ty};
  r.head.insert(r.head.end(), head_extra.begin(), head_extra.end());
  r.tail.insert(r.tail.end(), tail_extra.begin(), tail_extra.end());
  Canonicalize(r);
  return r;
}

AxiomInstance SampleAxiom1(Rng& rng) {
  Shape s(Uniform(rng, 1, 4), Uniform(rng, 1, 4));
  const std::size_t a = s.target.head.size();
  const std::size_t b = s.target.tail.size();
  std::size_t xi = Uniform(rng, 0, b);
  std::size_t yi = Uniform(rng, 0, a);
  switch (Uniform(rng, 0, 2)) {
    case 0: xi = 0; break;
    case 1: yi = 0; break;
    default: xi = yi = 0;
  }
  Hyperarc ri = MakeReciprocal(rng, s, xi, yi, std::max<std::size_t>(xi, 1) + Uniform(rng, 0, 2),
                               std::max<std::size_t>(yi, 1) + Uniform(rng, 0, 2));
  std::size_t xj = Uniform(rng, 1, b);
  std::size_t yj = Uniform(rng, 1, a);
  Hyperarc rj = MakeReciprocal(rng, s, xj, yj, xj + Uniform(rng, 0, 2),
                               yj + Uniform(rng, 0, 2));
  return {ArcAxiom::k1, {s.target, {ri}}, {s.target, {rj}}};
}

AxiomInstance SampleAxiom2A(Rng& rng) {
  std::size_t a, b;
  do {
    a = Uniform(rng, 1, 5);
    b = Uniform(rng, 1, 5);
  } while (a + b < 3);
  Shape s(a, b);
  std::size_t xi, yi, xj, yj;
  do {
    xj = Uniform(rng, 1, b);
    yj = Uniform(rng, 1, a);
    xi = Uniform(rng, 1, xj);
    yi = Uniform(rng, 1, yj);
  } while (xi == xj && yi == yj);
  std::size_t hp = xj + Uniform(rng, 0, 2);
  std::size_t tp = yj + Uniform(rng, 0, 2);
  Hyperarc ri = MakeReciprocal(rng, s, xi, yi, hp, tp);
  Hyperarc rj = MakeReciprocal(rng, s, xj, yj, hp, tp);
  return {ArcAxiom::k2A, {s.target, {ri}}, {s.target, {rj}}};
}

AxiomInstance SampleAxiom2B(Rng& rng) {
  Shape s(Uniform(rng, 1, 5), Uniform(rng, 1, 5));
  std::size_t x = Uniform(rng, 1, s.target.tail.size());
  std::size_t y = Uniform(rng, 1, s.target.head.size());
  std::size_t hpj = x + Uniform(rng, 0, 2);
  std::size_t hpi = hpj + Uniform(rng, 1, 3);
  std::size_t tp = y + Uniform(rng, 0, 2);
  Hyperarc ri = MakeReciprocal(rng, s, x, y, hpi, tp);
  Hyperarc rj = MakeReciprocal(rng, s, x, y, hpj, tp);
  return {ArcAxiom::k2B, {s.target, {ri}}, {s.target, {rj}}};
}

// Two reciprocal arcs sharing one side and splitting the other.
AxiomInstance SampleAxiom3(Rng& rng, bool shared_tail) {
  std::size_t a = Uniform(rng, shared_tail ? 1 : 2, 5);
  std::size_t b = Uniform(rng, shared_tail ? 2 : 1, 5);
  Shape s(a, b);
  const Hyperarc& t = s.target;
  // The split side lives in T (shared tail) or H (shared head).
  const std::vector<NodeId>& split_from = shared_tail ? t.tail : t.head;
  const std::vector<NodeId>& shared_from = shared_tail ? t.head : t.tail;
  std::size_t shared = Uniform(rng, 1, shared_from.size());
  std::size_t total = Uniform(rng, 2, split_from.size());
  std::size_t first = Uniform(rng, 1, total - 1);
  std::vector<NodeId> common = Pick(rng, shared_from, shared);
  std::vector<NodeId> order = split_from;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<NodeId> p1(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(first));
  std::vector<NodeId> p2(order.begin() + static_cast<std::ptrdiff_t>(first),
                         order.begin() + static_cast<std::ptrdiff_t>(total));
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  std::vector<NodeId> j_shared = Pick(rng, shared_from, shared);
  std::vector<NodeId> j_split = Pick(rng, split_from, total);
  AxiomInstance inst;
  inst.axiom = shared_tail ? ArcAxiom::k3A : ArcAxiom::k3B;
  inst.lesser.target = inst.greater.target = t;
  if (shared_tail) {
    inst.lesser.reciprocal = {{p1, common}, {p2, common}};
    inst.greater.reciprocal = {{j_split, j_shared}};
  } else {
    inst.lesser.reciprocal = {{common, p1}, {common, p2}};
    inst.greater.reciprocal = {{j_shared, j_split}};
  }
  return inst;
}

bool UniformCoverage(const std::vector<std::pair<NodeId, NodeId>>& pairs,
                     const std::vector<NodeId>& nodes) {
  for (NodeId v : nodes) {
    std::size_t c = 0;
    for (const auto& [x, y] : pairs) c += (x == v) + (y == v);
    if (c != 2) return false;
  }
  return true;
}

AxiomInstance SampleAxiom4(Rng& rng) {
  Shape s(Uniform(rng, 1, 4), Uniform(rng, 4, 6));
  const Hyperarc& t = s.target;
  const std::size_t b = t.tail.size();
  std::vector<std::pair<NodeId, NodeId>> all;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) all.emplace_back(t.tail[i], t.tail[j]);
  }
  std::vector<std::pair<NodeId, NodeId>> biased;
  do {
    std::shuffle(all.begin(), all.end(), rng);
    biased.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(b));
  } while (UniformCoverage(biased, t.tail));
  std::vector<NodeId> cycle = t.tail;
  std::shuffle(cycle.begin(), cycle.end(), rng);
  AxiomInstance inst;
  inst.axiom = ArcAxiom::k4;
  inst.lesser.target = inst.greater.target = t;
  for (const auto& [x, y] : biased) {
    inst.lesser.reciprocal.push_back({{std::min(x, y), std::max(x, y)}, t.head});
  }
  for (std::size_t k = 0; k < b; ++k) {
    NodeId x = cycle[k];
    NodeId y = cycle[(k + 1) % b];
    inst.greater.reciprocal.push_back({{std::min(x, y), std::max(x, y)}, t.head});
  }
  return inst;
}

Hyperarc Arc(std::vector<NodeId> head, std::vector<NodeId> tail) {
  Hyperarc a{std::move(head), std::move(tail)};
  Canonicalize(a);
  return a;
}

bool InverselyOverlaps(const Hyperarc& t, const Hyperarc& k) {
  auto meets = [](const std::vector<NodeId>& x, const std::vector<NodeId>& y) {
    return std::any_of(x.begin(), x.end(), [&](NodeId v) {
      return std::binary_search(y.begin(), y.end(), v);
    });
  };
  return meets(t.head, k.tail) && meets(t.tail, k.head);
}

std::string Describe(const ArcConfig& c) {
  auto side = [](const std::vector<NodeId>& v) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '}';
    return out.str();
  };
  std::ostringstream out;
  out << '<' << side(c.target.head) << ',' << side(c.target.tail) << "> R=[";
  for (std::size_t i = 0; i < c.reciprocal.size(); ++i) {
    out << (i ? " " : "") << '<' << side(c.reciprocal[i].head) << ','
        << side(c.reciprocal[i].tail) << '>';
  }
  out << ']';
  return out.str();
}

DirectedHypergraph SingleArc(const DirectedHypergraph& g) {
  return DirectedHypergraph::FromArcs(g.num_nodes(), {g.arc(0)});
}

}  // namespace

std::vector<const Hyperarc*> ArcConfig::refs() const {
  std::vector<const Hyperarc*> out;
  out.reserve(reciprocal.size());
  for (const Hyperarc& a : reciprocal) out.push_back(&a);
  return out;
}

AxiomInstance SampleAxiomInstance(ArcAxiom axiom, std::mt19937_64& rng) {
  switch (axiom) {
    case ArcAxiom::k1: return SampleAxiom1(rng);
    case ArcAxiom::k2A: return SampleAxiom2A(rng);
    case ArcAxiom::k2B: return SampleAxiom2B(rng);
    case ArcAxiom::k3A: return SampleAxiom3(rng, true);
    case ArcAxiom::k3B: return SampleAxiom3(rng, false);
    case ArcAxiom::k4: return SampleAxiom4(rng);
  }
  throw Error(ErrorKind::kParameter, "unknown axiom");
}

const char* AxiomName(ArcAxiom axiom) {
  switch (axiom) {
    case ArcAxiom::k1: return "1";
    case ArcAxiom::k2A: return "2A";
    case ArcAxiom::k2B: return "2B";
    case ArcAxiom::k3A: return "3A";
    case ArcAxiom::k3B: return "3B";
    case ArcAxiom::k4: return "4";
  }
  return "?";
}

AxiomInstance AxiomExample(ArcAxiom axiom) {
  AxiomInstance inst;
  inst.axiom = axiom;
  switch (axiom) {
    case ArcAxiom::k1: {
      Hyperarc t = Arc({0, 1, 2, 3}, {4, 5, 6, 7});
      inst.lesser = {t, {Arc({8, 9}, {0, 1})}};
      inst.greater = {t, {Arc({4, 5, 8}, {0}), Arc({4, 5, 6, 7}, {0, 1, 2})}};
      break;
    }
    case ArcAxiom::k2A: {
      Hyperarc t = Arc({0, 1, 2}, {3, 4, 5});
      inst.lesser = {t, {Arc({3, 4}, {0, 6})}};
      inst.greater = {t, {Arc({3, 4}, {0, 1})}};
      break;
    }
    case ArcAxiom::k2B: {
      Hyperarc t = Arc({0, 1, 2}, {3, 4, 5});
      inst.lesser = {t, {Arc({3, 4, 6}, {0, 1})}};
      inst.greater = {t, {Arc({3, 4}, {0, 1})}};
      break;
    }
    case ArcAxiom::k3A: {
      Hyperarc t = Arc({1, 2, 3, 4}, {5, 6, 7, 8});
      inst.lesser = {t, {Arc({5, 6}, {1, 2, 3}), Arc({7}, {1, 2, 3})}};
      inst.greater = {t, {Arc({5, 6, 7}, {1, 2, 3})}};
      break;
    }
    case ArcAxiom::k3B: {
      Hyperarc t = Arc({1, 2, 3, 4}, {5, 6, 7, 8});
      inst.lesser = {t, {Arc({5, 6, 7}, {1, 2}), Arc({5, 6, 7}, {3})}};
      inst.greater = {t, {Arc({5, 6, 7}, {1, 2, 3})}};
      break;
    }
    case ArcAxiom::k4: {
      // The biased side repeats one reciprocal arc (coverage 4, 2, 1, 1).
      Hyperarc t = Arc({0, 1}, {2, 3, 4, 5});
      inst.lesser = {t,
                     {Arc({2, 3}, {0, 1}), Arc({2, 3}, {0, 1}),
                      Arc({2, 4}, {0, 1}), Arc({2, 5}, {0, 1})}};
      inst.greater = {t,
                      {Arc({2, 3}, {0, 1}), Arc({3, 4}, {0, 1}),
                       Arc({4, 5}, {0, 1}), Arc({2, 5}, {0, 1})}};
      break;
    }
  }
  return inst;
}

DirectedHypergraph ThreeEdgeDigraph() {
  return DirectedHypergraph::FromArcs(
      3, {Arc({1}, {0}), Arc({0}, {1}), Arc({2}, {0})}, {"1", "2", "3"});
}

const char* MeasureName(Measure m) {
  switch (m) {
    case Measure::kHyperRec: return "HyperRec";
    case Measure::kB1: return "B1";
    case Measure::kB2: return "B2";
    case Measure::kB3: return "B3";
    case Measure::kB4: return "B4";
    case Measure::kB5: return "B5";
    case Measure::kB6: return "B6";
    case Measure::kB7: return "B7";
  }
  return "?";
}

double ArcLevelValue(Measure m, const ArcConfig& c, double alpha) {
  std::vector<const Hyperarc*> r = c.refs();
  switch (m) {
    case Measure::kHyperRec:
    case Measure::kB6:
      return ReciprocityOfArcs(c.target, r, alpha);
    case Measure::kB1: return B1PearcyArc(c.target, r);
    case Measure::kB2: return B2CoveredPairs(c.target, r);
    case Measure::kB3: return B3PenalizedPairs(c.target, r, alpha);
    case Measure::kB4: return B4NoNormalization(c.target, r, alpha);
    case Measure::kB5: return B5NoSizePenalty(c.target, r);
    case Measure::kB7: {
      std::erase_if(r, [&](const Hyperarc* a) {
        return !InverselyOverlaps(c.target, *a);
      });
      return r.empty() ? 0.0 : ReciprocityOfArcs(c.target, r, alpha);
    }
  }
  throw Error(ErrorKind::kParameter, "unknown measure");
}

double GraphLevelValue(Measure m, const DirectedHypergraph& g, double alpha) {
  switch (m) {
    case Measure::kHyperRec: {
      ReciprocityConfig cfg;
      cfg.alpha = alpha;
      cfg.threads = 1;
      return HypergraphReciprocity(AllReciprocities(g, cfg));
    }
    case Measure::kB1: return B1Pearcy(g);
    case Measure::kB6: return B6Hypergraph(g, alpha);
    case Measure::kB7: return B7Hypergraph(g, alpha);
    default:
      throw Error(ErrorKind::kPrecondition,
                  std::string(MeasureName(m)) + " has no hypergraph-level form");
  }
}

DirectedHypergraph RandomHypergraph(std::mt19937_64& rng, std::size_t nodes,
                                    std::size_t arcs, std::size_t max_side) {
  if (nodes < 2) throw Error(ErrorKind::kParameter, "need at least two nodes");
  std::vector<NodeId> all = Range(0, nodes);
  std::vector<Hyperarc> out;
  for (std::size_t i = 0; i < arcs; ++i) {
    std::size_t h = Uniform(rng, 1, std::min(max_side, nodes - 1));
    std::size_t t = Uniform(rng, 1, std::min(max_side, nodes - h));
    std::vector<NodeId> picked = all;
    std::shuffle(picked.begin(), picked.end(), rng);
    Hyperarc a{{picked.begin(), picked.begin() + static_cast<std::ptrdiff_t>(h)},
               {picked.begin() + static_cast<std::ptrdiff_t>(h),
                picked.begin() + static_cast<std::ptrdiff_t>(h + t)}};
    Canonicalize(a);
    out.push_back(std::move(a));
  }
  return DirectedHypergraph::FromArcs(nodes, std::move(out));
}

DirectedHypergraph RandomDigraph(std::mt19937_64& rng, std::size_t nodes,
                                 std::size_t edges, double mutual_bias) {
  if (nodes < 2) throw Error(ErrorKind::kParameter, "need at least two nodes");
  std::vector<Hyperarc> out;
  std::bernoulli_distribution mutual(mutual_bias);
  for (std::size_t i = 0; i < edges; ++i) {
    if (!out.empty() && mutual(rng)) {
      const Hyperarc& prev = out[Uniform(rng, 0, out.size() - 1)];
      out.push_back(PerfectReciprocalOf(prev));
      continue;
    }
    NodeId u = static_cast<NodeId>(Uniform(rng, 0, nodes - 1));
    NodeId v = static_cast<NodeId>(Uniform(rng, 0, nodes - 2));
    if (v >= u) ++v;
    out.push_back({{v}, {u}});
  }
  return DirectedHypergraph::FromArcs(nodes, std::move(out));
}

DirectedHypergraph AugmentWithReciprocals(const DirectedHypergraph& g) {
  std::vector<Hyperarc> arcs = g.arcs();
  for (const Hyperarc& a : g.arcs()) arcs.push_back(PerfectReciprocalOf(a));
  return DirectedHypergraph::FromArcs(g.num_nodes(), std::move(arcs),
                                      g.labels());
}

std::vector<SatisfactionCell> SatisfactionMatrix(std::size_t trials,
                                                 std::uint64_t seed,
                                                 double alpha) {
  const Measure measures[] = {Measure::kB1, Measure::kB2, Measure::kB3,
                              Measure::kB4, Measure::kB5, Measure::kB6,
                              Measure::kB7, Measure::kHyperRec};
  const ArcAxiom arc_axioms[] = {ArcAxiom::k1,  ArcAxiom::k2A, ArcAxiom::k2B,
                                 ArcAxiom::k3A, ArcAxiom::k3B, ArcAxiom::k4};
  auto column = [](ArcAxiom a) {
    switch (a) {
      case ArcAxiom::k1: return 1;
      case ArcAxiom::k2A:
      case ArcAxiom::k2B: return 2;
      case ArcAxiom::k3A:
      case ArcAxiom::k3B: return 3;
      case ArcAxiom::k4: return 4;
    }
    return 0;
  };
  std::vector<SatisfactionCell> cells;
  for (Measure m : measures) {
    const bool arc_level = m != Measure::kB6 && m != Measure::kB7;
    const bool graph_level = m == Measure::kHyperRec || m == Measure::kB1 ||
                             m == Measure::kB6 || m == Measure::kB7;
    std::vector<SatisfactionCell> row(8);
    for (int k = 0; k < 8; ++k) {
      row[k].measure = m;
      row[k].axiom = k + 1;
      row[k].applicable = k < 5 ? arc_level : graph_level;
    }
    auto violate = [](SatisfactionCell& cell, const std::string& what) {
      if (cell.violations++ == 0) cell.witness = what;
    };
    auto range_check = [&](double v, const std::string& what) {
      ++row[4].trials;
      if (v < 0.0 || v > 1.0 + 1e-12) violate(row[4], what);
    };
    if (arc_level) {
      Rng rng(seed);
      for (ArcAxiom ax : arc_axioms) {
        SatisfactionCell& cell = row[column(ax) - 1];
        std::vector<AxiomInstance> cases;
        cases.push_back(AxiomExample(ax));
        for (std::size_t i = 0; i < trials; ++i) {
          cases.push_back(SampleAxiomInstance(ax, rng));
        }
        for (const AxiomInstance& inst : cases) {
          double lo = ArcLevelValue(m, inst.lesser, alpha);
          double hi = ArcLevelValue(m, inst.greater, alpha);
          ++cell.trials;
          if (!(lo < hi)) {
            std::ostringstream w;
            w << "axiom " << AxiomName(ax) << ": " << lo << " vs " << hi
              << " for " << Describe(inst.lesser) << " / "
              << Describe(inst.greater);
            violate(cell, w.str());
          }
          range_check(lo, Describe(inst.lesser));
          range_check(hi, Describe(inst.greater));
        }
      }
    }
    if (graph_level) {
      Rng rng(seed ^ 0x5851f42d4c957f2dULL);
      const std::size_t graph_trials = std::min<std::size_t>(trials, 200);
      std::vector<DirectedHypergraph> digraphs{ThreeEdgeDigraph()};
      for (std::size_t i = 0; i < graph_trials; ++i) {
        digraphs.push_back(RandomDigraph(rng, Uniform(rng, 2, 8),
                                         Uniform(rng, 1, 12), 0.3));
      }
      for (const DirectedHypergraph& g : digraphs) {
        double v = GraphLevelValue(m, g, alpha);
        double truth = DigraphReciprocity(g);
        ++row[5].trials;
        if (std::abs(v - truth) > 1e-9) {
          std::ostringstream w;
          w << "digraph with " << g.num_arcs() << " edges: " << v
            << " vs " << truth;
          violate(row[5], w.str());
        }
      }
      for (std::size_t i = 0; i < graph_trials; ++i) {
        DirectedHypergraph g = RandomHypergraph(rng, Uniform(rng, 3, 9),
                                                Uniform(rng, 1, 10), 3);
        double v = GraphLevelValue(m, g, alpha);
        ++row[6].trials;
        if (v < 0.0 || v > 1.0 + 1e-12) violate(row[6], std::to_string(v));
        double full = GraphLevelValue(m, AugmentWithReciprocals(g), alpha);
        double single = GraphLevelValue(m, SingleArc(g), alpha);
        ++row[7].trials;
        if (std::abs(full - 1.0) > 1e-9 || std::abs(single) > 1e-12) {
          violate(row[7], "augmented " + std::to_string(full) +
                              ", single arc " + std::to_string(single));
        }
      }
    }
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return cells;
}

}  // namespace hyperrec
