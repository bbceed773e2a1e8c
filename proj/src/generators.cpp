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

#include "hyperrec/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hyperrec/error.hpp"
#include "hyperrec/search.hpp"

namespace hyperrec {
namespace {

using Rng = std::mt19937_64;

// Prefix sums over non-negative integer weights; supports appending.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n = 0) : tree_(n + 1, 0) {}

  std::size_t size() const { return tree_.size() - 1; }

  void PushBack(std::int64_t w) {
    std::size_t i = tree_.size();
    std::size_t low = i & (~i + 1);
    tree_.push_back(w + Prefix(i - 1) - Prefix(i - low));
  }

  void Add(std::size_t index, std::int64_t delta) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) {
      tree_[i] += delta;
    }
  }

  std::int64_t Prefix(std::size_t count) const {
    std::int64_t s = 0;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

  std::int64_t Total() const { return Prefix(size()); }

  // Index whose cumulative range contains u, for u in [0, Total()).
  std::size_t Find(std::int64_t u) const {
    std::size_t pos = 0;
    for (std::size_t step = std::bit_floor(size()); step > 0; step >>= 1) {
      if (pos + step <= size() && tree_[pos + step] <= u) {
        pos += step;
        u -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<std::int64_t> tree_;
};

std::int64_t Draw(Rng& rng, std::int64_t total) {
  return std::uniform_int_distribution<std::int64_t>(0, total - 1)(rng);
}

struct VectorHash {
  std::size_t operator()(const std::vector<NodeId>& v) const {
    return ArcSignature(Hyperarc{v, {}});
  }
};

// Exact-set occurrence counts for groups of size >= 2, bucketed by size.
class GroupIndex {
 public:
  void Record(const std::vector<NodeId>& group) {
    if (group.size() < 2) return;
    auto [it, inserted] = ids_.try_emplace(group, 0);
    Bucket& b = buckets_[group.size()];
    if (inserted) {
      it->second = b.members.size();
      b.members.push_back(group);
      b.counts.PushBack(1);
    } else {
      b.counts.Add(it->second, 1);
    }
  }

  const std::vector<NodeId>* Sample(Rng& rng, std::size_t size) const {
    auto it = buckets_.find(size);
    if (it == buckets_.end()) return nullptr;
    std::int64_t total = it->second.counts.Total();
    if (total <= 0) return nullptr;
    return &it->second.members[it->second.counts.Find(Draw(rng, total))];
  }

 private:
  struct Bucket {
    std::vector<std::vector<NodeId>> members;
    Fenwick counts;
  };
  std::unordered_map<std::vector<NodeId>, std::size_t, VectorHash> ids_;
  std::unordered_map<std::size_t, Bucket> buckets_;
};

bool Contains(const std::vector<NodeId>& v, NodeId x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

class Generator {
 public:
  Generator(const GeneratorParams& p, const SizeDistributions& d)
      : p_(p),
        rng_(p.seed),
        head_size_(d.head.begin(), d.head.end()),
        tail_size_(d.tail.begin(), d.tail.end()),
        per_node_(d.arcs_per_node.begin(), d.arcs_per_node.end()),
        in_(p.n),
        out_(p.n) {}

  DirectedHypergraph Run() {
    for (std::size_t k = 0; k < p_.initial_arcs; ++k) {
      AddArc({static_cast<NodeId>(2 * k)}, {static_cast<NodeId>(2 * k + 1)});
    }
    present_ = 2 * p_.initial_arcs;
    std::bernoulli_distribution recip(p_.beta1);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 2 * p_.initial_arcs; i < p_.n; ++i) {
      const NodeId v = static_cast<NodeId>(i);
      present_ = i + 1;
      std::size_t k = per_node_(rng_);
      std::vector<std::size_t> step_arcs;
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t attempt = 0;
        while (true) {
          if (attempt++ == p_.retry_budget) {
            throw Error(ErrorKind::kGeneration,
                        "node " + std::to_string(i) + ", arc " +
                            std::to_string(j) + ": no disjoint arc after " +
                            std::to_string(p_.retry_budget) + " attempts");
          }
          const bool reciprocal = recip(rng_);
          const bool head = coin(rng_);
          const std::size_t h = head_size_(rng_);
          const std::size_t t = tail_size_(rng_);
          std::vector<NodeId> hs, ts;
          if (!reciprocal) {
            (head ? hs : ts).push_back(v);
          } else {
            const Hyperarc& o = Opponent(step_arcs);
            std::binomial_distribution<std::size_t> nh(std::min(h, o.tail.size()), p_.beta2);
            hs = FromOpponent(o.tail, std::max<std::size_t>(nh(rng_), 1), in_deg_);
            std::binomial_distribution<std::size_t> nt(std::min(t, o.head.size()), p_.beta2);
            ts = FromOpponent(o.head, std::max<std::size_t>(nt(rng_), 1), out_deg_);
            if (head && h > hs.size()) {
              if (!Contains(hs, v)) hs.push_back(v);
            } else if (!head && t > ts.size()) {
              if (!Contains(ts, v)) ts.push_back(v);
            }
          }
          if (!Fill(hs, h, true) || !Fill(ts, t, false)) continue;
          std::sort(hs.begin(), hs.end());
          std::sort(ts.begin(), ts.end());
          std::vector<NodeId> common;
          std::set_intersection(hs.begin(), hs.end(), ts.begin(), ts.end(),
                                std::back_inserter(common));
          if (!common.empty()) continue;
          step_arcs.push_back(arcs_.size());
          AddArc(std::move(hs), std::move(ts));
          break;
        }
      }
    }
    return DirectedHypergraph::FromArcs(p_.n, std::move(arcs_));
  }

 private:
  // Uniform over this node's arcs, or over all arcs before it has any.
  const Hyperarc& Opponent(const std::vector<std::size_t>& step_arcs) {
    std::size_t index;
    if (!step_arcs.empty()) {
      index = step_arcs[std::uniform_int_distribution<std::size_t>(
          0, step_arcs.size() - 1)(rng_)];
    } else {
      index = std::uniform_int_distribution<std::size_t>(0, arcs_.size() - 1)(rng_);
    }
    opponent_ = arcs_[index];
    return opponent_;
  }

  // `count` distinct nodes of `pool`, weighted by degree + 1.
  std::vector<NodeId> FromOpponent(const std::vector<NodeId>& pool,
                                   std::size_t count,
                                   const std::vector<std::int64_t>& degree) {
    std::vector<NodeId> left = pool;
    std::vector<NodeId> out;
    while (out.size() < count && !left.empty()) {
      std::int64_t total = 0;
      for (NodeId u : left) total += degree[u] + 1;
      std::int64_t r = Draw(rng_, total);
      std::size_t k = 0;
      while (r >= degree[left[k]] + 1) r -= degree[left[k++]] + 1;
      out.push_back(left[k]);
      left.erase(left.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
  }

  // Grows `side` to `size` nodes: a whole recorded group of the missing
  // size when one exists, then individual degree, then uniform.
  bool Fill(std::vector<NodeId>& side, std::size_t size, bool head) {
    if (side.size() >= size) return true;
    std::size_t need = size - side.size();
    if (p_.attachment == AttachmentMode::kGroupDegree && need >= 2) {
      const GroupIndex& groups = head ? head_groups_ : tail_groups_;
      if (const std::vector<NodeId>* g = groups.Sample(rng_, need)) {
        for (NodeId u : *g) {
          if (!Contains(side, u)) side.push_back(u);
        }
      }
    }
    Fenwick& weights = head ? in_ : out_;
    std::vector<std::pair<NodeId, std::int64_t>> taken;
    for (NodeId u : side) {
      std::int64_t w = (head ? in_deg_ : out_deg_)[u];
      if (w > 0) {
        weights.Add(u, -w);
        taken.emplace_back(u, w);
      }
    }
    while (side.size() < size && weights.Total() > 0) {
      NodeId u = static_cast<NodeId>(weights.Find(Draw(rng_, weights.Total())));
      std::int64_t w = (head ? in_deg_ : out_deg_)[u];
      weights.Add(u, -w);
      taken.emplace_back(u, w);
      side.push_back(u);
    }
    for (const auto& [u, w] : taken) weights.Add(u, w);
    if (side.size() < size) {
      if (present_ < size) return false;
      std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(present_ - 1));
      while (side.size() < size) {
        NodeId u = any(rng_);
        if (!Contains(side, u)) side.push_back(u);
      }
    }
    return true;
  }

  void AddArc(std::vector<NodeId> head, std::vector<NodeId> tail) {
    for (NodeId u : head) {
      ++in_deg_[u];
      in_.Add(u, 1);
    }
    for (NodeId u : tail) {
      ++out_deg_[u];
      out_.Add(u, 1);
    }
    head_groups_.Record(head);
    tail_groups_.Record(tail);
    arcs_.push_back(Hyperarc{std::move(head), std::move(tail)});
  }

  const GeneratorParams& p_;
  Rng rng_;
  std::discrete_distribution<std::size_t> head_size_;
  std::discrete_distribution<std::size_t> tail_size_;
  std::discrete_distribution<std::size_t> per_node_;
  Fenwick in_, out_;
  std::vector<std::int64_t> in_deg_ = std::vector<std::int64_t>(p_.n, 0);
  std::vector<std::int64_t> out_deg_ = std::vector<std::int64_t>(p_.n, 0);
  GroupIndex head_groups_, tail_groups_;
  std::vector<Hyperarc> arcs_;
  Hyperarc opponent_;
  std::size_t present_ = 0;
};

double Mean(const std::vector<double>& dist) {
  double m = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) m += static_cast<double>(k) * dist[k];
  return m;
}

void CheckDistribution(const std::vector<double>& d, const char* name,
                       bool zero_allowed) {
  if (d.empty()) {
    throw Error(ErrorKind::kParameter, std::string(name) + " is empty");
  }
  double s = 0.0;
  for (double p : d) {
    if (!(p >= 0.0)) {
      throw Error(ErrorKind::kParameter,
                  std::string(name) + " has a negative entry");
    }
    s += p;
  }
  if (std::abs(s - 1.0) > 1e-9) {
    throw Error(ErrorKind::kParameter, std::string(name) + " does not sum to 1");
  }
  if (!zero_allowed && d[0] > 0.0) {
    throw Error(ErrorKind::kParameter,
                std::string(name) + " puts mass on size 0");
  }
}

std::vector<double> Normalize(const std::vector<std::size_t>& counts) {
  double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  std::vector<double> d(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    d[k] = static_cast<double>(counts[k]) / total;
  }
  return d;
}

std::vector<double> Steps(double from, double step, std::size_t count) {
  std::vector<double> v;
  for (std::size_t k = 0; k < count; ++k) {
    v.push_back(std::round((from + step * static_cast<double>(k)) * 1e6) / 1e6);
  }
  return v;
}

}  // namespace

double SizeDistributions::MeanHead() const { return Mean(head); }
double SizeDistributions::MeanTail() const { return Mean(tail); }
double SizeDistributions::MeanArcsPerNode() const { return Mean(arcs_per_node); }

void Validate(const SizeDistributions& d) {
  CheckDistribution(d.head, "head-size distribution", false);
  CheckDistribution(d.tail, "tail-size distribution", false);
  CheckDistribution(d.arcs_per_node, "arcs-per-node distribution", true);
}

SizeDistributions EstimateDistributions(const DirectedHypergraph& reference) {
  if (reference.num_arcs() == 0) {
    throw Error(ErrorKind::kPrecondition, "reference hypergraph has no arcs");
  }
  std::vector<std::size_t> heads, tails;
  std::vector<std::size_t> per_node(reference.num_nodes(), 0);
  for (const Hyperarc& a : reference.arcs()) {
    if (heads.size() <= a.head.size()) heads.resize(a.head.size() + 1, 0);
    if (tails.size() <= a.tail.size()) tails.resize(a.tail.size() + 1, 0);
    ++heads[a.head.size()];
    ++tails[a.tail.size()];
    ++per_node[std::max(a.head.back(), a.tail.back())];
  }
  std::vector<std::size_t> np;
  for (std::size_t c : per_node) {
    if (np.size() <= c) np.resize(c + 1, 0);
    ++np[c];
  }
  return {Normalize(heads), Normalize(tails), Normalize(np)};
}

DirectedHypergraph NullModel(const DirectedHypergraph& reference,
                             std::uint64_t seed) {
  if (reference.num_arcs() == 0) {
    throw Error(ErrorKind::kPrecondition, "reference hypergraph has no arcs");
  }
  const std::size_t n = reference.num_nodes();
  Rng rng(seed);
  std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(n - 1));
  std::unordered_set<std::uint64_t> seen_sig;
  std::vector<Hyperarc> arcs;
  std::vector<NodeId> picked;
  for (std::size_t i = 0; i < reference.num_arcs(); ++i) {
    const Hyperarc& ref = reference.arc(static_cast<ArcId>(i));
    const std::size_t h = ref.head.size();
    const std::size_t k = h + ref.tail.size();
    if (k > n) {
      throw Error(ErrorKind::kGeneration,
                  "arc " + std::to_string(i) + " needs " + std::to_string(k) +
                      " distinct nodes but only " + std::to_string(n) + " exist");
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt == 100) {
        throw Error(ErrorKind::kGeneration,
                    "arc " + std::to_string(i) +
                        ": every redraw duplicated an earlier arc");
      }
      picked.clear();
      while (picked.size() < k) {
        NodeId u = any(rng);
        if (!Contains(picked, u)) picked.push_back(u);
      }
      Hyperarc a{{picked.begin(), picked.begin() + static_cast<std::ptrdiff_t>(h)},
                 {picked.begin() + static_cast<std::ptrdiff_t>(h), picked.end()}};
      Canonicalize(a);
      std::uint64_t sig = ArcSignature(a);
      bool dup = seen_sig.count(sig) &&
                 std::find(arcs.begin(), arcs.end(), a) != arcs.end();
      if (dup) continue;
      seen_sig.insert(sig);
      arcs.push_back(std::move(a));
      break;
    }
  }
  return DirectedHypergraph::FromArcs(n, std::move(arcs), reference.labels());
}

DirectedHypergraph RediGenerate(const GeneratorParams& params,
                                const SizeDistributions& dists) {
  if (!(params.beta1 >= 0.0 && params.beta1 <= 1.0 && params.beta2 >= 0.0 &&
        params.beta2 <= 1.0)) {
    throw Error(ErrorKind::kParameter, "beta1 and beta2 must lie in [0, 1]");
  }
  if (params.initial_arcs == 0) {
    throw Error(ErrorKind::kParameter, "need at least one initial arc");
  }
  if (params.n < 2 * params.initial_arcs) {
    throw Error(ErrorKind::kParameter,
                "n must be at least twice the number of initial arcs");
  }
  if (params.retry_budget == 0) {
    throw Error(ErrorKind::kParameter, "retry budget must be positive");
  }
  Validate(dists);
  return Generator(params, dists).Run();
}

DirectedHypergraph BaselineGenerate(GeneratorParams params,
                                    const SizeDistributions& dists) {
  params.beta1 = 0.0;
  params.beta2 = 0.0;
  return RediGenerate(params, dists);
}

std::vector<double> Beta1Grid(std::size_t nodes, std::size_t arcs) {
  if (nodes <= 10000) return Steps(0.05, 0.05, 12);
  if (static_cast<double>(arcs) / static_cast<double>(nodes) >= 3.0) {
    return Steps(0.001, 0.0005, 9);
  }
  return Steps(0.01, 0.01, 15);
}

std::vector<double> Beta2Grid() { return Steps(0.1, 0.1, 5); }

GridPoint EvaluateBetas(const GeneratorParams& base,
                        const SizeDistributions& dists, std::size_t seeds,
                        const ReciprocityConfig& measure) {
  if (seeds == 0) throw Error(ErrorKind::kParameter, "need at least one seed");
  std::vector<double> values;
  for (std::size_t s = 0; s < seeds; ++s) {
    GeneratorParams p = base;
    p.seed = base.seed + s;
    DirectedHypergraph g = RediGenerate(p, dists);
    values.push_back(HypergraphReciprocity(AllReciprocities(g, measure)));
  }
  GridPoint pt{base.beta1, base.beta2, 0.0, 0.0};
  pt.mean_r = std::accumulate(values.begin(), values.end(), 0.0) /
              static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - pt.mean_r) * (v - pt.mean_r);
    pt.sd_r = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return pt;
}

GridSearchResult GridSearchBetas(const GeneratorParams& base,
                                 const SizeDistributions& dists,
                                 double target_r,
                                 const std::vector<double>& beta1s,
                                 const std::vector<double>& beta2s,
                                 std::size_t seeds,
                                 const ReciprocityConfig& measure) {
  if (beta1s.empty() || beta2s.empty()) {
    throw Error(ErrorKind::kParameter, "empty beta grid");
  }
  GridSearchResult result;
  double best_gap = std::numeric_limits<double>::infinity();
  for (double b1 : beta1s) {
    for (double b2 : beta2s) {
      GeneratorParams p = base;
      p.beta1 = b1;
      p.beta2 = b2;
      GridPoint pt = EvaluateBetas(p, dists, seeds, measure);
      result.evaluated.push_back(pt);
      double gap = std::abs(pt.mean_r - target_r);
      if (gap < best_gap) {
        best_gap = gap;
        result.best = pt;
      }
    }
  }
  return result;
}

}  // namespace hyperrec
