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

#include "hyperrec/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "hyperrec/error.hpp"
#include "hyperrec/probability.hpp"
#include "parallel.hpp"

namespace hyperrec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<NodeId> Intersection(const std::vector<NodeId>& a,
                                 const std::vector<NodeId>& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<ArcId> MaskToIds(std::uint64_t mask, const std::vector<ArcId>& psi) {
  std::vector<ArcId> ids;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    if (mask >> k & 1) ids.push_back(psi[k]);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// lcm of head sizes, or 0 when numerators could leave int64 range.
std::int64_t CommonDenominator(const DirectedHypergraph& g,
                               const std::vector<ArcId>& psi) {
  const std::int64_t limit = (std::int64_t{1} << 62) /
                             static_cast<std::int64_t>(psi.size() + 1);
  std::int64_t l = 1;
  for (ArcId k : psi) {
    std::int64_t h = static_cast<std::int64_t>(g.arc(k).head.size());
    std::int64_t step = h / std::gcd(l, h);
    if (l > limit / step) return 0;
    l *= step;
  }
  return l;
}

// Enumerates the non-empty subsets of Psi in Gray-code order, keeping per
// head node exact integer numerators so each subset costs only the head
// nodes its toggled arc touches.
class GraySearch {
 public:
  GraySearch(const DirectedHypergraph& g, const Hyperarc& target,
             const std::vector<ArcId>& psi, std::int64_t denominator)
      : l_(denominator) {
    const std::size_t a = target.head.size();
    b_ = target.tail.size();
    // Local slots: tail nodes first, then every other reciprocal head node.
    std::vector<NodeId> rest;
    for (ArcId k : psi) {
      for (NodeId v : g.arc(k).head) {
        if (!std::binary_search(target.tail.begin(), target.tail.end(), v)) {
          rest.push_back(v);
        }
      }
    }
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    width_ = b_ + rest.size();
    auto slot = [&](NodeId v) -> std::uint32_t {
      auto t = std::lower_bound(target.tail.begin(), target.tail.end(), v);
      if (t != target.tail.end() && *t == v) {
        return static_cast<std::uint32_t>(t - target.tail.begin());
      }
      auto r = std::lower_bound(rest.begin(), rest.end(), v);
      return static_cast<std::uint32_t>(b_ + (r - rest.begin()));
    };
    for (ArcId k : psi) {
      const Hyperarc& arc = g.arc(k);
      Arc local;
      for (std::size_t j = 0; j < a; ++j) {
        if (std::binary_search(arc.tail.begin(), arc.tail.end(), target.head[j])) {
          local.positions.push_back(static_cast<std::uint32_t>(j));
        }
      }
      for (NodeId v : arc.head) local.slots.push_back(slot(v));
      local.weight = l_ / static_cast<std::int64_t>(arc.head.size());
      arcs_.push_back(std::move(local));
    }
    count_.assign(a, 0);
    numer_.assign(a * width_, 0);
    div_.assign(a, 1.0);
    dirty_.assign(a, 0);
  }

  void Toggle(std::size_t k, bool add) {
    const Arc& arc = arcs_[k];
    const std::int64_t w = add ? arc.weight : -arc.weight;
    for (std::uint32_t j : arc.positions) {
      count_[j] += add ? 1 : -1;
      std::int64_t* row = numer_.data() + j * width_;
      for (std::uint32_t u : arc.slots) row[u] += w;
      dirty_[j] = 1;
    }
    for (std::uint32_t j : arc.positions) {
      if (dirty_[j]) {
        div_[j] = Divergence(j);
        dirty_[j] = 0;
      }
    }
  }

  double Sum() const {
    double s = 0.0;
    for (double d : div_) s += d;
    return s;
  }

 private:
  struct Arc {
    std::vector<std::uint32_t> positions;  // target head indices in T_k
    std::vector<std::uint32_t> slots;      // local ids of H_k
    std::int64_t weight = 0;               // l / |H_k|
  };

  double Divergence(std::size_t j) const {
    if (count_[j] == 0) return 1.0;
    const double denom = static_cast<double>(l_) * count_[j];
    const double q = 1.0 / static_cast<double>(b_);
    const std::int64_t* row = numer_.data() + j * width_;
    double sum = 0.0;
    for (std::size_t u = 0; u < width_; ++u) {
      double p = static_cast<double>(row[u]) / denom;
      sum += JsdTerm(p, u < b_ ? q : 0.0);
    }
    return std::clamp(sum, 0.0, kLMax) / kLMax;
  }

  std::int64_t l_;
  std::size_t b_ = 0;
  std::size_t width_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> count_;
  std::vector<std::int64_t> numer_;
  std::vector<double> div_;
  std::vector<char> dirty_;
};

void Record(ReciprocityProfile& p, std::size_t size, double divergence,
            std::vector<ArcId> ids) {
  if (divergence < p.min_divergence[size - 1]) {
    p.min_divergence[size - 1] = divergence;
    p.argmin[size - 1] = std::move(ids);
  }
}

void CheckTarget(const DirectedHypergraph& g, ArcId target) {
  if (target >= g.num_arcs()) {
    throw Error(ErrorKind::kPrecondition,
                "arc id " + std::to_string(target) + " out of range");
  }
}

// Fills kind/omega/psi fields; returns true when a search is still needed.
bool Classify(const ReducedSpace& rs, ReciprocityProfile& p) {
  p.omega_size = static_cast<std::uint32_t>(rs.omega.size());
  p.psi_size = static_cast<std::uint32_t>(rs.psi.size());
  if (rs.omega.empty()) {
    p.kind = ReciprocityProfile::Kind::kNoOverlap;
    return false;
  }
  if (rs.perfect) {
    p.kind = ReciprocityProfile::Kind::kPerfect;
    p.min_divergence = {0.0};
    p.argmin = {{*rs.perfect}};
    return false;
  }
  p.kind = ReciprocityProfile::Kind::kSearched;
  p.min_divergence.assign(rs.psi.size(), kInf);
  p.argmin.assign(rs.psi.size(), {});
  return true;
}

ReciprocityProfile UnitTailProfileUnchecked(const DirectedHypergraph& g,
                                            ArcId target) {
  ReciprocityProfile p;
  const Hyperarc& t = g.arc(target);
  p.head_size = t.head.size();
  ReducedSpace rs = ReduceSearchSpace(g, target);
  if (!Classify(rs, p)) return p;
  std::vector<ArcId> order = rs.psi;
  std::stable_sort(order.begin(), order.end(), [&](ArcId x, ArcId y) {
    return g.arc(x).head.size() < g.arc(y).head.size();
  });
  std::vector<const Hyperarc*> prefix;
  for (std::size_t s = 1; s <= order.size(); ++s) {
    prefix.push_back(&g.arc(order[s - 1]));
    std::vector<ArcId> ids(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s));
    std::sort(ids.begin(), ids.end());
    Record(p, s, NormalizedDivergenceSum(t, prefix), std::move(ids));
    ++p.searched;
  }
  return p;
}

}  // namespace

std::vector<ArcId> InverseOverlaps(const DirectedHypergraph& g, ArcId target) {
  CheckTarget(g, target);
  const Hyperarc& t = g.arc(target);
  std::vector<ArcId> via_head;
  for (NodeId h : t.head) {
    auto inc = g.tail_incidence(h);
    via_head.insert(via_head.end(), inc.begin(), inc.end());
  }
  std::vector<ArcId> via_tail;
  for (NodeId v : t.tail) {
    auto inc = g.head_incidence(v);
    via_tail.insert(via_tail.end(), inc.begin(), inc.end());
  }
  std::sort(via_head.begin(), via_head.end());
  via_head.erase(std::unique(via_head.begin(), via_head.end()), via_head.end());
  std::sort(via_tail.begin(), via_tail.end());
  via_tail.erase(std::unique(via_tail.begin(), via_tail.end()), via_tail.end());
  std::vector<ArcId> omega;
  std::set_intersection(via_head.begin(), via_head.end(), via_tail.begin(),
                        via_tail.end(), std::back_inserter(omega));
  return omega;
}

ReducedSpace ReduceSearchSpace(const DirectedHypergraph& g, ArcId target) {
  ReducedSpace rs;
  rs.omega = InverseOverlaps(g, target);
  const Hyperarc& t = g.arc(target);
  std::map<std::pair<std::vector<NodeId>, std::vector<NodeId>>, ArcId> groups;
  for (ArcId k : rs.omega) {
    const Hyperarc& arc = g.arc(k);
    auto key = std::make_pair(Intersection(t.head, arc.tail),
                              Intersection(t.tail, arc.head));
    auto [it, inserted] = groups.emplace(std::move(key), k);
    if (!inserted && arc.head.size() < g.arc(it->second).head.size()) {
      it->second = k;
    }
  }
  for (const auto& [key, k] : groups) rs.psi.push_back(k);
  std::sort(rs.psi.begin(), rs.psi.end());
  rs.perfect = g.Find(PerfectReciprocalOf(t));
  return rs;
}

ArcReciprocity ReciprocityProfile::At(double alpha) const {
  ArcReciprocity r;
  r.searched = searched;
  r.omega_size = omega_size;
  r.psi_size = psi_size;
  if (!error.empty()) {
    r.value = std::numeric_limits<double>::quiet_NaN();
    r.error = error;
    return r;
  }
  if (kind == Kind::kNoOverlap) return r;
  double best = -1.0;
  for (std::size_t s = 1; s <= min_divergence.size(); ++s) {
    if (min_divergence[s - 1] == kInf) continue;
    double v = SizePenalty(s, alpha) *
               (1.0 - min_divergence[s - 1] / static_cast<double>(head_size));
    if (v > best) {
      best = v;
      r.reciprocal_set = argmin[s - 1];
    }
  }
  r.value = best;
  return r;
}

ReciprocityProfile SearchProfile(const DirectedHypergraph& g, ArcId target,
                                 const ReciprocityConfig& cfg) {
  Validate(cfg);
  CheckTarget(g, target);
  ReciprocityProfile p;
  const Hyperarc& t = g.arc(target);
  p.head_size = t.head.size();
  ReducedSpace rs = ReduceSearchSpace(g, target);
  if (!Classify(rs, p)) return p;
  const std::size_t m = rs.psi.size();
  if (m > cfg.psi_cap) {
    throw Error(ErrorKind::kBudget,
                "arc " + std::to_string(target) + ": |Psi| = " +
                    std::to_string(m) + " exceeds the search cap of " +
                    std::to_string(cfg.psi_cap));
  }
  const std::uint64_t total = (std::uint64_t{1} << m) - 1;
  std::int64_t denominator = CommonDenominator(g, rs.psi);
  std::uint64_t mask = 0;
  if (denominator > 0) {
    GraySearch search(g, t, rs.psi, denominator);
    for (std::uint64_t i = 1; i <= total; ++i) {
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
      mask ^= std::uint64_t{1} << bit;
      search.Toggle(bit, (mask >> bit) & 1);
      std::size_t size = static_cast<std::size_t>(std::popcount(mask));
      double s = search.Sum();
      if (s < p.min_divergence[size - 1]) Record(p, size, s, MaskToIds(mask, rs.psi));
    }
  } else {
    std::vector<const Hyperarc*> arcs;
    for (std::uint64_t i = 1; i <= total; ++i) {
      mask ^= std::uint64_t{1} << std::countr_zero(i);
      arcs.clear();
      for (std::size_t k = 0; k < m; ++k) {
        if (mask >> k & 1) arcs.push_back(&g.arc(rs.psi[k]));
      }
      Record(p, arcs.size(), NormalizedDivergenceSum(t, arcs),
             MaskToIds(mask, rs.psi));
    }
  }
  p.searched = total;
  return p;
}

bool IsUnitTail(const DirectedHypergraph& g) {
  return std::all_of(g.arcs().begin(), g.arcs().end(),
                     [](const Hyperarc& a) { return a.tail.size() == 1; });
}

ReciprocityProfile UnitTailProfile(const DirectedHypergraph& g, ArcId target,
                                   const ReciprocityConfig& cfg) {
  Validate(cfg);
  CheckTarget(g, target);
  if (!IsUnitTail(g)) {
    throw Error(ErrorKind::kPrecondition,
                "unit-tail search needs |T| = 1 for every arc");
  }
  return UnitTailProfileUnchecked(g, target);
}

ArcReciprocity BestReciprocity(const DirectedHypergraph& g, ArcId target,
                               const ReciprocityConfig& cfg) {
  return SearchProfile(g, target, cfg).At(cfg.alpha);
}

ArcReciprocity UnitTailBest(const DirectedHypergraph& g, ArcId target,
                            const ReciprocityConfig& cfg) {
  return UnitTailProfile(g, target, cfg).At(cfg.alpha);
}

ArcReciprocity BruteForceReciprocity(const DirectedHypergraph& g, ArcId target,
                                     const ReciprocityConfig& cfg) {
  Validate(cfg);
  CheckTarget(g, target);
  const std::size_t n = g.num_arcs();
  if (n > cfg.oracle_limit || n > 62) {
    throw Error(ErrorKind::kBudget,
                "brute force refuses " + std::to_string(n) +
                    " arcs (limit " + std::to_string(cfg.oracle_limit) + ")");
  }
  ArcReciprocity r;
  ReducedSpace rs = ReduceSearchSpace(g, target);
  r.omega_size = static_cast<std::uint32_t>(rs.omega.size());
  r.psi_size = static_cast<std::uint32_t>(rs.psi.size());
  double best = -1.0;
  std::vector<ArcId> ids;
  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= total; ++mask) {
    ids.clear();
    for (ArcId k = 0; k < n; ++k) {
      if (mask >> k & 1) ids.push_back(k);
    }
    double v = ArcReciprocityGiven(g, target, ids, cfg.alpha);
    if (v > best) {
      best = v;
      r.reciprocal_set = ids;
    }
  }
  r.value = best;
  r.searched = total;
  return r;
}

std::vector<ReciprocityProfile> AllProfiles(const DirectedHypergraph& g,
                                            const ReciprocityConfig& cfg) {
  Validate(cfg);
  const bool unit = IsUnitTail(g);
  std::vector<ReciprocityProfile> out(g.num_arcs());
  std::vector<std::pair<ErrorKind, std::string>> failures(g.num_arcs());
  std::vector<char> failed(g.num_arcs(), 0);
  internal::ParallelFor(g.num_arcs(), cfg.threads, [&](std::size_t i) {
    ArcId id = static_cast<ArcId>(i);
    try {
      out[i] = unit ? UnitTailProfileUnchecked(g, id) : SearchProfile(g, id, cfg);
    } catch (const Error& e) {
      failed[i] = 1;
      failures[i] = {e.kind(), e.what()};
    } catch (const std::exception& e) {
      failed[i] = 1;
      failures[i] = {ErrorKind::kBudget, e.what()};
    }
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!failed[i]) continue;
    if (!cfg.continue_on_error) {
      throw Error(failures[i].first, failures[i].second);
    }
    out[i] = ReciprocityProfile{};
    out[i].error = failures[i].second;
  }
  return out;
}

std::vector<ArcReciprocity> AllReciprocities(const DirectedHypergraph& g,
                                             const ReciprocityConfig& cfg) {
  std::vector<ReciprocityProfile> profiles = AllProfiles(g, cfg);
  std::vector<ArcReciprocity> out;
  out.reserve(profiles.size());
  for (const ReciprocityProfile& p : profiles) out.push_back(p.At(cfg.alpha));
  return out;
}

}  // namespace hyperrec
