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


// Independent reading of the generalized axiom preconditions. Sampled
// instances are checked against these before their ordering is trusted.

#ifndef HYPERREC_TESTS_AXIOM_CHECK_HPP_
#define HYPERREC_TESTS_AXIOM_CHECK_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hyperrec/axioms.hpp"

namespace axiom_check {

using hyperrec::ArcAxiom;
using hyperrec::ArcConfig;
using hyperrec::AxiomInstance;
using hyperrec::Hyperarc;
using hyperrec::NodeId;

inline std::size_t Common(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t c = 0;
  for (NodeId v : a) c += std::count(b.begin(), b.end(), v) > 0;
  return c;
}

inline bool Subset(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return Common(a, b) == a.size();
}

inline std::vector<NodeId> Union(std::vector<NodeId> a, const std::vector<NodeId>& b) {
  for (NodeId v : b) {
    if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
  }
  return a;
}

// |H' ∩ T| and |T' ∩ H| of reciprocal arc r against target t.
inline std::size_t X(const Hyperarc& t, const Hyperarc& r) { return Common(r.head, t.tail); }
inline std::size_t Y(const Hyperarc& t, const Hyperarc& r) { return Common(r.tail, t.head); }

inline bool InsideReverse(const Hyperarc& t, const Hyperarc& r) {
  return Subset(r.head, t.tail) && Subset(r.tail, t.head);
}

inline bool SameSize(const ArcConfig& i, const ArcConfig& j) {
  return i.target.head.size() == j.target.head.size() &&
         i.target.tail.size() == j.target.tail.size();
}

inline bool Valid(const Hyperarc& a) {
  return !a.head.empty() && !a.tail.empty() && Common(a.head, a.tail) == 0;
}

inline bool Axiom1(const ArcConfig& i, const ArcConfig& j) {
  if (i.reciprocal.empty() || j.reciprocal.empty()) return false;
  for (const Hyperarc& r : i.reciprocal) {
    if (std::min(X(i.target, r), Y(i.target, r)) != 0) return false;
  }
  for (const Hyperarc& r : j.reciprocal) {
    if (std::min(X(j.target, r), Y(j.target, r)) >= 1) return true;
  }
  return false;
}

inline bool Axiom2A(const ArcConfig& i, const ArcConfig& j) {
  if (!SameSize(i, j) || i.reciprocal.size() != 1 || j.reciprocal.size() != 1) return false;
  const Hyperarc& ri = i.reciprocal[0];
  const Hyperarc& rj = j.reciprocal[0];
  if (ri.head.size() != rj.head.size() || ri.tail.size() != rj.tail.size()) return false;
  std::size_t xi = X(i.target, ri), xj = X(j.target, rj);
  std::size_t yi = Y(i.target, ri), yj = Y(j.target, rj);
  bool first = 0 < xi && xi < xj && 0 < yi && yi <= yj;
  bool second = 0 < xi && xi <= xj && 0 < yi && yi < yj;
  return first || second;
}

inline bool Axiom2B(const ArcConfig& i, const ArcConfig& j) {
  if (!SameSize(i, j) || i.reciprocal.size() != 1 || j.reciprocal.size() != 1) return false;
  const Hyperarc& ri = i.reciprocal[0];
  const Hyperarc& rj = j.reciprocal[0];
  std::size_t xi = X(i.target, ri), xj = X(j.target, rj);
  std::size_t yi = Y(i.target, ri), yj = Y(j.target, rj);
  return ri.head.size() > rj.head.size() && ri.tail.size() == rj.tail.size() &&
         0 < xi && xi == xj && 0 < yi && yi == yj;
}

// The two-versus-one comparisons; `shared_tail` selects the identical-tail
// form, otherwise the identical-head form. The size equality on the shared
// side is read as |T'_i1| = |T'_j| (|H'_i1| = |H'_j|), matching the proof.
inline bool Axiom3(const ArcConfig& i, const ArcConfig& j, bool shared_tail) {
  if (!SameSize(i, j) || i.reciprocal.size() != 2 || j.reciprocal.size() != 1) return false;
  const Hyperarc& a = i.reciprocal[0];
  const Hyperarc& b = i.reciprocal[1];
  const Hyperarc& c = j.reciprocal[0];
  if (!InsideReverse(i.target, a) || !InsideReverse(i.target, b) ||
      !InsideReverse(j.target, c)) {
    return false;
  }
  if (shared_tail) {
    return a.tail == b.tail && a.tail.size() == c.tail.size() &&
           Common(a.head, b.head) == 0 &&
           Common(Union(a.head, b.head), i.target.tail) == Common(c.head, j.target.tail);
  }
  return a.head == b.head && a.head.size() == c.head.size() &&
         Common(a.tail, b.tail) == 0 &&
         Common(Union(a.tail, b.tail), i.target.head) == Common(c.tail, j.target.head);
}

inline bool Axiom4Side(const ArcConfig& c, bool balanced) {
  const Hyperarc& t = c.target;
  if (c.reciprocal.size() != t.tail.size()) return false;
  std::map<NodeId, std::size_t> cover;
  for (NodeId v : t.tail) cover[v] = 0;
  for (const Hyperarc& r : c.reciprocal) {
    if (r.tail != t.head || r.head.size() != 2 || !Subset(r.head, t.tail)) return false;
    for (NodeId v : r.head) ++cover[v];
  }
  bool equal = true;
  for (const auto& [v, n] : cover) equal = equal && n == cover.begin()->second;
  return equal == balanced;
}

inline bool Axiom4(const ArcConfig& i, const ArcConfig& j) {
  return SameSize(i, j) && i.reciprocal.size() == j.reciprocal.size() &&
         Axiom4Side(i, false) && Axiom4Side(j, true);
}

inline bool Satisfies(const AxiomInstance& in) {
  for (const ArcConfig* c : {&in.lesser, &in.greater}) {
    if (!Valid(c->target)) return false;
    for (const Hyperarc& r : c->reciprocal) {
      if (!Valid(r)) return false;
    }
  }
  switch (in.axiom) {
    case ArcAxiom::k1: return Axiom1(in.lesser, in.greater);
    case ArcAxiom::k2A: return Axiom2A(in.lesser, in.greater);
    case ArcAxiom::k2B: return Axiom2B(in.lesser, in.greater);
    case ArcAxiom::k3A: return Axiom3(in.lesser, in.greater, true);
    case ArcAxiom::k3B: return Axiom3(in.lesser, in.greater, false);
    case ArcAxiom::k4: return Axiom4(in.lesser, in.greater);
  }
  return false;
}

}  // namespace axiom_check

#endif  // HYPERREC_TESTS_AXIOM_CHECK_HPP_
