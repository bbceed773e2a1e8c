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

#ifndef HYPERREC_HYPERGRAPH_HPP_
#define HYPERREC_HYPERGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperrec {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;

// Virtual node absorbing walkers that find no reciprocal arc.
inline constexpr NodeId kSinkNode = std::numeric_limits<NodeId>::max();

// A directed hyperarc <H, T>, pointing from the tail set to the head set.
// Both sets are kept sorted and duplicate free.
struct Hyperarc {
  std::vector<NodeId> head;
  std::vector<NodeId> tail;

  friend bool operator==(const Hyperarc&, const Hyperarc&) = default;
};

// Sorts and deduplicates both sides in place.
void Canonicalize(Hyperarc& arc);

// Returns <T, H>.
Hyperarc PerfectReciprocalOf(const Hyperarc& arc);

// Length-prefixed 64-bit hash of (sorted head, sorted tail).
std::uint64_t ArcSignature(const Hyperarc& arc);

struct DegreeReport {
  std::vector<std::uint32_t> d_in;   // arcs with the node in the head
  std::vector<std::uint32_t> d_out;  // arcs with the node in the tail
};

// Immutable directed hypergraph with dense node ids and incidence indexes.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;

  // Builds from canonical arcs over nodes [0, num_nodes). Arcs must be
  // valid (non-empty disjoint sides, ids in range). Exact duplicates after
  // the first are dropped. `labels`, when non-empty, must have num_nodes
  // entries.
  static DirectedHypergraph FromArcs(std::size_t num_nodes,
                                     std::vector<Hyperarc> arcs,
                                     std::vector<std::string> labels = {});

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_arcs() const { return arcs_.size(); }
  const std::vector<Hyperarc>& arcs() const { return arcs_; }
  const Hyperarc& arc(ArcId id) const { return arcs_[id]; }

  // Arcs having `v` in their head (tail), ascending by id.
  std::span<const ArcId> head_incidence(NodeId v) const;
  std::span<const ArcId> tail_incidence(NodeId v) const;

  // Id of an arc equal to `arc`, if present. O(1) expected.
  std::optional<ArcId> Find(const Hyperarc& arc) const;

  // Label for output; the decimal id when none were given.
  const std::string& label(NodeId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::size_t num_nodes_ = 0;
  std::vector<Hyperarc> arcs_;
  std::vector<std::uint32_t> head_offsets_, tail_offsets_;
  std::vector<ArcId> head_index_, tail_index_;
  std::unordered_map<std::uint64_t, std::vector<ArcId>> signatures_;
  std::vector<std::string> labels_;
};

DegreeReport Degrees(const DirectedHypergraph& g);

enum class Format { kTsv, kJson };

struct IngestOptions {
  // Remove head/tail overlap from the tail instead of rejecting the arc.
  bool repair_overlap = false;
  // Drop arcs whose head set is larger than this before id assignment.
  std::optional<std::size_t> max_head_size;
};

// Parses an arc list. Node labels are remapped to dense ids in order of
// first appearance; duplicate arcs keep their first occurrence.
DirectedHypergraph Ingest(std::istream& in, Format format,
                          const IngestOptions& options = {});
DirectedHypergraph IngestString(const std::string& text, Format format,
                                const IngestOptions& options = {});
// Format is taken from the extension: ".json" means JSON, anything else TSV.
DirectedHypergraph IngestFile(const std::string& path,
                              const IngestOptions& options = {});
std::optional<Format> FormatFromPath(const std::string& path);

void WriteTsv(const DirectedHypergraph& g, std::ostream& out);
void WriteJson(const DirectedHypergraph& g, std::ostream& out);
void WriteFile(const DirectedHypergraph& g, const std::string& path,
               std::optional<Format> format = std::nullopt);

}  // namespace hyperrec

#endif  // HYPERREC_HYPERGRAPH_HPP_
