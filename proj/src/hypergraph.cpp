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

#include "hyperrec/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "hyperrec/error.hpp"
#include "json.hpp"

namespace hyperrec {
namespace {

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool IsSortedUnique(const std::vector<NodeId>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) ==
         v.end();
}

bool Intersects(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

void BuildIndex(std::size_t num_nodes, const std::vector<Hyperarc>& arcs,
                bool head, std::vector<std::uint32_t>& offsets,
                std::vector<ArcId>& index) {
  offsets.assign(num_nodes + 1, 0);
  for (const Hyperarc& a : arcs) {
    for (NodeId v : head ? a.head : a.tail) ++offsets[v + 1];
  }
  for (std::size_t v = 0; v < num_nodes; ++v) offsets[v + 1] += offsets[v];
  index.resize(offsets[num_nodes]);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (ArcId id = 0; id < arcs.size(); ++id) {
    for (NodeId v : head ? arcs[id].head : arcs[id].tail) {
      index[cursor[v]++] = id;
    }
  }
}

// Raw arc as read, before id assignment.
struct LabelArc {
  std::vector<std::string> head;
  std::vector<std::string> tail;
  std::string where;  // "line N" or "arc N"
};

void SplitLabels(const std::string& field, std::size_t line,
                 std::vector<std::string>& out) {
  out.clear();
  if (field.empty()) return;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = field.find(',', start);
    std::string label = field.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (label.empty()) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line) + ": empty node label");
    }
    out.push_back(std::move(label));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
}

std::vector<LabelArc> ReadTsv(std::istream& in) {
  std::vector<LabelArc> arcs;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(number) +
                      ": expected exactly one tab between head and tail");
    }
    LabelArc arc;
    arc.where = "line " + std::to_string(number);
    SplitLabels(line.substr(0, tab), number, arc.head);
    SplitLabels(line.substr(tab + 1), number, arc.tail);
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

std::string JsonLabel(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.empty()) throw Error(ErrorKind::kParse, where + ": empty node label");
    return s;
  }
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  throw Error(ErrorKind::kParse,
              where + ": node labels must be strings or integers");
}

std::vector<LabelArc> ReadJson(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("arcs") || !doc["arcs"].is_array()) {
    throw Error(ErrorKind::kParse, "JSON document needs an \"arcs\" array");
  }
  std::vector<LabelArc> arcs;
  std::size_t index = 0;
  for (const nlohmann::json& item : doc["arcs"]) {
    LabelArc arc;
    arc.where = "arc " + std::to_string(index++);
    if (!item.is_object() || !item.contains("head") || !item.contains("tail") ||
        !item["head"].is_array() || !item["tail"].is_array()) {
      throw Error(ErrorKind::kParse,
                  arc.where + ": expected {\"head\":[...],\"tail\":[...]}");
    }
    for (const auto& v : item["head"]) arc.head.push_back(JsonLabel(v, arc.where));
    for (const auto& v : item["tail"]) arc.tail.push_back(JsonLabel(v, arc.where));
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

void DropRepeats(std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  std::erase_if(labels,
                [&](const std::string& s) { return !seen.insert(s).second; });
}

DirectedHypergraph Assemble(std::vector<LabelArc> raw,
                            const IngestOptions& options) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Hyperarc> arcs;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (LabelArc& a : raw) {
    DropRepeats(a.head);
    DropRepeats(a.tail);
    if (a.head.empty() || a.tail.empty()) {
      throw Error(ErrorKind::kValidation, a.where + ": empty head or tail set");
    }
    if (options.max_head_size && a.head.size() > *options.max_head_size) {
      continue;
    }
    std::unordered_set<std::string> head_set(a.head.begin(), a.head.end());
    for (const std::string& s : a.tail) {
      if (head_set.count(s) && !options.repair_overlap) {
        throw Error(ErrorKind::kValidation,
                    a.where + ": node '" + s + "' is in both head and tail");
      }
    }
    std::erase_if(a.tail,
                  [&](const std::string& s) { return head_set.count(s) > 0; });
    if (a.tail.empty()) {
      throw Error(ErrorKind::kValidation,
                  a.where + ": tail set empty after overlap repair");
    }
    // Ids follow textual order, so re-serialised files reproduce them.
    Hyperarc arc;
    for (const std::string& s : a.head) arc.head.push_back(intern(s));
    for (const std::string& s : a.tail) arc.tail.push_back(intern(s));
    Canonicalize(arc);
    arcs.push_back(std::move(arc));
  }
  const std::size_t num_nodes = labels.size();
  return DirectedHypergraph::FromArcs(num_nodes, std::move(arcs),
                                      std::move(labels));
}

bool IsCanonicalInteger(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size() || s.size() - i > 18) return false;
  if (s[i] == '0' && s.size() - i > 1) return false;
  if (s == "-0") return false;
  return std::all_of(s.begin() + i, s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

nlohmann::json LabelJson(const std::string& label) {
  if (IsCanonicalInteger(label)) return std::stoll(label);
  return label;
}

}  // namespace

void Canonicalize(Hyperarc& arc) {
  std::sort(arc.head.begin(), arc.head.end());
  arc.head.erase(std::unique(arc.head.begin(), arc.head.end()), arc.head.end());
  std::sort(arc.tail.begin(), arc.tail.end());
  arc.tail.erase(std::unique(arc.tail.begin(), arc.tail.end()), arc.tail.end());
}

Hyperarc PerfectReciprocalOf(const Hyperarc& arc) {
  return Hyperarc{arc.tail, arc.head};
}

std::uint64_t ArcSignature(const Hyperarc& arc) {
  std::uint64_t h = Mix(arc.head.size());
  for (NodeId v : arc.head) h = Mix(h ^ v);
  h = Mix(h ^ (arc.tail.size() + 0x5bd1e995ULL));
  for (NodeId v : arc.tail) h = Mix(h ^ v);
  return h;
}

DirectedHypergraph DirectedHypergraph::FromArcs(std::size_t num_nodes,
                                                std::vector<Hyperarc> arcs,
                                                std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != num_nodes) {
    throw Error(ErrorKind::kPrecondition, "label count differs from node count");
  }
  if (num_nodes >= kSinkNode) {
    throw Error(ErrorKind::kPrecondition, "too many nodes");
  }
  DirectedHypergraph g;
  g.num_nodes_ = num_nodes;
  g.labels_ = std::move(labels);
  if (g.labels_.empty()) {
    g.labels_.reserve(num_nodes);
    for (std::size_t v = 0; v < num_nodes; ++v) g.labels_.push_back(std::to_string(v));
  }
  g.arcs_.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Hyperarc& a = arcs[i];
    if (a.head.empty() || a.tail.empty() || !IsSortedUnique(a.head) ||
        !IsSortedUnique(a.tail) || a.head.back() >= num_nodes ||
        a.tail.back() >= num_nodes || Intersects(a.head, a.tail)) {
      throw Error(ErrorKind::kPrecondition,
                  "arc " + std::to_string(i) + " is not a valid hyperarc");
    }
    if (g.Find(a)) continue;
    ArcId id = static_cast<ArcId>(g.arcs_.size());
    g.signatures_[ArcSignature(a)].push_back(id);
    g.arcs_.push_back(std::move(a));
  }
  BuildIndex(num_nodes, g.arcs_, true, g.head_offsets_, g.head_index_);
  BuildIndex(num_nodes, g.arcs_, false, g.tail_offsets_, g.tail_index_);
  return g;
}

std::span<const ArcId> DirectedHypergraph::head_incidence(NodeId v) const {
  return {head_index_.data() + head_offsets_[v],
          head_index_.data() + head_offsets_[v + 1]};
}

std::span<const ArcId> DirectedHypergraph::tail_incidence(NodeId v) const {
  return {tail_index_.data() + tail_offsets_[v],
          tail_index_.data() + tail_offsets_[v + 1]};
}

std::optional<ArcId> DirectedHypergraph::Find(const Hyperarc& arc) const {
  auto it = signatures_.find(ArcSignature(arc));
  if (it == signatures_.end()) return std::nullopt;
  for (ArcId id : it->second) {
    if (arcs_[id] == arc) return id;
  }
  return std::nullopt;
}

const std::string& DirectedHypergraph::label(NodeId v) const {
  return labels_[v];
}

DegreeReport Degrees(const DirectedHypergraph& g) {
  DegreeReport r;
  r.d_in.assign(g.num_nodes(), 0);
  r.d_out.assign(g.num_nodes(), 0);
  for (const Hyperarc& a : g.arcs()) {
    for (NodeId v : a.head) ++r.d_in[v];
    for (NodeId v : a.tail) ++r.d_out[v];
  }
  return r;
}

DirectedHypergraph Ingest(std::istream& in, Format format,
                          const IngestOptions& options) {
  return Assemble(format == Format::kTsv ? ReadTsv(in) : ReadJson(in),
                  options);
}

DirectedHypergraph IngestString(const std::string& text, Format format,
                                const IngestOptions& options) {
  std::istringstream in(text);
  return Ingest(in, format, options);
}

std::optional<Format> FormatFromPath(const std::string& path) {
  auto ends_with = [&](const char* ext) {
    std::string e(ext);
    return path.size() >= e.size() &&
           path.compare(path.size() - e.size(), e.size(), e) == 0;
  };
  if (ends_with(".json")) return Format::kJson;
  if (ends_with(".tsv") || ends_with(".txt")) return Format::kTsv;
  return std::nullopt;
}

DirectedHypergraph IngestFile(const std::string& path,
                              const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  return Ingest(in, FormatFromPath(path).value_or(Format::kTsv), options);
}

void WriteTsv(const DirectedHypergraph& g, std::ostream& out) {
  auto side = [&](const std::vector<NodeId>& nodes) {
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k) out << ',';
      out << g.label(nodes[k]);
    }
  };
  for (const Hyperarc& a : g.arcs()) {
    side(a.head);
    out << '\t';
    side(a.tail);
    out << '\n';
  }
}

void WriteJson(const DirectedHypergraph& g, std::ostream& out) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Hyperarc& a : g.arcs()) {
    nlohmann::json head = nlohmann::json::array();
    nlohmann::json tail = nlohmann::json::array();
    for (NodeId v : a.head) head.push_back(LabelJson(g.label(v)));
    for (NodeId v : a.tail) tail.push_back(LabelJson(g.label(v)));
    arcs.push_back({{"head", std::move(head)}, {"tail", std::move(tail)}});
  }
  out << nlohmann::json{{"arcs", std::move(arcs)}}.dump() << '\n';
}

void WriteFile(const DirectedHypergraph& g, const std::string& path,
               std::optional<Format> format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  Format f = format.value_or(FormatFromPath(path).value_or(Format::kTsv));
  if (f == Format::kTsv) {
    WriteTsv(g, out);
  } else {
    WriteJson(g, out);
  }
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path + "'");
}

}  // namespace hyperrec
