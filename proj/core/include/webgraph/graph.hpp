#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace webgraph {

/// Dense node index after compaction; valid ids are [0, node_count).
using NodeId = std::uint32_t;
/// Offset into a CSR neighbor array.
using EdgeIndex = std::uint64_t;
/// Identifier a node carried in the raw input before compaction.
using OriginalId = std::uint64_t;

using Edge = std::pair<NodeId, NodeId>;

struct CleanCounts {
  std::uint64_t self_loops = 0;
  std::uint64_t duplicates = 0;
};

struct Degrees {
  std::uint64_t in = 0;
  std::uint64_t out = 0;
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

/// Immutable simple directed graph in CSR form with both forward (out) and
/// reverse (in) adjacency. Neighbor lists are sorted ascending. Original ids
/// are strictly increasing in NodeId order.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds a simple graph over nodes [0, node_count). Self-loops and repeated
  /// edges are dropped and tallied in `counts` when given.
  static DirectedGraph from_edges(NodeId node_count, std::vector<Edge> edges,
                                  CleanCounts* counts = nullptr);

  /// As from_edges, keeping `original_ids` (strictly increasing, size node_count).
  static DirectedGraph from_edges(std::vector<OriginalId> original_ids, std::vector<Edge> edges,
                                  CleanCounts* counts = nullptr);

  /// Assembles a graph from raw CSR arrays (used by the cache loader). The
  /// arrays are validated; violations throw FormatError.
  static DirectedGraph from_csr(std::vector<EdgeIndex> out_offsets, std::vector<NodeId> out_targets,
                                std::vector<EdgeIndex> in_offsets, std::vector<NodeId> in_sources,
                                std::vector<OriginalId> original_ids);

  NodeId node_count() const noexcept { return node_count_; }
  EdgeIndex edge_count() const noexcept { return out_targets_.size(); }
  bool empty() const noexcept { return node_count_ == 0; }

  std::span<const NodeId> out_neighbors(NodeId n) const noexcept {
    return {out_targets_.data() + out_offsets_[n], out_targets_.data() + out_offsets_[n + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId n) const noexcept {
    return {in_sources_.data() + in_offsets_[n], in_sources_.data() + in_offsets_[n + 1]};
  }
  std::uint64_t out_degree(NodeId n) const noexcept { return out_offsets_[n + 1] - out_offsets_[n]; }
  std::uint64_t in_degree(NodeId n) const noexcept { return in_offsets_[n + 1] - in_offsets_[n]; }

  /// O(log d) membership test on the sorted out-list of u.
  bool has_edge(NodeId u, NodeId v) const noexcept;

  OriginalId original_id(NodeId n) const noexcept { return original_ids_[n]; }
  std::span<const OriginalId> original_ids() const noexcept { return original_ids_; }
  /// Dense id of an input id, if present.
  std::optional<NodeId> find(OriginalId id) const noexcept;

  std::span<const EdgeIndex> out_offsets() const noexcept { return out_offsets_; }
  std::span<const NodeId> out_targets() const noexcept { return out_targets_; }
  std::span<const EdgeIndex> in_offsets() const noexcept { return in_offsets_; }
  std::span<const NodeId> in_sources() const noexcept { return in_sources_; }

  /// Edge list in (source, target) lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<EdgeIndex> out_offsets_{0};
  std::vector<NodeId> out_targets_;
  std::vector<EdgeIndex> in_offsets_{0};
  std::vector<NodeId> in_sources_;
  std::vector<OriginalId> original_ids_;
};

/// Bounds-checked (k_in, k_out); throws BoundsError for an invalid id.
Degrees degrees(const DirectedGraph& g, NodeId n);

/// Reverse adjacency rebuilt independently from the forward lists (transpose).
std::pair<std::vector<EdgeIndex>, std::vector<NodeId>> transpose_adjacency(
    std::span<const EdgeIndex> offsets, std::span<const NodeId> targets, NodeId node_count);

/// 64-bit FNV-1a digest over the forward CSR arrays and original ids. Used to
/// tie derived results (crawl outcomes) back to the graph they came from.
std::uint64_t fingerprint(const DirectedGraph& g);

}  // namespace webgraph
