#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "webgraph/graph.hpp"

namespace webgraph {

/// Simple undirected graph in symmetric CSR form; neighbor lists sorted.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Each pair is one undirected edge; orientation, repeats and loops are ignored.
  static UndirectedGraph from_edges(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const noexcept { return node_count_; }
  /// Number of undirected edges.
  std::uint64_t edge_count() const noexcept { return adj_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId n) const noexcept {
    return {adj_.data() + offsets_[n], adj_.data() + offsets_[n + 1]};
  }
  std::uint64_t degree(NodeId n) const noexcept { return offsets_[n + 1] - offsets_[n]; }
  bool adjacent(NodeId u, NodeId v) const noexcept;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<EdgeIndex> offsets_{0};
  std::vector<NodeId> adj_;
};

/// Undirected projection of a directed graph: u-v whenever u->v or v->u.
UndirectedGraph undirected_view(const DirectedGraph& g);

}  // namespace webgraph
