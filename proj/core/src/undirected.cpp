#include "webgraph/undirected.hpp"

#include <algorithm>
#include <numeric>

#include "webgraph/errors.hpp"

namespace webgraph {

UndirectedGraph UndirectedGraph::from_edges(NodeId node_count, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) throw BoundsError("undirected edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  UndirectedGraph g;
  g.node_count_ = node_count;
  g.offsets_.assign(std::size_t{node_count} + 1, 0);
  for (const auto& a : arcs) ++g.offsets_[a.first + 1];
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.resize(arcs.size());
  std::transform(arcs.begin(), arcs.end(), g.adj_.begin(), [](const Edge& a) { return a.second; });
  return g;
}

bool UndirectedGraph::adjacent(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

UndirectedGraph undirected_view(const DirectedGraph& g) { return UndirectedGraph::from_edges(g.node_count(), g.edges()); }

}  // namespace webgraph
