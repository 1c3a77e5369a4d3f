#include "webgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "webgraph/errors.hpp"

namespace webgraph {

namespace {

std::vector<EdgeIndex> offsets_from_counts(std::vector<EdgeIndex> counts) {
  std::vector<EdgeIndex> offsets(counts.size() + 1, 0);
  std::partial_sum(counts.begin(), counts.end(), offsets.begin() + 1);
  return offsets;
}

}  // namespace

std::pair<std::vector<EdgeIndex>, std::vector<NodeId>> transpose_adjacency(
    std::span<const EdgeIndex> offsets, std::span<const NodeId> targets, NodeId node_count) {
  std::vector<EdgeIndex> counts(node_count, 0);
  for (NodeId v : targets) ++counts[v];
  auto rev_offsets = offsets_from_counts(std::move(counts));
  std::vector<EdgeIndex> cursor(rev_offsets.begin(), rev_offsets.end() - 1);
  std::vector<NodeId> sources(targets.size());
  // Scanning sources in ascending order leaves every reverse list sorted.
  for (NodeId u = 0; u < node_count; ++u)
    for (EdgeIndex e = offsets[u]; e < offsets[u + 1]; ++e) sources[cursor[targets[e]]++] = u;
  return {std::move(rev_offsets), std::move(sources)};
}

DirectedGraph DirectedGraph::from_edges(NodeId node_count, std::vector<Edge> edges,
                                        CleanCounts* counts) {
  std::vector<OriginalId> ids(node_count);
  std::iota(ids.begin(), ids.end(), OriginalId{0});
  return from_edges(std::move(ids), std::move(edges), counts);
}

DirectedGraph DirectedGraph::from_edges(std::vector<OriginalId> original_ids,
                                        std::vector<Edge> edges, CleanCounts* counts) {
  if (original_ids.size() > std::numeric_limits<NodeId>::max())
    throw BoundsError("node count exceeds NodeId range");
  const auto n = static_cast<NodeId>(original_ids.size());
  if (!std::is_sorted(original_ids.begin(), original_ids.end()) ||
      std::adjacent_find(original_ids.begin(), original_ids.end()) != original_ids.end())
    throw BoundsError("original ids must be strictly increasing");

  CleanCounts tally;
  for (const auto& [u, v] : edges)
    if (u >= n || v >= n)
      throw BoundsError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a node outside [0," + std::to_string(n) + ")");
  auto loops = std::remove_if(edges.begin(), edges.end(), [](const Edge& e) { return e.first == e.second; });
  tally.self_loops = static_cast<std::uint64_t>(edges.end() - loops);
  edges.erase(loops, edges.end());
  std::sort(edges.begin(), edges.end());
  auto dup = std::unique(edges.begin(), edges.end());
  tally.duplicates = static_cast<std::uint64_t>(edges.end() - dup);
  edges.erase(dup, edges.end());
  if (counts) *counts = tally;

  DirectedGraph g;
  g.node_count_ = n;
  g.original_ids_ = std::move(original_ids);
  std::vector<EdgeIndex> out_counts(n, 0);
  for (const auto& e : edges) ++out_counts[e.first];
  g.out_offsets_ = offsets_from_counts(std::move(out_counts));
  g.out_targets_.resize(edges.size());
  std::transform(edges.begin(), edges.end(), g.out_targets_.begin(),
                 [](const Edge& e) { return e.second; });
  edges.clear();
  edges.shrink_to_fit();
  std::tie(g.in_offsets_, g.in_sources_) = transpose_adjacency(g.out_offsets_, g.out_targets_, n);
  return g;
}

DirectedGraph DirectedGraph::from_csr(std::vector<EdgeIndex> out_offsets,
                                      std::vector<NodeId> out_targets,
                                      std::vector<EdgeIndex> in_offsets,
                                      std::vector<NodeId> in_sources,
                                      std::vector<OriginalId> original_ids) {
  const std::size_t n = original_ids.size();
  if (n > std::numeric_limits<NodeId>::max()) throw FormatError("node count exceeds NodeId range");
  if (out_offsets.size() != n + 1 || in_offsets.size() != n + 1)
    throw FormatError("offset array length does not match node count");
  if (out_targets.size() != in_sources.size()) throw FormatError("direction edge counts differ");

  auto check_direction = [n](const std::vector<EdgeIndex>& off, const std::vector<NodeId>& adj,
                             const char* name) {
    if (off.front() != 0 || off.back() != adj.size())
      throw FormatError(std::string(name) + " offsets do not span the neighbor array");
    for (std::size_t u = 0; u < n; ++u) {
      if (off[u] > off[u + 1]) throw FormatError(std::string(name) + " offsets not monotone");
      for (EdgeIndex e = off[u]; e < off[u + 1]; ++e) {
        if (adj[e] >= n) throw FormatError(std::string(name) + " neighbor id out of range");
        if (adj[e] == u) throw FormatError(std::string(name) + " list contains a self-loop");
        if (e > off[u] && adj[e - 1] >= adj[e])
          throw FormatError(std::string(name) + " neighbor list not strictly ascending");
      }
    }
  };
  check_direction(out_offsets, out_targets, "forward");
  check_direction(in_offsets, in_sources, "reverse");
  if (!std::is_sorted(original_ids.begin(), original_ids.end()) ||
      std::adjacent_find(original_ids.begin(), original_ids.end()) != original_ids.end())
    throw FormatError("original ids not strictly increasing");

  auto [t_off, t_src] = transpose_adjacency(out_offsets, out_targets, static_cast<NodeId>(n));
  if (t_off != in_offsets || t_src != in_sources)
    throw FormatError("reverse adjacency is not the transpose of forward adjacency");

  DirectedGraph g;
  g.node_count_ = static_cast<NodeId>(n);
  g.out_offsets_ = std::move(out_offsets);
  g.out_targets_ = std::move(out_targets);
  g.in_offsets_ = std::move(in_offsets);
  g.in_sources_ = std::move(in_sources);
  g.original_ids_ = std::move(original_ids);
  return g;
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = out_neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> DirectedGraph::find(OriginalId id) const noexcept {
  auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), id);
  if (it == original_ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeId>(it - original_ids_.begin());
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count_; ++u)
    for (NodeId v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

Degrees degrees(const DirectedGraph& g, NodeId n) {
  if (n >= g.node_count())
    throw BoundsError("node id " + std::to_string(n) + " out of range [0," +
                      std::to_string(g.node_count()) + ")");
  return {g.in_degree(n), g.out_degree(n)};
}

std::uint64_t fingerprint(const DirectedGraph& g) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(g.node_count());
  mix(g.edge_count());
  for (auto o : g.out_offsets()) mix(o);
  for (auto v : g.out_targets()) mix(v);
  for (auto id : g.original_ids()) mix(id);
  return h;
}

}  // namespace webgraph
