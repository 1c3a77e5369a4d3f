#include "webgraph/components.hpp"

#include <algorithm>
#include <limits>

namespace webgraph {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Forward (out-edge) or reverse (in-edge) breadth-first closure from every node
// with seed[v] set, restricted to nodes where allowed[v] is set. Returns the
// visited mask, seeds included.
template <class Allowed>
std::vector<char> reach(const DirectedGraph& g, const std::vector<char>& seed, bool forward,
                        Allowed&& allowed) {
  std::vector<char> seen(seed);
  std::vector<NodeId> frontier;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (seen[v]) frontier.push_back(v);
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    for (NodeId u : frontier) {
      auto nb = forward ? g.out_neighbors(u) : g.in_neighbors(u);
      for (NodeId v : nb) {
        if (seen[v] || !allowed(v)) continue;
        seen[v] = 1;
        next.push_back(v);
      }
    }
    frontier.swap(next);
  }
  return seen;
}

}  // namespace

std::string_view token(BowTieClass c) noexcept {
  switch (c) {
    case BowTieClass::Scc: return "SCC";
    case BowTieClass::In: return "IN";
    case BowTieClass::Out: return "OUT";
    case BowTieClass::Tendril: return "TENDRIL";
    case BowTieClass::Tube: return "TUBE";
    case BowTieClass::Disconnected: return "DISCONNECTED";
  }
  return "?";
}

std::uint32_t SccResult::largest() const {
  auto it = std::max_element(sizes.begin(), sizes.end());  // first maximum = smallest min-node
  return static_cast<std::uint32_t>(it - sizes.begin());
}

SccResult strongly_connected_components(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::uint32_t> raw_label(n, kUnvisited);

  struct Frame {
    NodeId node;
    EdgeIndex cursor;
  };
  std::vector<Frame> calls;
  std::uint32_t next_index = 0;
  std::uint32_t next_component = 0;
  const auto offsets = g.out_offsets();
  const auto targets = g.out_targets();

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    calls.push_back({root, offsets[root]});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!calls.empty()) {
      Frame& f = calls.back();
      const NodeId u = f.node;
      if (f.cursor < offsets[u + 1]) {
        const NodeId v = targets[f.cursor++];
        if (index[v] == kUnvisited) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = 1;
          calls.push_back({v, offsets[v]});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_label[w] = next_component;
        } while (w != u);
        ++next_component;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const NodeId parent = calls.back().node;
        low[parent] = std::min(low[parent], low[u]);
      }
    }
  }

  // Renumber by first appearance in node order.
  SccResult result;
  result.label.resize(n);
  std::vector<std::uint32_t> remap(next_component, kUnvisited);
  for (NodeId v = 0; v < n; ++v) {
    auto& r = remap[raw_label[v]];
    if (r == kUnvisited) {
      r = static_cast<std::uint32_t>(result.sizes.size());
      result.sizes.push_back(0);
    }
    result.label[v] = r;
    ++result.sizes[r];
  }
  return result;
}

double BowTiePartition::percentage(BowTieClass c) const noexcept {
  if (node_count == 0) return 0.0;
  return 100.0 * static_cast<double>(size(c)) / static_cast<double>(node_count);
}

double BowTiePartition::main_pct() const noexcept {
  return percentage(BowTieClass::Scc) + percentage(BowTieClass::In) + percentage(BowTieClass::Out);
}

BowTiePartition bowtie_decompose(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  BowTiePartition p;
  p.node_count = n;
  p.class_of.assign(n, BowTieClass::Disconnected);
  if (n == 0) return p;

  const auto scc = strongly_connected_components(g);
  const auto core = scc.largest();
  std::vector<char> in_core(n, 0);
  for (NodeId v = 0; v < n; ++v) in_core[v] = scc.label[v] == core;

  const auto any = [](NodeId) { return true; };
  const auto downstream = reach(g, in_core, true, any);
  const auto upstream = reach(g, in_core, false, any);

  std::vector<char> in_set(n, 0), out_set(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (in_core[v]) {
      p.class_of[v] = BowTieClass::Scc;
    } else if (downstream[v]) {
      p.class_of[v] = BowTieClass::Out;
      out_set[v] = 1;
    } else if (upstream[v]) {
      p.class_of[v] = BowTieClass::In;
      in_set[v] = 1;
    }
  }

  // Tubes: forward from IN and backward from OUT, both avoiding the SCC.
  const auto outside_core = [&](NodeId v) { return !in_core[v]; };
  const auto from_in = reach(g, in_set, true, outside_core);
  const auto to_out = reach(g, out_set, false, outside_core);
  for (NodeId v = 0; v < n; ++v)
    if (!in_core[v] && !in_set[v] && !out_set[v] && from_in[v] && to_out[v])
      p.class_of[v] = BowTieClass::Tube;

  // Weak component of the SCC, ignoring edge direction.
  std::vector<char> weak(in_core);
  std::vector<NodeId> frontier;
  for (NodeId v = 0; v < n; ++v)
    if (weak[v]) frontier.push_back(v);
  while (!frontier.empty()) {
    const NodeId u = frontier.back();
    frontier.pop_back();
    for (auto nb : {g.out_neighbors(u), g.in_neighbors(u)})
      for (NodeId v : nb)
        if (!weak[v]) {
          weak[v] = 1;
          frontier.push_back(v);
        }
  }
  for (NodeId v = 0; v < n; ++v)
    if (weak[v] && p.class_of[v] == BowTieClass::Disconnected) p.class_of[v] = BowTieClass::Tendril;

  for (auto c : p.class_of) ++p.sizes[static_cast<std::size_t>(c)];
  return p;
}

}  // namespace webgraph
