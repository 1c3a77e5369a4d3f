#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "webgraph/graph.hpp"

namespace webgraph {

enum class BowTieClass : std::uint8_t { Scc, In, Out, Tendril, Tube, Disconnected };

inline constexpr std::array<BowTieClass, 6> kBowTieClasses{
    BowTieClass::Scc,     BowTieClass::In,   BowTieClass::Out,
    BowTieClass::Tendril, BowTieClass::Tube, BowTieClass::Disconnected};

std::string_view token(BowTieClass c) noexcept;

/// Strongly connected components. Labels are numbered by the smallest node
/// each component contains, so node 0 is always in component 0.
struct SccResult {
  std::vector<std::uint32_t> label;
  std::vector<std::uint64_t> sizes;

  std::size_t component_count() const noexcept { return sizes.size(); }
  /// Largest component; ties go to the one holding the smallest NodeId.
  std::uint32_t largest() const;
};

/// Iterative Tarjan; stack depth is bounded by heap memory, not recursion.
SccResult strongly_connected_components(const DirectedGraph& g);

struct BowTiePartition {
  std::vector<BowTieClass> class_of;
  std::array<std::uint64_t, 6> sizes{};
  std::uint64_t node_count = 0;

  std::uint64_t size(BowTieClass c) const noexcept { return sizes[static_cast<std::size_t>(c)]; }
  /// Share of all nodes in percent; 0 for an empty graph.
  double percentage(BowTieClass c) const noexcept;
  /// SCC + IN + OUT, in percent. Tendrils and tubes are not part of MAIN.
  double main_pct() const noexcept;
};

/// SCC is the largest strong component. IN reaches it, OUT is reached from
/// it. TUBE nodes lie on an IN-to-OUT path that avoids the SCC. Remaining
/// nodes weakly attached to the SCC are TENDRIL; the rest DISCONNECTED.
BowTiePartition bowtie_decompose(const DirectedGraph& g);

}  // namespace webgraph
