#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "webgraph/graph.hpp"

namespace webgraph {

/// Line accounting for one ingest. Every input line lands in exactly one bucket:
/// raw_lines = edges + self_loops_removed + duplicates_removed + skipped_lines + node_lines.
struct IngestReport {
  std::uint64_t raw_lines = 0;
  std::uint64_t skipped_lines = 0;  ///< blank or '#' comment lines
  std::uint64_t node_lines = 0;     ///< single-id lines declaring an isolated node
  std::uint64_t self_loops_removed = 0;
  std::uint64_t duplicates_removed = 0;
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

struct IngestResult {
  DirectedGraph graph;
  IngestReport report;
};

/// Parses a whitespace-separated edge list. Each data line is `src dst`
/// (non-negative integers); a line with a single id declares a node without
/// edges; blank lines and lines starting with '#' are skipped. Input ids are
/// compacted to dense NodeIds in ascending id order.
IngestResult build_from_edge_list(std::istream& in);
IngestResult build_from_edge_list(std::string_view text);

/// Reads an edge list from disk; gzip input is detected by its magic bytes.
IngestResult read_edge_list(const std::filesystem::path& path);

/// Writes `src dst` lines using original ids; isolated nodes as single-id lines.
void write_edge_list(const DirectedGraph& g, std::ostream& out);

inline constexpr std::uint32_t kCacheVersion = 1;

/// Binary cache layout (little-endian):
///   8 bytes magic "WGLCACHE", u32 version, u32 reserved (0),
///   u64 node_count, u64 edge_count,
///   u64[n+1] forward offsets, u32[m] forward targets,
///   u64[n+1] reverse offsets, u32[m] reverse sources,
///   u64[n] original ids.
std::string serialize_cache(const DirectedGraph& g);
DirectedGraph deserialize_cache(std::string_view bytes);

void save_cache(const DirectedGraph& g, const std::filesystem::path& path);
DirectedGraph load_cache(const std::filesystem::path& path);

/// True when the file starts with the cache magic.
bool is_cache_file(const std::filesystem::path& path);

/// Loads either a `.wgl` cache or a (possibly gzipped) edge list.
DirectedGraph load_graph(const std::filesystem::path& path);

}  // namespace webgraph
