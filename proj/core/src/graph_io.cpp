#include "webgraph/graph_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "webgraph/errors.hpp"

namespace webgraph {

namespace {

constexpr std::array<char, 8> kMagic{'W', 'G', 'L', 'C', 'A', 'C', 'H', 'E'};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

class EdgeListBuilder {
 public:
  void add_line(std::string_view line) {
    ++report_.raw_lines;
    const std::size_t lineno = report_.raw_lines;
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < line.size() && is_space(line[pos])) ++pos;
    };
    skip_ws();
    if (pos == line.size() || line[pos] == '#') {
      ++report_.skipped_lines;
      return;
    }
    std::array<OriginalId, 2> ids{};
    int found = 0;
    while (pos < line.size()) {
      if (found == 2) throw ParseError(lineno, "expected at most two ids, found extra token");
      const char* first = line.data() + pos;
      const char* last = line.data() + line.size();
      if (*first == '-') throw ParseError(lineno, "negative node id");
      auto [ptr, ec] = std::from_chars(first, last, ids[found]);
      if (ec == std::errc::result_out_of_range) throw ParseError(lineno, "node id out of range");
      if (ec != std::errc{} || (ptr != last && !is_space(*ptr)))
        throw ParseError(lineno, "malformed node id '" + std::string(line.substr(pos, 20)) + "'");
      pos = static_cast<std::size_t>(ptr - line.data());
      ++found;
      skip_ws();
    }
    if (found == 1) {
      ++report_.node_lines;
      ids_.push_back(ids[0]);
    } else {
      raw_edges_.emplace_back(ids[0], ids[1]);
    }
  }

  IngestResult finish() {
    ids_.reserve(ids_.size() + 2 * raw_edges_.size());
    for (const auto& [u, v] : raw_edges_) {
      ids_.push_back(u);
      ids_.push_back(v);
    }
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (ids_.size() > std::numeric_limits<NodeId>::max())
      throw BoundsError("more distinct ids than NodeId can address");

    auto dense = [this](OriginalId id) {
      return static_cast<NodeId>(std::lower_bound(ids_.begin(), ids_.end(), id) - ids_.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw_edges_.size());
    for (const auto& [u, v] : raw_edges_) edges.emplace_back(dense(u), dense(v));
    raw_edges_.clear();
    raw_edges_.shrink_to_fit();

    CleanCounts counts;
    IngestResult result{DirectedGraph::from_edges(std::move(ids_), std::move(edges), &counts), report_};
    result.report.self_loops_removed = counts.self_loops;
    result.report.duplicates_removed = counts.duplicates;
    result.report.nodes = result.graph.node_count();
    result.report.edges = result.graph.edge_count();
    return result;
  }

 private:
  IngestReport report_;
  std::vector<std::pair<OriginalId, OriginalId>> raw_edges_;
  std::vector<OriginalId> ids_;
};

// Little-endian fixed-width encoding, independent of host byte order.
template <class T>
void put(std::string& out, T value) {
  static_assert(std::is_unsigned_v<T>);
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xffu));
}

template <class T, class Range>
void put_array(std::string& out, const Range& values) {
  if constexpr (std::endian::native == std::endian::little) {
    const auto* p = reinterpret_cast<const char*>(values.data());
    out.append(p, values.size() * sizeof(T));
  } else {
    for (auto v : values) put<T>(out, static_cast<T>(v));
  }
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <class T>
  T get() {
    need(sizeof(T));
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
      value |= static_cast<T>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    pos_ += sizeof(T);
    return value;
  }

  template <class T>
  std::vector<T> get_array(std::uint64_t count) {
    if (count > (bytes_.size() - pos_) / sizeof(T)) throw FormatError("cache truncated");
    std::vector<T> values(count);
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(values.data(), bytes_.data() + pos_, count * sizeof(T));
      pos_ += count * sizeof(T);
    } else {
      for (auto& v : values) v = get<T>();
    }
    return values;
  }

  void expect_end() const {
    if (pos_ != bytes_.size()) throw FormatError("trailing bytes after cache payload");
  }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw FormatError("cache truncated");
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

bool has_prefix(const std::filesystem::path& path, std::span<const unsigned char> prefix) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<char> head(prefix.size());
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  if (in.gcount() != static_cast<std::streamsize>(head.size())) return false;
  return std::equal(prefix.begin(), prefix.end(), head.begin(),
                    [](unsigned char a, char b) { return a == static_cast<unsigned char>(b); });
}

}  // namespace

IngestResult build_from_edge_list(std::istream& in) {
  EdgeListBuilder builder;
  std::string line;
  while (std::getline(in, line)) builder.add_line(line);
  if (in.bad()) throw IoError("read error while parsing edge list");
  return builder.finish();
}

IngestResult build_from_edge_list(std::string_view text) {
  EdgeListBuilder builder;
  while (!text.empty()) {
    auto nl = text.find('\n');
    builder.add_line(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return builder.finish();
}

IngestResult read_edge_list(const std::filesystem::path& path) {
  static constexpr std::array<unsigned char, 2> kGzipMagic{0x1f, 0x8b};
  if (!has_prefix(path, kGzipMagic)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return build_from_edge_list(in);
  }

  std::unique_ptr<gzFile_s, decltype(&gzclose)> gz(gzopen(path.c_str(), "rb"), &gzclose);
  if (!gz) throw IoError("cannot open " + path.string());
  EdgeListBuilder builder;
  std::string pending;
  std::array<char, 1 << 16> buf{};
  for (;;) {
    int got = gzread(gz.get(), buf.data(), static_cast<unsigned>(buf.size()));
    if (got < 0) {
      int errnum = 0;
      throw FormatError(std::string("gzip error: ") + gzerror(gz.get(), &errnum));
    }
    if (got == 0) break;
    pending.append(buf.data(), static_cast<std::size_t>(got));
    std::size_t start = 0;
    for (std::size_t nl; (nl = pending.find('\n', start)) != std::string::npos; start = nl + 1)
      builder.add_line(std::string_view(pending).substr(start, nl - start));
    pending.erase(0, start);
  }
  if (!pending.empty()) builder.add_line(pending);
  return builder.finish();
}

void write_edge_list(const DirectedGraph& g, std::ostream& out) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.out_degree(u) == 0 && g.in_degree(u) == 0) {
      out << g.original_id(u) << '\n';
      continue;
    }
    for (NodeId v : g.out_neighbors(u)) out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
  }
}

std::string serialize_cache(const DirectedGraph& g) {
  std::string out;
  const std::uint64_t n = g.node_count();
  const std::uint64_t m = g.edge_count();
  out.reserve(32 + 2 * (n + 1) * 8 + 2 * m * 4 + n * 8);
  out.append(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kCacheVersion);
  put<std::uint32_t>(out, 0);
  put<std::uint64_t>(out, n);
  put<std::uint64_t>(out, m);
  put_array<std::uint64_t>(out, g.out_offsets());
  put_array<std::uint32_t>(out, g.out_targets());
  put_array<std::uint64_t>(out, g.in_offsets());
  put_array<std::uint32_t>(out, g.in_sources());
  put_array<std::uint64_t>(out, g.original_ids());
  return out;
}

DirectedGraph deserialize_cache(std::string_view bytes) {
  if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
    throw FormatError("bad cache magic");
  Reader r(bytes.substr(kMagic.size()));
  const auto version = r.get<std::uint32_t>();
  if (version != kCacheVersion)
    throw FormatError("unsupported cache version " + std::to_string(version));
  if (r.get<std::uint32_t>() != 0) throw FormatError("nonzero reserved header field");
  const auto n = r.get<std::uint64_t>();
  const auto m = r.get<std::uint64_t>();
  if (n >= std::numeric_limits<NodeId>::max()) throw FormatError("node count exceeds NodeId range");
  auto out_offsets = r.get_array<std::uint64_t>(n + 1);
  auto out_targets = r.get_array<std::uint32_t>(m);
  auto in_offsets = r.get_array<std::uint64_t>(n + 1);
  auto in_sources = r.get_array<std::uint32_t>(m);
  auto ids = r.get_array<std::uint64_t>(n);
  r.expect_end();
  return DirectedGraph::from_csr(std::move(out_offsets), std::move(out_targets), std::move(in_offsets),
                                 std::move(in_sources), std::move(ids));
}

void save_cache(const DirectedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  const auto bytes = serialize_cache(g);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

DirectedGraph load_cache(const std::filesystem::path& path) {
  return deserialize_cache(read_file_bytes(path));
}

bool is_cache_file(const std::filesystem::path& path) {
  std::array<unsigned char, kMagic.size()> magic{};
  std::copy(kMagic.begin(), kMagic.end(), magic.begin());
  return has_prefix(path, magic);
}

DirectedGraph load_graph(const std::filesystem::path& path) {
  if (is_cache_file(path)) return load_cache(path);
  return read_edge_list(path).graph;
}

}  // namespace webgraph
