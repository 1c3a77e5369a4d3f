#include "webgraph/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "webgraph/errors.hpp"
#include "webgraph/reciprocity.hpp"
#include "webgraph/zeta.hpp"

namespace webgraph {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    auto p = s.find(sep);
    parts.push_back(s.substr(0, p));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return parts;
}

double parse_double(std::string_view s, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string str(s);
    double v = std::stod(str, &used);
    if (used != str.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

// Moves a uniform random sample of k elements to the front of v.
template <class T>
void select_front(std::vector<T>& v, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k && i + 1 < v.size(); ++i) std::swap(v[i], v[i + uniform_below(rng, v.size() - i)]);
}

std::vector<NodeId> expand_stubs(const std::vector<std::uint64_t>& counts) {
  std::vector<NodeId> stubs;
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  stubs.reserve(total);
  for (NodeId i = 0; i < counts.size(); ++i) stubs.insert(stubs.end(), counts[i], i);
  return stubs;
}

// Removes `excess` stubs chosen uniformly among all stubs of `counts`.
void thin(std::vector<std::uint64_t>& counts, std::uint64_t excess, std::mt19937_64& rng) {
  if (excess == 0) return;
  auto stubs = expand_stubs(counts);
  select_front(stubs, excess, rng);
  for (std::uint64_t i = 0; i < excess; ++i) --counts[stubs[i]];
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

DegreeLaw DegreeLaw::zeta(double gamma, std::uint64_t k_min, std::optional<std::uint64_t> cutoff) {
  DegreeLaw l;
  l.kind = Kind::Zeta;
  l.gamma = gamma;
  l.k_min = k_min;
  l.cutoff = cutoff;
  ZetaDistribution check(gamma, k_min, cutoff);  // validates parameters
  return l;
}

DegreeLaw DegreeLaw::poisson(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ConfigError("poisson law needs lambda >= 0");
  DegreeLaw l;
  l.kind = Kind::Poisson;
  l.mean = lambda;
  return l;
}

DegreeLaw DegreeLaw::geometric(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw ConfigError("geometric law needs mean >= 0");
  DegreeLaw l;
  l.kind = Kind::Geometric;
  l.mean = mean;
  return l;
}

DegreeLaw DegreeLaw::explicit_sequence(std::vector<std::uint64_t> values) {
  DegreeLaw l;
  l.kind = Kind::Explicit;
  l.sequence = std::move(values);
  return l;
}

DegreeLaw DegreeLaw::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (name == "file") {
    std::ifstream in{std::string(rest)};
    if (!in) throw IoError("cannot open degree sequence file '" + std::string(rest) + "'");
    std::vector<std::uint64_t> values;
    std::string tok;
    while (in >> tok) values.push_back(parse_u64(tok, "sequence value"));
    return explicit_sequence(std::move(values));
  }
  const auto args = rest.empty() ? std::vector<std::string_view>{} : split(rest, ':');
  if (name == "zeta") {
    if (args.empty() || args.size() > 3) throw ConfigError("expected zeta:GAMMA[:KMIN[:CUTOFF]]");
    const double g = parse_double(args[0], "zeta exponent");
    const std::uint64_t kmin = args.size() > 1 ? parse_u64(args[1], "zeta k_min") : 1;
    std::optional<std::uint64_t> cut;
    if (args.size() > 2) cut = parse_u64(args[2], "zeta cutoff");
    return zeta(g, kmin, cut);
  }
  if (name == "poisson" && args.size() == 1) return poisson(parse_double(args[0], "poisson mean"));
  if (name == "geometric" && args.size() == 1) return geometric(parse_double(args[0], "geometric mean"));
  throw ConfigError("unknown degree law '" + std::string(text) +
                    "' (expected zeta:G[:KMIN[:CUTOFF]], poisson:L, geometric:M or file:PATH)");
}

std::string DegreeLaw::describe() const {
  std::ostringstream os;
  os.precision(15);
  switch (kind) {
    case Kind::Zeta:
      os << "zeta:" << gamma << ':' << k_min;
      if (cutoff) os << ':' << *cutoff;
      break;
    case Kind::Poisson: os << "poisson:" << mean; break;
    case Kind::Geometric: os << "geometric:" << mean; break;
    case Kind::Explicit: os << "explicit[" << sequence.size() << "]"; break;
  }
  return os.str();
}

std::vector<std::uint64_t> DegreeLaw::draw(NodeId n, std::mt19937_64& rng) const {
  std::vector<std::uint64_t> v(n);
  switch (kind) {
    case Kind::Zeta: {
      const ZetaDistribution dist(gamma, k_min, cutoff);
      for (auto& x : v) x = dist(rng);
      break;
    }
    case Kind::Poisson: {
      if (mean == 0.0) break;
      std::poisson_distribution<std::uint64_t> dist(mean);
      for (auto& x : v) x = dist(rng);
      break;
    }
    case Kind::Geometric: {
      if (mean == 0.0) break;
      std::geometric_distribution<std::uint64_t> dist(1.0 / (1.0 + mean));
      for (auto& x : v) x = dist(rng);
      break;
    }
    case Kind::Explicit:
      if (sequence.size() != n)
        throw ConfigError("explicit degree sequence has " + std::to_string(sequence.size()) +
                          " entries for " + std::to_string(n) + " nodes");
      v = sequence;
      break;
  }
  return v;
}

GeneratedGraph generate(const GeneratorConfig& cfg) {
  if (!(cfg.target_reciprocity >= 0.0 && cfg.target_reciprocity <= 1.0))
    throw ConfigError("target reciprocity must lie in [0,1]");
  const NodeId n = cfg.node_count;
  std::mt19937_64 in_rng(derive_seed(cfg.rng_seed, 1));
  std::mt19937_64 out_rng(derive_seed(cfg.rng_seed, 2));
  std::mt19937_64 recip_rng(derive_seed(cfg.rng_seed, 3));
  std::mt19937_64 wire_rng(derive_seed(cfg.rng_seed, 4));

  auto in = cfg.in_law.draw(n, in_rng);
  auto out = cfg.out_law.draw(n, out_rng);
  std::vector<std::uint64_t> recip;
  if (cfg.reciprocal_law) recip = cfg.reciprocal_law->draw(n, recip_rng);

  GenerationReport rep;
  for (auto x : in) rep.in_stubs += x;
  for (auto x : out) rep.out_stubs += x;
  if ((rep.in_stubs == 0) != (rep.out_stubs == 0))
    throw ConfigError("unbalanceable degree sequences: one direction has no stubs (in=" +
                      std::to_string(rep.in_stubs) + ", out=" + std::to_string(rep.out_stubs) + ")");
  if (rep.in_stubs > rep.out_stubs) thin(in, rep.in_stubs - rep.out_stubs, wire_rng);
  else thin(out, rep.out_stubs - rep.in_stubs, wire_rng);
  rep.stubs_thinned = rep.in_stubs > rep.out_stubs ? rep.in_stubs - rep.out_stubs : rep.out_stubs - rep.in_stubs;
  const std::uint64_t matched = std::min(rep.in_stubs, rep.out_stubs);

  std::vector<Edge> edges;
  std::vector<NodeId> pairing;
  if (cfg.reciprocal_law) {
    pairing = expand_stubs(recip);
    shuffle(pairing, wire_rng);
    if (pairing.size() % 2) {
      pairing.pop_back();
      rep.reciprocal_stubs_dropped = 1;
    }
    const std::uint64_t total = matched + pairing.size();
    rep.max_feasible_reciprocity = total ? static_cast<double>(pairing.size()) / static_cast<double>(total) : 0.0;
  } else {
    std::vector<std::uint64_t> both(n);
    std::uint64_t available = 0;
    for (NodeId i = 0; i < n; ++i) available += both[i] = std::min(in[i], out[i]);
    const std::uint64_t feasible = available - available % 2;
    rep.max_feasible_reciprocity = matched ? static_cast<double>(feasible) / static_cast<double>(matched) : 0.0;
    const double wanted = cfg.target_reciprocity * static_cast<double>(matched);
    const auto pairs = static_cast<std::uint64_t>(std::llround(wanted / 2.0));
    if (2 * pairs > feasible)
      throw ConfigError("reciprocity target " + std::to_string(cfg.target_reciprocity) +
                        " unreachable for these degree sequences; max feasible is " +
                        std::to_string(rep.max_feasible_reciprocity));
    pairing = expand_stubs(both);
    select_front(pairing, 2 * pairs, wire_rng);
    pairing.resize(2 * pairs);
    for (NodeId v : pairing) {
      --in[v];
      --out[v];
    }
  }
  rep.mutual_pairs = pairing.size() / 2;
  edges.reserve(pairing.size() + matched);
  for (std::size_t i = 0; i + 1 < pairing.size(); i += 2) {
    edges.emplace_back(pairing[i], pairing[i + 1]);
    edges.emplace_back(pairing[i + 1], pairing[i]);
  }
  pairing.clear();
  pairing.shrink_to_fit();

  auto out_stubs = expand_stubs(out);
  auto in_stubs = expand_stubs(in);
  shuffle(in_stubs, wire_rng);
  for (std::size_t i = 0; i < out_stubs.size(); ++i) edges.emplace_back(out_stubs[i], in_stubs[i]);
  out_stubs = {};
  in_stubs = {};

  rep.directed_edges_placed = edges.size();
  CleanCounts counts;
  GeneratedGraph result{DirectedGraph::from_edges(n, std::move(edges), &counts), {}};
  rep.self_loops_discarded = counts.self_loops;
  rep.duplicates_discarded = counts.duplicates;
  rep.discard_rate = rep.directed_edges_placed
                         ? static_cast<double>(counts.self_loops + counts.duplicates) /
                               static_cast<double>(rep.directed_edges_placed)
                         : 0.0;
  rep.realized_reciprocity = reciprocity_fraction(decompose(result.graph)).value_or(0.0);
  result.report = rep;
  return result;
}

}  // namespace webgraph
