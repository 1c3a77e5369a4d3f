#include "serialize.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace webgraph::cli {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void put(Json& obj, const std::string& key, const Stat& s) {
  if (s.defined()) {
    obj[key] = number(s.value());
  } else {
    obj[key] = nullptr;
    obj[key + "_undefined"] = s.reason();
  }
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_pct(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Json to_json(const IngestReport& r) {
  return Json{{"raw_lines", r.raw_lines},
              {"skipped_lines", r.skipped_lines},
              {"node_lines", r.node_lines},
              {"self_loops_removed", r.self_loops_removed},
              {"duplicates_removed", r.duplicates_removed},
              {"nodes", r.nodes},
              {"edges", r.edges}};
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

Json to_json(const BowTiePartition& p) {
  Json j;
  j["nodes"] = p.node_count;
  for (auto c : kBowTieClasses) j[lower(token(c)) + "_pct"] = p.percentage(c);
  j["main_pct"] = p.main_pct();
  Json sizes;
  for (auto c : kBowTieClasses) sizes[lower(token(c))] = p.size(c);
  j["sizes"] = sizes;
  return j;
}

Json to_json(const DegreeSummary& s) {
  Json j{{"nodes", s.nodes}, {"mean", number(s.mean)}, {"max", s.max}, {"sigma", number(s.sigma)},
         {"second_moment", number(s.second_moment)}};
  put(j, "kappa", s.kappa);
  return j;
}

Json to_json(const PowerLawFit& f) {
  return Json{{"gamma", number(f.gamma)},
              {"stderr", number(f.stderr)},
              {"k_min", f.k_min},
              {"k_max_fit", f.k_max_fit},
              {"n_tail", f.n_tail},
              {"ks", number(f.ks)},
              {"powerlaw_plausible", f.powerlaw_plausible},
              {"truncated", f.truncated}};
}

Json to_json(const RatioEstimate& r) {
  Json j;
  put(j, "ratio", r.value);
  j["stderr"] = number(r.stderr);
  return j;
}

Json to_json(const CorrelationProfile& p) {
  Json j;
  j["conditioning"] = std::string(token(p.x_kind));
  j["quantity"] = p.quantity;
  put(j, "normalization", p.normalization);
  j["population"] = p.population();
  Json pts = Json::array();
  for (const auto& pt : p.points)
    pts.push_back(Json{{"k", pt.degree},
                       {"mean_raw", number(pt.mean_raw)},
                       {"mean_normalized", number(pt.mean_normalized)},
                       {"n_k", pt.population},
                       {"stderr", number(pt.stderr_normalized)}});
  j["points"] = pts;
  return j;
}

Json to_json(const GenerationReport& r) {
  return Json{{"in_stubs", r.in_stubs},
              {"out_stubs", r.out_stubs},
              {"stubs_thinned", r.stubs_thinned},
              {"reciprocal_stubs_dropped", r.reciprocal_stubs_dropped},
              {"mutual_pairs", r.mutual_pairs},
              {"directed_edges_placed", r.directed_edges_placed},
              {"self_loops_discarded", r.self_loops_discarded},
              {"duplicates_discarded", r.duplicates_discarded},
              {"discard_rate", number(r.discard_rate)},
              {"max_feasible_reciprocity", number(r.max_feasible_reciprocity)},
              {"realized_reciprocity", number(r.realized_reciprocity)}};
}

Json to_json(const BiasRow& r) {
  Json j;
  j["statistic"] = r.statistic;
  put(j, "true", r.truth);
  put(j, "observed", r.observed);
  put(j, "relative_deviation", r.relative_deviation);
  j["flag"] = std::string(token(r.flag));
  return j;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() || j.is_array()) {
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      const std::string key = j.is_object() ? it.key() : std::to_string(i);
      flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << ',';
  if (j.is_number_float()) {
    const double v = j.get<double>();
    out << (ends_with(prefix, "_pct") ? format_pct(v) : format_double(v));
  } else if (j.is_string()) {
    out << '"' << j.get<std::string>() << '"';
  } else {
    out << j.dump();
  }
  out << '\n';
}

}  // namespace

void write_flat_csv(const Json& doc, std::ostream& out) {
  out << "key,value\n";
  flatten(doc, "", out);
}

void write_histogram_csv(const DegreeHistogram& h, std::ostream& out) {
  const auto c = cumulative(h);
  out << "degree,count,p,pc\n";
  for (const auto& pt : c.points())
    out << pt.degree << ',' << h.count(pt.degree) << ',' << format_double(h.probability(pt.degree)) << ','
        << format_double(pt.pc) << '\n';
}

void write_log_bins_csv(const std::vector<LogBin>& bins, std::ostream& out) {
  out << "lower,upper,center,count,density\n";
  for (const auto& b : bins)
    out << format_double(b.lower) << ',' << format_double(b.upper) << ',' << format_double(b.center) << ','
        << b.count << ',' << format_double(b.density) << '\n';
}

void write_profile_csv(const std::string& name, const CorrelationProfile& p, std::ostream& out) {
  out << "# profile: " << name << '\n';
  out << "# conditioning: " << token(p.x_kind) << '\n';
  out << "# quantity: " << p.quantity << '\n';
  if (p.normalization.defined())
    out << "# normalization: " << format_double(p.normalization.value()) << '\n';
  else
    out << "# normalization: undefined (" << p.normalization.reason() << ")\n";
  out << "# stderr: standard error of mean_normalized\n";
  out << "k,mean_raw,mean_normalized,n_k,stderr\n";
  for (const auto& pt : p.points)
    out << pt.degree << ',' << format_double(pt.mean_raw) << ',' << format_double(pt.mean_normalized) << ','
        << pt.population << ',' << format_double(pt.stderr_normalized) << '\n';
}

void write_log_binned_profile_csv(const std::string& name, const std::vector<LogBinnedPoint>& pts,
                                  std::ostream& out) {
  out << "# profile: " << name << " (log-binned)\n";
  out << "lower,upper,center,mean_raw,mean_normalized,n\n";
  for (const auto& b : pts)
    out << format_double(b.lower) << ',' << format_double(b.upper) << ',' << format_double(b.center) << ','
        << format_double(b.mean_raw) << ',' << format_double(b.mean_normalized) << ',' << b.population << '\n';
}

void write_decomposition_csv(const DirectedGraph& g, const ReciprocalDecomposition& d, std::ostream& out) {
  out << "node,q_in,q_out,q_r\n";
  for (NodeId v = 0; v < d.node_count(); ++v)
    out << g.original_id(v) << ',' << d.q_in[v] << ',' << d.q_out[v] << ',' << d.q_r[v] << '\n';
}

void write_scatter_csv(const DirectedGraph& g, const std::vector<ScatterPoint>& pts, std::ostream& out) {
  out << "node,q_r,knn,clustering\n";
  for (const auto& p : pts)
    out << g.original_id(p.node) << ',' << p.q_r << ',' << format_double(p.knn) << ',' << format_double(p.clustering)
        << '\n';
}

void write_classes(const DirectedGraph& g, const BowTiePartition& p, std::ostream& out) {
  for (NodeId v = 0; v < g.node_count(); ++v) out << g.original_id(v) << ' ' << token(p.class_of[v]) << '\n';
}

void write_bias_csv(const std::vector<ReplicaResult>& replicas, std::ostream& out) {
  out << "replica,statistic,true,observed,relative_deviation,flag\n";
  for (const auto& r : replicas)
    for (const auto& row : r.bias.rows)
      out << r.index << ',' << row.statistic << ',' << format_double(row.truth.value_or(NAN)) << ','
          << format_double(row.observed.value_or(NAN)) << ',' << format_double(row.relative_deviation.value_or(NAN))
          << ',' << token(row.flag) << '\n';
}

}  // namespace webgraph::cli
