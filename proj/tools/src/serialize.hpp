#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "webgraph/components.hpp"
#include "webgraph/correlations.hpp"
#include "webgraph/crawl_sim.hpp"
#include "webgraph/degree_stats.hpp"
#include "webgraph/generator.hpp"
#include "webgraph/graph_io.hpp"
#include "webgraph/reciprocity.hpp"

namespace webgraph::cli {

using Json = nlohmann::ordered_json;

/// Finite doubles as numbers, NaN and infinities as null.
Json number(double v);
/// Sets obj[key] to the value, or to null plus obj[key + "_undefined"] = reason.
void put(Json& obj, const std::string& key, const Stat& s);

std::string format_double(double v);
std::string format_pct(double v);

Json to_json(const IngestReport& r);
Json to_json(const BowTiePartition& p);
Json to_json(const DegreeSummary& s);
Json to_json(const PowerLawFit& f);
Json to_json(const RatioEstimate& r);
Json to_json(const CorrelationProfile& p);
Json to_json(const GenerationReport& r);
Json to_json(const BiasRow& r);

/// Flattens nested objects to `key,value` rows with dotted keys. Keys ending
/// in `_pct` print with two decimals.
void write_flat_csv(const Json& doc, std::ostream& out);

void write_histogram_csv(const DegreeHistogram& h, std::ostream& out);
void write_log_bins_csv(const std::vector<LogBin>& bins, std::ostream& out);
void write_profile_csv(const std::string& name, const CorrelationProfile& p, std::ostream& out);
void write_log_binned_profile_csv(const std::string& name, const std::vector<LogBinnedPoint>& pts, std::ostream& out);
void write_decomposition_csv(const DirectedGraph& g, const ReciprocalDecomposition& d, std::ostream& out);
void write_scatter_csv(const DirectedGraph& g, const std::vector<ScatterPoint>& pts, std::ostream& out);
void write_classes(const DirectedGraph& g, const BowTiePartition& p, std::ostream& out);
void write_bias_csv(const std::vector<ReplicaResult>& replicas, std::ostream& out);

}  // namespace webgraph::cli
