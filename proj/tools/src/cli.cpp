#include "webgraph/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "serialize.hpp"

namespace webgraph::cli {

namespace {

namespace fs = std::filesystem;

struct Common {
  std::string input;
  std::string cache;
  std::string out;
  std::string format = "json";
  unsigned workers = 1;
  std::uint64_t seed = kDefaultSeed;
};

struct DegreesOptions {
  std::string direction = "both";
  std::optional<std::uint64_t> kmin;
  unsigned log_bins = 0;
};

struct CorrOptions {
  std::string which = "all";
  unsigned log_bins = 0;
};

struct RecipOptions {
  std::optional<std::uint64_t> kmin;
  unsigned log_bins = 0;
};

struct SimulateOptions {
  NodeId n = 10000;
  std::string in_law = "zeta:2.1";
  std::string out_law = "poisson:7";
  std::optional<double> gamma_in;
  double reciprocity = 0.0;
  std::string reciprocal_law;
  std::string strategy = "bfs";
  std::string budget = "unlimited";
  std::string frontier_mode = "fetched";
  std::string seed_policy = "scc";
  std::size_t seed_count = 1;
  std::size_t replicas = 1;
  bool export_observed = false;
};

class Output {
 public:
  Output(const Common& c, std::ostream& out) : common_(c), out_(out) {}

  bool has_dir() const { return !common_.out.empty(); }

  template <class F>
  void file(const std::string& name, F&& write) {
    if (!has_dir()) return;
    std::error_code ec;
    fs::create_directories(common_.out, ec);
    const auto path = fs::path(common_.out) / name;
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path.string());
    write(f);
    f.close();
    if (!f) throw IoError("write failed for " + path.string());
  }

  void emit(const std::string& command, const Json& doc) {
    if (common_.format == "csv") write_flat_csv(doc, out_);
    else out_ << doc.dump(2) << '\n';
    file(command + ".json", [&](std::ostream& f) { f << doc.dump(2) << '\n'; });
  }

 private:
  const Common& common_;
  std::ostream& out_;
};

DirectedGraph load_input(const Common& c) {
  if (!c.input.empty()) return load_graph(c.input);
  if (!c.cache.empty()) return load_cache(c.cache);
  throw ConfigError("no graph given: pass --input (edge list or cache) or --cache");
}

void cmd_ingest(const Common& c, Output& o) {
  if (c.input.empty()) throw ConfigError("ingest needs --input");
  auto [g, rep] = read_edge_list(c.input);
  Json doc = to_json(rep);
  if (!c.cache.empty()) {
    save_cache(g, c.cache);
    doc["cache"] = c.cache;
  }
  o.emit("ingest", doc);
}

void cmd_bowtie(const Common& c, Output& o) {
  const auto g = load_input(c);
  const auto p = bowtie_decompose(g);
  o.emit("bowtie", to_json(p));
  o.file("classes.txt", [&](std::ostream& f) { write_classes(g, p, f); });
}

std::vector<DegreeKind> kinds_for(const std::string& direction) {
  if (direction == "in") return {DegreeKind::In};
  if (direction == "out") return {DegreeKind::Out};
  if (direction == "both") return {DegreeKind::In, DegreeKind::Out};
  if (direction == "reciprocal") return {DegreeKind::Reciprocal};
  if (direction == "undirected") return {DegreeKind::Undirected};
  return {DegreeKind::In, DegreeKind::Out, DegreeKind::Reciprocal, DegreeKind::Undirected};
}

Json fit_entry(const DegreeHistogram& h, std::optional<std::uint64_t> kmin, Json entry) {
  if (kmin) {
    entry["fit"] = to_json(mle_powerlaw(h, *kmin));
    return entry;
  }
  try {
    entry["fit"] = to_json(fit_powerlaw(h));
  } catch (const FitError& e) {
    entry["fit"] = nullptr;
    entry["fit_error"] = e.what();
  }
  return entry;
}

void cmd_degrees(const Common& c, const DegreesOptions& opt, Output& o) {
  const auto g = load_input(c);
  Json doc;
  doc["nodes"] = g.node_count();
  doc["edges"] = g.edge_count();
  put(doc, "kappa_in_out", crossed_heterogeneity(g));
  Json dirs;
  for (auto kind : kinds_for(opt.direction)) {
    const auto h = degree_histogram(g, kind, c.workers);
    const std::string name(token(kind));
    dirs[name] = fit_entry(h, opt.kmin, to_json(summarize(h)));
    o.file("degree_" + name + ".csv", [&](std::ostream& f) { write_histogram_csv(h, f); });
    if (opt.log_bins > 0)
      o.file("degree_" + name + "_logbinned.csv", [&](std::ostream& f) { write_log_bins_csv(log_binned(h, opt.log_bins), f); });
  }
  doc["directions"] = dirs;
  o.emit("degrees", doc);
}

void add_profile(Json& profiles, Output& o, unsigned log_bins, const std::string& prefix, const std::string& name,
                 const CorrelationProfile& p) {
  profiles[name] = to_json(p);
  o.file(prefix + name + ".csv", [&](std::ostream& f) { write_profile_csv(name, p, f); });
  if (log_bins > 0)
    o.file(prefix + name + "_logbinned.csv",
           [&](std::ostream& f) { write_log_binned_profile_csv(name, log_binned(p, log_bins), f); });
}

void cmd_corr(const Common& c, const CorrOptions& opt, Output& o) {
  const auto g = load_input(c);
  const bool all = opt.which == "all";
  Json doc;
  const auto k = directed_kappas(g);
  put(doc, "kappa_in", k.in);
  put(doc, "kappa_out", k.out);
  put(doc, "kappa_in_out", k.in_out);
  Json profiles = Json::object();
  if (all || opt.which == "one-point") {
    doc["one_point"] = to_json(crossed_one_point(g));
    add_profile(profiles, o, opt.log_bins, "corr_", "out_given_in", avg_out_given_in(g, c.workers));
  }
  if (all || opt.which == "directed-knn")
    for (auto v : kDirectedKnnVariants)
      add_profile(profiles, o, opt.log_bins, "corr_", "knn_" + std::string(token(v)), directed_knn(g, v, c.workers));
  if (all || opt.which == "undirected")
    add_profile(profiles, o, opt.log_bins, "corr_", "knn_undirected", knn_undirected(undirected_view(g), c.workers));
  doc["profiles"] = profiles;
  o.emit("corr", doc);
}

void cmd_recip(const Common& c, const RecipOptions& opt, Output& o) {
  const auto g = load_input(c);
  const auto d = decompose(g, c.workers);
  const auto sub = reciprocal_subgraph(d);
  Json doc;
  put(doc, "reciprocity", reciprocity_fraction(d));
  doc["reciprocal_pairs"] = d.reciprocal_pairs.size();
  doc["nonreciprocal_edges"] = d.nonreciprocal_edges.size();

  const auto rs = r_degree_stats(d, opt.kmin);
  if (opt.kmin && !rs.fit) throw FitError(rs.fit_error);
  Json r = to_json(rs.summary);
  r["fit"] = rs.fit ? to_json(*rs.fit) : Json(nullptr);
  if (!rs.fit) r["fit_error"] = rs.fit_error;
  doc["r_degree"] = r;
  doc["q_in"] = to_json(summarize(DegreeHistogram::from_values(DegreeKind::In, d.q_in)));
  doc["q_out"] = to_json(summarize(DegreeHistogram::from_values(DegreeKind::Out, d.q_out)));

  const auto x = crossed_one_point_nr(d);
  doc["crossed"] = Json{{"in_out", to_json(x.in_out)}, {"in_r", to_json(x.in_r)}, {"out_r", to_json(x.out_r)}};
  const auto kr = reciprocal_kappas(d);
  put(doc, "kappa_r_in", kr.r_in);
  put(doc, "kappa_r_out", kr.r_out);
  doc["subgraph"] = Json{{"members", sub.member_count}, {"edges", sub.graph.edge_count()}};

  Json profiles = Json::object();
  const auto means = conditional_means_nr(d);
  add_profile(profiles, o, opt.log_bins, "recip_", "qout_given_qin", means.out_given_in);
  add_profile(profiles, o, opt.log_bins, "recip_", "qr_given_qin", means.r_given_in);
  add_profile(profiles, o, opt.log_bins, "recip_", "qr_given_qout", means.r_given_out);
  for (auto v : kReciprocalKnnVariants)
    add_profile(profiles, o, opt.log_bins, "recip_", std::string(token(v)), reciprocal_knn(d, sub, v, c.workers));
  add_profile(profiles, o, opt.log_bins, "recip_", "qr_nn_of_qr", reciprocal_subgraph_knn(sub, c.workers));
  add_profile(profiles, o, opt.log_bins, "recip_", "clustering_by_qr", avg_clustering_by_degree(sub, c.workers));
  doc["profiles"] = profiles;
  o.emit("recip", doc);

  o.file("decomposition.csv", [&](std::ostream& f) { write_decomposition_csv(g, d, f); });
  o.file("r_degree.csv", [&](std::ostream& f) { write_histogram_csv(rs.histogram, f); });
  o.file("scatter.csv", [&](std::ostream& f) { write_scatter_csv(g, reciprocal_scatter(sub, c.workers), f); });
  o.file("reciprocal_subgraph.txt", [&](std::ostream& f) {
    for (auto [u, v] : d.reciprocal_pairs) f << g.original_id(u) << ' ' << g.original_id(v) << '\n';
  });
}

void parse_budget(const std::string& text, EnsembleConfig& e) {
  if (text.empty() || text == "unlimited") return;
  try {
    std::size_t used = 0;
    if (text.back() == '%') {
      const double pct = std::stod(text.substr(0, text.size() - 1), &used);
      if (used + 1 != text.size()) throw std::invalid_argument("trailing");
      e.budget_fraction = pct / 100.0;
    } else {
      const auto n = std::stoull(text, &used);
      if (used != text.size() || text.front() == '-') throw std::invalid_argument("trailing");
      e.crawl.budget = n;
    }
  } catch (const std::logic_error&) {
    throw ConfigError("invalid budget '" + text + "' (expected a page count, a percentage like 50%, or unlimited)");
  }
}

void cmd_simulate(const Common& c, const SimulateOptions& opt, Output& o) {
  EnsembleConfig e;
  e.generator.node_count = opt.n;
  e.generator.in_law = opt.gamma_in ? DegreeLaw::zeta(*opt.gamma_in) : DegreeLaw::parse(opt.in_law);
  e.generator.out_law = DegreeLaw::parse(opt.out_law);
  e.generator.target_reciprocity = opt.reciprocity;
  if (!opt.reciprocal_law.empty()) e.generator.reciprocal_law = DegreeLaw::parse(opt.reciprocal_law);
  e.crawl.strategy = parse_strategy(opt.strategy);
  e.crawl.frontier_mode = parse_frontier_mode(opt.frontier_mode);
  parse_budget(opt.budget, e);
  if (opt.seed_policy == "scc") e.seed_policy = SeedPolicy::RandomScc;
  else if (opt.seed_policy == "any") e.seed_policy = SeedPolicy::RandomAny;
  else throw ConfigError("unknown seed policy '" + opt.seed_policy + "' (expected scc or any)");
  e.seed_count = opt.seed_count;
  e.replicas = opt.replicas;
  e.master_seed = c.seed;
  e.workers = c.workers;
  e.keep_graphs = opt.export_observed;

  const auto results = run_ensemble(e);

  Json doc;
  doc["config"] = Json{{"n", opt.n},
                       {"in_law", e.generator.in_law.describe()},
                       {"out_law", e.generator.out_law.describe()},
                       {"reciprocity", opt.reciprocity},
                       {"reciprocal_law", e.generator.reciprocal_law ? e.generator.reciprocal_law->describe() : ""},
                       {"strategy", std::string(token(e.crawl.strategy))},
                       {"budget", opt.budget},
                       {"frontier_mode", std::string(token(e.crawl.frontier_mode))},
                       {"seed_policy", opt.seed_policy},
                       {"seed_count", opt.seed_count},
                       {"replicas", opt.replicas},
                       {"seed", c.seed}};
  Json reps = Json::array();
  for (const auto& r : results) {
    Json j;
    j["index"] = r.index;
    j["graph_seed"] = r.graph_seed;
    j["crawl_seed"] = r.crawl_seed;
    j["seeds"] = r.seeds;
    j["fetched"] = r.fetched;
    j["true_nodes"] = r.truth.nodes;
    j["true_edges"] = r.truth.edges;
    j["observed_nodes"] = r.observed.nodes;
    j["observed_edges"] = r.observed.edges;
    j["generation"] = to_json(r.generation);
    Json rows = Json::array();
    for (const auto& row : r.bias.rows) rows.push_back(to_json(row));
    j["bias"] = rows;
    reps.push_back(j);
  }
  doc["replicas"] = reps;
  o.emit("simulate", doc);
  o.file("bias.csv", [&](std::ostream& f) { write_bias_csv(results, f); });
  if (opt.export_observed)
    for (const auto& r : results) {
      o.file("observed_" + std::to_string(r.index) + ".txt", [&](std::ostream& f) { write_edge_list(r.outcome->observed, f); });
      o.file("truth_" + std::to_string(r.index) + ".txt", [&](std::ostream& f) { write_edge_list(*r.truth_graph, f); });
    }
}

void cmd_report(const Common& c, Output& o) {
  if (c.input.empty()) throw ConfigError("report needs --input pointing at a directory of prior outputs");
  std::error_code ec;
  if (!fs::is_directory(c.input, ec)) throw IoError("not a directory: " + c.input);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(c.input))
    if (entry.is_regular_file() && entry.path().extension() == ".json" && entry.path().stem() != "report")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  Json doc = Json::object();
  for (const auto& p : files) {
    std::ifstream f(p);
    if (!f) throw IoError("cannot open " + p.string());
    try {
      doc[p.stem().string()] = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(p.string() + ": " + e.what());
    }
  }
  o.emit("report", doc);
}

std::string env_name(const std::string& flag) {
  std::string s = "WEBGRAPH_";
  for (char ch : flag) s += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

// Keys written without a section belong to the subcommand named on the command line.
class SubcommandConfig : public CLI::ConfigINI {
 public:
  explicit SubcommandConfig(std::string command) : command_(std::move(command)) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    if (command_.empty()) return items;
    for (auto& item : items)
      if (item.parents.empty() && item.name != "++" && item.name != "--") item.parents = {command_};
    return items;
  }

 private:
  std::string command_;
};

template <class T>
CLI::Option* flag(CLI::App* app, const std::string& name, T& target, const std::string& help) {
  return app->add_option("--" + name, target, help)->envname(env_name(name));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural statistics and crawl-bias simulation for directed graphs", "webgraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "webgraph 0.1.0");
  app.fallthrough();
  app.set_config("--config", "", "Read flags from a key=value file (plain keys apply to the chosen subcommand)")
      ->envname("WEBGRAPH_CONFIG");

  Common common;
  DegreesOptions deg;
  CorrOptions corr;
  RecipOptions recip;
  SimulateOptions sim;

  auto add_common = [&](CLI::App* sub) {
    flag(sub, "input", common.input, "Edge list (plain or gzip) or .wgl cache");
    flag(sub, "cache", common.cache, "Binary cache file");
    flag(sub, "out", common.out, "Directory for JSON and CSV outputs");
    flag(sub, "format", common.format, "Format of the stdout document")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    flag(sub, "workers", common.workers, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    flag(sub, "seed", common.seed, "Master random seed")->capture_default_str();
  };

  auto* ingest = app.add_subcommand("ingest", "Clean an edge list and optionally write a binary cache");
  add_common(ingest);
  auto* bowtie = app.add_subcommand("bowtie", "Bow-tie decomposition percentages");
  add_common(bowtie);
  auto* degrees_cmd = app.add_subcommand("degrees", "Degree distributions, moments and power-law fits");
  add_common(degrees_cmd);
  flag(degrees_cmd, "direction", deg.direction, "in, out, both, reciprocal, undirected or all")
      ->check(CLI::IsMember({"in", "out", "both", "reciprocal", "undirected", "all"}))
      ->capture_default_str();
  flag(degrees_cmd, "kmin", deg.kmin, "Fixed lower bound for the fits (default: KS-selected)");
  flag(degrees_cmd, "log-bins", deg.log_bins, "Also write log-binned histograms with this many bins per decade");
  auto* corr_cmd = app.add_subcommand("corr", "One-point and directed degree-degree correlations");
  add_common(corr_cmd);
  flag(corr_cmd, "which", corr.which, "one-point, directed-knn, undirected or all")
      ->check(CLI::IsMember({"one-point", "directed-knn", "undirected", "all"}))
      ->capture_default_str();
  flag(corr_cmd, "log-bins", corr.log_bins, "Also write log-binned profiles with this many bins per decade");
  auto* recip_cmd = app.add_subcommand("recip", "Reciprocal/non-reciprocal decomposition and statistics");
  add_common(recip_cmd);
  flag(recip_cmd, "kmin", recip.kmin, "Fixed lower bound for the r-degree fit");
  flag(recip_cmd, "log-bins", recip.log_bins, "Also write log-binned profiles with this many bins per decade");
  auto* simulate = app.add_subcommand("simulate", "Generate graphs, crawl them and report the bias");
  add_common(simulate);
  flag(simulate, "n", sim.n, "Nodes per generated graph")->capture_default_str();
  flag(simulate, "in-law", sim.in_law, "In-degree law: zeta:G[:KMIN[:CUTOFF]], poisson:L, geometric:M, file:PATH")
      ->capture_default_str();
  flag(simulate, "out-law", sim.out_law, "Out-degree law")->capture_default_str();
  flag(simulate, "gamma-in", sim.gamma_in, "Shorthand for --in-law zeta:G");
  flag(simulate, "reciprocity", sim.reciprocity, "Target fraction of reciprocal edges")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  flag(simulate, "reciprocal-law", sim.reciprocal_law,
       "Draw reciprocal degrees from this law; in/out laws then give non-reciprocal degrees");
  flag(simulate, "strategy", sim.strategy, "bfs, dfs or random")->capture_default_str();
  flag(simulate, "budget", sim.budget, "Pages to fetch: a count, a percentage like 50%, or unlimited")
      ->capture_default_str();
  flag(simulate, "frontier-mode", sim.frontier_mode, "fetched or frontier")->capture_default_str();
  flag(simulate, "seed-policy", sim.seed_policy, "Where crawl seeds are drawn: scc or any")->capture_default_str();
  flag(simulate, "seed-count", sim.seed_count, "Crawl seeds per replica")->capture_default_str();
  flag(simulate, "replicas", sim.replicas, "Independent replicas")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_flag("--export-observed", sim.export_observed, "Write observed and true edge lists to --out")
      ->envname(env_name("export-observed"));
  auto* report = app.add_subcommand("report", "Merge the JSON outputs found in --input into one document");
  add_common(report);

  std::string chosen;
  for (int i = 1; i < argc && chosen.empty(); ++i)
    for (const auto* sub : app.get_subcommands({}))
      if (sub->get_name() == argv[i]) chosen = argv[i];
  app.config_formatter(std::make_shared<SubcommandConfig>(chosen));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output output(common, out);
  try {
    if (*ingest) cmd_ingest(common, output);
    else if (*bowtie) cmd_bowtie(common, output);
    else if (*degrees_cmd) cmd_degrees(common, deg, output);
    else if (*corr_cmd) cmd_corr(common, corr, output);
    else if (*recip_cmd) cmd_recip(common, recip, output);
    else if (*simulate) cmd_simulate(common, sim, output);
    else if (*report) cmd_report(common, output);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "webgraph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FitError& e) {
    err << "webgraph: fit failed: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NumericError& e) {
    err << "webgraph: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "webgraph: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "webgraph: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace webgraph::cli
