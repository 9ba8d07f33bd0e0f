// Command-line front end: ingestion, metrics, boundary search and the
// temporal analyses, with machine-readable CSV/JSON outputs.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric degeneracy.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stratnet/analysis.hpp"
#include "stratnet/io.hpp"
#include "stratnet/maxstrat.hpp"
#include "stratnet/metrics.hpp"
#include "stratnet/synthetic.hpp"

namespace {

using namespace stratnet;

struct RunConfig {
    std::string command;
    std::string graph_path, scores_path;
    std::string papers_path, citations_path;
    std::string metric = "sta";
    std::string tiers;
    std::string out_path, out_prefix;
    std::string format = "json";
    int window = 5;
    int stride = 1;
    int k = 4;
    int horizon = 10;
    int from_year = 0, to_year = 0;
    bool use_maxstrat = false;
    long entry_from = 0, entry_to = -1;
    SynthParams synth;
};

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit(const RunConfig& cfg, const nlohmann::json& j, const std::string& csv) {
    if (cfg.out_path.empty()) return;
    if (cfg.format == "csv")
        write_text_file(cfg.out_path, csv);
    else
        write_json_file(cfg.out_path, j);
}

Corpus load_corpus(const RunConfig& cfg) {
    return Corpus::build(load_papers_jsonl(cfg.papers_path),
                         load_citations_csv(cfg.citations_path));
}

SnapshotSeries load_series(const RunConfig& cfg, const Corpus& corpus) {
    SnapshotSpec spec;
    spec.window_years = cfg.window;
    spec.stride = cfg.stride;
    spec.start_year = cfg.from_year != 0 ? cfg.from_year : corpus.min_year();
    spec.end_year = cfg.to_year != 0 ? cfg.to_year : corpus.max_year();
    return rolling_snapshots(corpus, spec);
}

int run_metric(const RunConfig& cfg) {
    ScoredGraph g = load_graph(cfg.graph_path, cfg.scores_path);
    if (cfg.metric == "sac") {
        ComparisonReport r = sac(g);
        std::cout << "sac=" << fmt6(r.value) << "\n";
        emit(cfg, to_json(r), "metric,value\nsac," + fmt6(r.value) + "\n");
        return 0;
    }
    if (cfg.tiers.empty()) throw DataError("--tiers is required for " + cfg.metric);
    ClassPartition p = ClassPartition::parse(cfg.tiers);
    if (cfg.metric == "sta") {
        StratificationReport r = sta(g, p);
        std::cout << "sta=" << fmt6(r.sta) << "\n";
        emit(cfg, to_json(r), csv_per_class(r));
        return 0;
    }
    ComparisonReport r = cfg.metric == "dac" ? dac(g, p) : modularity(g, p);
    std::cout << r.metric << "=" << fmt6(r.value) << "\n";
    emit(cfg, to_json(r), "metric,value\n" + r.metric + "," + fmt6(r.value) + "\n");
    return 0;
}

int run_boundaries(const RunConfig& cfg) {
    ScoredGraph g = load_graph(cfg.graph_path, cfg.scores_path);
    BoundarySet b = maxstrat(g, cfg.k);
    std::cout << "boundaries=" << b.partition.boundary_string() << " sta=" << fmt6(b.sta_value)
              << " sta_prime=" << fmt6(b.sta_prime) << "\n";
    if (!cfg.out_path.empty()) write_json_file(cfg.out_path, to_json(b));
    return 0;
}

int run_ingest(const RunConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    SnapshotSeries series = load_series(cfg, corpus);
    std::cout << "papers=" << corpus.papers().size() << " windows=" << series.snapshots.size()
              << "\n";
    if (!cfg.out_path.empty()) write_json_file(cfg.out_path, series_manifest(series));
    return 0;
}

int run_snapshot(const RunConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    if (cfg.from_year == 0 || cfg.to_year == 0)
        throw DataError("--from and --to are required for snapshot");
    Snapshot snap = build_snapshot(corpus, cfg.from_year, cfg.to_year);
    std::cout << "nodes=" << snap.graph.node_count() << " edges=" << snap.graph.edge_count()
              << (snap.empty ? " (empty window)" : "") << "\n";
    save_graph(snap.graph, cfg.out_prefix);
    return 0;
}

int run_heatmap(const RunConfig& cfg) {
    ScoredGraph g = load_graph(cfg.graph_path, cfg.scores_path);
    ClassPairMatrix m = collaboration_heatmap(g, ClassPartition::parse(cfg.tiers));
    std::cout << "k=" << m.k << "\n";
    emit(cfg, to_json(m), csv_matrix(m));
    return 0;
}

int run_components(const RunConfig& cfg) {
    ScoredGraph g = load_graph(cfg.graph_path, cfg.scores_path);
    ComponentReport r = component_dispersion(g);
    std::cout << "components=" << r.component_count << " stddev=" << fmt6(r.score_stddev) << "\n";
    if (!cfg.out_path.empty()) write_json_file(cfg.out_path, to_json(r));
    return 0;
}

int run_mobility(const RunConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    SnapshotSeries series = load_series(cfg, corpus);
    ClassPartition tiers = ClassPartition::parse(cfg.tiers);
    std::size_t entry_last = cfg.entry_to < 0 ? static_cast<std::size_t>(-1)
                                              : static_cast<std::size_t>(cfg.entry_to);
    ClassPairMatrix m = entrance_mobility(series, cfg.horizon, tiers, tiers,
                                          static_cast<std::size_t>(cfg.entry_from), entry_last);
    std::cout << "k=" << m.k << "\n";
    emit(cfg, to_json(m), csv_matrix(m));
    return 0;
}

int run_timeseries(const RunConfig& cfg) {
    Corpus corpus = load_corpus(cfg);
    SnapshotSeries series = load_series(cfg, corpus);
    std::vector<TimeseriesEntry> ts;
    if (cfg.use_maxstrat)
        ts = sta_timeseries(series, cfg.k);
    else if (!cfg.tiers.empty())
        ts = sta_timeseries(series, ClassPartition::parse(cfg.tiers));
    else
        throw DataError("timeseries needs --tiers or --maxstrat");
    std::size_t computed = 0;
    for (const auto& e : ts)
        if (!e.skipped) ++computed;
    std::cout << "windows=" << ts.size() << " computed=" << computed << "\n";
    emit(cfg, to_json(ts), csv_timeseries(ts));
    return 0;
}

int run_synth(const RunConfig& cfg) {
    SynthCorpus corpus = generate_synthetic(cfg.synth);
    std::cout << "papers=" << corpus.papers.size() << " citations=" << corpus.citations.size()
              << "\n";
    save_papers_jsonl(corpus.papers, cfg.out_prefix + ".papers.jsonl");
    save_citations_csv(corpus.citations, cfg.out_prefix + ".citations.csv");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Network stratification toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.failure_message(CLI::FailureMessage::simple);

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", cfg.graph_path, "edge-list file")->required();
        cmd->add_option("--scores", cfg.scores_path, "node-score file")->required();
    };
    auto add_corpus_opts = [&](CLI::App* cmd) {
        cmd->add_option("--papers", cfg.papers_path, "papers JSONL file")->required();
        cmd->add_option("--citations", cfg.citations_path, "citations CSV file")->required();
        cmd->add_option("--window", cfg.window, "window length in years");
        cmd->add_option("--stride", cfg.stride, "years between window starts");
        cmd->add_option("--start", cfg.from_year, "first corpus year (default: observed)");
        cmd->add_option("--end", cfg.to_year, "last corpus year (default: observed)");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", cfg.out_path, "output file");
        cmd->add_option("--format", cfg.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* metric = app.add_subcommand("metric", "compute one metric of a scored graph");
    add_graph_opts(metric);
    metric->add_option("--metric", cfg.metric, "sta, dac, sac or modularity")
        ->check(CLI::IsMember({"sta", "dac", "sac", "modularity"}));
    metric->add_option("--tiers", cfg.tiers, "comma-separated tier lower bounds, e.g. 0,1,3,7");
    add_output(metric);

    auto* boundaries = app.add_subcommand("boundaries", "search stratification-maximal tiers");
    add_graph_opts(boundaries);
    boundaries->add_option("--k", cfg.k, "number of classes")->required();
    boundaries->add_option("--out", cfg.out_path, "output JSON file");

    auto* ingest = app.add_subcommand("ingest", "validate a corpus and emit a window manifest");
    add_corpus_opts(ingest);
    ingest->add_option("--out", cfg.out_path, "manifest JSON file");

    auto* snapshot = app.add_subcommand("snapshot", "export one window as a scored graph");
    snapshot->add_option("--papers", cfg.papers_path)->required();
    snapshot->add_option("--citations", cfg.citations_path)->required();
    snapshot->add_option("--from", cfg.from_year, "window start year")->required();
    snapshot->add_option("--to", cfg.to_year, "window end year")->required();
    snapshot->add_option("--out-prefix", cfg.out_prefix, "writes <prefix>.edges and <prefix>.scores")
        ->required();

    auto* heatmap = app.add_subcommand("heatmap", "class-pair collaboration matrix");
    add_graph_opts(heatmap);
    heatmap->add_option("--tiers", cfg.tiers)->required();
    add_output(heatmap);

    auto* components = app.add_subcommand("components", "component collaboration dispersion");
    add_graph_opts(components);
    components->add_option("--out", cfg.out_path, "output JSON file");

    auto* mobility = app.add_subcommand("mobility", "entrance-score mobility matrix");
    add_corpus_opts(mobility);
    mobility->add_option("--horizon", cfg.horizon, "years between entry and outcome");
    mobility->add_option("--tiers", cfg.tiers)->required();
    mobility->add_option("--entry-from", cfg.entry_from, "first eligible entry snapshot index");
    mobility->add_option("--entry-to", cfg.entry_to, "last eligible entry snapshot index");
    add_output(mobility);

    auto* timeseries = app.add_subcommand("timeseries", "per-window stratification assortativity");
    add_corpus_opts(timeseries);
    timeseries->add_option("--tiers", cfg.tiers, "fixed tiers");
    timeseries->add_flag("--maxstrat", cfg.use_maxstrat, "search tiers per window");
    timeseries->add_option("--k", cfg.k, "classes for --maxstrat");
    add_output(timeseries);

    auto* synth = app.add_subcommand("synth", "generate a synthetic co-authorship corpus");
    synth->add_option("--eras", cfg.synth.eras, "number of publication years");
    synth->add_option("--entrants", cfg.synth.entrants_per_era, "new authors per year");
    synth->add_option("--beta", cfg.synth.beta, "same-tier attachment bias (0 = class-blind)");
    synth->add_option("--closure", cfg.synth.closure, "triadic closure rate in [0,1]");
    synth->add_option("--seed", cfg.synth.seed, "RNG seed");
    synth->add_option("--start-year", cfg.synth.start_year, "first publication year");
    synth->add_option("--out-prefix", cfg.out_prefix,
                      "writes <prefix>.papers.jsonl and <prefix>.citations.csv")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (metric->parsed()) return run_metric(cfg);
        if (boundaries->parsed()) return run_boundaries(cfg);
        if (ingest->parsed()) return run_ingest(cfg);
        if (snapshot->parsed()) return run_snapshot(cfg);
        if (heatmap->parsed()) return run_heatmap(cfg);
        if (components->parsed()) return run_components(cfg);
        if (mobility->parsed()) return run_mobility(cfg);
        if (timeseries->parsed()) return run_timeseries(cfg);
        if (synth->parsed()) return run_synth(cfg);
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
