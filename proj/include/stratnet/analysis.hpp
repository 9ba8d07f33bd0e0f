#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stratnet/graph.hpp"
#include "stratnet/maxstrat.hpp"
#include "stratnet/metrics.hpp"
#include "stratnet/scholarly.hpp"

namespace stratnet {

/// k x k normalized interaction or mobility matrix (heatmap payload).
struct ClassPairMatrix {
    std::size_t k = 0;
    std::vector<double> cells;  // row-major
    std::string row_basis;
    std::string col_basis;
    std::string normalization;
    std::vector<double> row_weight;  // the |c_i| normalizers per row basis class
    std::vector<double> col_weight;
    std::vector<bool> row_empty;  // basis class had zero population/connections
    std::vector<bool> col_empty;

    double cell(std::size_t i, std::size_t j) const { return cells[i * k + j]; }
};

/// Connected-component collaboration statistics.
struct ComponentReport {
    std::size_t component_count = 0;
    std::vector<double> component_scores;
    double score_stddev = 0.0;  // population standard deviation
};

/// cell(i, j) = edges between class i and class j, divided by |c_i| * |c_j|
/// where |c_i| counts edges with at least one endpoint in class i.
/// Intra-class edges count once. Classes with no incident edges get zero
/// rows/columns and a flag.
ClassPairMatrix collaboration_heatmap(const ScoredGraph& g, const ClassPartition& p);

/// Mean score of the up-to-four highest-scoring neighbors; 0 for isolated
/// nodes.
double collaboration_score(const ScoredGraph& g, NodeId u);

/// Per-component mean collaboration score and the population standard
/// deviation across components. Isolated nodes are singleton components.
ComponentReport component_dispersion(const ScoredGraph& g);

/// Cross-tabulates entrance collaboration scores against h-indices a fixed
/// horizon later. For each author, the entry snapshot is the first one
/// containing them; the outcome is their score in the snapshot whose window
/// starts horizon_years later. Authors without that horizon snapshot (series
/// too short, or absent from it) are skipped. cell(i, j) = authors with
/// entrance tier i and outcome tier j, divided by the two tier populations.
/// `entry_first`/`entry_last` restrict to authors entering in a snapshot
/// index range (for era-resolved matrices).
ClassPairMatrix entrance_mobility(const SnapshotSeries& series, int horizon_years,
                                  const ClassPartition& score_tiers,
                                  const ClassPartition& collab_tiers,
                                  std::size_t entry_first = 0,
                                  std::size_t entry_last = static_cast<std::size_t>(-1));

struct TimeseriesEntry {
    int window_start = 0;
    int window_end = 0;
    bool skipped = false;  // snapshot had no edges
    StratificationReport report;
    std::optional<BoundarySet> boundaries;  // present in boundary-search mode
};

/// Per-snapshot stratification assortativity under fixed tiers.
/// Honors the STRATNET_THREADS environment variable; results are identical
/// for any thread count.
std::vector<TimeseriesEntry> sta_timeseries(const SnapshotSeries& series,
                                            const ClassPartition& fixed_tiers);

/// Per-snapshot stratification assortativity with per-snapshot boundary
/// search for k classes.
std::vector<TimeseriesEntry> sta_timeseries(const SnapshotSeries& series, int k);

} // namespace stratnet
