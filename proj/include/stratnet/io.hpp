#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stratnet/analysis.hpp"
#include "stratnet/graph.hpp"
#include "stratnet/maxstrat.hpp"
#include "stratnet/metrics.hpp"
#include "stratnet/scholarly.hpp"
#include "stratnet/synthetic.hpp"

namespace stratnet {

// --- text inputs ----------------------------------------------------------
// Edge list: one whitespace-separated label pair per line.
// Scores: label <TAB> score per line.
// Both UTF-8, LF, '#'-prefixed comment lines and blank lines ignored.
// Parse failures name the file and line.

std::vector<std::pair<std::string, std::string>> load_edge_list(const std::string& path);
std::vector<std::pair<std::string, double>> load_scores(const std::string& path);
ScoredGraph load_graph(const std::string& edges_path, const std::string& scores_path);

/// Writes <prefix>.edges and <prefix>.scores in the formats above.
void save_graph(const ScoredGraph& g, const std::string& prefix);

/// Papers: JSON lines, one {"id": str, "year": int, "authors": [str,...]}
/// object per line.
std::vector<PaperRecord> load_papers_jsonl(const std::string& path);
void save_papers_jsonl(const std::vector<PaperRecord>& papers, const std::string& path);

/// Citations: CSV with header `citing,cited`.
std::vector<CitationRecord> load_citations_csv(const std::string& path);
void save_citations_csv(const std::vector<CitationRecord>& citations, const std::string& path);

// --- report serialization ---------------------------------------------------
// JSON carries full double precision; CSV rounds to 6 decimals.

nlohmann::json to_json(const StratificationReport& r);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const BoundarySet& b);
nlohmann::json to_json(const ClassPairMatrix& m);
nlohmann::json to_json(const ComponentReport& r);
nlohmann::json to_json(const std::vector<TimeseriesEntry>& series);

/// Snapshot-series manifest: window bounds and per-window node/edge counts.
nlohmann::json series_manifest(const SnapshotSeries& series);

std::string csv_per_class(const StratificationReport& r);
std::string csv_matrix(const ClassPairMatrix& m);
/// `window_start,window_end,sta[,boundaries]`; skipped windows are omitted.
std::string csv_timeseries(const std::vector<TimeseriesEntry>& series);

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace stratnet
