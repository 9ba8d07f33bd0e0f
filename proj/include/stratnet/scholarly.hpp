#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "stratnet/graph.hpp"

namespace stratnet {

struct PaperRecord {
    std::string id;
    int year = 0;
    std::vector<std::string> authors;  // deduplicated on corpus build
};

struct CitationRecord {
    std::string citing;
    std::string cited;
};

/// Rolling-window parameters. Windows are [y, y + window_years - 1] for
/// y = start_year, start_year + stride, ... while the window end stays within
/// end_year.
struct SnapshotSpec {
    int window_years = 5;
    int start_year = 0;
    int end_year = 0;
    int stride = 1;
};

struct Snapshot {
    int window_start = 0;
    int window_end = 0;
    ScoredGraph graph;
    bool empty = false;  // no papers fell in the window
};

struct SnapshotSeries {
    SnapshotSpec spec;
    std::vector<Snapshot> snapshots;
};

/// h-index of a citation-count list: the largest h with at least h entries
/// of value >= h. 0 for an empty list.
int h_index(std::vector<int> citation_counts);

/// A publication corpus indexed for h-index queries and snapshot builds.
/// Citations whose citing paper is missing from the corpus are dropped
/// (scores are within-field); self-citation records are dropped.
class Corpus {
public:
    static Corpus build(std::vector<PaperRecord> papers,
                        const std::vector<CitationRecord>& citations);

    const std::vector<PaperRecord>& papers() const { return papers_; }
    int min_year() const { return min_year_; }
    int max_year() const { return max_year_; }

    /// h-index of `author` over their papers published up to cutoff_year,
    /// counting only in-corpus citations from papers up to cutoff_year.
    /// Unknown authors score 0.
    int author_h_index(const std::string& author, int cutoff_year) const;

private:
    std::vector<PaperRecord> papers_;
    std::vector<std::vector<int>> citing_years_;  // per paper, sorted
    std::unordered_map<std::string, std::vector<std::size_t>> author_papers_;
    int min_year_ = 0;
    int max_year_ = 0;
};

/// Options for snapshot construction. `clique_cap` skips the pairwise edges
/// of papers with more authors than the cap (0 = no cap); such papers still
/// contribute their authors as nodes.
struct SnapshotOptions {
    std::size_t clique_cap = 0;
    int score_cutoff_override = 0;  // 0 = use the window end
};

/// Co-authorship graph of one window: nodes are authors of at least one paper
/// in [y1, y2], edges are distinct co-author pairs, scores are h-indices at
/// cutoff y2. An empty window yields an empty graph with the warning flag set.
Snapshot build_snapshot(const Corpus& corpus, int y1, int y2, const SnapshotOptions& opt = {});

SnapshotSeries rolling_snapshots(const Corpus& corpus, const SnapshotSpec& spec,
                                 const SnapshotOptions& opt = {});

} // namespace stratnet
