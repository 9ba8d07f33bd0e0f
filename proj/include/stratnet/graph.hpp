#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stratnet/errors.hpp"

namespace stratnet {

using NodeId = std::uint32_t;

/// Closed score interval [lo, hi]; hi may be +infinity for an unbounded top
/// tier.
struct ScoreInterval {
    double lo;
    double hi;
};

/// An ordered partition of the score axis into k non-overlapping closed
/// intervals. Every observed node score must fall in exactly one interval;
/// gaps between consecutive intervals are allowed as long as no score lands
/// in them.
class ClassPartition {
public:
    static ClassPartition from_intervals(std::vector<ScoreInterval> intervals);

    /// Lower-bound list {b_1,...,b_k} meaning [b_1, b_2-1], ..., [b_k, +inf).
    static ClassPartition from_boundaries(const std::vector<double>& lower_bounds);

    /// Parses a comma-separated lower-bound list, e.g. "0,1,3,7".
    static ClassPartition parse(const std::string& boundary_csv);

    std::size_t k() const { return intervals_.size(); }
    const std::vector<ScoreInterval>& intervals() const { return intervals_; }

    /// Index (0-based) of the unique interval containing `score`; throws
    /// DataError naming the score if it lies outside every interval.
    std::size_t class_of(double score) const;

    /// Comma-separated lower bounds, the inverse of parse() for partitions
    /// built from boundaries.
    std::string boundary_string() const;

private:
    std::vector<ScoreInterval> intervals_;
};

/// Undirected simple graph with one status score per node.
///
/// Node ids are dense and canonical: assigned by sorting (score, label), so
/// two inputs differing only in edge or score listing order produce identical
/// graphs, bit for bit. Edges are stored once with u < v, sorted.
struct ScoredGraph {
    std::vector<std::string> labels;                 // id -> external label
    std::unordered_map<std::string, NodeId> index;   // label -> id
    std::vector<double> scores;                      // id -> score
    std::vector<std::pair<NodeId, NodeId>> edges;    // u < v, sorted, unique
    std::vector<std::size_t> adj_offsets;            // CSR adjacency
    std::vector<NodeId> adj;
    double score_min = 0.0;
    double score_max = 0.0;

    std::size_t node_count() const { return scores.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::size_t degree(NodeId u) const { return adj_offsets[u + 1] - adj_offsets[u]; }
    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj.data() + adj_offsets[u], adj.data() + adj_offsets[u + 1]};
    }
};

/// Builds a deduplicated simple graph from labeled edges and scores.
/// Duplicate and reversed duplicate edges collapse to one; nodes with a score
/// but no edges are kept as degree-0 nodes. Throws DataError for an edge
/// endpoint without a score entry, a self-loop, a duplicate score entry, or a
/// negative score.
ScoredGraph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list,
                        const std::vector<std::pair<std::string, double>>& node_scores);

/// Social similarity weight: 1 - |s1-s2| / (score_max - score_min).
/// Defined as 1 when the score range is degenerate (all statuses equal).
inline double similarity_weight(double s1, double s2, double score_min, double score_max) {
    if (score_max <= score_min) return 1.0;
    return 1.0 - (s1 > s2 ? s1 - s2 : s2 - s1) / (score_max - score_min);
}

/// Sum of similarity weights over the edges incident to u.
double weighted_degree(const ScoredGraph& g, NodeId u);

} // namespace stratnet
