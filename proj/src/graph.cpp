#include "stratnet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace stratnet {

ClassPartition ClassPartition::from_intervals(std::vector<ScoreInterval> intervals) {
    if (intervals.empty()) throw DataError("partition needs at least one interval");
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (std::isnan(intervals[i].lo) || std::isnan(intervals[i].hi) ||
            intervals[i].lo > intervals[i].hi)
            throw DataError("invalid score interval");
        if (i + 1 < intervals.size() && !(intervals[i].hi < intervals[i + 1].lo))
            throw DataError("partition intervals must be ascending and disjoint");
    }
    ClassPartition p;
    p.intervals_ = std::move(intervals);
    return p;
}

ClassPartition ClassPartition::from_boundaries(const std::vector<double>& lower_bounds) {
    if (lower_bounds.empty()) throw DataError("boundary list is empty");
    std::vector<ScoreInterval> iv;
    iv.reserve(lower_bounds.size());
    for (std::size_t i = 0; i < lower_bounds.size(); ++i) {
        if (i + 1 < lower_bounds.size()) {
            if (!(lower_bounds[i] < lower_bounds[i + 1]))
                throw DataError("boundaries must be strictly increasing");
            iv.push_back({lower_bounds[i], lower_bounds[i + 1] - 1.0});
        } else {
            iv.push_back({lower_bounds[i], std::numeric_limits<double>::infinity()});
        }
    }
    return from_intervals(std::move(iv));
}

ClassPartition ClassPartition::parse(const std::string& boundary_csv) {
    std::vector<double> bounds;
    std::stringstream ss(boundary_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            double v = std::stod(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
            bounds.push_back(v);
        } catch (const std::exception&) {
            throw DataError("bad boundary value '" + tok + "' in tier list '" + boundary_csv + "'");
        }
    }
    return from_boundaries(bounds);
}

std::size_t ClassPartition::class_of(double score) const {
    // first interval whose upper end is >= score, then containment check
    std::size_t lo = 0, hi = intervals_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (intervals_[mid].hi < score)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == intervals_.size() || score < intervals_[lo].lo)
        throw DataError("score " + std::to_string(score) + " falls outside every class interval");
    return lo;
}

std::string ClassPartition::boundary_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) out << ',';
        double lo = intervals_[i].lo;
        if (lo == static_cast<long long>(lo))
            out << static_cast<long long>(lo);
        else
            out << lo;
    }
    return out.str();
}

ScoredGraph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list,
                        const std::vector<std::pair<std::string, double>>& node_scores) {
    ScoredGraph g;

    // canonical id order: (score, label)
    std::vector<std::size_t> order(node_scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (node_scores[a].second != node_scores[b].second)
            return node_scores[a].second < node_scores[b].second;
        return node_scores[a].first < node_scores[b].first;
    });

    g.labels.reserve(order.size());
    g.scores.reserve(order.size());
    for (std::size_t i : order) {
        const auto& [label, score] = node_scores[i];
        if (score < 0.0 || std::isnan(score))
            throw DataError("node '" + label + "' has a negative or invalid score");
        auto [it, inserted] = g.index.emplace(label, static_cast<NodeId>(g.labels.size()));
        if (!inserted) throw DataError("duplicate score entry for node '" + label + "'");
        g.labels.push_back(label);
        g.scores.push_back(score);
    }

    if (!g.scores.empty()) {
        g.score_min = g.scores.front();
        g.score_max = g.scores.back();
    }

    g.edges.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        auto ia = g.index.find(a);
        if (ia == g.index.end()) throw DataError("edge endpoint '" + a + "' has no score entry");
        auto ib = g.index.find(b);
        if (ib == g.index.end()) throw DataError("edge endpoint '" + b + "' has no score entry");
        NodeId u = ia->second, v = ib->second;
        if (u == v) throw DataError("self-loop at node '" + a + "'");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());

    const std::size_t n = g.node_count();
    g.adj_offsets.assign(n + 1, 0);
    for (const auto& [u, v] : g.edges) {
        ++g.adj_offsets[u + 1];
        ++g.adj_offsets[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.adj_offsets[i + 1] += g.adj_offsets[i];
    g.adj.resize(2 * g.edges.size());
    std::vector<std::size_t> cursor(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
    for (const auto& [u, v] : g.edges) {
        g.adj[cursor[u]++] = v;
        g.adj[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adj.begin() + g.adj_offsets[i], g.adj.begin() + g.adj_offsets[i + 1]);
    return g;
}

double weighted_degree(const ScoredGraph& g, NodeId u) {
    double sum = 0.0;
    for (NodeId v : g.neighbors(u))
        sum += similarity_weight(g.scores[u], g.scores[v], g.score_min, g.score_max);
    return sum;
}

} // namespace stratnet
