#include "stratnet/scholarly.hpp"

#include <algorithm>
#include <set>

namespace stratnet {

int h_index(std::vector<int> citation_counts) {
    std::sort(citation_counts.begin(), citation_counts.end(), std::greater<int>());
    int h = 0;
    for (std::size_t i = 0; i < citation_counts.size(); ++i)
        if (citation_counts[i] >= static_cast<int>(i) + 1)
            h = static_cast<int>(i) + 1;
        else
            break;
    return h;
}

Corpus Corpus::build(std::vector<PaperRecord> papers,
                     const std::vector<CitationRecord>& citations) {
    Corpus c;
    c.papers_ = std::move(papers);

    std::unordered_map<std::string, std::size_t> by_id;
    by_id.reserve(c.papers_.size());
    for (std::size_t i = 0; i < c.papers_.size(); ++i) {
        auto& p = c.papers_[i];
        if (p.authors.empty()) throw DataError("paper '" + p.id + "' has no authors");
        if (!by_id.emplace(p.id, i).second)
            throw DataError("duplicate paper id '" + p.id + "'");
        // dedupe authors, keeping first occurrence order
        std::vector<std::string> seen;
        for (auto& a : p.authors)
            if (std::find(seen.begin(), seen.end(), a) == seen.end()) seen.push_back(a);
        p.authors = std::move(seen);
        if (i == 0) {
            c.min_year_ = c.max_year_ = p.year;
        } else {
            c.min_year_ = std::min(c.min_year_, p.year);
            c.max_year_ = std::max(c.max_year_, p.year);
        }
        for (const auto& a : p.authors) c.author_papers_[a].push_back(i);
    }

    c.citing_years_.assign(c.papers_.size(), {});
    for (const auto& cit : citations) {
        if (cit.citing == cit.cited) continue;  // self-citation records dropped
        auto citing = by_id.find(cit.citing);
        if (citing == by_id.end()) continue;  // out-of-field citing paper
        auto cited = by_id.find(cit.cited);
        if (cited == by_id.end()) continue;
        c.citing_years_[cited->second].push_back(c.papers_[citing->second].year);
    }
    for (auto& ys : c.citing_years_) std::sort(ys.begin(), ys.end());
    return c;
}

int Corpus::author_h_index(const std::string& author, int cutoff_year) const {
    auto it = author_papers_.find(author);
    if (it == author_papers_.end()) return 0;
    std::vector<int> counts;
    counts.reserve(it->second.size());
    for (std::size_t pi : it->second) {
        if (papers_[pi].year > cutoff_year) continue;
        const auto& ys = citing_years_[pi];
        counts.push_back(static_cast<int>(
            std::upper_bound(ys.begin(), ys.end(), cutoff_year) - ys.begin()));
    }
    return h_index(std::move(counts));
}

Snapshot build_snapshot(const Corpus& corpus, int y1, int y2, const SnapshotOptions& opt) {
    if (y1 > y2) throw DataError("window start exceeds window end");
    Snapshot snap;
    snap.window_start = y1;
    snap.window_end = y2;

    std::set<std::string> members;
    std::vector<std::pair<std::string, std::string>> edge_list;
    for (const auto& p : corpus.papers()) {
        if (p.year < y1 || p.year > y2) continue;
        for (const auto& a : p.authors) members.insert(a);
        if (opt.clique_cap != 0 && p.authors.size() > opt.clique_cap) continue;
        for (std::size_t i = 0; i < p.authors.size(); ++i)
            for (std::size_t j = i + 1; j < p.authors.size(); ++j)
                edge_list.emplace_back(p.authors[i], p.authors[j]);
    }

    const int cutoff = opt.score_cutoff_override != 0 ? opt.score_cutoff_override : y2;
    std::vector<std::pair<std::string, double>> scores;
    scores.reserve(members.size());
    for (const auto& a : members)
        scores.emplace_back(a, static_cast<double>(corpus.author_h_index(a, cutoff)));

    snap.graph = build_graph(edge_list, scores);
    snap.empty = members.empty();
    return snap;
}

SnapshotSeries rolling_snapshots(const Corpus& corpus, const SnapshotSpec& spec,
                                 const SnapshotOptions& opt) {
    if (spec.window_years < 1) throw DataError("window length must be at least 1 year");
    if (spec.stride < 1) throw DataError("stride must be at least 1 year");
    SnapshotSeries series;
    series.spec = spec;
    for (int y = spec.start_year; y + spec.window_years - 1 <= spec.end_year; y += spec.stride)
        series.snapshots.push_back(build_snapshot(corpus, y, y + spec.window_years - 1, opt));
    return series;
}

} // namespace stratnet
