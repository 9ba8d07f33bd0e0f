#include "stratnet/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <unordered_map>

namespace stratnet {

namespace {

// tier of a real-valued score under integer tier thresholds: tier 1 is
// everything up to the first interval's end, tier i is (hi_{i-1}, hi_i],
// the top tier is open-ended
std::size_t continuous_tier(const ClassPartition& p, double x) {
    const auto& iv = p.intervals();
    for (std::size_t i = 0; i + 1 < iv.size(); ++i)
        if (x <= iv[i].hi) return i;
    return iv.size() - 1;
}

unsigned thread_count() {
    if (const char* env = std::getenv("STRATNET_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename Fn>
void parallel_indexed(std::size_t count, Fn&& fn) {
    unsigned threads = std::min<std::size_t>(thread_count(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

ClassPairMatrix collaboration_heatmap(const ScoredGraph& g, const ClassPartition& p) {
    if (g.edge_count() == 0)
        throw DegenerateError("collaboration heatmap undefined for an edgeless graph");
    const std::size_t k = p.k();

    std::vector<std::size_t> cls(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) cls[u] = p.class_of(g.scores[u]);

    std::vector<double> pair_count(k * k, 0.0);
    std::vector<double> incident(k, 0.0);  // |c_i|: edges touching class i
    for (const auto& [u, v] : g.edges) {
        std::size_t a = cls[u], b = cls[v];
        if (a == b) {
            pair_count[a * k + a] += 1.0;
            incident[a] += 1.0;
        } else {
            pair_count[a * k + b] += 1.0;
            pair_count[b * k + a] += 1.0;
            incident[a] += 1.0;
            incident[b] += 1.0;
        }
    }

    ClassPairMatrix m;
    m.k = k;
    m.row_basis = m.col_basis = "score tier";
    m.normalization = "connections between the tiers over the product of tier connection counts";
    m.cells.assign(k * k, 0.0);
    m.row_weight = incident;
    m.col_weight = incident;
    m.row_empty.assign(k, false);
    m.col_empty.assign(k, false);
    for (std::size_t i = 0; i < k; ++i)
        if (incident[i] == 0.0) m.row_empty[i] = m.col_empty[i] = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (incident[i] > 0.0 && incident[j] > 0.0)
                m.cells[i * k + j] = pair_count[i * k + j] / (incident[i] * incident[j]);
    return m;
}

double collaboration_score(const ScoredGraph& g, NodeId u) {
    auto nbrs = g.neighbors(u);
    if (nbrs.empty()) return 0.0;
    std::vector<double> s;
    s.reserve(nbrs.size());
    for (NodeId v : nbrs) s.push_back(g.scores[v]);
    const std::size_t take = std::min<std::size_t>(4, s.size());
    std::partial_sort(s.begin(), s.begin() + take, s.end(), std::greater<double>());
    double sum = 0.0;
    for (std::size_t i = 0; i < take; ++i) sum += s[i];
    return sum / static_cast<double>(take);
}

ComponentReport component_dispersion(const ScoredGraph& g) {
    if (g.node_count() == 0) throw DataError("component dispersion needs at least one node");

    std::vector<double> collab(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) collab[u] = collaboration_score(g, u);

    ComponentReport rep;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.push_back(s);
        double sum = 0.0;
        std::size_t size = 0;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            sum += collab[u];
            ++size;
            for (NodeId v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        rep.component_scores.push_back(sum / static_cast<double>(size));
    }
    rep.component_count = rep.component_scores.size();

    double mean = 0.0;
    for (double v : rep.component_scores) mean += v;
    mean /= static_cast<double>(rep.component_count);
    double var = 0.0;
    for (double v : rep.component_scores) var += (v - mean) * (v - mean);
    rep.score_stddev = std::sqrt(var / static_cast<double>(rep.component_count));
    return rep;
}

ClassPairMatrix entrance_mobility(const SnapshotSeries& series, int horizon_years,
                                  const ClassPartition& score_tiers,
                                  const ClassPartition& collab_tiers, std::size_t entry_first,
                                  std::size_t entry_last) {
    if (horizon_years < 1) throw DataError("mobility horizon must be at least 1 year");
    if (series.spec.stride < 1 || horizon_years % series.spec.stride != 0)
        throw DataError("mobility horizon must be a multiple of the snapshot stride");
    const std::size_t offset = static_cast<std::size_t>(horizon_years / series.spec.stride);
    const std::size_t n_snaps = series.snapshots.size();
    const std::size_t k = score_tiers.k();
    if (collab_tiers.k() != k)
        throw DataError("score and collaboration tier counts differ");

    // first snapshot containing each author
    std::unordered_map<std::string, std::size_t> entry;
    for (std::size_t t = 0; t < n_snaps; ++t)
        for (const auto& label : series.snapshots[t].graph.labels)
            entry.emplace(label, t);

    std::vector<double> count(k * k, 0.0);
    std::vector<double> row_pop(k, 0.0), col_pop(k, 0.0);
    std::vector<std::pair<std::size_t, std::size_t>> placed;
    for (const auto& [author, t0] : entry) {
        if (t0 < entry_first || t0 > entry_last) continue;
        const std::size_t th = t0 + offset;
        if (th >= n_snaps) continue;  // no horizon snapshot yet
        const auto& horizon = series.snapshots[th].graph;
        auto it = horizon.index.find(author);
        if (it == horizon.index.end()) continue;  // not publishing at the horizon

        const auto& g0 = series.snapshots[t0].graph;
        double entr = collaboration_score(g0, g0.index.at(author));
        std::size_t ci = continuous_tier(collab_tiers, entr);
        std::size_t cj = score_tiers.class_of(horizon.scores[it->second]);
        row_pop[ci] += 1.0;
        col_pop[cj] += 1.0;
        placed.emplace_back(ci, cj);
    }
    for (const auto& [ci, cj] : placed) count[ci * k + cj] += 1.0;

    ClassPairMatrix m;
    m.k = k;
    m.row_basis = "entrance collaboration-score tier";
    m.col_basis = "h-index tier after " + std::to_string(horizon_years) + " years";
    m.normalization = "author counts over the product of tier populations";
    m.cells.assign(k * k, 0.0);
    m.row_weight = row_pop;
    m.col_weight = col_pop;
    m.row_empty.assign(k, false);
    m.col_empty.assign(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        m.row_empty[i] = row_pop[i] == 0.0;
        m.col_empty[i] = col_pop[i] == 0.0;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (row_pop[i] > 0.0 && col_pop[j] > 0.0)
                m.cells[i * k + j] = count[i * k + j] / (row_pop[i] * col_pop[j]);
    return m;
}

namespace {

std::vector<TimeseriesEntry> timeseries_impl(
    const SnapshotSeries& series,
    const std::function<void(const Snapshot&, TimeseriesEntry&)>& compute) {
    std::vector<TimeseriesEntry> out(series.snapshots.size());
    parallel_indexed(series.snapshots.size(), [&](std::size_t i) {
        const Snapshot& snap = series.snapshots[i];
        TimeseriesEntry& e = out[i];
        e.window_start = snap.window_start;
        e.window_end = snap.window_end;
        if (snap.graph.edge_count() == 0) {
            e.skipped = true;
            return;
        }
        compute(snap, e);
    });
    return out;
}

} // namespace

std::vector<TimeseriesEntry> sta_timeseries(const SnapshotSeries& series,
                                            const ClassPartition& fixed_tiers) {
    return timeseries_impl(series, [&](const Snapshot& snap, TimeseriesEntry& e) {
        e.report = sta(snap.graph, fixed_tiers);
    });
}

std::vector<TimeseriesEntry> sta_timeseries(const SnapshotSeries& series, int k) {
    return timeseries_impl(series, [&](const Snapshot& snap, TimeseriesEntry& e) {
        // a window with fewer distinct scores than classes cannot host a
        // k-way split; skip it like an edgeless one
        std::vector<double> ds = snap.graph.scores;
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        if (ds.size() < static_cast<std::size_t>(k)) {
            e.skipped = true;
            return;
        }
        BoundarySet bs = maxstrat(snap.graph, k);
        e.report = sta(snap.graph, bs.partition);
        e.boundaries = std::move(bs);
    });
}

} // namespace stratnet
