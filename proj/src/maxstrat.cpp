#include "stratnet/maxstrat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace stratnet {

namespace {

constexpr std::size_t kMaxDistinctScores = 2048;

double ratio_or_zero(double num, double denom) {
    return denom > 0.0 ? num / denom : 0.0;
}

std::uint64_t memo_key(int b, int i, int j) {
    return (static_cast<std::uint64_t>(b) << 42) | (static_cast<std::uint64_t>(i) << 21) |
           static_cast<std::uint64_t>(j);
}

} // namespace

IntervalTable::IntervalTable(const ScoredGraph& g) {
    if (g.edge_count() == 0)
        throw DegenerateError("interval table undefined for an edgeless graph");

    distinct_ = g.scores;  // node scores are stored sorted
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
    if (distinct_.size() > kMaxDistinctScores)
        throw DataError("too many distinct scores for boundary search (" +
                        std::to_string(distinct_.size()) + " > " +
                        std::to_string(kMaxDistinctScores) + ")");

    const std::size_t h = distinct_.size();
    stride_ = h + 1;

    std::vector<int> score_idx(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u)
        score_idx[u] = static_cast<int>(
            std::lower_bound(distinct_.begin(), distinct_.end(), g.scores[u]) - distinct_.begin());

    std::vector<double> sw(g.node_count(), 0.0);
    for (const auto& [u, v] : g.edges) {
        double w = similarity_weight(g.scores[u], g.scores[v], g.score_min, g.score_max);
        sw[u] += w;
        sw[v] += w;
    }
    double sw_total = 0.0;
    for (double s : sw) sw_total += s;
    const double denom = sw_total * sw_total;

    // bucket sums at (min index, max index), then 2-D prefix
    std::vector<double> w_b(stride_ * stride_, 0.0), d_b(stride_ * stride_, 0.0),
        ew_b(stride_ * stride_, 0.0), ed_b(stride_ * stride_, 0.0);
    for (const auto& [u, v] : g.edges) {
        double w = similarity_weight(g.scores[u], g.scores[v], g.score_min, g.score_max);
        double wp = denom > 0.0 ? sw[u] * sw[v] / denom : 0.0;
        int a = score_idx[u], b = score_idx[v];
        if (a > b) std::swap(a, b);
        std::size_t at = static_cast<std::size_t>(a) * stride_ + static_cast<std::size_t>(b);
        w_b[at] += w;
        d_b[at] += 1.0 - w;
        ew_b[at] += wp;
        ed_b[at] += 1.0 - wp;
    }
    auto prefix = [&](std::vector<double>& m) {
        std::vector<double> p(stride_ * stride_, 0.0);
        for (std::size_t r = 0; r < h; ++r)
            for (std::size_t c = 0; c < h; ++c)
                p[(r + 1) * stride_ + (c + 1)] = m[r * stride_ + c] + p[r * stride_ + (c + 1)] +
                                                 p[(r + 1) * stride_ + c] - p[r * stride_ + c];
        m = std::move(p);
    };
    prefix(w_b);
    prefix(d_b);
    prefix(ew_b);
    prefix(ed_b);
    pw_ = std::move(w_b);
    pd_ = std::move(d_b);
    pew_ = std::move(ew_b);
    ped_ = std::move(ed_b);
}

double IntervalTable::rect(const std::vector<double>& pref, int r1, int r2, int c1, int c2) const {
    if (r1 > r2 || c1 > c2) return 0.0;
    const std::size_t s = stride_;
    return pref[(r2 + 1) * s + (c2 + 1)] - pref[r1 * s + (c2 + 1)] - pref[(r2 + 1) * s + c1] +
           pref[r1 * s + c1];
}

IntervalTable::Terms IntervalTable::terms(int i, int j) const {
    const int last = static_cast<int>(h()) - 1;
    Terms t;
    t.w_intra = rect(pw_, i, j, i, j);
    t.ew_intra = rect(pew_, i, j, i, j);
    // crossing edges: lower endpoint below the interval, or upper endpoint
    // above it (both-outside edges fall in neither rectangle)
    t.d_cross = rect(pd_, 0, i - 1, i, j) + rect(pd_, i, j, j + 1, last);
    t.ed_cross = rect(ped_, 0, i - 1, i, j) + rect(ped_, i, j, j + 1, last);
    return t;
}

double IntervalTable::base(int i, int j) const {
    Terms t = terms(i, j);
    return ratio_or_zero(t.w_intra, t.w_intra + t.d_cross) -
           ratio_or_zero(t.ew_intra, t.ew_intra + t.ed_cross);
}

double IntervalTable::sta_of(const std::vector<IndexInterval>& intervals) const {
    double s = 0.0, es = 0.0;
    for (const auto& [i, j] : intervals) {
        Terms t = terms(i, j);
        s += ratio_or_zero(t.w_intra, t.w_intra + t.d_cross);
        es += ratio_or_zero(t.ew_intra, t.ew_intra + t.ed_cross);
    }
    const double k = static_cast<double>(intervals.size());
    if (k - es <= 1e-12)
        return k - s <= 1e-9 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
    return (s - es) / (k - es);
}

double IntervalTable::sta_prime_of(const std::vector<IndexInterval>& intervals) const {
    double s = 0.0, es = 0.0;
    for (const auto& [i, j] : intervals) {
        Terms t = terms(i, j);
        s += ratio_or_zero(t.w_intra, t.w_intra + t.d_cross);
        es += ratio_or_zero(t.ew_intra, t.ew_intra + t.ed_cross);
    }
    return s - es;
}

IntervalTable base_table(const ScoredGraph& g) { return IntervalTable(g); }

namespace {

// value(b, i, j) = max over r of base(i, r) + value(b-1, r+1, j);
// ties keep the smallest r. Right end j never changes down the recursion.
double dp_value(const IntervalTable& t, int b, int i, int j) {
    if (b == 1) return t.base(i, j);
    auto key = memo_key(b, i, j);
    auto it = t.memo.find(key);
    if (it != t.memo.end()) return it->second.first;

    double best = -std::numeric_limits<double>::infinity();
    int best_r = i;
    for (int r = i; r <= j - (b - 1); ++r) {
        double v = t.base(i, r) + dp_value(t, b - 1, r + 1, j);
        if (v > best) {
            best = v;
            best_r = r;
        }
    }
    t.memo.emplace(key, std::make_pair(best, best_r));
    return best;
}

} // namespace

std::pair<std::vector<IndexInterval>, double>
dp_split(const IntervalTable& table, int k, IndexInterval range) {
    auto [i, j] = range;
    if (k < 1 || i < 0 || j >= static_cast<int>(table.h()) || i > j)
        throw DataError("invalid split request");
    if (k > j - i + 1)
        throw DataError("infeasible split: " + std::to_string(k) + " classes over " +
                        std::to_string(j - i + 1) + " distinct scores");

    double value = dp_value(table, k, i, j);
    std::vector<IndexInterval> intervals;
    int b = k, lo = i;
    while (b > 1) {
        int r = table.memo.at(memo_key(b, lo, j)).second;
        intervals.emplace_back(lo, r);
        lo = r + 1;
        --b;
    }
    intervals.emplace_back(lo, j);
    return {intervals, value};
}

namespace {

std::vector<IndexInterval> ends_to_intervals(const std::vector<int>& ends, int last) {
    std::vector<IndexInterval> iv;
    int prev = 0;
    for (int e : ends) {
        iv.emplace_back(prev, e);
        prev = e + 1;
    }
    iv.emplace_back(prev, last);
    return iv;
}

// Best-improvement sweeps: every boundary over all valid positions, alone and
// jointly with each other boundary. Accepted moves strictly increase sta, so
// the search terminates; a configuration once evaluated can never beat a
// later current score, so the visited set only skips dead candidates.
std::pair<std::vector<IndexInterval>, double>
scan_intervals(const IntervalTable& t, std::vector<IndexInterval> intervals) {
    const int last = static_cast<int>(t.h()) - 1;
    const int nb = static_cast<int>(intervals.size()) - 1;  // movable boundaries
    double cur_sta = t.sta_of(intervals);
    if (std::isnan(cur_sta))
        throw DegenerateError("singular normalization during boundary scan");
    if (nb == 0) return {intervals, cur_sta};

    std::vector<int> ends(nb);
    for (int i = 0; i < nb; ++i) ends[i] = intervals[i].second;

    std::set<std::vector<int>> visited;
    visited.insert(ends);

    auto window = [&](int t_idx) {
        int lo = t_idx > 0 ? ends[t_idx - 1] + 1 : 0;
        int hi = t_idx + 1 < nb ? ends[t_idx + 1] - 1 : last - 1;
        return std::make_pair(lo, hi);
    };

    bool improved = true;
    while (improved) {
        improved = false;
        for (int t1 = 0; t1 < nb; ++t1) {
            for (int t2 = t1; t2 < nb; ++t2) {
                double best = cur_sta;
                std::vector<int> best_ends;
                auto try_candidate = [&](std::vector<int>&& cand) {
                    for (int x = 0; x + 1 < nb; ++x)
                        if (cand[x] >= cand[x + 1]) return;
                    if (!visited.insert(cand).second) return;
                    double s = t.sta_of(ends_to_intervals(cand, last));
                    if (s > best) {
                        best = s;
                        best_ends = std::move(cand);
                    }
                };
                auto [lo1, hi1] = window(t1);
                for (int p1 = lo1; p1 <= (t2 == t1 + 1 ? last - 1 : hi1); ++p1) {
                    if (t2 == t1) {
                        if (p1 == ends[t1]) continue;
                        std::vector<int> cand = ends;
                        cand[t1] = p1;
                        try_candidate(std::move(cand));
                        continue;
                    }
                    int lo2 = t2 == t1 + 1 ? p1 + 1 : window(t2).first;
                    int hi2 = t2 + 1 < nb ? ends[t2 + 1] - 1 : last - 1;
                    for (int p2 = lo2; p2 <= hi2; ++p2) {
                        if (p1 == ends[t1] && p2 == ends[t2]) continue;
                        std::vector<int> cand = ends;
                        cand[t1] = p1;
                        cand[t2] = p2;
                        try_candidate(std::move(cand));
                    }
                }
                if (!best_ends.empty()) {
                    ends = std::move(best_ends);
                    cur_sta = best;
                    improved = true;
                }
            }
        }
    }
    return {ends_to_intervals(ends, last), cur_sta};
}

ClassPartition intervals_to_partition(const IntervalTable& t,
                                      const std::vector<IndexInterval>& iv) {
    std::vector<ScoreInterval> out;
    out.reserve(iv.size());
    for (const auto& [i, j] : iv)
        out.push_back({t.distinct_scores()[i], t.distinct_scores()[j]});
    return ClassPartition::from_intervals(std::move(out));
}

BoundarySet finish(const ScoredGraph& g, const IntervalTable& t,
                   const std::vector<IndexInterval>& iv) {
    BoundarySet bs{intervals_to_partition(t, iv), 0.0, 0.0};
    StratificationReport rep = sta(g, bs.partition);
    bs.sta_value = rep.sta;
    bs.sta_prime = rep.s_strat - rep.es_strat;
    return bs;
}

} // namespace

BoundarySet boundary_scan(const ScoredGraph& g, const ClassPartition& intervals) {
    IntervalTable table(g);
    const auto& ds = table.distinct_scores();

    // map score intervals onto the distinct-score index axis and check cover
    std::vector<IndexInterval> iv;
    int expect = 0;
    for (const auto& s : intervals.intervals()) {
        auto lo = std::lower_bound(ds.begin(), ds.end(), s.lo);
        auto hi = std::upper_bound(ds.begin(), ds.end(), s.hi);
        int i = static_cast<int>(lo - ds.begin());
        int j = static_cast<int>(hi - ds.begin()) - 1;
        if (i > j) throw DataError("class interval contains no observed score");
        if (i != expect) throw DataError("class intervals do not cover the observed scores");
        iv.emplace_back(i, j);
        expect = j + 1;
    }
    if (expect != static_cast<int>(ds.size()))
        throw DataError("class intervals do not cover the observed scores");

    auto [scanned, sta_v] = scan_intervals(table, iv);
    (void)sta_v;
    return finish(g, table, scanned);
}

BoundarySet maxstrat(const ScoredGraph& g, int k) {
    if (k < 1) throw DataError("class count must be at least 1");
    IntervalTable table(g);
    auto [iv, value] = dp_split(table, k, {0, static_cast<int>(table.h()) - 1});
    (void)value;
    auto [scanned, sta_v] = scan_intervals(table, iv);
    (void)sta_v;
    return finish(g, table, scanned);
}

} // namespace stratnet
