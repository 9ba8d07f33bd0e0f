#include "stratnet/metrics.hpp"

#include <cmath>

namespace stratnet {

namespace {

struct ClassMass {
    double w_intra = 0.0;   // sum of w over intra-class edges
    double d_cross = 0.0;   // sum of (1-w) over boundary-crossing edges
    double ew_intra = 0.0;  // same sums with w replaced by w'
    double ed_cross = 0.0;
};

// Per-class similarity/dissimilarity masses for every class at once.
// Each edge contributes to its own class (if intra) or to both touched
// classes (if cross); edges not incident to a class never enter its terms.
std::vector<ClassMass> accumulate_masses(const ScoredGraph& g, const ClassPartition& p) {
    const std::size_t k = p.k();
    std::vector<ClassMass> mass(k);

    std::vector<double> sw(g.node_count(), 0.0);
    for (const auto& [u, v] : g.edges) {
        double w = similarity_weight(g.scores[u], g.scores[v], g.score_min, g.score_max);
        sw[u] += w;
        sw[v] += w;
    }
    double sw_total = 0.0;
    for (double s : sw) sw_total += s;
    const double denom = sw_total * sw_total;

    std::vector<std::size_t> cls(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) cls[u] = p.class_of(g.scores[u]);

    for (const auto& [u, v] : g.edges) {
        double w = similarity_weight(g.scores[u], g.scores[v], g.score_min, g.score_max);
        double wp = denom > 0.0 ? sw[u] * sw[v] / denom : 0.0;
        std::size_t cu = cls[u], cv = cls[v];
        if (cu == cv) {
            mass[cu].w_intra += w;
            mass[cu].ew_intra += wp;
        } else {
            mass[cu].d_cross += 1.0 - w;
            mass[cv].d_cross += 1.0 - w;
            mass[cu].ed_cross += 1.0 - wp;
            mass[cv].ed_cross += 1.0 - wp;
        }
    }
    return mass;
}

double ratio_or_zero(double num, double denom) {
    return denom > 0.0 ? num / denom : 0.0;
}

// degree sum per class; shared by modularity/dac
std::vector<double> class_degree_sums(const ScoredGraph& g, const ClassPartition& p) {
    std::vector<double> sums(p.k(), 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        sums[p.class_of(g.scores[u])] += static_cast<double>(g.degree(u));
    return sums;
}

ComparisonReport discrete_parts(const ScoredGraph& g, const ClassPartition& p) {
    if (g.edge_count() == 0) throw DegenerateError("metric undefined for an edgeless graph");
    const double m = static_cast<double>(g.edge_count());

    std::size_t intra = 0;
    for (const auto& [u, v] : g.edges)
        if (p.class_of(g.scores[u]) == p.class_of(g.scores[v])) ++intra;

    double expected = 0.0;
    for (double ds : class_degree_sums(g, p)) expected += ds * ds;
    expected /= 4.0 * m * m;

    ComparisonReport r;
    r.observed = static_cast<double>(intra) / m;
    r.expected = expected;
    r.maximum = 1.0;
    return r;
}

} // namespace

double class_stratification_score(const ScoredGraph& g, const ClassPartition& p, std::size_t i) {
    if (i >= p.k()) throw DataError("class index " + std::to_string(i) + " out of range");
    const auto mass = accumulate_masses(g, p);
    return ratio_or_zero(mass[i].w_intra, mass[i].w_intra + mass[i].d_cross);
}

double expected_class_score(const ScoredGraph& g, const ClassPartition& p, std::size_t i) {
    if (i >= p.k()) throw DataError("class index " + std::to_string(i) + " out of range");
    if (g.edge_count() == 0)
        throw DegenerateError("expected stratification undefined for an edgeless graph");
    const auto mass = accumulate_masses(g, p);
    return ratio_or_zero(mass[i].ew_intra, mass[i].ew_intra + mass[i].ed_cross);
}

StratificationReport sta(const ScoredGraph& g, const ClassPartition& p) {
    if (g.edge_count() == 0)
        throw DegenerateError("stratification assortativity undefined for an edgeless graph");

    const auto mass = accumulate_masses(g, p);
    const std::size_t k = p.k();

    StratificationReport rep;
    rep.per_class_score.reserve(k);
    rep.per_class_expected.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        double s = ratio_or_zero(mass[i].w_intra, mass[i].w_intra + mass[i].d_cross);
        double e = ratio_or_zero(mass[i].ew_intra, mass[i].ew_intra + mass[i].ed_cross);
        rep.per_class_score.push_back(s);
        rep.per_class_expected.push_back(e);
        rep.s_strat += s;
        rep.es_strat += e;
    }
    rep.max_score = static_cast<double>(k);

    // Fully stratified graphs have every class score and expectation equal to
    // 1, collapsing the normalization to 0/0; the metric's value there is 1.
    const double denom = rep.max_score - rep.es_strat;
    if (denom <= 1e-12) {
        if (rep.max_score - rep.s_strat <= 1e-9) {
            rep.sta = 1.0;
            return rep;
        }
        throw DegenerateError("singular normalization: expected stratification equals the maximum");
    }
    rep.sta = (rep.s_strat - rep.es_strat) / denom;
    return rep;
}

ComparisonReport modularity(const ScoredGraph& g, const ClassPartition& p) {
    ComparisonReport r = discrete_parts(g, p);
    r.metric = "modularity";
    r.value = r.observed - r.expected;
    return r;
}

ComparisonReport dac(const ScoredGraph& g, const ClassPartition& p) {
    ComparisonReport r = discrete_parts(g, p);
    r.metric = "dac";
    const double denom = r.maximum - r.expected;
    if (denom <= 0.0)
        throw DegenerateError("dac undefined: every edge endpoint lies in a single class");
    r.value = (r.observed - r.expected) / denom;
    return r;
}

ComparisonReport sac(const ScoredGraph& g) {
    if (g.edge_count() == 0) throw DegenerateError("sac undefined for an edgeless graph");

    bool varied = false;
    const double first = g.scores[g.edges.front().first];
    for (const auto& [u, v] : g.edges)
        if (g.scores[u] != first || g.scores[v] != first) {
            varied = true;
            break;
        }
    if (!varied)
        throw DegenerateError("sac undefined: all edge-incident scores are identical");

    const double m = static_cast<double>(g.edge_count());
    double prod_sum = 0.0;
    for (const auto& [u, v] : g.edges) prod_sum += g.scores[u] * g.scores[v];
    double deg_score = 0.0, deg_score_sq = 0.0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        double d = static_cast<double>(g.degree(u));
        deg_score += d * g.scores[u];
        deg_score_sq += d * g.scores[u] * g.scores[u];
    }

    ComparisonReport r;
    r.metric = "sac";
    r.observed = prod_sum / m;
    r.expected = deg_score * deg_score / (4.0 * m * m);
    r.maximum = deg_score_sq / (2.0 * m);
    r.value = (r.observed - r.expected) / (r.maximum - r.expected);
    return r;
}

} // namespace stratnet
