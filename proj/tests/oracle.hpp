#pragma once

// Independent direct-formula evaluators used to cross-check the library.
// Everything here is written straight from the metric definitions with plain
// loops over edges, node pairs and splits, sharing no computation with the
// implementation under test.

#include <cmath>
#include <limits>
#include <vector>

#include "stratnet/graph.hpp"

namespace oracle {

struct Input {
    std::vector<double> score;                   // per node
    std::vector<std::pair<int, int>> edges;      // undirected, once each
    std::vector<int> cls;                        // per node, 0-based
    int k = 0;
};

inline double weight(const Input& in, int u, int v) {
    double lo = in.score[0], hi = in.score[0];
    for (double s : in.score) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (hi <= lo) return 1.0;
    return 1.0 - std::fabs(in.score[u] - in.score[v]) / (hi - lo);
}

struct StaParts {
    std::vector<double> class_score;
    std::vector<double> class_expected;
    double value;
};

inline StaParts sta_parts(const Input& in) {
    const int n = static_cast<int>(in.score.size());
    std::vector<double> sw(n, 0.0);
    for (auto [u, v] : in.edges) {
        sw[u] += weight(in, u, v);
        sw[v] += weight(in, u, v);
    }
    double sw_sum = 0.0;
    for (double s : sw) sw_sum += s;

    StaParts out;
    double s_total = 0.0, es_total = 0.0;
    for (int c = 0; c < in.k; ++c) {
        double w_in = 0.0, d_out = 0.0, ew_in = 0.0, ed_out = 0.0;
        for (auto [u, v] : in.edges) {
            double w = weight(in, u, v);
            double wp = sw_sum > 0.0 ? sw[u] * sw[v] / (sw_sum * sw_sum) : 0.0;
            bool uin = in.cls[u] == c, vin = in.cls[v] == c;
            if (uin && vin) {
                w_in += w;
                ew_in += wp;
            } else if (uin || vin) {
                d_out += 1.0 - w;
                ed_out += 1.0 - wp;
            }
        }
        out.class_score.push_back(w_in + d_out > 0.0 ? w_in / (w_in + d_out) : 0.0);
        out.class_expected.push_back(ew_in + ed_out > 0.0 ? ew_in / (ew_in + ed_out) : 0.0);
        s_total += out.class_score.back();
        es_total += out.class_expected.back();
    }
    if (in.k - es_total <= 1e-12)
        out.value = in.k - s_total <= 1e-9 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
    else
        out.value = (s_total - es_total) / (in.k - es_total);
    return out;
}

inline double sta(const Input& in) { return sta_parts(in).value; }

// discrete/scalar metrics as literal double sums over ordered node pairs,
// diagonal included in the expected terms
struct PairSums {
    double s_disc, es_disc, s_scal, es_scal, max_scal;
};

inline PairSums pair_sums(const Input& in) {
    const int n = static_cast<int>(in.score.size());
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : in.edges) a[u][v] = a[v][u] = 1;
    std::vector<double> deg(n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) deg[u] += a[u][v];
    const double m = static_cast<double>(in.edges.size());

    PairSums out{0, 0, 0, 0, 0};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            double sigma = in.cls[u] == in.cls[v] ? 1.0 : 0.0;
            out.s_disc += a[u][v] * sigma / (2.0 * m);
            out.es_disc += deg[u] * deg[v] * sigma / (4.0 * m * m);
            out.s_scal += a[u][v] * in.score[u] * in.score[v] / (2.0 * m);
            out.es_scal += deg[u] * deg[v] * in.score[u] * in.score[v] / (4.0 * m * m);
            out.max_scal += a[u][v] * in.score[u] * in.score[u] / (2.0 * m);
        }
    return out;
}

inline double modularity(const Input& in) {
    PairSums p = pair_sums(in);
    return p.s_disc - p.es_disc;
}

inline double dac(const Input& in) {
    PairSums p = pair_sums(in);
    return (p.s_disc - p.es_disc) / (1.0 - p.es_disc);
}

inline double sac(const Input& in) {
    PairSums p = pair_sums(in);
    return (p.s_scal - p.es_scal) / (p.max_scal - p.es_scal);
}

} // namespace oracle
