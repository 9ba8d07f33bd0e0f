#pragma once

#include <string>
#include <vector>

#include "stratnet/graph.hpp"

namespace stratnet {

/// Full decomposition of the stratification assortativity of one graph under
/// one class partition.
struct StratificationReport {
    std::vector<double> per_class_score;     // observed class scores, in [0,1]
    std::vector<double> per_class_expected;  // configuration-model expectation
    double s_strat = 0.0;                    // sum of per_class_score
    double es_strat = 0.0;                   // sum of per_class_expected
    double max_score = 0.0;                  // k
    double sta = 0.0;                        // (s - es) / (k - es)
};

/// One of the comparison metrics with its normalization pieces.
struct ComparisonReport {
    std::string metric;  // "modularity", "dac" or "sac"
    double observed = 0.0;
    double expected = 0.0;
    double maximum = 0.0;
    double value = 0.0;
};

/// Observed stratification score of class i: sum of similarity weights over
/// edges inside the class, divided by that plus the dissimilarity weights of
/// edges crossing the class boundary. 0 for a class with no incident edges.
double class_stratification_score(const ScoredGraph& g, const ClassPartition& p, std::size_t i);

/// Same aggregation with every edge weight replaced by the configuration-model
/// expectation w'(u,v) = sw_u * sw_v / (sum_x sw_x)^2.
/// Throws DegenerateError on an edgeless graph.
double expected_class_score(const ScoredGraph& g, const ClassPartition& p, std::size_t i);

/// Stratification assortativity with per-class decomposition.
/// Throws DegenerateError on an edgeless graph or a singular normalization.
StratificationReport sta(const ScoredGraph& g, const ClassPartition& p);

/// Newman modularity of the partition (ordered-pair convention, diagonal
/// included in the expected term).
ComparisonReport modularity(const ScoredGraph& g, const ClassPartition& p);

/// Discrete assortativity coefficient: modularity normalized by (1 - expected).
ComparisonReport dac(const ScoredGraph& g, const ClassPartition& p);

/// Scalar assortativity coefficient over the node scores.
/// Throws DegenerateError when all edge-incident scores are identical.
ComparisonReport sac(const ScoredGraph& g);

} // namespace stratnet
