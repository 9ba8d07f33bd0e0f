#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stratnet/graph.hpp"
#include "stratnet/metrics.hpp"

namespace stratnet {

/// An index interval [first, last] over the sorted distinct scores.
using IndexInterval = std::pair<int, int>;

/// Per-interval stratification contributions of one graph, queryable in O(1)
/// for any contiguous range of distinct scores.
///
/// base(i, j) is the amount interval [i, j] would contribute to the
/// unnormalized objective StA' = S_strat - ES_strat if its scores formed one
/// class: observed class score minus expected class score. Backed by 2-D
/// prefix sums over edge endpoint score indices, so construction is
/// O(m + h^2) and every query O(1).
class IntervalTable {
public:
    explicit IntervalTable(const ScoredGraph& g);

    std::size_t h() const { return distinct_.size(); }
    const std::vector<double>& distinct_scores() const { return distinct_; }

    double base(int i, int j) const;

    /// Normalized stratification assortativity of a full interval cover.
    /// Returns NaN for a singular normalization (never reachable from a
    /// valid cover whose observed score is below the maximum).
    double sta_of(const std::vector<IndexInterval>& intervals) const;

    /// Unnormalized objective S_strat - ES_strat of a full interval cover.
    double sta_prime_of(const std::vector<IndexInterval>& intervals) const;

    /// Memoized Step-1 value and best split point for state (b, i, j).
    mutable std::unordered_map<std::uint64_t, std::pair<double, int>> memo;

private:
    struct Terms {
        double w_intra, d_cross, ew_intra, ed_cross;
    };
    Terms terms(int i, int j) const;
    double rect(const std::vector<double>& pref, int r1, int r2, int c1, int c2) const;

    std::vector<double> distinct_;
    std::size_t stride_ = 0;  // h + 1
    std::vector<double> pw_, pd_, pew_, ped_;  // prefix sums
};

/// Tier boundaries over the observed scores together with the objective
/// values they achieve.
struct BoundarySet {
    ClassPartition partition;  // closed intervals over observed scores
    double sta_value = 0.0;    // normalized
    double sta_prime = 0.0;    // unnormalized objective
};

/// Builds the interval table. Throws DegenerateError on an edgeless graph and
/// DataError when the graph has more than 2048 distinct scores (the table is
/// quadratic in that count).
IntervalTable base_table(const ScoredGraph& g);

/// Optimal k-way contiguous split of [range.first, range.second] under the
/// sum of base contributions, with the achieved sum. Ties prefer the split
/// whose leftmost boundary is smallest, recursively.
/// Throws DataError when k exceeds the number of distinct scores in range.
std::pair<std::vector<IndexInterval>, double>
dp_split(const IntervalTable& table, int k, IndexInterval range);

/// Local search on normalized StA: repeatedly sweeps every boundary over all
/// valid positions, alone and jointly with each other boundary, taking the
/// best strict improvement until a full round changes nothing. The result
/// never scores below the input; an input that is optimal for this move set
/// is returned unchanged. With two classes the sweep covers every possible
/// split, so the result is the exhaustive optimum.
BoundarySet boundary_scan(const ScoredGraph& g, const ClassPartition& intervals);

/// Two-step boundary search: Step-1 interval DP on StA', then the Step-2
/// boundary scan on StA.
BoundarySet maxstrat(const ScoredGraph& g, int k);

} // namespace stratnet
