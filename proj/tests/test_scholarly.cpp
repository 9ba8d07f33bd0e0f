#include <doctest.h>

#include <random>

#include "stratnet/scholarly.hpp"

using namespace stratnet;

namespace {

Corpus small_corpus() {
    // p1 (1990, a+b), p2 (1992, b+c), p3 (1995, a), citations: p2->p1, p3->p1
    std::vector<PaperRecord> papers{
        {"p1", 1990, {"a", "b"}},
        {"p2", 1992, {"b", "c"}},
        {"p3", 1995, {"a"}},
    };
    std::vector<CitationRecord> cites{{"p2", "p1"}, {"p3", "p1"}, {"px", "p1"}, {"p1", "p1"}};
    return Corpus::build(papers, cites);
}

} // namespace

TEST_CASE("h_index definition") {
    CHECK(h_index({}) == 0);
    CHECK(h_index({0, 0, 0}) == 0);
    CHECK(h_index({25, 8, 5, 3, 3}) == 3);
    CHECK(h_index({2}) == 1);
    CHECK(h_index({1, 1, 1}) == 1);
}

TEST_CASE("h_index bounds and monotonicity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> counts;
        int n = static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i) counts.push_back(static_cast<int>(rng() % 15));
        int h = h_index(counts);
        CHECK(h <= n);
        int mx = 0;
        for (int c : counts) mx = std::max(mx, c);
        CHECK(h <= mx);

        // appending a paper can only keep or raise h
        auto more = counts;
        more.push_back(static_cast<int>(rng() % 15));
        CHECK(h_index(more) >= h);

        // raising one citation count can only keep or raise h
        if (!counts.empty()) {
            auto bumped = counts;
            bumped[rng() % counts.size()] += 1;
            CHECK(h_index(bumped) >= h);
        }
    }
}

TEST_CASE("author_h_index respects the cutoff and the corpus") {
    Corpus c = small_corpus();
    CHECK(c.author_h_index("a", 1989) == 0);  // no papers yet
    // at 1992 p1 has one in-corpus citation (p2); the out-of-corpus px and the
    // self-citation do not count
    CHECK(c.author_h_index("a", 1992) == 1);
    CHECK(c.author_h_index("a", 1995) == 1);  // h([2, 0]) = 1
    CHECK(c.author_h_index("b", 1991) == 0);  // p1 uncited until 1992
    CHECK(c.author_h_index("nobody", 2000) == 0);
    CHECK(c.author_h_index("a", 2050) == 1);
}

TEST_CASE("author_h_index is monotone in the cutoff year") {
    Corpus c = small_corpus();
    int prev = 0;
    for (int year = 1985; year <= 2000; ++year) {
        int h = c.author_h_index("b", year);
        CHECK(h >= prev);
        prev = h;
    }
}

TEST_CASE("corpus validation") {
    CHECK_THROWS_AS(Corpus::build({{"p1", 1990, {}}}, {}), DataError);
    CHECK_THROWS_AS(Corpus::build({{"p1", 1990, {"a"}}, {"p1", 1991, {"b"}}}, {}), DataError);
    // duplicate author entries collapse
    Corpus c = Corpus::build({{"p1", 1990, {"a", "a", "b"}}}, {});
    CHECK(c.papers()[0].authors == std::vector<std::string>{"a", "b"});
}

TEST_CASE("build_snapshot cliques papers and deduplicates pairs") {
    std::vector<PaperRecord> papers{
        {"p1", 2000, {"a", "b", "c"}},
        {"p2", 2000, {"a", "d"}},
        {"p3", 2001, {"a", "b"}},  // repeat pair a-b
        {"p4", 2010, {"x"}},
    };
    Corpus c = Corpus::build(papers, {});
    Snapshot s = build_snapshot(c, 2000, 2001);
    CHECK_FALSE(s.empty);
    CHECK(s.graph.node_count() == 4);  // a b c d
    CHECK(s.graph.edge_count() == 4);  // triangle abc + ad; ab counted once

    Snapshot lone = build_snapshot(c, 2010, 2012);
    CHECK(lone.graph.node_count() == 1);
    CHECK(lone.graph.edge_count() == 0);

    Snapshot empty = build_snapshot(c, 2050, 2055);
    CHECK(empty.empty);
    CHECK(empty.graph.node_count() == 0);
}

TEST_CASE("build_snapshot scores by h-index at the window end") {
    std::vector<PaperRecord> papers{
        {"p1", 2000, {"a", "b"}},
        {"p2", 2001, {"c", "d"}},
        {"p3", 2002, {"a", "c"}},
    };
    std::vector<CitationRecord> cites{{"p2", "p1"}, {"p3", "p1"}, {"p3", "p2"}};
    Corpus c = Corpus::build(papers, cites);
    Snapshot s = build_snapshot(c, 2000, 2001);
    // at cutoff 2001: p1 has one citation (p2)
    CHECK(s.graph.scores[s.graph.index.at("a")] == 1.0);
    CHECK(s.graph.scores[s.graph.index.at("c")] == 0.0);

    SnapshotOptions late;
    late.score_cutoff_override = 2002;
    Snapshot s2 = build_snapshot(c, 2000, 2001, late);
    CHECK(s2.graph.scores[s2.graph.index.at("c")] == 1.0);
}

TEST_CASE("clique cap skips oversized author lists but keeps the authors") {
    std::vector<PaperRecord> papers{{"mega", 2000, {"a", "b", "c", "d", "e"}}};
    Corpus c = Corpus::build(papers, {});
    SnapshotOptions opt;
    opt.clique_cap = 4;
    Snapshot s = build_snapshot(c, 2000, 2000, opt);
    CHECK(s.graph.node_count() == 5);
    CHECK(s.graph.edge_count() == 0);
}

TEST_CASE("rolling window arithmetic") {
    std::vector<PaperRecord> papers{{"p1", 1966, {"a", "b"}}, {"p2", 2015, {"c", "d"}}};
    Corpus c = Corpus::build(papers, {});

    SnapshotSpec spec{5, 1966, 2015, 1};
    SnapshotSeries s = rolling_snapshots(c, spec);
    REQUIRE(s.snapshots.size() == 46);
    CHECK(s.snapshots.front().window_start == 1966);
    CHECK(s.snapshots.front().window_end == 1970);
    CHECK(s.snapshots.back().window_start == 2011);
    CHECK(s.snapshots.back().window_end == 2015);

    SnapshotSpec ten{10, 1966, 2015, 1};
    CHECK(rolling_snapshots(c, ten).snapshots.front().window_end == 1975);

    SnapshotSpec full{50, 1966, 2015, 1};
    CHECK(rolling_snapshots(c, full).snapshots.size() == 1);

    SnapshotSpec bad{0, 1966, 2015, 1};
    CHECK_THROWS_AS(rolling_snapshots(c, bad), DataError);
}
