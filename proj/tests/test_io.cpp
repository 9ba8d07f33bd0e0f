#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "stratnet/io.hpp"

using namespace stratnet;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("stratnet_io_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("edge list parsing with comments and errors") {
    TempDir tmp;
    write_text_file(tmp.file("ok.edges"), "# comment\na b\n\nb c\n");
    auto edges = load_edge_list(tmp.file("ok.edges"));
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == std::pair<std::string, std::string>{"a", "b"});

    write_text_file(tmp.file("bad.edges"), "a b\nxyz\n");
    try {
        load_edge_list(tmp.file("bad.edges"));
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("bad.edges:2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_edge_list(tmp.file("missing.edges")), DataError);
}

TEST_CASE("score file parsing names bad lines") {
    TempDir tmp;
    write_text_file(tmp.file("ok.scores"), "a\t1\nb\t2.5\n");
    auto scores = load_scores(tmp.file("ok.scores"));
    REQUIRE(scores.size() == 2);
    CHECK(scores[1].second == 2.5);

    write_text_file(tmp.file("bad.scores"), "a\tnope\n");
    try {
        load_scores(tmp.file("bad.scores"));
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("bad.scores:1") != std::string::npos);
    }
}

TEST_CASE("graph save/load round trip") {
    TempDir tmp;
    auto g = build_graph({{"a", "b"}, {"b", "c"}}, {{"a", 0}, {"b", 2}, {"c", 7.5}});
    save_graph(g, tmp.file("g"));
    auto g2 = load_graph(tmp.file("g.edges"), tmp.file("g.scores"));
    CHECK(g2.labels == g.labels);
    CHECK(g2.scores == g.scores);
    CHECK(g2.edges == g.edges);
}

TEST_CASE("papers jsonl parse and errors") {
    TempDir tmp;
    write_text_file(tmp.file("p.jsonl"),
                    "{\"id\":\"p1\",\"year\":1990,\"authors\":[\"a\",\"b\"]}\n"
                    "{\"id\":\"p2\",\"year\":1991,\"authors\":[\"c\"]}\n");
    auto papers = load_papers_jsonl(tmp.file("p.jsonl"));
    REQUIRE(papers.size() == 2);
    CHECK(papers[0].authors.size() == 2);

    write_text_file(tmp.file("bad.jsonl"), "{\"id\":\"p1\"}\n");
    CHECK_THROWS_AS(load_papers_jsonl(tmp.file("bad.jsonl")), DataError);

    save_papers_jsonl(papers, tmp.file("round.jsonl"));
    auto again = load_papers_jsonl(tmp.file("round.jsonl"));
    CHECK(again.size() == papers.size());
    CHECK(again[1].year == 1991);
}

TEST_CASE("citations csv parse and errors") {
    TempDir tmp;
    write_text_file(tmp.file("c.csv"), "citing,cited\np2,p1\np3,p1\n");
    auto cites = load_citations_csv(tmp.file("c.csv"));
    REQUIRE(cites.size() == 2);
    CHECK(cites[0].citing == "p2");

    write_text_file(tmp.file("nohdr.csv"), "p2,p1\n");
    CHECK_THROWS_AS(load_citations_csv(tmp.file("nohdr.csv")), DataError);
    write_text_file(tmp.file("bad.csv"), "citing,cited\np2\n");
    CHECK_THROWS_AS(load_citations_csv(tmp.file("bad.csv")), DataError);
}

TEST_CASE("report json shapes") {
    auto g = build_graph({{"a", "b"}, {"c", "d"}}, {{"a", 0}, {"b", 0}, {"c", 3}, {"d", 5}});
    auto p = ClassPartition::parse("0,1,3,7");

    auto j = to_json(sta(g, p));
    CHECK(j["per_class_score"].size() == 4);
    CHECK(j["max_score"] == 4.0);
    CHECK(j.contains("sta"));

    auto jc = to_json(dac(g, p));
    CHECK(jc["metric"] == "dac");
    CHECK(jc.contains("observed"));
    CHECK(jc.contains("expected"));
    CHECK(jc.contains("maximum"));
    CHECK(jc.contains("value"));

    auto jm = to_json(collaboration_heatmap(g, p));
    CHECK(jm["cells"].size() == 4);
    CHECK(jm["row_basis"] == "score tier");

    auto jr = to_json(component_dispersion(g));
    CHECK(jr["component_count"] == 2);
}

TEST_CASE("boundary set json carries the unbounded top tier as null") {
    auto g = build_graph({{"a", "b"}, {"c", "d"}, {"b", "c"}},
                         {{"a", 0}, {"b", 0}, {"c", 5}, {"d", 5}});
    BoundarySet bs = maxstrat(g, 2);
    auto j = to_json(bs);
    CHECK(j["boundaries"].size() == 2);
    CHECK(j.contains("sta"));
    CHECK(j.contains("sta_prime"));
}

TEST_CASE("csv outputs use six decimals") {
    auto g = build_graph({{"a", "b"}, {"c", "d"}}, {{"a", 0}, {"b", 0}, {"c", 3}, {"d", 5}});
    auto p = ClassPartition::parse("0,1,3,7");
    std::string csv = csv_per_class(sta(g, p));
    CHECK(csv.find("class,score,expected\n") == 0);
    CHECK(csv.find("1,1.000000,") != std::string::npos);

    std::string mat = csv_matrix(collaboration_heatmap(g, p));
    CHECK(mat.find("tier,c1,c2,c3,c4\n") == 0);
}

TEST_CASE("timeseries csv omits skipped windows and quotes boundaries") {
    Snapshot ok;
    ok.window_start = 2000;
    ok.window_end = 2004;
    ok.graph = build_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}},
                           {{"a", 0}, {"b", 0}, {"c", 5}, {"d", 5}});
    Snapshot dead;
    dead.window_start = 2001;
    dead.window_end = 2005;
    dead.graph = build_graph({}, {{"a", 0}});
    SnapshotSeries series;
    series.spec = {5, 2000, 2005, 1};
    series.snapshots = {ok, dead};

    auto ts = sta_timeseries(series, 2);
    std::string csv = csv_timeseries(ts);
    CHECK(csv.find("window_start,window_end,sta,boundaries\n") == 0);
    CHECK(csv.find("2000,2004,") != std::string::npos);
    CHECK(csv.find("2001,2005") == std::string::npos);
    CHECK(csv.find('"') != std::string::npos);
}
