#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "stratnet/analysis.hpp"
#include "stratnet/io.hpp"

namespace {

const std::string kCli = STRATNET_CLI_PATH;
const std::string kFixtures = STRATNET_FIXTURES_DIR;

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("stratnet_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = kCli + " " + args;
    if (!stdout_file.empty()) cmd += " > " + stdout_file + " 2>/dev/null";
    else cmd += " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("metric subcommand prints the fully stratified fixture value") {
    TempDir tmp;
    int rc = run("metric --metric sta --graph " + kFixtures + "/g1.edges --scores " + kFixtures +
                     "/g1.scores --tiers 1,5,9,13",
                 tmp.file("out.txt"));
    CHECK(rc == 0);
    CHECK(slurp(tmp.file("out.txt")) == "sta=1.000000\n");
}

TEST_CASE("exit codes: usage, data, degeneracy") {
    TempDir tmp;
    CHECK(run("--help") == 0);
    CHECK(run("metric --help") == 0);
    CHECK(run("metric --no-such-flag x") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("metric --metric sta --graph /nonexistent.edges --scores /nonexistent.scores "
              "--tiers 0,1") == 3);
    CHECK(run("metric --metric sta --graph " + kFixtures + "/g1.edges --scores " + kFixtures +
              "/g1.scores") == 3);  // sta needs --tiers
    CHECK(run("boundaries --graph " + kFixtures + "/g1.edges --scores " + kFixtures +
              "/g1.scores --k 0") == 3);

    // degenerate sac: all incident scores equal
    std::ofstream(tmp.file("flat.edges")) << "a b\n";
    std::ofstream(tmp.file("flat.scores")) << "a\t3\nb\t3\n";
    CHECK(run("metric --metric sac --graph " + tmp.file("flat.edges") + " --scores " +
              tmp.file("flat.scores")) == 4);
}

TEST_CASE("boundaries subcommand reports tiers for the stratified fixture") {
    TempDir tmp;
    int rc = run("boundaries --graph " + kFixtures + "/g1.edges --scores " + kFixtures +
                     "/g1.scores --k 4 --out " + tmp.file("b.json"),
                 tmp.file("out.txt"));
    CHECK(rc == 0);
    std::string line = slurp(tmp.file("out.txt"));
    CHECK(line.find("boundaries=1,5,9,13") != std::string::npos);
    CHECK(line.find("sta=1.000000") != std::string::npos);
    CHECK(slurp(tmp.file("b.json")).find("\"sta\"") != std::string::npos);
}

TEST_CASE("pipeline commands produce byte-identical reruns") {
    TempDir tmp;
    std::string prefix = tmp.file("corpus");
    REQUIRE(run("synth --eras 12 --entrants 25 --beta 4 --closure 0.3 --seed 9 --out-prefix " +
                prefix) == 0);
    std::string papers = prefix + ".papers.jsonl";
    std::string cites = prefix + ".citations.csv";

    // same seed regenerates identical bytes
    std::string prefix2 = tmp.file("corpus2");
    REQUIRE(run("synth --eras 12 --entrants 25 --beta 4 --closure 0.3 --seed 9 --out-prefix " +
                prefix2) == 0);
    CHECK(slurp(papers) == slurp(prefix2 + ".papers.jsonl"));
    CHECK(slurp(cites) == slurp(prefix2 + ".citations.csv"));

    std::string args = "timeseries --papers " + papers + " --citations " + cites +
                       " --window 5 --tiers 0,1,3,7 --format csv --out ";
    REQUIRE(run(args + tmp.file("ts1.csv")) == 0);
    REQUIRE(run(args + tmp.file("ts2.csv")) == 0);
    std::string ts = slurp(tmp.file("ts1.csv"));
    CHECK(ts == slurp(tmp.file("ts2.csv")));
    CHECK(ts.find("window_start,window_end,sta") == 0);

    // the CLI output is byte-identical to the same run through the library
    {
        using namespace stratnet;
        Corpus corpus = Corpus::build(load_papers_jsonl(papers), load_citations_csv(cites));
        SnapshotSpec spec{5, corpus.min_year(), corpus.max_year(), 1};
        auto series = rolling_snapshots(corpus, spec);
        auto entries = sta_timeseries(series, ClassPartition::parse("0,1,3,7"));
        CHECK(ts == csv_timeseries(entries));
    }

    REQUIRE(run("ingest --papers " + papers + " --citations " + cites +
                " --window 5 --out " + tmp.file("manifest.json")) == 0);
    CHECK(slurp(tmp.file("manifest.json")).find("\"windows\"") != std::string::npos);

    REQUIRE(run("snapshot --papers " + papers + " --citations " + cites +
                " --from 1970 --to 1974 --out-prefix " + tmp.file("snap")) == 0);
    CHECK(std::filesystem::exists(tmp.file("snap.edges")));
    CHECK(std::filesystem::exists(tmp.file("snap.scores")));

    REQUIRE(run("heatmap --graph " + tmp.file("snap.edges") + " --scores " +
                tmp.file("snap.scores") + " --tiers 0,1,3,7 --format csv --out " +
                tmp.file("hm.csv")) == 0);
    CHECK(slurp(tmp.file("hm.csv")).find("tier,c1,c2,c3,c4") == 0);

    REQUIRE(run("components --graph " + tmp.file("snap.edges") + " --scores " +
                tmp.file("snap.scores") + " --out " + tmp.file("comp.json")) == 0);
    CHECK(slurp(tmp.file("comp.json")).find("component_count") != std::string::npos);

    REQUIRE(run("mobility --papers " + papers + " --citations " + cites +
                " --window 5 --horizon 5 --tiers 0,1,3,7 --format csv --out " +
                tmp.file("mob.csv")) == 0);
    CHECK(slurp(tmp.file("mob.csv")).find("tier,c1,c2,c3,c4") == 0);
}

TEST_CASE("timeseries with boundary search emits a boundaries column") {
    TempDir tmp;
    std::string prefix = tmp.file("c");
    REQUIRE(run("synth --eras 10 --entrants 20 --beta 4 --seed 3 --out-prefix " + prefix) == 0);
    REQUIRE(run("timeseries --papers " + prefix + ".papers.jsonl --citations " + prefix +
                ".citations.csv --window 5 --maxstrat --k 2 --format csv --out " +
                tmp.file("ts.csv")) == 0);
    CHECK(slurp(tmp.file("ts.csv")).find("window_start,window_end,sta,boundaries\n") == 0);
}
