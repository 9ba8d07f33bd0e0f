#include "stratnet/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stratnet {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return in;
}

bool skippable(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '#';
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(std::move(tok));
    return out;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::vector<std::pair<std::string, std::string>> load_edge_list(const std::string& path) {
    auto in = open_input(path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    for (std::size_t ln = 1; std::getline(in, line); ++ln) {
        if (skippable(line)) continue;
        auto toks = split_ws(line);
        if (toks.size() != 2)
            throw DataError(path + ":" + std::to_string(ln) + ": expected two labels");
        out.emplace_back(std::move(toks[0]), std::move(toks[1]));
    }
    return out;
}

std::vector<std::pair<std::string, double>> load_scores(const std::string& path) {
    auto in = open_input(path);
    std::vector<std::pair<std::string, double>> out;
    std::string line;
    for (std::size_t ln = 1; std::getline(in, line); ++ln) {
        if (skippable(line)) continue;
        auto toks = split_ws(line);
        if (toks.size() != 2)
            throw DataError(path + ":" + std::to_string(ln) + ": expected label and score");
        try {
            std::size_t pos = 0;
            double v = std::stod(toks[1], &pos);
            if (pos != toks[1].size()) throw std::invalid_argument(toks[1]);
            out.emplace_back(std::move(toks[0]), v);
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(ln) + ": bad score '" + toks[1] + "'");
        }
    }
    return out;
}

ScoredGraph load_graph(const std::string& edges_path, const std::string& scores_path) {
    return build_graph(load_edge_list(edges_path), load_scores(scores_path));
}

void save_graph(const ScoredGraph& g, const std::string& prefix) {
    std::ostringstream edges;
    for (const auto& [u, v] : g.edges) edges << g.labels[u] << ' ' << g.labels[v] << '\n';
    write_text_file(prefix + ".edges", edges.str());

    std::ostringstream scores;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        double s = g.scores[u];
        scores << g.labels[u] << '\t';
        if (s == std::floor(s) && std::abs(s) < 1e15)
            scores << static_cast<long long>(s);
        else
            scores << s;
        scores << '\n';
    }
    write_text_file(prefix + ".scores", scores.str());
}

std::vector<PaperRecord> load_papers_jsonl(const std::string& path) {
    auto in = open_input(path);
    std::vector<PaperRecord> out;
    std::string line;
    for (std::size_t ln = 1; std::getline(in, line); ++ln) {
        if (skippable(line)) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("id") || !j.contains("year") ||
            !j.contains("authors") || !j["authors"].is_array())
            throw DataError(path + ":" + std::to_string(ln) + ": malformed paper record");
        PaperRecord rec;
        try {
            rec.id = j["id"].get<std::string>();
            rec.year = j["year"].get<int>();
            for (const auto& a : j["authors"]) rec.authors.push_back(a.get<std::string>());
        } catch (const nlohmann::json::exception&) {
            throw DataError(path + ":" + std::to_string(ln) + ": malformed paper record");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void save_papers_jsonl(const std::vector<PaperRecord>& papers, const std::string& path) {
    std::ostringstream out;
    for (const auto& p : papers) {
        nlohmann::json j{{"id", p.id}, {"year", p.year}, {"authors", p.authors}};
        out << j.dump() << '\n';
    }
    write_text_file(path, out.str());
}

std::vector<CitationRecord> load_citations_csv(const std::string& path) {
    auto in = open_input(path);
    std::vector<CitationRecord> out;
    std::string line;
    if (!std::getline(in, line) || line != "citing,cited")
        throw DataError(path + ":1: expected header 'citing,cited'");
    for (std::size_t ln = 2; std::getline(in, line); ++ln) {
        if (skippable(line)) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw DataError(path + ":" + std::to_string(ln) + ": expected 'citing,cited'");
        out.push_back({line.substr(0, comma), line.substr(comma + 1)});
    }
    return out;
}

void save_citations_csv(const std::vector<CitationRecord>& citations, const std::string& path) {
    std::ostringstream out;
    out << "citing,cited\n";
    for (const auto& c : citations) out << c.citing << ',' << c.cited << '\n';
    write_text_file(path, out.str());
}

nlohmann::json to_json(const StratificationReport& r) {
    return {{"per_class_score", r.per_class_score},
            {"per_class_expected", r.per_class_expected},
            {"s_strat", r.s_strat},
            {"es_strat", r.es_strat},
            {"max_score", r.max_score},
            {"sta", r.sta}};
}

nlohmann::json to_json(const ComparisonReport& r) {
    return {{"metric", r.metric},
            {"observed", r.observed},
            {"expected", r.expected},
            {"maximum", r.maximum},
            {"value", r.value}};
}

nlohmann::json to_json(const BoundarySet& b) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& iv : b.partition.intervals()) {
        if (std::isinf(iv.hi))
            bounds.push_back({iv.lo, nullptr});
        else
            bounds.push_back({iv.lo, iv.hi});
    }
    return {{"boundaries", bounds}, {"sta", b.sta_value}, {"sta_prime", b.sta_prime}};
}

nlohmann::json to_json(const ClassPairMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.k; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.k; ++j) row.push_back(m.cell(i, j));
        rows.push_back(std::move(row));
    }
    return {{"k", m.k},
            {"cells", rows},
            {"row_basis", m.row_basis},
            {"col_basis", m.col_basis},
            {"normalization", m.normalization},
            {"row_weight", m.row_weight},
            {"col_weight", m.col_weight},
            {"row_empty", m.row_empty},
            {"col_empty", m.col_empty}};
}

nlohmann::json to_json(const ComponentReport& r) {
    return {{"component_count", r.component_count},
            {"component_scores", r.component_scores},
            {"score_stddev", r.score_stddev}};
}

nlohmann::json to_json(const std::vector<TimeseriesEntry>& series) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : series) {
        nlohmann::json j{{"window_start", e.window_start},
                         {"window_end", e.window_end},
                         {"skipped", e.skipped}};
        if (!e.skipped) {
            j["report"] = to_json(e.report);
            if (e.boundaries) j["boundaries"] = to_json(*e.boundaries);
        }
        out.push_back(std::move(j));
    }
    return out;
}

nlohmann::json series_manifest(const SnapshotSeries& series) {
    nlohmann::json windows = nlohmann::json::array();
    for (const auto& s : series.snapshots)
        windows.push_back({{"start", s.window_start},
                           {"end", s.window_end},
                           {"nodes", s.graph.node_count()},
                           {"edges", s.graph.edge_count()},
                           {"empty", s.empty}});
    return {{"window_years", series.spec.window_years},
            {"start_year", series.spec.start_year},
            {"end_year", series.spec.end_year},
            {"stride", series.spec.stride},
            {"windows", windows}};
}

std::string csv_per_class(const StratificationReport& r) {
    std::ostringstream out;
    out << "class,score,expected\n";
    for (std::size_t i = 0; i < r.per_class_score.size(); ++i)
        out << (i + 1) << ',' << fixed6(r.per_class_score[i]) << ','
            << fixed6(r.per_class_expected[i]) << '\n';
    return out.str();
}

std::string csv_matrix(const ClassPairMatrix& m) {
    std::ostringstream out;
    out << "tier";
    for (std::size_t j = 0; j < m.k; ++j) out << ",c" << (j + 1);
    out << '\n';
    for (std::size_t i = 0; i < m.k; ++i) {
        out << 'c' << (i + 1);
        for (std::size_t j = 0; j < m.k; ++j) out << ',' << fixed6(m.cell(i, j));
        out << '\n';
    }
    return out.str();
}

std::string csv_timeseries(const std::vector<TimeseriesEntry>& series) {
    bool with_bounds = false;
    for (const auto& e : series)
        if (!e.skipped && e.boundaries) with_bounds = true;

    std::ostringstream out;
    out << "window_start,window_end,sta";
    if (with_bounds) out << ",boundaries";
    out << '\n';
    for (const auto& e : series) {
        if (e.skipped) continue;
        out << e.window_start << ',' << e.window_end << ',' << fixed6(e.report.sta);
        if (with_bounds)
            out << ",\"" << (e.boundaries ? e.boundaries->partition.boundary_string() : "") << '"';
        out << '\n';
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << content;
    if (!out) throw DataError("write failed for '" + path + "'");
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

} // namespace stratnet
