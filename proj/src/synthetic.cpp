#include "stratnet/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace stratnet {

namespace {

// fixed draw algorithms so outputs do not depend on the standard library's
// distribution implementations
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t bits() { return eng(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(bits() % n); }
    double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
};

int tier_of_h(int h) {
    if (h <= 0) return 0;
    if (h <= 2) return 1;
    if (h <= 6) return 2;
    return 3;
}

struct AuthorState {
    int entry_year;
    std::uint32_t group;
    std::vector<std::size_t> papers;
    std::vector<std::uint32_t> coauthors;  // most recent first, deduped
    int h = 0;
};

struct GroupState {
    bool open;
    std::vector<std::uint32_t> members;
    int best_h = 0;
};

} // namespace

SynthCorpus generate_synthetic(const SynthParams& p) {
    if (p.eras < 1 || p.entrants_per_era < 1) throw DataError("eras and entrants must be positive");
    if (p.beta < 0.0) throw DataError("attachment bias must be non-negative");
    if (p.closure < 0.0 || p.closure > 1.0) throw DataError("closure rate must lie in [0,1]");
    if (p.max_coauthors < 1 || p.citations_per_paper < 0 || p.career_years < 1 ||
        p.activity < 0.0 || p.activity > 1.0 || p.citation_tournament < 1)
        throw DataError("invalid generator parameter");

    // lab structure: entrants either found new labs (in small teams) or join
    // an established open lab; closed labs collaborate only internally, which
    // is what lets parts of the network drift apart. The structural biases
    // all scale with beta so that beta = 0 degenerates to class-blind mixing.
    const double bias = std::min(1.0, p.beta / 4.0);
    const double kJoinExisting = 0.5;
    const double closed_lab_prob = 0.4 * bias;
    const int lab_tournament_rounds = p.beta > 0.0 ? 2 : 0;
    constexpr double kLocality = 0.6;
    constexpr std::size_t kFoundingTeam = 4;

    Rng rng(p.seed);
    SynthCorpus corpus;
    std::vector<AuthorState> authors;
    std::vector<GroupState> groups;
    std::vector<int> paper_citations;
    std::vector<int> paper_best_h;

    auto author_name = [](std::size_t i) { return "a" + std::to_string(i); };
    auto paper_name = [](std::size_t i) { return "p" + std::to_string(i); };

    auto note_coauthor = [](AuthorState& a, std::uint32_t other) {
        auto it = std::find(a.coauthors.begin(), a.coauthors.end(), other);
        if (it != a.coauthors.end()) a.coauthors.erase(it);
        a.coauthors.insert(a.coauthors.begin(), other);
        if (a.coauthors.size() > 16) a.coauthors.pop_back();
    };

    for (int era = 0; era < p.eras; ++era) {
        const int year = p.start_year + era;

        // arrivals: join an open lab (weighted by its standing) or found one
        std::uint32_t founding_group = 0;
        std::size_t founding_left = 0;
        std::vector<std::uint32_t> open_groups;
        for (std::uint32_t gi = 0; gi < groups.size(); ++gi)
            if (groups[gi].open) open_groups.push_back(gi);
        for (int i = 0; i < p.entrants_per_era; ++i) {
            std::uint32_t gid;
            if (!open_groups.empty() && rng.unit() < kJoinExisting) {
                // prefer labs with a strong member when the bias is on
                gid = open_groups[rng.below(open_groups.size())];
                for (int t = 0; t < lab_tournament_rounds; ++t) {
                    std::uint32_t cand = open_groups[rng.below(open_groups.size())];
                    if (groups[cand].best_h > groups[gid].best_h) gid = cand;
                }
            } else {
                if (founding_left == 0) {
                    founding_group = static_cast<std::uint32_t>(groups.size());
                    groups.push_back(GroupState{rng.unit() >= closed_lab_prob, {}, 0});
                    founding_left = kFoundingTeam;
                }
                gid = founding_group;
                --founding_left;
            }
            auto id = static_cast<std::uint32_t>(authors.size());
            authors.push_back(AuthorState{year, gid, {}, {}, 0});
            groups[gid].members.push_back(id);
        }

        std::vector<std::uint32_t> open_active;
        std::size_t n_active = 0;
        for (std::uint32_t a = 0; a < authors.size(); ++a) {
            if (year - authors[a].entry_year >= p.career_years) continue;
            ++n_active;
            if (groups[authors[a].group].open) open_active.push_back(a);
        }
        if (n_active < 2) continue;

        auto draw_global = [&](std::uint32_t self) -> std::uint32_t {
            const int self_tier = tier_of_h(authors[self].h);
            for (int attempt = 0; attempt < 64; ++attempt) {
                std::uint32_t cand = open_active[rng.below(open_active.size())];
                if (cand == self) continue;
                double accept = std::exp(-p.beta * std::abs(tier_of_h(authors[cand].h) - self_tier));
                if (rng.unit() < accept) return cand;
            }
            return open_active[rng.below(open_active.size())];
        };

        auto draw_local = [&](std::uint32_t self) -> std::uint32_t {
            const auto& members = groups[authors[self].group].members;
            for (int attempt = 0; attempt < 8; ++attempt) {
                std::uint32_t cand = members[rng.below(members.size())];
                if (cand != self && year - authors[cand].entry_year < p.career_years) return cand;
            }
            return self;  // no usable lab mate
        };

        auto draw_closure = [&](std::uint32_t self) -> std::uint32_t {
            const auto& direct = authors[self].coauthors;
            for (int attempt = 0; attempt < 8; ++attempt) {
                std::uint32_t mid = direct[rng.below(direct.size())];
                const auto& second = authors[mid].coauthors;
                if (second.empty()) continue;
                std::uint32_t cand = second[rng.below(second.size())];
                if (cand != self && year - authors[cand].entry_year < p.career_years) return cand;
            }
            return self;
        };

        const std::size_t first_new_paper = corpus.papers.size();
        const std::size_t author_count = authors.size();
        for (std::uint32_t a = 0; a < author_count; ++a) {
            if (year - authors[a].entry_year >= p.career_years) continue;
            if (rng.unit() >= p.activity) continue;
            const bool in_open_lab = groups[authors[a].group].open;

            std::vector<std::uint32_t> team{a};
            const int coauthor_target = 1 + static_cast<int>(rng.below(p.max_coauthors));
            // established authors reach beyond their lab more often
            const double locality = kLocality / (1.0 + 0.12 * authors[a].h);
            for (int c = 0; c < coauthor_target; ++c) {
                std::uint32_t partner = a;
                if (!authors[a].coauthors.empty() && rng.unit() < p.closure)
                    partner = draw_closure(a);
                else if (!in_open_lab || rng.unit() < locality)
                    partner = draw_local(a);
                else
                    partner = draw_global(a);
                if (partner != a && std::find(team.begin(), team.end(), partner) == team.end())
                    team.push_back(partner);
            }

            const std::size_t paper_idx = corpus.papers.size();
            PaperRecord rec;
            rec.id = paper_name(paper_idx);
            rec.year = year;
            int best_h = 0;
            for (std::uint32_t member : team) {
                rec.authors.push_back(author_name(member));
                best_h = std::max(best_h, authors[member].h);
            }
            corpus.papers.push_back(std::move(rec));
            paper_citations.push_back(0);
            paper_best_h.push_back(best_h);
            for (std::uint32_t member : team) authors[member].papers.push_back(paper_idx);
            for (std::size_t i = 0; i < team.size(); ++i)
                for (std::size_t j = 0; j < team.size(); ++j)
                    if (i != j) note_coauthor(authors[team[i]], team[j]);

            // cite earlier papers, preferring those with well-connected authors
            if (first_new_paper > 0) {
                for (int c = 0; c < p.citations_per_paper; ++c) {
                    std::size_t best = rng.below(first_new_paper);
                    for (int t = 1; t < p.citation_tournament; ++t) {
                        std::size_t cand = rng.below(first_new_paper);
                        if (paper_best_h[cand] > paper_best_h[best] ||
                            (paper_best_h[cand] == paper_best_h[best] &&
                             paper_citations[cand] > paper_citations[best]))
                            best = cand;
                    }
                    corpus.citations.push_back({paper_name(paper_idx), paper_name(best)});
                    ++paper_citations[best];
                }
            }
        }

        // refresh h-indices and lab standings from the citation counters
        for (auto& a : authors) {
            if (a.papers.empty()) continue;
            std::vector<int> counts;
            counts.reserve(a.papers.size());
            for (std::size_t pi : a.papers) counts.push_back(paper_citations[pi]);
            a.h = h_index(std::move(counts));
        }
        for (auto& g : groups) {
            g.best_h = 0;
            for (std::uint32_t m : g.members) g.best_h = std::max(g.best_h, authors[m].h);
        }
    }

    return corpus;
}

} // namespace stratnet
