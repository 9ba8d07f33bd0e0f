#pragma once

#include <cstdint>
#include <vector>

#include "stratnet/scholarly.hpp"

namespace stratnet {

/// Parameters of the synthetic co-authorship corpus generator.
///
/// Each era is one publication year. Entrants join every era; active authors
/// initiate papers, choosing coauthors either by triadic closure (a coauthor
/// of a coauthor) or by a tier-biased draw where candidate weight decays as
/// exp(-beta * tier distance) on the fixed h-index tiers {0}, {1,2}, {3..6},
/// {7+}. beta = 0 is class-blind attachment. New papers cite existing papers
/// with a preference for papers whose authors already score high, which
/// concentrates citations and grows a high-h elite over time.
struct SynthParams {
    int eras = 30;
    int entrants_per_era = 60;
    double beta = 0.0;
    double closure = 0.3;
    std::uint64_t seed = 1;

    int start_year = 1966;
    double activity = 0.55;       // chance an active author initiates a paper each year
    int max_coauthors = 3;        // team size is 1 initiator + 1..max_coauthors
    int career_years = 20;        // years an author stays active
    int citations_per_paper = 3;  // draws per new paper
    int citation_tournament = 4;  // candidates per draw; the best-connected wins
};

struct SynthCorpus {
    std::vector<PaperRecord> papers;
    std::vector<CitationRecord> citations;
};

/// Deterministic for a fixed parameter set: the same seed always yields the
/// same corpus, byte for byte once serialized.
SynthCorpus generate_synthetic(const SynthParams& params);

} // namespace stratnet
