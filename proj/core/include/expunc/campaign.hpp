#pragma once

#include <string>
#include <vector>

#include "expunc/generate.hpp"
#include "expunc/model.hpp"
#include "expunc/mst.hpp"
#include "expunc/run.hpp"

namespace expunc {

enum class Algo { Hop, Mqd, Witness, SortSingle, SortHop, SortMqd, Mst, CycleBaseline };

struct AlgoSpec {
    Algo algo = Algo::Hop;
    int gamma = 2;  // 0 stands for the instance size
    Recovery recovery = Recovery::B;

    std::string name() const;
    static AlgoSpec parse(const std::string& name, int gamma, Recovery recovery);
};

// Runs one algorithm on a fresh oracle and fills opt, errors and ratio.
RunResult run_algorithm(const AlgoSpec& spec, const Instance& inst, const Values& pred, const Values& real);

struct CorpusItem {
    Instance instance;
    Values real;
    std::vector<Values> preds;
};

struct Campaign {
    std::vector<AlgoSpec> algorithms;
    std::vector<CorpusItem> corpus;
    Scalar bin_width{1, 5};
    int threads = 0;  // 0: hardware concurrency
};

struct CampaignRow {
    int bin = 0;
    Scalar bin_start;
    std::string algorithm;
    int gamma = 0;
    double mean_cr = 0;
    double max_cr = 0;
    int runs = 0;
};

// One row per non-empty (error bin, algorithm) pair, binned by k_M / opt;
// pairs with opt = 0 are skipped. Deterministic for a fixed campaign.
std::vector<CampaignRow> run_campaign(const Campaign& c);
std::string campaign_csv(const std::vector<CampaignRow>& rows);

// Minimum instances over random 3-CNF clause intervals with generated true
// values and predictions; item k uses seed cfg.seed + k.
std::vector<CorpusItem> synthetic_minimum_corpus(int instances, const GenConfig& cfg, int variables = 30,
                                                 int clauses = 40);

struct FixtureReport {
    std::string fixture;
    std::string algorithm;
    int queries = 0;
    int opt = 0;
    Scalar ratio{1};
    bool below_floor = false;
};

// Runs the algorithms on a fixture; a ratio below 1 marks a broken harness.
std::vector<FixtureReport> verify_fixture(const Fixture& fx, const std::vector<AlgoSpec>& algorithms);

}  // namespace expunc
