#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "expunc/errors.hpp"
#include "expunc/model.hpp"

namespace expunc {

struct GenConfig {
    std::uint64_t seed = 1;
    int roots = 20;
    int r_w = 10;
    int r_d = 2;
    Scalar d{1, 2};
    int target_bins = 5;
    int preds_per_bin = 5;

    void validate() const;
};

using Clause = std::vector<int>;

std::vector<Clause> parse_cnf(std::string_view text);
// One interval (min - eps, max + eps) over the variable indices of each clause.
std::vector<Interval> clause_intervals(const std::vector<Clause>& clauses, const Scalar& eps = Scalar(1, 2));
// Random k-CNF text in DIMACS format.
std::string random_cnf(int variables, int clauses, int width, std::uint64_t seed);

// Root sets plus short dependency paths drawn from a pool of intervals. Every
// emitted set is preprocessed: its leftmost interval contains no other member.
Instance gen_minimum_instance(const std::vector<Interval>& pool, const GenConfig& cfg);

struct TrueValues {
    Values values;
    int target = 0;     // requested number of mandatory elements
    int achieved = 0;   // mandatory elements of the emitted realization
    bool standard = false;  // the start placement had no mandatory element
};

// Start from a placement with as few mandatory elements as the greedy finds,
// then push random elements into mandatory positions up to a random target.
TrueValues gen_true_values(const Instance& inst, std::uint64_t seed);

struct PredictionSample {
    Values pred;
    ErrorReport errors;
};

// The exact prediction followed by predictions of increasing mandatory query
// distance, binned by k_M; at most preds_per_bin of the largest errors are
// kept per bin.
std::vector<PredictionSample> gen_predictions(const Instance& inst, const Values& real, const GenConfig& cfg);

// Uniform random point from the discretized hypothesis cells of each element.
Values random_cell_values(const Instance& inst, std::mt19937_64& rng);

struct TspGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> ends;
    std::vector<std::int64_t> weight;
};

// EUC_2D TSPLIB input as a complete graph on its first `max_vertices` nodes.
TspGraph parse_tsplib(std::string_view text, int max_vertices = 90);

struct MstSample {
    Instance instance;
    Values real;
};

// Edge intervals around the edge weights: with probability 1/2 one limit sits
// at distance w/1000, free limits are uniform within ratio d of w.
MstSample gen_mst_instance(const TspGraph& graph, const GenConfig& cfg);

// Small random instances for property tests. Limits are integers in
// [0, span), which makes ties and shared endpoints frequent.
Instance random_set_instance(Problem problem, int n, int sets, int max_width, int span, std::mt19937_64& rng,
                             double trivial_share = 0.1);
Instance random_graph_instance(int vertices, int edges, int span, std::mt19937_64& rng, double trivial_share = 0.1);
// Values on a grid of eighths inside each interval.
Values random_grid_values(const Instance& inst, std::mt19937_64& rng);

struct Fixture {
    std::string name;
    Instance instance;
    Values pred;
    Values real;
};

Fixture consistency_tradeoff(int beta);
Fixture wrong_predictions(int n);
Fixture mqd_tradeoff(int a, int b);
Fixture error_measure(int copies);
Fixture hop_example();
Fixture mandatory_example();

// Maximum-to-minimum reflection x -> 3 - x of a set fixture as a graph: one
// cycle for a single set, a path plus parallel edges for the star families,
// and a chain of parallel pairs for error_measure.
Fixture to_mst(const Fixture& fx);

}  // namespace expunc
