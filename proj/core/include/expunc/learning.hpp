#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "expunc/io.hpp"
#include "expunc/model.hpp"

namespace expunc {

using TrainingSet = std::vector<Values>;

// Candidate predictions for element i: every limit or trivial value of an
// interacting element that lies strictly inside I_i, plus the midpoint of each
// gap between consecutive such points (and the limits of I_i). Sorted.
std::vector<Scalar> discretize_hypotheses(const Instance& inst, int i);

// Per-element empirical hop minimizer over the discretized candidates; ties
// go to the smallest candidate. Trivial elements keep their value.
Values erm_hop(const Instance& inst, const TrainingSet& training);

// Elements that are mandatory in at least half of the samples.
std::vector<int> erm_mandatory(const Instance& inst, const TrainingSet& training);

// Mean of |mandatory(w^j) △ p| over the training set.
Scalar empirical_mandatory_error(const Instance& inst, const TrainingSet& training, const std::vector<int>& p);

enum class ErrorMeasure { Hop, Mqd };

// Advisory training set sizes: hop uses h_max candidates per element.
std::uint64_t sample_complexity(double eps, double delta, int n, ErrorMeasure measure, int h_max = 1);

Values sample_values(const Instance& inst, const Distribution& dist, std::mt19937_64& rng);
TrainingSet sample_training(const Instance& inst, const Distribution& dist, int m, std::uint64_t seed);

void check_distribution(const Instance& inst, const Distribution& dist);

struct LearningFixture {
    Instance instance;
    Distribution distribution;
};

// Five staggered intervals, minimum sets of neighbours, where predicting the
// mandatory set beats every value prediction in expectation.
LearningFixture domination_fixture();

}  // namespace expunc
