#pragma once

#include <vector>

#include "expunc/model.hpp"

namespace expunc {

struct ErrorReport {
    int k_count = 0;
    std::vector<int> hops;
    int k_hop = 0;
    std::vector<int> pred_mandatory;
    std::vector<int> real_mandatory;
    int k_mandatory = 0;
};

// Elements that can interact with i: co-members of some set, or edges sharing
// a biconnected block with i. Sorted, without i.
std::vector<int> interaction_set(const Instance& inst, int i);
std::vector<std::vector<int>> interaction_sets(const Instance& inst);

int count_errors(const Values& pred, const Values& real);

// Number of interval boundaries (and trivial points) of `others` that a value
// passes over when moving from a to b.
int boundary_passes(const Instance& inst, const std::vector<int>& others, const Scalar& a, const Scalar& b);

std::vector<int> hop_distance(const Instance& inst, const Values& pred, const Values& real);

struct MandatoryDistance {
    std::vector<int> pred_mandatory;
    std::vector<int> real_mandatory;
    int k = 0;
};
MandatoryDistance mandatory_query_distance(const Instance& inst, const Values& pred, const Values& real);

ErrorReport error_report(const Instance& inst, const Values& pred, const Values& real);

int symmetric_difference_size(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace expunc
