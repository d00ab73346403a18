#pragma once

#include "expunc/model.hpp"
#include "expunc/run.hpp"

namespace expunc {

enum class SortAlgorithm { Hop, Mqd };

// Sorting through the equivalent pair-set minimum instance. The oracle keeps
// answering for the sorting instance; element ids are shared.
RunResult run_sort_general(const Instance& inst, const Values& pred, int gamma, SortAlgorithm alg,
                           QueryState& oracle);

// Arborescence-based algorithm for instances whose sets are pairwise disjoint.
// Each set is handled on its own.
RunResult run_sort_single(const Instance& inst, const Values& pred, QueryState& oracle);

}  // namespace expunc
