#pragma once

#include <optional>
#include <vector>

#include "expunc/model.hpp"
#include "expunc/run.hpp"

namespace expunc {

// The predicted value of j enforces i: pred_j lies in I_i and some unsolved
// set holds both with i leftmost, or with j leftmost and i leftmost after j.
bool enforces(const Instance& inst, const std::vector<Interval>& eff, const Values& pred, int j, int i);

// Both open, intersecting, and in a common unsolved set where one of them is leftmost.
bool witness_pair(const Instance& inst, const std::vector<Interval>& eff, int a, int b);

// Queries known mandatory elements one at a time (smallest id first) until
// none is left. Returns the ids queried, in order.
std::vector<int> drain_known_mandatory(const Instance& inst, QueryState& st);

// Queries a minimum vertex cover of the current dependency graph.
std::vector<int> query_dependency_cover(const Instance& inst, QueryState& st);

RunResult run_alg_hop(const Instance& inst, const Values& pred, int gamma, QueryState& oracle);

RunResult run_alg_mqd(const Instance& inst, const Values& pred, int gamma, QueryState& oracle,
                      const std::optional<std::vector<int>>& pred_mandatory_override = std::nullopt);

RunResult run_witness_baseline(const Instance& inst, QueryState& oracle);

}  // namespace expunc
