#pragma once

#include <vector>

#include "expunc/graph.hpp"
#include "expunc/model.hpp"
#include "expunc/vertex_cover.hpp"

namespace expunc {

bool is_solved(const Instance& inst, const std::vector<Interval>& eff);
// Whether a single set of a minimum or sorting instance is solved.
bool set_solved(Problem problem, const std::vector<Interval>& eff, const std::vector<int>& set);

inline bool is_solved(const QueryState& st) { return is_solved(st.instance(), st.effective()); }

// Reveal-all-others test: an element that is still open in `eff` is mandatory
// if revealing every other open element to its `fill` value leaves the
// instance unsolved. This is the ground truth the fast paths are checked against.
bool is_mandatory_generic(const Instance& inst, const std::vector<Interval>& eff, const Values& fill, int i);
inline bool is_mandatory(const Instance& inst, const Values& real, int i) {
    return is_mandatory_generic(inst, inst.intervals, real, i);
}

// All open elements of `eff` that are mandatory under `fill`, via the
// problem-specific characterizations (set minima, contained values, bottleneck
// paths for graphs). Sorted by id.
std::vector<int> mandatory_elements(const Instance& inst, const std::vector<Interval>& eff, const Values& fill);

// Elements that are mandatory for every realization consistent with `eff`.
std::vector<int> known_mandatory(const Instance& inst, const std::vector<Interval>& eff);

// Minimum/sorting: edges between the leftmost element of each unsolved set and
// the open members intersecting it. Graphs: the bipartite instance between
// non-tree edges and the tree edges on their cycles. Sorting with pairwise
// disjoint sets yields one interval graph per set (merged).
VcInstance dependency_graph(const Instance& inst, const std::vector<Interval>& eff);

// Minimum feasible query set for the state `eff` under the true values.
std::vector<int> offline_optimum(const Instance& inst, const Values& real, const std::vector<Interval>& eff);
inline std::vector<int> offline_optimum(const Instance& inst, const Values& real) {
    return offline_optimum(inst, real, inst.intervals);
}

// Exhaustive minimum over subsets of the open elements; throws if more than
// `cap` elements are open.
int brute_force_optimum(const Instance& inst, const Values& real, int cap = 12);

bool is_feasible_query_set(const Instance& inst, const Values& real, const std::vector<int>& ids);

// Pair-set minimum instance equivalent to a sorting instance: one set per
// intersecting pair that shares an input set. Ids are preserved.
Instance reduce_to_minimum(const Instance& sorting);

// Graph helpers shared with the spanning tree solver.
EdgeList edge_list(const Instance& inst);
// Keys realize L+eps and U-eps lexicographically, ties by position.
std::vector<char> lower_limit_tree(const EdgeList& g, const std::vector<Interval>& iv);
std::vector<char> upper_limit_tree(const EdgeList& g, const std::vector<Interval>& iv);
// Bottleneck value between the endpoints of each edge in G - e, for the given
// edge values; nullopt for bridges.
std::vector<std::optional<Scalar>> replacement_bottleneck(const EdgeList& g, const Values& value);

}  // namespace expunc
