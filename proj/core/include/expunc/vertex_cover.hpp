#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "expunc/model.hpp"

namespace expunc {

enum class VcKind { General, Bipartite, IntervalGraph };

struct VcInstance {
    VcKind kind = VcKind::General;
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> left;             // bipartite: the left side; everything else is right
    std::vector<Interval> intervals;   // interval graph: one per vertex, same order as `vertices`
};

struct VcResult {
    std::vector<int> cover;    // sorted
    std::map<int, int> mate;   // bipartite only, symmetric maximum matching
};

// Exact minimum vertex cover. The general solver branches per connected
// component and refuses components larger than `component_limit` vertices.
VcResult min_vertex_cover(const VcInstance& g, int component_limit = 64);

// Extends `mate` (symmetric, must be a matching of the given graph) to a
// maximum matching by augmenting paths.
std::map<int, int> complete_matching(const std::vector<int>& left, const std::vector<std::pair<int, int>>& edges,
                                     std::map<int, int> mate);

// König cover defined by a maximum matching: (L \ Z) ∪ (R ∩ Z), where Z is
// everything reachable from unmatched left vertices by alternating paths.
std::vector<int> konig_cover(const std::vector<int>& left, const std::vector<std::pair<int, int>>& edges,
                             const std::map<int, int>& mate);

bool is_vertex_cover(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& cover);

}  // namespace expunc
