#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "expunc/generate.hpp"
#include "expunc/graph.hpp"
#include "expunc/model.hpp"
#include "expunc/verifier.hpp"

namespace testsupport {

using namespace expunc;

// Spanning tree certificate search over every edge subset of size V-1.
inline bool mst_solved_by_enumeration(const Instance& inst, const std::vector<Interval>& eff) {
    const int m = inst.size();
    const int need = inst.vertices - 1;
    EdgeList g = edge_list(inst);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != need) continue;
        UnionFind uf(inst.vertices);
        bool tree = true;
        for (int e = 0; e < m && tree; ++e)
            if (mask >> e & 1) tree = uf.unite(g.u[e], g.v[e]);
        if (!tree) continue;
        std::vector<char> in(m);
        for (int e = 0; e < m; ++e) in[e] = mask >> e & 1;
        TreePaths tp(g, in);
        bool ok = true;
        for (int f = 0; f < m && ok; ++f) {
            if (in[f]) continue;
            for (int e : tp.path(g.u[f], g.v[f]))
                if (!(eff[e].upper() <= eff[f].lower())) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

// Random small instance of the given problem with grid values.
struct Sample {
    Instance inst;
    Values real;
    Values pred;
};

inline Sample random_sample(Problem p, std::mt19937_64& rng, int max_n = 10) {
    Sample s;
    if (p == Problem::Mst) {
        int v = std::uniform_int_distribution<int>(2, 5)(rng);
        int m = std::uniform_int_distribution<int>(v - 1, 8)(rng);
        s.inst = random_graph_instance(v, m, 6, rng);
    } else {
        int n = std::uniform_int_distribution<int>(2, max_n)(rng);
        int sets = std::uniform_int_distribution<int>(1, 4)(rng);
        s.inst = random_set_instance(p, n, sets, 5, 6, rng);
    }
    s.real = random_grid_values(s.inst, rng);
    s.pred = random_grid_values(s.inst, rng);
    return s;
}

// Single set (or disjoint sets) sorting instance.
inline Sample random_single_set_sorting(std::mt19937_64& rng, int max_n = 10) {
    Sample s;
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    s.inst = random_set_instance(Problem::Sorting, n, 1, 2, 6, rng);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    s.inst.sets = {all};
    s.real = random_grid_values(s.inst, rng);
    s.pred = random_grid_values(s.inst, rng);
    return s;
}

inline int open_count(const Instance& inst) {
    int k = 0;
    for (const auto& iv : inst.intervals) k += iv.is_open();
    return k;
}

}  // namespace testsupport
