#pragma once

#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace expunc {

class UnionFind {
public:
    explicit UnionFind(int n = 0) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

// Multigraph given by parallel endpoint arrays; edge k joins u[k] and v[k].
struct EdgeList {
    int n = 0;
    std::vector<int> u, v;
    int edges() const { return static_cast<int>(u.size()); }
};

// Kruskal with a strict weak order on edge indices. Returns in-tree flags.
std::vector<char> kruskal(const EdgeList& g, const std::function<bool(int, int)>& before);

// Rooted spanning forest used for tree paths and fundamental cycles.
class TreePaths {
public:
    TreePaths(const EdgeList& g, const std::vector<char>& in_tree);
    // Tree edges on the unique path between a and b (empty if a == b).
    std::vector<int> path(int a, int b) const;
    bool connected(int a, int b) const { return comp_[a] == comp_[b]; }

private:
    std::vector<int> parent_, parent_edge_, depth_, comp_;
};

// Maximal 2-connected blocks by edges; parallel edges share a block.
// Returns block id per edge.
std::vector<int> edge_blocks(const EdgeList& g);

}  // namespace expunc
