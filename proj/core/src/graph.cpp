#include "expunc/graph.hpp"

#include <algorithm>

namespace expunc {

std::vector<char> kruskal(const EdgeList& g, const std::function<bool(int, int)>& before) {
    std::vector<int> order(g.edges());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), before);
    UnionFind uf(g.n);
    std::vector<char> in(g.edges(), 0);
    for (int e : order)
        if (uf.unite(g.u[e], g.v[e])) in[e] = 1;
    return in;
}

TreePaths::TreePaths(const EdgeList& g, const std::vector<char>& in_tree)
    : parent_(g.n, -1), parent_edge_(g.n, -1), depth_(g.n, 0), comp_(g.n, -1) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int e = 0; e < g.edges(); ++e) {
        if (!in_tree[e]) continue;
        adj[g.u[e]].emplace_back(g.v[e], e);
        adj[g.v[e]].emplace_back(g.u[e], e);
    }
    int comp = 0;
    std::vector<int> stack;
    for (int r = 0; r < g.n; ++r) {
        if (comp_[r] != -1) continue;
        comp_[r] = comp;
        stack.push_back(r);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, e] : adj[x]) {
                if (comp_[y] != -1) continue;
                comp_[y] = comp;
                parent_[y] = x;
                parent_edge_[y] = e;
                depth_[y] = depth_[x] + 1;
                stack.push_back(y);
            }
        }
        ++comp;
    }
}

std::vector<int> TreePaths::path(int a, int b) const {
    std::vector<int> left, right;
    while (depth_[a] > depth_[b]) {
        left.push_back(parent_edge_[a]);
        a = parent_[a];
    }
    while (depth_[b] > depth_[a]) {
        right.push_back(parent_edge_[b]);
        b = parent_[b];
    }
    while (a != b) {
        left.push_back(parent_edge_[a]);
        a = parent_[a];
        right.push_back(parent_edge_[b]);
        b = parent_[b];
    }
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

std::vector<int> edge_blocks(const EdgeList& g) {
    const int n = g.n;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < g.edges(); ++e) {
        adj[g.u[e]].emplace_back(g.v[e], e);
        adj[g.v[e]].emplace_back(g.u[e], e);
    }
    std::vector<int> disc(n, -1), low(n, 0), block(g.edges(), -1), edge_stack;
    int timer = 0, blocks = 0;

    struct Frame {
        int vertex, via_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.vertex].size()) {
                auto [w, e] = adj[f.vertex][f.next++];
                if (e == f.via_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.vertex]) {
                    edge_stack.push_back(e);
                    low[f.vertex] = std::min(low[f.vertex], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            int p = stack.back().vertex;
            low[p] = std::min(low[p], low[done.vertex]);
            if (low[done.vertex] >= disc[p]) {
                while (true) {
                    int e = edge_stack.back();
                    edge_stack.pop_back();
                    block[e] = blocks;
                    if (e == done.via_edge) break;
                }
                ++blocks;
            }
        }
    }
    return block;
}

}  // namespace expunc
