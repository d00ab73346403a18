#include "expunc/vertex_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>

namespace expunc {

namespace {

class BranchAndBound {
public:
    explicit BranchAndBound(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {
        const int k = static_cast<int>(adj_.size());
        best_ = k;
        best_set_ = k == 64 ? ~0ULL : ((1ULL << k) - 1);
    }

    std::uint64_t run() {
        std::uint64_t all = adj_.size() == 64 ? ~0ULL : ((1ULL << adj_.size()) - 1);
        solve(all, 0, 0);
        return best_set_;
    }

private:
    int degree(int v, std::uint64_t alive) const { return std::popcount(adj_[v] & alive); }

    int matching_bound(std::uint64_t alive) const {
        int m = 0;
        std::uint64_t free = alive;
        while (free) {
            int v = std::countr_zero(free);
            free &= free - 1;
            std::uint64_t nb = adj_[v] & free;
            if (nb) {
                free &= ~(1ULL << std::countr_zero(nb));
                ++m;
            }
        }
        return m;
    }

    void solve(std::uint64_t alive, std::uint64_t chosen, int cnt) {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                if (!(alive >> v & 1)) continue;
                int d = degree(v, alive);
                if (d == 0) {
                    alive &= ~(1ULL << v);
                    changed = true;
                } else if (d == 1) {
                    int u = std::countr_zero(adj_[v] & alive);
                    chosen |= 1ULL << u;
                    ++cnt;
                    alive &= ~((1ULL << u) | (1ULL << v));
                    changed = true;
                }
            }
        }
        if (cnt >= best_) return;
        int max_v = -1, max_d = 0, twice_edges = 0;
        for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = degree(v, alive);
            twice_edges += d;
            if (d > max_d) {
                max_d = d;
                max_v = v;
            }
        }
        if (max_v < 0) {
            best_ = cnt;
            best_set_ = chosen;
            return;
        }
        int edges = twice_edges / 2;
        int lb = std::max((edges + max_d - 1) / max_d, matching_bound(alive));
        if (cnt + lb >= best_) return;

        solve(alive & ~(1ULL << max_v), chosen | (1ULL << max_v), cnt + 1);
        std::uint64_t nb = adj_[max_v] & alive;
        solve(alive & ~nb & ~(1ULL << max_v), chosen | nb, cnt + std::popcount(nb));
    }

    std::vector<std::uint64_t> adj_;
    int best_;
    std::uint64_t best_set_;
};

std::vector<int> general_cover(const VcInstance& g, int limit) {
    std::unordered_map<int, int> index;
    for (int v : g.vertices) index.emplace(v, static_cast<int>(index.size()));
    for (auto [a, b] : g.edges) {
        if (!index.count(a)) index.emplace(a, static_cast<int>(index.size()));
        if (!index.count(b)) index.emplace(b, static_cast<int>(index.size()));
    }
    const int n = static_cast<int>(index.size());
    std::vector<int> label(n);
    for (auto [v, k] : index) label[k] = v;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.edges) {
        if (a == b) throw ContractViolation("vertex cover instance has a loop");
        adj[index[a]].push_back(index[b]);
        adj[index[b]].push_back(index[a]);
    }

    std::vector<int> comp(n, -1), cover;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1 || adj[s].empty()) continue;
        std::vector<int> members{s};
        comp[s] = s;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (int y : adj[members[k]])
                if (comp[y] == -1) {
                    comp[y] = s;
                    members.push_back(y);
                }
        if (static_cast<int>(members.size()) > limit || members.size() > 64)
            throw std::length_error("vertex cover component with " + std::to_string(members.size()) +
                                    " vertices exceeds the limit of " + std::to_string(std::min(limit, 64)));
        std::sort(members.begin(), members.end(), [&](int x, int y) { return label[x] < label[y]; });
        std::unordered_map<int, int> local;
        for (int k = 0; k < static_cast<int>(members.size()); ++k) local[members[k]] = k;
        std::vector<std::uint64_t> masks(members.size(), 0);
        for (int k = 0; k < static_cast<int>(members.size()); ++k)
            for (int y : adj[members[k]]) masks[k] |= 1ULL << local[y];
        std::uint64_t pick = BranchAndBound(std::move(masks)).run();
        for (; pick; pick &= pick - 1) cover.push_back(label[members[std::countr_zero(pick)]]);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::vector<int> interval_cover(const VcInstance& g) {
    if (g.intervals.size() != g.vertices.size()) throw ContractViolation("interval graph needs one interval per vertex");
    std::vector<int> order(g.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& x = g.intervals[a];
        const auto& y = g.intervals[b];
        if (x.upper() != y.upper()) return x.upper() < y.upper();
        return g.vertices[a] < g.vertices[b];
    });
    std::vector<int> cover;
    std::optional<Scalar> last;
    for (int k : order) {
        const Interval& iv = g.intervals[k];
        if (!last || !(iv.lower() < *last)) {
            last = iv.upper();
        } else {
            cover.push_back(g.vertices[k]);
        }
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace

std::map<int, int> complete_matching(const std::vector<int>& left, const std::vector<std::pair<int, int>>& edges,
                                     std::map<int, int> mate) {
    std::set<int> is_left(left.begin(), left.end());
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : edges) {
        int l = is_left.count(a) ? a : b;
        int r = l == a ? b : a;
        if (!is_left.count(l) || is_left.count(r)) throw ContractViolation("edge does not cross the bipartition");
        adj[l].push_back(r);
    }
    for (auto& [l, rs] : adj) std::sort(rs.begin(), rs.end());

    std::set<int> visited;
    std::function<bool(int)> augment = [&](int l) -> bool {
        for (int r : adj[l]) {
            if (!visited.insert(r).second) continue;
            auto it = mate.find(r);
            if (it == mate.end() || augment(it->second)) {
                mate[l] = r;
                mate[r] = l;
                return true;
            }
        }
        return false;
    };
    std::vector<int> order = left;
    std::sort(order.begin(), order.end());
    for (int l : order) {
        if (mate.count(l) || !adj.count(l)) continue;
        visited.clear();
        augment(l);
    }
    return mate;
}

std::vector<int> konig_cover(const std::vector<int>& left, const std::vector<std::pair<int, int>>& edges,
                             const std::map<int, int>& mate) {
    std::set<int> is_left(left.begin(), left.end());
    std::map<int, std::vector<int>> adj;
    std::set<int> touched;
    for (auto [a, b] : edges) {
        int l = is_left.count(a) ? a : b;
        int r = l == a ? b : a;
        adj[l].push_back(r);
        touched.insert(l);
        touched.insert(r);
    }
    std::set<int> z;
    std::vector<int> stack;
    for (int l : touched)
        if (is_left.count(l) && !mate.count(l)) {
            z.insert(l);
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : adj[l]) {
            auto m = mate.find(l);
            if (m != mate.end() && m->second == r) continue;
            if (!z.insert(r).second) continue;
            auto back = mate.find(r);
            if (back != mate.end() && z.insert(back->second).second) stack.push_back(back->second);
        }
    }
    std::vector<int> cover;
    for (int x : touched) {
        bool in_z = z.count(x) > 0;
        if (is_left.count(x) ? !in_z : in_z) cover.push_back(x);
    }
    return cover;
}

bool is_vertex_cover(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& cover) {
    std::set<int> c(cover.begin(), cover.end());
    for (auto [a, b] : edges)
        if (!c.count(a) && !c.count(b)) return false;
    return true;
}

VcResult min_vertex_cover(const VcInstance& g, int component_limit) {
    VcResult res;
    switch (g.kind) {
        case VcKind::General:
            res.cover = general_cover(g, component_limit);
            break;
        case VcKind::IntervalGraph:
            res.cover = interval_cover(g);
            break;
        case VcKind::Bipartite:
            res.mate = complete_matching(g.left, g.edges, {});
            res.cover = konig_cover(g.left, g.edges, res.mate);
            break;
    }
    return res;
}

}  // namespace expunc
