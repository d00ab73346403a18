#include "expunc/sorting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "expunc/minimum.hpp"
#include "expunc/verifier.hpp"

namespace expunc {

namespace {

// An open member that contains the revealed or trivial value of another member.
int find_value_hit(const std::vector<Interval>& eff, const std::vector<int>& members) {
    for (int i : members) {
        if (!eff[i].is_open()) continue;
        for (int j : members)
            if (j != i && eff[j].is_trivial() && eff[i].contains(eff[j].value())) return i;
    }
    return -1;
}

void mandatory_loop(const std::vector<int>& members, QueryState& st) {
    for (int i; (i = find_value_hit(st.effective(), members)) >= 0;) st.query(i);
}

int find_containing(const std::vector<Interval>& eff, const std::vector<int>& members) {
    for (int i : members) {
        if (!eff[i].is_open()) continue;
        for (int j : members)
            if (j != i && subset_of(eff[j], eff[i])) return i;
    }
    return -1;
}

void solve_set(const Instance& inst, const std::vector<int>& members, const Values& pred, QueryState& st) {
    std::vector<int> order = members;
    std::sort(order.begin(), order.end());
    const auto& eff = st.effective();

    std::map<int, int> pi;
    for (int i : order) {
        if (!eff[i].is_open()) continue;
        for (int j : order) {
            if (j == i) continue;
            const Scalar v = eff[j].is_trivial() ? eff[j].value() : pred[j];
            if (eff[i].contains(v)) {
                pi[i] = j;
                break;
            }
        }
    }

    for (int i; (i = find_containing(st.effective(), order)) >= 0;) st.query(i);

    std::vector<int> s;
    for (auto [i, j] : pi)
        if (st.effective_interval(i).is_open()) s.push_back(i);

    std::map<int, int> parent;
    auto is_ancestor = [&](int anc, int x) {
        for (int cur = x;;) {
            if (cur == anc) return true;
            auto it = parent.find(cur);
            if (it == parent.end()) return false;
            cur = it->second;
        }
    };
    for (int i : s) {
        st.query(i);
        if (!is_ancestor(i, pi[i])) parent[i] = pi[i];
    }

    mandatory_loop(order, st);

    auto depth = [&](int x) {
        int d = 0;
        for (auto it = parent.find(x); it != parent.end(); it = parent.find(it->second)) ++d;
        return d;
    };
    std::map<int, int> clique_size;
    std::set<int> rest(s.begin(), s.end());
    while (!rest.empty()) {
        int best = -1, bd = -1;
        for (int x : rest) {
            int d = depth(x);
            if (d > bd) {
                bd = d;
                best = x;
            }
        }
        auto it = parent.find(best);
        if (it != parent.end()) {
            int root = it->second;
            int size = 0;
            std::vector<int> drop;
            for (int x : rest) {
                auto px = parent.find(x);
                if (px != parent.end() && px->second == root) drop.push_back(x);
            }
            if (rest.count(root)) drop.push_back(root);
            for (int x : drop) {
                rest.erase(x);
                ++size;
            }
            clique_size[root] = size;
        } else {
            clique_size[best] = 1;
            rest.erase(best);
        }
    }
    auto csize = [&](int x) {
        auto it = clique_size.find(x);
        return it == clique_size.end() ? 1 : it->second;
    };

    while (!set_solved(inst.problem, st.effective(), order)) {
        const auto& cur = st.effective();
        std::vector<int> open;
        for (int i : order)
            if (cur[i].is_open()) open.push_back(i);
        std::map<int, std::vector<int>> adj;
        for (int a : open)
            for (int b : open)
                if (a != b && intersects(cur[a], cur[b])) adj[a].push_back(b);
        std::set<int> seen;
        std::vector<int> comp;
        int start = -1;
        for (int a : open) {
            if (adj[a].empty() || seen.count(a)) continue;
            std::vector<int> c{a}, stack{a};
            seen.insert(a);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (seen.insert(y).second) {
                        c.push_back(y);
                        stack.push_back(y);
                    }
            }
            int low = *std::min_element(c.begin(), c.end(), [&](int x, int y) { return leftmost_before(cur, x, y); });
            if (start < 0 || leftmost_before(cur, low, start)) {
                start = low;
                comp = c;
            }
        }
        if (comp.empty()) throw InvariantViolation("unsolved set without intersecting intervals");
        std::size_t edges = 0;
        std::vector<int> ends;
        for (int x : comp) {
            if (adj[x].size() > 2) throw InvariantViolation("intersection component is not a path");
            edges += adj[x].size();
            if (adj[x].size() == 1) ends.push_back(x);
        }
        if (edges / 2 + 1 != comp.size() || ends.size() != 2)
            throw InvariantViolation("intersection component is not a path");
        int first = leftmost_before(cur, ends[0], ends[1]) ? ends[0] : ends[1];
        std::vector<int> path{first};
        for (int prev = -1, x = first; path.size() < comp.size();) {
            int next = adj[x][0] == prev ? adj[x][1] : adj[x][0];
            path.push_back(next);
            prev = x;
            x = next;
        }
        const std::size_t p = path.size();
        std::vector<int> pick;
        if (p % 2 == 1) {
            for (std::size_t k = 1; k < p; k += 2) pick.push_back(path[k]);
        } else if (csize(path[0]) == 1) {
            for (std::size_t k = 0; k < p; k += 2) pick.push_back(path[k]);
        } else {
            for (std::size_t k = 1; k < p; k += 2) pick.push_back(path[k]);
        }
        for (int x : pick) st.query(x);
        mandatory_loop(order, st);
    }
}

}  // namespace

RunResult run_sort_general(const Instance& inst, const Values& pred, int gamma, SortAlgorithm alg,
                           QueryState& oracle) {
    if (inst.problem != Problem::Sorting) throw ContractViolation("sorting instance expected");
    Instance reduced = reduce_to_minimum(inst);
    RunResult r = alg == SortAlgorithm::Hop ? run_alg_hop(reduced, pred, gamma, oracle)
                                            : run_alg_mqd(reduced, pred, gamma, oracle);
    if (!is_solved(inst, oracle.effective())) throw InvariantViolation("sorting instance left unsolved");
    return r;
}

RunResult run_sort_single(const Instance& inst, const Values& pred, QueryState& oracle) {
    if (inst.problem != Problem::Sorting) throw ContractViolation("sorting instance expected");
    check_values(inst, pred, "prediction");
    std::vector<char> used(inst.size(), 0);
    for (const auto& s : inst.sets)
        for (int i : s) {
            if (used[i]) throw ContractViolation("sets must be pairwise disjoint");
            used[i] = 1;
        }
    for (const auto& s : inst.sets) solve_set(inst, s, pred, oracle);
    if (!is_solved(inst, oracle.effective())) throw InvariantViolation("sorting instance left unsolved");
    return capture(oracle);
}

}  // namespace expunc
