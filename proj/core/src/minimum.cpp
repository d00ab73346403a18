#include "expunc/minimum.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "expunc/verifier.hpp"

namespace expunc {

namespace {

struct SetView {
    const std::vector<int>* members;
    int first;
    int second;  // -1 for singletons
};

std::vector<SetView> unsolved_sets(const Instance& inst, const std::vector<Interval>& eff) {
    std::vector<SetView> out;
    for (const auto& s : inst.sets) {
        if (set_solved(inst.problem, eff, s)) continue;
        int a = leftmost(eff, s);
        int b = -1;
        for (int x : s)
            if (x != a && (b < 0 || leftmost_before(eff, x, b))) b = x;
        out.push_back({&s, a, b});
    }
    return out;
}

bool contains_pair(const std::vector<int>& s, int a, int b) {
    return std::find(s.begin(), s.end(), a) != s.end() && std::find(s.begin(), s.end(), b) != s.end();
}

std::set<std::pair<int, int>> enforce_pairs(const Instance& inst, const std::vector<Interval>& eff,
                                            const Values& pred) {
    std::set<std::pair<int, int>> out;
    for (const auto& v : unsolved_sets(inst, eff)) {
        int a = v.first;
        if (!eff[a].is_open()) continue;
        for (int j : *v.members)
            if (j != a && eff[j].is_open() && eff[a].contains(pred[j])) out.emplace(j, a);
        int b = v.second;
        if (b >= 0 && eff[b].is_open() && eff[b].contains(pred[a])) out.emplace(a, b);
    }
    return out;
}

std::vector<std::set<int>> witness_adjacency(const Instance& inst, const std::vector<Interval>& eff) {
    std::vector<std::set<int>> adj(inst.size());
    for (const auto& v : unsolved_sets(inst, eff)) {
        int a = v.first;
        if (!eff[a].is_open()) continue;
        for (int x : *v.members)
            if (x != a && eff[x].is_open() && intersects(eff[a], eff[x])) {
                adj[a].insert(x);
                adj[x].insert(a);
            }
    }
    return adj;
}

void finish(const Instance& inst, QueryState& st) {
    drain_known_mandatory(inst, st);
    query_dependency_cover(inst, st);
    drain_known_mandatory(inst, st);
    if (!is_solved(inst, st.effective())) throw InvariantViolation("algorithm ended with an unsolved instance");
}

std::vector<int> pred_mandatory(const Instance& inst, const std::vector<Interval>& eff, const Values& pred) {
    return mandatory_elements(inst, eff, pred);
}

}  // namespace

bool enforces(const Instance& inst, const std::vector<Interval>& eff, const Values& pred, int j, int i) {
    if (i == j || !eff[i].is_open() || !eff[j].is_open() || !eff[i].contains(pred[j])) return false;
    for (const auto& v : unsolved_sets(inst, eff)) {
        if (!contains_pair(*v.members, i, j)) continue;
        if (v.first == i) return true;
        if (v.first == j && v.second == i) return true;
    }
    return false;
}

bool witness_pair(const Instance& inst, const std::vector<Interval>& eff, int a, int b) {
    if (a == b || !eff[a].is_open() || !eff[b].is_open() || !intersects(eff[a], eff[b])) return false;
    for (const auto& v : unsolved_sets(inst, eff))
        if (contains_pair(*v.members, a, b) && (v.first == a || v.first == b)) return true;
    return false;
}

std::vector<int> drain_known_mandatory(const Instance& inst, QueryState& st) {
    std::vector<int> done;
    while (true) {
        auto k = known_mandatory(inst, st.effective());
        if (k.empty()) return done;
        st.query(k.front());
        done.push_back(k.front());
    }
}

std::vector<int> query_dependency_cover(const Instance& inst, QueryState& st) {
    auto g = dependency_graph(inst, st.effective());
    auto cover = min_vertex_cover(g).cover;
    for (int id : cover) st.query(id);
    return cover;
}

RunResult run_alg_hop(const Instance& inst, const Values& pred, int gamma, QueryState& st) {
    if (gamma < 2) throw ContractViolation("gamma must be at least 2");
    check_values(inst, pred, "prediction");
    while (true) {
        const int before = st.queries();
        drain_known_mandatory(inst, st);
        int q = 0;
        while (q < gamma - 2) {
            auto p = pred_mandatory(inst, st.effective(), pred);
            if (p.empty()) break;
            st.query(p.front());
            ++q;
            drain_known_mandatory(inst, st);
        }
        const auto& eff = st.effective();
        auto pairs = enforce_pairs(inst, eff, pred);
        auto adj = witness_adjacency(inst, eff);
        bool trio = false;
        for (auto [j, i] : pairs) {
            int l = -1;
            for (int x : adj[j])
                if (x != i) {
                    l = x;
                    break;
                }
            if (l < 0) continue;
            Interval ii = eff[i];
            Scalar wj = st.query(j);
            st.query(l);
            if (ii.contains(wj) && st.effective_interval(i).is_open()) st.query(i);
            trio = true;
            break;
        }
        if (!trio && !pairs.empty()) st.query(pairs.begin()->second);
        if (st.queries() == before) break;
    }
    finish(inst, st);
    return capture(st);
}

RunResult run_alg_mqd(const Instance& inst, const Values& pred, int gamma, QueryState& st,
                      const std::optional<std::vector<int>>& override_set) {
    if (gamma < 2) throw ContractViolation("gamma must be at least 2");
    check_values(inst, pred, "prediction");
    std::set<int> p;
    if (override_set) {
        for (int id : *override_set)
            if (id < 0 || id >= inst.size()) throw ContractViolation("invalid id in prediction mandatory set");
            else if (st.effective_interval(id).is_open()) p.insert(id);
    } else {
        for (int id : pred_mandatory(inst, st.effective(), pred)) p.insert(id);
    }
    while (!p.empty()) {
        auto adj = witness_adjacency(inst, st.effective());
        int pick = -1, b = -1;
        for (int x : p)
            if (!adj[x].empty()) {
                pick = x;
                b = *adj[x].begin();
                break;
            }
        if (pick < 0) break;
        if (static_cast<int>(p.size()) >= gamma - 1) {
            std::set<int> batch{pick};
            for (int x : p) {
                if (static_cast<int>(batch.size()) >= gamma - 1) break;
                batch.insert(x);
            }
            batch.insert(b);
            for (int x : batch) {
                if (st.effective_interval(x).is_open()) st.query(x);
                p.erase(x);
            }
            for (int x : drain_known_mandatory(inst, st)) p.erase(x);
        } else {
            for (int x : p)
                if (st.effective_interval(x).is_open()) st.query(x);
            p.clear();
        }
    }
    finish(inst, st);
    return capture(st);
}

RunResult run_witness_baseline(const Instance& inst, QueryState& st) {
    while (true) {
        drain_known_mandatory(inst, st);
        const auto& eff = st.effective();
        auto sets = unsolved_sets(inst, eff);
        if (sets.empty()) break;
        int a = sets.front().first;
        int b = -1;
        for (int x : *sets.front().members)
            if (x != a && eff[x].is_open() && intersects(eff[a], eff[x]) && (b < 0 || x < b)) b = x;
        if (!eff[a].is_open() || b < 0) throw InvariantViolation("unsolved set without a witness pair");
        st.query(a);
        st.query(b);
    }
    if (!is_solved(inst, st.effective())) throw InvariantViolation("baseline ended unsolved");
    return capture(st);
}

}  // namespace expunc
