#include "expunc/mst.hpp"

#include <algorithm>
#include <map>

#include "expunc/verifier.hpp"

namespace expunc {

namespace {

struct Cycle {
    int f;                // local index of the non-tree edge
    std::vector<int> path;  // local indices of tree edges
};

std::vector<Cycle> cycles_by_lower(const MstState::View& v) {
    TreePaths tp(v.g, v.tree);
    std::vector<Cycle> out;
    for (int k = 0; k < v.g.edges(); ++k)
        if (!v.tree[k]) out.push_back({k, tp.path(v.g.u[k], v.g.v[k])});
    std::sort(out.begin(), out.end(), [&](const Cycle& a, const Cycle& b) {
        const Interval& x = v.iv[a.f];
        const Interval& y = v.iv[b.f];
        if (x.lower() != y.lower()) return x.lower() < y.lower();
        return v.ids[a.f] < v.ids[b.f];
    });
    return out;
}

// Highest upper limit first, smallest id on ties.
bool higher_upper(const MstState::View& v, int a, int b) {
    if (v.iv[a].upper() != v.iv[b].upper()) return v.iv[a].upper() > v.iv[b].upper();
    return v.ids[a] < v.ids[b];
}

std::vector<std::pair<int, int>> sorted_edges(const VcInstance& g) { 
    auto e = g.edges;
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

LimitTreePair limit_trees(const Instance& inst, const std::vector<Interval>& eff) {
    if (!inst.is_graph()) throw ContractViolation("limit trees need a graph instance");
    EdgeList g = edge_list(inst);
    LimitTreePair p{lower_limit_tree(g, eff), upper_limit_tree(g, eff)};
    if (std::count(p.lower.begin(), p.lower.end(), 1) != std::max(inst.vertices - 1, 0))
        throw ContractViolation("graph is not connected");
    return p;
}

MstState::MstState(const Instance& inst, QueryState& oracle)
    : inst_(&inst), st_(&oracle), uf_(inst.vertices), active_(inst.size(), 1) {
    if (!inst.is_graph()) throw ContractViolation("spanning tree instance expected");
}

MstState::View MstState::view() {
    View v;
    v.g.n = inst_->vertices;
    const auto& eff = st_->effective();
    for (int e = 0; e < inst_->size(); ++e) {
        if (!active_[e]) continue;
        int a = uf_.find(inst_->ends[e].first);
        int b = uf_.find(inst_->ends[e].second);
        if (a == b) {
            active_[e] = 0;
            continue;
        }
        v.g.u.push_back(a);
        v.g.v.push_back(b);
        v.ids.push_back(e);
        v.iv.push_back(eff[e]);
    }
    v.tree = lower_limit_tree(v.g, v.iv);
    return v;
}

void MstState::delete_edge(int e) { active_[e] = 0; }

void MstState::contract_edge(int e) {
    uf_.unite(inst_->ends[e].first, inst_->ends[e].second);
    active_[e] = 0;
}

Scalar MstState::ask(int e, std::vector<int>& log) {
    log.push_back(e);
    return st_->query(e);
}

std::vector<int> MstState::preprocess_unique() {
    std::vector<int> log;
    while (true) {
        View v = view();
        auto tu = upper_limit_tree(v.g, v.iv);
        const int m = v.g.edges();
        if (v.tree != tu) {
            int pick = -1;
            for (int k = 0; k < m; ++k)
                if (v.tree[k] && !tu[k] && v.iv[k].is_open()) {
                    pick = k;
                    break;
                }
            if (pick >= 0) {
                ask(v.ids[pick], log);
                continue;
            }
            for (int k = 0; k < m; ++k)
                if (v.tree[k] && !tu[k]) {
                    contract_edge(v.ids[k]);
                    break;
                }
            continue;
        }
        bool rewrote = false;
        for (int k = 0; k < m; ++k) {
            if (!v.iv[k].is_trivial()) continue;
            if (v.tree[k])
                contract_edge(v.ids[k]);
            else
                delete_edge(v.ids[k]);
            rewrote = true;
        }
        if (rewrote) continue;
        bool asked = false;
        for (const auto& c : cycles_by_lower(v)) {
            for (int e : c.path) {
                if (v.iv[e].upper() == v.iv[c.f].upper()) {
                    ask(v.ids[e], log);
                    asked = true;
                } else if (v.iv[e].lower() == v.iv[c.f].lower()) {
                    ask(v.ids[c.f], log);
                    asked = true;
                }
                if (asked) break;
            }
            if (asked) break;
        }
        if (!asked) return log;
    }
}

bool MstState::is_pred_mandatory_free(const Values& pred) {
    View v = view();
    for (const auto& c : cycles_by_lower(v)) {
        const int f = v.ids[c.f];
        for (int k : c.path)
            if (pred[f] < v.iv[k].upper() || pred[v.ids[k]] > v.iv[c.f].lower()) return false;
    }
    return true;
}

std::vector<int> MstState::phase1(const Values& pred, int gamma) {
    if (gamma < 2) throw ContractViolation("gamma must be at least 2");
    check_values(*inst_, pred, "prediction");
    std::vector<int> log;
    auto merge = [&](const std::vector<int>& more) { log.insert(log.end(), more.begin(), more.end()); };
    while (true) {
        merge(preprocess_unique());
        for (int q = 0; q < gamma - 2; ++q) {
            int pick = -1;
            for (int e : mandatory_elements(*inst_, st_->effective(), pred))
                if (open(e)) {
                    pick = e;
                    break;
                }
            if (pick < 0) break;
            ask(pick, log);
            merge(preprocess_unique());
        }

        View v = view();
        const Cycle* bad = nullptr;
        auto cycles = cycles_by_lower(v);
        for (const auto& c : cycles) {
            const int f = v.ids[c.f];
            for (int k : c.path)
                if (pred[f] < v.iv[k].upper() || pred[v.ids[k]] > v.iv[c.f].lower()) {
                    bad = &c;
                    break;
                }
            if (bad) break;
        }
        if (!bad) return log;

        const int fl = bad->f;
        const int f = v.ids[fl];
        const Interval& If = v.iv[fl];
        int ll = bad->path.front();
        for (int k : bad->path)
            if (higher_upper(v, k, ll)) ll = k;
        const int l = v.ids[ll];
        const bool in_l = v.iv[ll].contains(pred[f]);
        const bool in_f = If.contains(pred[l]);

        if (in_l && in_f) {
            ask(f, log);
            ask(l, log);
        } else if (in_l) {
            int lp = -1;
            for (int k : bad->path)
                if (k != ll && intersects(v.iv[k], If) && (lp < 0 || higher_upper(v, k, lp))) lp = k;
            if (lp < 0) {
                Scalar wl = ask(l, log);
                if (If.contains(wl)) {
                    ask(f, log);
                } else {
                    for (int k : bad->path)
                        if (!(st_->effective_interval(v.ids[k]).upper() <= If.lower()))
                            throw InvariantViolation("deleted edge is not maximal on its cycle");
                    delete_edge(f);
                }
            } else {
                Scalar wf = ask(f, log);
                Scalar wl = ask(l, log);
                bool go = v.iv[ll].contains(wf);
                TreePaths tp(v.g, v.tree);
                for (int k = 0; go && k < v.g.edges(); ++k) {
                    if (v.tree[k]) continue;
                    auto p = tp.path(v.g.u[k], v.g.v[k]);
                    if (std::find(p.begin(), p.end(), ll) != p.end() && v.iv[k].contains(wl)) go = false;
                }
                if (go && open(v.ids[lp])) ask(v.ids[lp], log);
            }
        } else {
            int lp = -1;
            for (int k : bad->path)
                if (If.contains(pred[v.ids[k]]) && (lp < 0 || higher_upper(v, k, lp))) lp = k;
            if (lp < 0) throw InvariantViolation("cycle violates the prediction condition without a witness");
            UnionFind parts(v.g.n);
            for (int k = 0; k < v.g.edges(); ++k)
                if (v.tree[k] && k != lp) parts.unite(v.g.u[k], v.g.v[k]);
            std::vector<int> cut;
            for (int k = 0; k < v.g.edges(); ++k)
                if (parts.find(v.g.u[k]) != parts.find(v.g.v[k])) cut.push_back(k);
            int fj = -1;
            for (int k : cut) {
                if (k == lp || k == fl || !intersects(v.iv[k], v.iv[lp])) continue;
                if (fj < 0 || v.iv[k].lower() < v.iv[fj].lower() ||
                    (v.iv[k].lower() == v.iv[fj].lower() && v.ids[k] < v.ids[fj]))
                    fj = k;
            }
            const int lpid = v.ids[lp];
            if (fj < 0) {
                Scalar wf = ask(f, log);
                if (v.iv[lp].contains(wf)) {
                    ask(lpid, log);
                } else {
                    for (int k : cut)
                        if (k != lp && st_->effective_interval(v.ids[k]).lower() < v.iv[lp].upper())
                            throw InvariantViolation("contracted edge is not minimal in its cut");
                    contract_edge(lpid);
                }
            } else {
                Scalar wf = ask(f, log);
                Scalar wlp = ask(lpid, log);
                bool go = If.contains(wlp);
                for (int k : bad->path)
                    if (v.iv[k].contains(wf)) go = false;
                if (go && open(v.ids[fj])) ask(v.ids[fj], log);
            }
        }
    }
}

VcInstance MstState::conflict_graph() {
    View v = view();
    VcInstance g;
    g.kind = VcKind::Bipartite;
    std::set<int> verts, left;
    for (const auto& c : cycles_by_lower(v)) {
        if (!v.iv[c.f].is_open()) continue;
        for (int k : c.path)
            if (v.iv[k].is_open() && intersects(v.iv[k], v.iv[c.f])) {
                g.edges.emplace_back(v.ids[c.f], v.ids[k]);
                verts.insert(v.ids[c.f]);
                verts.insert(v.ids[k]);
                left.insert(v.ids[c.f]);
            }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.vertices.assign(verts.begin(), verts.end());
    g.left.assign(left.begin(), left.end());
    return g;
}

std::vector<int> MstState::phase2(Recovery recovery, int* otherwise) {
    std::vector<int> log;
    auto merge = [&](const std::vector<int>& more) { log.insert(log.end(), more.begin(), more.end()); };
    merge(preprocess_unique());
    int extra = 0;
    std::set<int> w;
    VcInstance bar = conflict_graph();
    VcResult vc = min_vertex_cover(bar);
    while (!bar.edges.empty()) {
        std::set<int> left(bar.left.begin(), bar.left.end());
        std::vector<int> fs, ls;
        for (int e : vc.cover) (left.count(e) ? fs : ls).push_back(e);
        const auto& eff = st_->effective();
        std::sort(fs.begin(), fs.end(), [&](int a, int b) {
            if (eff[a].lower() != eff[b].lower()) return eff[a].lower() < eff[b].lower();
            return a < b;
        });
        std::sort(ls.begin(), ls.end(), [&](int a, int b) {
            if (eff[a].upper() != eff[b].upper()) return eff[a].upper() > eff[b].upper();
            return a < b;
        });
        std::vector<int> order = fs;
        order.insert(order.end(), ls.begin(), ls.end());

        bool changed = false;
        VcInstance next;
        for (int e : order) {
            if (!open(e)) continue;
            ask(e, log);
            merge(preprocess_unique());
            auto mt = vc.mate.find(e);
            if (mt == vc.mate.end()) throw InvariantViolation("cover vertex without a matching partner");
            const int h = mt->second;
            if (!w.count(e) && !w.count(h)) {
                w.insert(h);
            } else if (open(h)) {
                ask(h, log);
                merge(preprocess_unique());
                ++extra;
            }
            next = conflict_graph();
            std::vector<std::pair<int, int>> kept;
            for (auto [a, b] : bar.edges)
                if (open(a) && open(b)) kept.emplace_back(a, b);
            if (kept != sorted_edges(next)) {
                changed = true;
                break;
            }
        }
        if (changed && recovery == Recovery::A) {
            for (int x : w)
                if (open(x)) {
                    ask(x, log);
                    merge(preprocess_unique());
                }
            w.clear();
            bar = conflict_graph();
            vc = min_vertex_cover(bar);
        } else if (changed) {
            std::set<std::pair<int, int>> edges(next.edges.begin(), next.edges.end());
            std::map<int, int> seed;
            for (auto [a, b] : vc.mate)
                if (edges.count({a, b}) || edges.count({b, a})) seed[a] = b;
            bar = next;
            vc.mate = complete_matching(bar.left, bar.edges, seed);
            vc.cover = konig_cover(bar.left, bar.edges, vc.mate);
        } else {
            bar = conflict_graph();
            vc = min_vertex_cover(bar);
        }
    }
    if (otherwise) *otherwise += extra;
    return log;
}

RunResult run_mst(const Instance& inst, const Values& pred, int gamma, Recovery recovery, QueryState& oracle) {
    MstState s(inst, oracle);
    s.preprocess_unique();
    s.phase1(pred, gamma);
    int otherwise = 0;
    s.phase2(recovery, &otherwise);
    if (!is_solved(inst, oracle.effective())) throw InvariantViolation("spanning tree instance left unsolved");
    RunResult r = capture(oracle);
    r.otherwise_queries = otherwise;
    return r;
}

RunResult run_cycle_baseline(const Instance& inst, QueryState& oracle) {
    MstState s(inst, oracle);
    while (true) {
        s.preprocess_unique();
        auto v = s.view();
        TreePaths tp(v.g, v.tree);
        int f = -1, l = -1;
        for (const auto& c : cycles_by_lower(v)) {
            for (int k : c.path)
                if (v.iv[k].is_open() && intersects(v.iv[k], v.iv[c.f]) && (l < 0 || higher_upper(v, k, l))) l = k;
            if (l >= 0) {
                f = c.f;
                break;
            }
        }
        if (f < 0) break;
        oracle.query(v.ids[f]);
        oracle.query(v.ids[l]);
    }
    if (!is_solved(inst, oracle.effective())) throw InvariantViolation("spanning tree instance left unsolved");
    return capture(oracle);
}

}  // namespace expunc
