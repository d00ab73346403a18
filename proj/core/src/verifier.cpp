#include "expunc/verifier.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

namespace expunc {

namespace {

bool set_solved_min(const std::vector<Interval>& eff, const std::vector<int>& s) {
    if (s.size() <= 1) return true;
    int a = -1, b = -1;  // smallest and second smallest lower limit
    for (int id : s) {
        if (a < 0 || eff[id].lower() < eff[a].lower()) {
            b = a;
            a = id;
        } else if (b < 0 || eff[id].lower() < eff[b].lower()) {
            b = id;
        }
    }
    for (int k : s) {
        const Scalar& others = k == a ? eff[b].lower() : eff[a].lower();
        if (eff[k].upper() <= others) return true;
    }
    return false;
}

bool set_solved_sort(const std::vector<Interval>& eff, std::vector<int> s) {
    std::sort(s.begin(), s.end(), [&](int x, int y) {
        if (eff[x].lower() != eff[y].lower()) return eff[x].lower() < eff[y].lower();
        return eff[x].upper() < eff[y].upper();
    });
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!(eff[s[k - 1]].upper() <= eff[s[k]].lower())) return false;
    return true;
}

bool mst_solved(const Instance& inst, const std::vector<Interval>& eff) {
    EdgeList g = edge_list(inst);
    auto tree = kruskal(g, [&](int a, int b) {
        if (eff[a].lower() != eff[b].lower()) return eff[a].lower() < eff[b].lower();
        if (eff[a].upper() != eff[b].upper()) return eff[a].upper() < eff[b].upper();
        return a < b;
    });
    TreePaths tp(g, tree);
    for (int f = 0; f < g.edges(); ++f) {
        if (tree[f]) continue;
        for (int e : tp.path(g.u[f], g.v[f]))
            if (!(eff[e].upper() <= eff[f].lower())) return false;
    }
    return true;
}

Scalar value_of(const std::vector<Interval>& eff, const Values& fill, int j) {
    return eff[j].is_trivial() ? eff[j].value() : fill[j];
}

std::vector<int> mandatory_min(const Instance& inst, const std::vector<Interval>& eff, const Values& fill) {
    std::vector<char> mark(inst.size(), 0);
    for (const auto& s : inst.sets) {
        if (s.size() < 2) continue;
        int a = -1, b = -1;
        std::vector<Scalar> val(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) {
            val[k] = value_of(eff, fill, s[k]);
            int kk = static_cast<int>(k);
            if (a < 0 || val[k] < val[a]) {
                b = a;
                a = kk;
            } else if (b < 0 || val[k] < val[b]) {
                b = kk;
            }
        }
        for (std::size_t k = 0; k < s.size(); ++k) {
            int id = s[k];
            if (!eff[id].is_open()) continue;
            const Scalar& m = static_cast<int>(k) == a ? val[b] : val[a];
            if (eff[id].contains(m)) mark[id] = 1;
        }
    }
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

std::vector<int> mandatory_sort(const Instance& inst, const std::vector<Interval>& eff, const Values& fill) {
    std::vector<char> mark(inst.size(), 0);
    for (const auto& s : inst.sets) {
        std::vector<Scalar> vals;
        for (int id : s) vals.push_back(value_of(eff, fill, id));
        std::sort(vals.begin(), vals.end());
        for (int id : s) {
            if (!eff[id].is_open()) continue;
            auto lo = std::upper_bound(vals.begin(), vals.end(), eff[id].lower());
            auto hi = std::lower_bound(vals.begin(), vals.end(), eff[id].upper());
            // its own fill value always lies inside, so look for a second one
            if (hi - lo >= 2) mark[id] = 1;
        }
    }
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

std::vector<int> mandatory_mst(const Instance& inst, const std::vector<Interval>& eff, const Values& fill) {
    EdgeList g = edge_list(inst);
    Values val(inst.size());
    for (int e = 0; e < inst.size(); ++e) val[e] = value_of(eff, fill, e);
    auto t = replacement_bottleneck(g, val);
    std::vector<int> out;
    for (int e = 0; e < inst.size(); ++e)
        if (eff[e].is_open() && t[e] && eff[e].contains(*t[e])) out.push_back(e);
    return out;
}

std::vector<int> known_min(const Instance& inst, const std::vector<Interval>& eff) {
    std::vector<char> mark(inst.size(), 0);
    for (const auto& s : inst.sets) {
        if (set_solved_min(eff, s)) continue;
        Scalar lmin = eff[s.front()].lower();
        for (int id : s) lmin = std::min(lmin, eff[id].lower());
        for (int i : s) {
            if (!eff[i].is_open() || eff[i].lower() != lmin || mark[i]) continue;
            for (int j : s) {
                if (j == i) continue;
                if (eff[j].is_trivial() ? eff[i].contains(eff[j].value()) : eff[j].upper() <= eff[i].upper()) {
                    mark[i] = 1;
                    break;
                }
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

std::vector<int> known_sort(const Instance& inst, const std::vector<Interval>& eff) {
    std::vector<char> mark(inst.size(), 0);
    for (const auto& s : inst.sets)
        for (int i : s) {
            if (!eff[i].is_open() || mark[i]) continue;
            for (int j : s)
                if (j != i && subset_of(eff[j], eff[i])) {
                    mark[i] = 1;
                    break;
                }
        }
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
        if (mark[i]) out.push_back(i);
    return out;
}

bool sets_pairwise_disjoint(const Instance& inst) {
    std::vector<char> used(inst.size(), 0);
    for (const auto& s : inst.sets)
        for (int id : s) {
            if (used[id]) return false;
            used[id] = 1;
        }
    return true;
}

VcInstance interval_graph_of(const std::vector<Interval>& eff, const std::vector<int>& members) {
    VcInstance g;
    g.kind = VcKind::IntervalGraph;
    std::vector<int> open;
    for (int id : members)
        if (eff[id].is_open()) open.push_back(id);
    std::sort(open.begin(), open.end());
    for (int id : open) {
        g.vertices.push_back(id);
        g.intervals.push_back(eff[id]);
    }
    for (std::size_t a = 0; a < open.size(); ++a)
        for (std::size_t b = a + 1; b < open.size(); ++b)
            if (intersects(eff[open[a]], eff[open[b]])) g.edges.emplace_back(open[a], open[b]);
    return g;
}

std::vector<int> all_open(const std::vector<Interval>& eff) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(eff.size()); ++i)
        if (eff[i].is_open()) out.push_back(i);
    return out;
}

}  // namespace

EdgeList edge_list(const Instance& inst) {
    EdgeList g;
    g.n = inst.vertices;
    for (auto [a, b] : inst.ends) {
        g.u.push_back(a);
        g.v.push_back(b);
    }
    return g;
}

std::vector<char> lower_limit_tree(const EdgeList& g, const std::vector<Interval>& iv) {
    return kruskal(g, [&](int a, int b) {
        if (iv[a].lower() != iv[b].lower()) return iv[a].lower() < iv[b].lower();
        if (iv[a].is_trivial() != iv[b].is_trivial()) return iv[a].is_trivial();
        return a < b;
    });
}

std::vector<char> upper_limit_tree(const EdgeList& g, const std::vector<Interval>& iv) {
    return kruskal(g, [&](int a, int b) {
        if (iv[a].upper() != iv[b].upper()) return iv[a].upper() < iv[b].upper();
        if (iv[a].is_trivial() != iv[b].is_trivial()) return iv[b].is_trivial();
        return a < b;
    });
}

std::vector<std::optional<Scalar>> replacement_bottleneck(const EdgeList& g, const Values& value) {
    auto tree = kruskal(g, [&](int a, int b) {
        if (value[a] != value[b]) return value[a] < value[b];
        return a < b;
    });
    TreePaths tp(g, tree);
    std::vector<std::optional<Scalar>> out(g.edges());
    for (int f = 0; f < g.edges(); ++f) {
        if (tree[f]) continue;
        auto path = tp.path(g.u[f], g.v[f]);
        std::optional<Scalar> mx;
        for (int e : path) {
            if (!mx || *mx < value[e]) mx = value[e];
            if (!out[e] || value[f] < *out[e]) out[e] = value[f];
        }
        if (path.empty()) throw InvariantViolation("non-tree edge with an empty tree path");
        out[f] = mx;
    }
    return out;
}

bool set_solved(Problem problem, const std::vector<Interval>& eff, const std::vector<int>& set) {
    if (problem == Problem::Mst) throw ContractViolation("set_solved needs a set instance");
    return problem == Problem::Minimum ? set_solved_min(eff, set) : set_solved_sort(eff, set);
}

bool is_solved(const Instance& inst, const std::vector<Interval>& eff) {
    switch (inst.problem) {
        case Problem::Minimum:
            for (const auto& s : inst.sets)
                if (!set_solved_min(eff, s)) return false;
            return true;
        case Problem::Sorting:
            for (const auto& s : inst.sets)
                if (!set_solved_sort(eff, s)) return false;
            return true;
        case Problem::Mst:
            return mst_solved(inst, eff);
    }
    return false;
}

bool is_mandatory_generic(const Instance& inst, const std::vector<Interval>& eff, const Values& fill, int i) {
    if (i < 0 || i >= inst.size()) throw ContractViolation("invalid element id");
    if (!eff[i].is_open()) return false;
    std::vector<Interval> probe = eff;
    for (int j = 0; j < inst.size(); ++j)
        if (j != i && probe[j].is_open()) probe[j] = Interval::point(fill[j]);
    return !is_solved(inst, probe);
}

std::vector<int> mandatory_elements(const Instance& inst, const std::vector<Interval>& eff, const Values& fill) {
    switch (inst.problem) {
        case Problem::Minimum: return mandatory_min(inst, eff, fill);
        case Problem::Sorting: return mandatory_sort(inst, eff, fill);
        case Problem::Mst: return mandatory_mst(inst, eff, fill);
    }
    return {};
}

std::vector<int> known_mandatory(const Instance& inst, const std::vector<Interval>& eff) {
    switch (inst.problem) {
        case Problem::Minimum: return known_min(inst, eff);
        case Problem::Sorting: return known_sort(inst, eff);
        case Problem::Mst: {
            EdgeList g = edge_list(inst);
            auto tl = lower_limit_tree(g, eff);
            auto tu = upper_limit_tree(g, eff);
            std::vector<int> out;
            for (int e = 0; e < g.edges(); ++e)
                if (tl[e] && !tu[e] && eff[e].is_open()) out.push_back(e);
            return out;
        }
    }
    return {};
}

VcInstance dependency_graph(const Instance& inst, const std::vector<Interval>& eff) {
    VcInstance g;
    std::set<std::pair<int, int>> edges;
    std::set<int> verts;
    auto add = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        edges.emplace(a, b);
        verts.insert(a);
        verts.insert(b);
    };
    switch (inst.problem) {
        case Problem::Minimum:
            for (const auto& s : inst.sets) {
                if (set_solved_min(eff, s)) continue;
                int lm = leftmost(eff, s);
                if (!eff[lm].is_open()) continue;
                for (int j : s)
                    if (j != lm && eff[j].is_open() && intersects(eff[lm], eff[j])) add(lm, j);
            }
            break;
        case Problem::Sorting:
            if (inst.sets.size() == 1) return interval_graph_of(eff, inst.sets.front());
            for (const auto& s : inst.sets)
                for (std::size_t a = 0; a < s.size(); ++a)
                    for (std::size_t b = a + 1; b < s.size(); ++b)
                        if (eff[s[a]].is_open() && eff[s[b]].is_open() && intersects(eff[s[a]], eff[s[b]]))
                            add(s[a], s[b]);
            break;
        case Problem::Mst: {
            g.kind = VcKind::Bipartite;
            EdgeList el = edge_list(inst);
            auto tree = lower_limit_tree(el, eff);
            TreePaths tp(el, tree);
            std::set<int> left;
            for (int f = 0; f < el.edges(); ++f) {
                if (tree[f] || !eff[f].is_open()) continue;
                for (int e : tp.path(el.u[f], el.v[f]))
                    if (eff[e].is_open() && intersects(eff[e], eff[f])) {
                        edges.emplace(f, e);
                        verts.insert(f);
                        verts.insert(e);
                        left.insert(f);
                    }
            }
            g.left.assign(left.begin(), left.end());
            break;
        }
    }
    g.vertices.assign(verts.begin(), verts.end());
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::vector<int> offline_optimum(const Instance& inst, const Values& real, const std::vector<Interval>& eff) {
    std::vector<Interval> cur = eff;
    std::vector<int> chosen;
    auto close = [&] {
        while (true) {
            auto m = mandatory_elements(inst, cur, real);
            if (m.empty()) return;
            for (int id : m) {
                chosen.push_back(id);
                cur[id] = Interval::point(real[id]);
            }
        }
    };
    close();
    if (!is_solved(inst, cur)) {
        std::vector<int> cover;
        if (inst.problem == Problem::Sorting && inst.sets.size() > 1 && sets_pairwise_disjoint(inst)) {
            for (const auto& s : inst.sets) {
                auto part = min_vertex_cover(interval_graph_of(cur, s)).cover;
                cover.insert(cover.end(), part.begin(), part.end());
            }
        } else {
            cover = min_vertex_cover(dependency_graph(inst, cur)).cover;
        }
        for (int id : cover) {
            chosen.push_back(id);
            cur[id] = Interval::point(real[id]);
        }
        close();
    }
    if (!is_solved(inst, cur)) throw InvariantViolation("offline optimum left the instance unsolved");
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

bool is_feasible_query_set(const Instance& inst, const Values& real, const std::vector<int>& ids) {
    return is_solved(inst, reveal(inst.intervals, ids, real));
}

int brute_force_optimum(const Instance& inst, const Values& real, int cap) {
    std::vector<int> open = all_open(inst.intervals);
    if (static_cast<int>(open.size()) > cap)
        throw ContractViolation("brute force needs at most " + std::to_string(cap) + " open elements");
    auto forced = mandatory_elements(inst, inst.intervals, real);
    std::vector<int> rest;
    for (int id : open)
        if (!std::binary_search(forced.begin(), forced.end(), id)) rest.push_back(id);
    auto base = reveal(inst.intervals, forced, real);
    const int r = static_cast<int>(rest.size());
    for (int k = 0; k <= r; ++k) {
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            if (std::popcount(mask) != k) continue;
            auto probe = base;
            for (int b = 0; b < r; ++b)
                if (mask >> b & 1) probe[rest[b]] = Interval::point(real[rest[b]]);
            if (is_solved(inst, probe)) return static_cast<int>(forced.size()) + k;
        }
    }
    throw InvariantViolation("no feasible query set found");
}

Instance reduce_to_minimum(const Instance& sorting) {
    if (sorting.problem == Problem::Mst) throw ContractViolation("reduce_to_minimum needs a set instance");
    Instance out;
    out.problem = Problem::Minimum;
    out.intervals = sorting.intervals;
    std::set<std::pair<int, int>> pairs;
    for (const auto& s : sorting.sets)
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (intersects(sorting.intervals[s[a]], sorting.intervals[s[b]]))
                    pairs.emplace(std::min(s[a], s[b]), std::max(s[a], s[b]));
    for (auto [a, b] : pairs) out.sets.push_back({a, b});
    return out;
}

}  // namespace expunc
