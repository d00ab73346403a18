#pragma once

#include <set>
#include <vector>

#include "expunc/graph.hpp"
#include "expunc/model.hpp"
#include "expunc/run.hpp"
#include "expunc/vertex_cover.hpp"

namespace expunc {

enum class Recovery { A, B };

// In-tree flags per edge of the instance.
struct LimitTreePair {
    std::vector<char> lower;
    std::vector<char> upper;
    bool equal() const { return lower == upper; }
};

LimitTreePair limit_trees(const Instance& inst, const std::vector<Interval>& eff);

// Query state of a spanning tree run together with the graph rewrites the
// solver applies: edges whose role is settled are deleted (never in the
// tree) or contracted (always in the tree). Edge ids stay those of the input.
class MstState {
public:
    MstState(const Instance& inst, QueryState& oracle);

    const Instance& instance() const { return *inst_; }
    QueryState& oracle() { return *st_; }
    bool active(int e) const { return active_[e] != 0; }
    bool open(int e) const { return active(e) && st_->effective_interval(e).is_open(); }

    // Active edges on the contracted graph: local index k maps to ids[k].
    struct View {
        EdgeList g;
        std::vector<int> ids;
        std::vector<Interval> iv;
        std::vector<char> tree;  // lower limit tree
    };
    View view();

    // Queries mandatory edges until the lower and upper limit trees agree
    // and are unique, removing trivial edges along the way. Returns the ids queried.
    std::vector<int> preprocess_unique();

    // Every cycle closed by a non-tree edge satisfies pred_f >= U_e and
    // pred_e <= L_f for its tree edges e. Expects a preprocessed state.
    bool is_pred_mandatory_free(const Values& pred);

    std::vector<int> phase1(const Values& pred, int gamma);
    std::vector<int> phase2(Recovery recovery, int* otherwise = nullptr);

    // Bipartite graph between open non-tree edges and the open tree edges on
    // their cycles that intersect them.
    VcInstance conflict_graph();

    void delete_edge(int e);
    void contract_edge(int e);

private:
    Scalar ask(int e, std::vector<int>& log);

    const Instance* inst_;
    QueryState* st_;
    UnionFind uf_;
    std::vector<char> active_;
};

RunResult run_mst(const Instance& inst, const Values& pred, int gamma, Recovery recovery, QueryState& oracle);

RunResult run_cycle_baseline(const Instance& inst, QueryState& oracle);

}  // namespace expunc
