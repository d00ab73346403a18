#include "expunc/errors.hpp"

#include <algorithm>
#include <numeric>

#include "expunc/graph.hpp"
#include "expunc/verifier.hpp"

namespace expunc {

std::vector<std::vector<int>> interaction_sets(const Instance& inst) {
    const int n = inst.size();
    std::vector<std::vector<int>> out(n);
    if (inst.is_graph()) {
        auto block = edge_blocks(edge_list(inst));
        int blocks = 0;
        for (int b : block) blocks = std::max(blocks, b + 1);
        std::vector<std::vector<int>> members(blocks);
        for (int e = 0; e < n; ++e) members[block[e]].push_back(e);
        for (int e = 0; e < n; ++e)
            for (int f : members[block[e]])
                if (f != e) out[e].push_back(f);
    } else {
        for (const auto& s : inst.sets)
            for (int i : s)
                for (int j : s)
                    if (i != j) out[i].push_back(j);
    }
    for (auto& v : out) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return out;
}

std::vector<int> interaction_set(const Instance& inst, int i) {
    if (i < 0 || i >= inst.size()) throw ContractViolation("invalid element id");
    return interaction_sets(inst)[i];
}

int count_errors(const Values& pred, const Values& real) {
    if (pred.size() != real.size()) throw ContractViolation("value vectors differ in length");
    int k = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) k += pred[i] != real[i];
    return k;
}

int boundary_passes(const Instance& inst, const std::vector<int>& others, const Scalar& a, const Scalar& b) {
    if (a == b) return 0;
    int h = 0;
    for (int j : others) {
        const Interval& iv = inst.intervals[j];
        if (iv.is_trivial()) {
            const Scalar& w = iv.value();
            h += (a < w && w < b) || (b < w && w < a);
        } else {
            h += (a <= iv.lower()) != (b <= iv.lower());
            h += (a < iv.upper()) != (b < iv.upper());
        }
    }
    return h;
}

std::vector<int> hop_distance(const Instance& inst, const Values& pred, const Values& real) {
    auto a = interaction_sets(inst);
    std::vector<int> h(inst.size(), 0);
    for (int i = 0; i < inst.size(); ++i) h[i] = boundary_passes(inst, a[i], pred[i], real[i]);
    return h;
}

int symmetric_difference_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
    return static_cast<int>(d.size());
}

MandatoryDistance mandatory_query_distance(const Instance& inst, const Values& pred, const Values& real) {
    MandatoryDistance md;
    md.pred_mandatory = mandatory_elements(inst, inst.intervals, pred);
    md.real_mandatory = mandatory_elements(inst, inst.intervals, real);
    md.k = symmetric_difference_size(md.pred_mandatory, md.real_mandatory);
    return md;
}

ErrorReport error_report(const Instance& inst, const Values& pred, const Values& real) {
    check_values(inst, pred, "prediction");
    check_values(inst, real, "realization");
    ErrorReport r;
    r.k_count = count_errors(pred, real);
    r.hops = hop_distance(inst, pred, real);
    r.k_hop = std::accumulate(r.hops.begin(), r.hops.end(), 0);
    auto md = mandatory_query_distance(inst, pred, real);
    r.pred_mandatory = std::move(md.pred_mandatory);
    r.real_mandatory = std::move(md.real_mandatory);
    r.k_mandatory = md.k;
    return r;
}

}  // namespace expunc
