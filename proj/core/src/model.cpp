#include "expunc/model.hpp"

#include <algorithm>
#include <numeric>

namespace expunc {

Interval Interval::open(Scalar lo, Scalar hi) {
    if (!(lo < hi)) throw ContractViolation("open interval needs L < U, got (" + lo.str() + "," + hi.str() + ")");
    Interval iv;
    iv.trivial_ = false;
    iv.lo_ = lo;
    iv.hi_ = hi;
    return iv;
}

Interval Interval::point(Scalar w) {
    Interval iv;
    iv.trivial_ = true;
    iv.lo_ = w;
    iv.hi_ = w;
    return iv;
}

const Scalar& Interval::value() const {
    if (!trivial_) throw ContractViolation("value() of an open interval");
    return lo_;
}

bool Interval::contains(const Scalar& x) const {
    if (trivial_) return x == lo_;
    return lo_ < x && x < hi_;
}

bool intersects(const Interval& a, const Interval& b) {
    if (a.is_trivial() && b.is_trivial()) return false;
    if (a.is_trivial()) return b.contains(a.value());
    if (b.is_trivial()) return a.contains(b.value());
    return std::max(a.lower(), b.lower()) < std::min(a.upper(), b.upper());
}

bool subset_of(const Interval& inner, const Interval& outer) {
    if (inner.is_trivial()) return outer.contains(inner.value());
    if (outer.is_trivial()) return false;
    return outer.lower() <= inner.lower() && inner.upper() <= outer.upper();
}

const char* problem_tag(Problem p) {
    switch (p) {
        case Problem::Minimum: return "MIN";
        case Problem::Sorting: return "SORT";
        case Problem::Mst: return "MST";
    }
    return "?";
}

void Instance::validate() const {
    const int n = size();
    if (problem == Problem::Mst) {
        if (static_cast<int>(ends.size()) != n) throw ContractViolation("edge count does not match interval count");
        if (vertices <= 0) throw ContractViolation("graph without vertices");
        std::vector<int> parent(vertices);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = vertices;
        for (auto [u, v] : ends) {
            if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw ContractViolation("edge endpoint out of range");
            if (u == v) throw ContractViolation("self loop");
            int a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps != 1) throw ContractViolation("graph is not connected");
        return;
    }
    for (const auto& s : sets) {
        if (s.empty()) throw ContractViolation("empty set");
        std::vector<int> seen = s;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ContractViolation("repeated id in set");
        for (int id : s)
            if (id < 0 || id >= n) throw ContractViolation("set references unknown id " + std::to_string(id));
    }
}

void check_values(const Instance& inst, const Values& values, const char* what) {
    if (static_cast<int>(values.size()) != inst.size())
        throw ContractViolation(std::string(what) + ": expected " + std::to_string(inst.size()) + " values");
    for (int i = 0; i < inst.size(); ++i)
        if (!inst.intervals[i].contains(values[i]))
            throw ContractViolation(std::string(what) + " value " + values[i].str() + " outside interval of element " +
                                    std::to_string(i));
}

bool leftmost_before(const std::vector<Interval>& eff, int a, int b) {
    const Interval& x = eff[a];
    const Interval& y = eff[b];
    if (x.lower() != y.lower()) return x.lower() < y.lower();
    if (x.is_trivial() != y.is_trivial()) return x.is_trivial();
    return a < b;
}

int leftmost(const std::vector<Interval>& eff, const std::vector<int>& set) {
    if (set.empty()) throw ContractViolation("leftmost of an empty set");
    int best = set.front();
    for (int id : set) {
        if (id < 0 || id >= static_cast<int>(eff.size())) throw ContractViolation("invalid id");
        if (leftmost_before(eff, id, best)) best = id;
    }
    return best;
}

QueryState::QueryState(const Instance& inst, Values realization)
    : inst_(&inst), real_(std::move(realization)), eff_(inst.intervals), revealed_(inst.intervals.size(), 0) {
    check_values(inst, real_, "realization");
}

void QueryState::check_id(int i) const {
    if (i < 0 || i >= size()) throw ContractViolation("invalid element id " + std::to_string(i));
}

const Interval& QueryState::effective_interval(int i) const {
    check_id(i);
    return eff_[i];
}

bool QueryState::unqueried(int i) const {
    check_id(i);
    return eff_[i].is_open();
}

bool QueryState::revealed(int i) const {
    check_id(i);
    return revealed_[i] != 0;
}

Scalar QueryState::query(int i) {
    check_id(i);
    if (revealed_[i]) throw ContractViolation("element " + std::to_string(i) + " queried twice");
    if (eff_[i].is_trivial()) throw ContractViolation("element " + std::to_string(i) + " is trivial");
    revealed_[i] = 1;
    eff_[i] = Interval::point(real_[i]);
    transcript_.emplace_back(i, real_[i]);
    return real_[i];
}

std::vector<int> QueryState::queried_ids() const {
    std::vector<int> ids;
    ids.reserve(transcript_.size());
    for (const auto& [id, v] : transcript_) ids.push_back(id);
    return ids;
}

std::vector<Interval> reveal(std::vector<Interval> eff, const std::vector<int>& ids, const Values& values) {
    for (int id : ids) eff[id] = Interval::point(values[id]);
    return eff;
}

}  // namespace expunc
