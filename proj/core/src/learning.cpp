#include "expunc/learning.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "expunc/errors.hpp"
#include "expunc/verifier.hpp"

namespace expunc {

std::vector<Scalar> discretize_hypotheses(const Instance& inst, int i) {
    if (i < 0 || i >= inst.size()) throw ContractViolation("invalid element id");
    const Interval& own = inst.intervals[i];
    if (own.is_trivial()) throw ContractViolation("hypotheses need an open interval");
    std::set<Scalar> inner;
    auto take = [&](const Scalar& x) {
        if (own.contains(x)) inner.insert(x);
    };
    for (int j : interaction_set(inst, i)) {
        const Interval& iv = inst.intervals[j];
        if (iv.is_trivial()) {
            take(iv.value());
        } else {
            take(iv.lower());
            take(iv.upper());
        }
    }
    std::vector<Scalar> out;
    Scalar prev = own.lower();
    for (const Scalar& b : inner) {
        out.push_back(midpoint(prev, b));
        out.push_back(b);
        prev = b;
    }
    out.push_back(midpoint(prev, own.upper()));
    return out;
}

Values erm_hop(const Instance& inst, const TrainingSet& training) {
    if (training.empty()) throw ContractViolation("training set is empty");
    for (const auto& w : training) check_values(inst, w, "sample");
    auto a = interaction_sets(inst);
    Values out(inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        if (inst.intervals[i].is_trivial()) {
            out[i] = inst.intervals[i].value();
            continue;
        }
        long best = -1;
        for (const Scalar& c : discretize_hypotheses(inst, i)) {
            long total = 0;
            for (const auto& w : training) total += boundary_passes(inst, a[i], c, w[i]);
            if (best < 0 || total < best) {
                best = total;
                out[i] = c;
            }
        }
    }
    return out;
}

std::vector<int> erm_mandatory(const Instance& inst, const TrainingSet& training) {
    if (training.empty()) throw ContractViolation("training set is empty");
    std::vector<int> p(inst.size(), 0);
    for (const auto& w : training) {
        check_values(inst, w, "sample");
        for (int id : mandatory_elements(inst, inst.intervals, w)) ++p[id];
    }
    const int m = static_cast<int>(training.size());
    std::vector<int> out;
    for (int i = 0; i < inst.size(); ++i)
        if (m - p[i] <= p[i]) out.push_back(i);
    return out;
}

Scalar empirical_mandatory_error(const Instance& inst, const TrainingSet& training, const std::vector<int>& p) {
    if (training.empty()) throw ContractViolation("training set is empty");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    long total = 0;
    for (const auto& w : training)
        total += symmetric_difference_size(mandatory_elements(inst, inst.intervals, w), sorted);
    return Scalar(total) / Scalar(static_cast<std::int64_t>(training.size()));
}

std::uint64_t sample_complexity(double eps, double delta, int n, ErrorMeasure measure, int h_max) {
    if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1) || n < 1 || h_max < 1)
        throw ContractViolation("sample complexity parameters out of range");
    double m;
    if (measure == ErrorMeasure::Hop) {
        const double scale = eps / n;
        m = 2.0 * std::log(2.0 * h_max * n / delta) * (2.0 * n) * (2.0 * n) / (scale * scale);
    } else {
        m = 2.0 * (n * std::log(2.0) + std::log(2.0 / delta)) * n * n / (eps * eps);
    }
    return static_cast<std::uint64_t>(std::ceil(m));
}

void check_distribution(const Instance& inst, const Distribution& dist) {
    if (static_cast<int>(dist.support.size()) != inst.size())
        throw ContractViolation("distribution size does not match the instance");
    for (int i = 0; i < inst.size(); ++i) {
        Scalar total(0);
        if (dist.support[i].empty()) throw ContractViolation("empty support");
        for (const auto& [v, p] : dist.support[i]) {
            if (!inst.intervals[i].contains(v)) throw ContractViolation("support value outside its interval");
            if (p <= Scalar(0)) throw ContractViolation("support probability must be positive");
            total += p;
        }
        if (total != Scalar(1)) throw ContractViolation("probabilities must sum to 1");
    }
}

Values sample_values(const Instance& inst, const Distribution& dist, std::mt19937_64& rng) {
    Values w(inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        const auto& sup = dist.support[i];
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double acc = 0;
        w[i] = sup.back().first;
        for (const auto& [v, p] : sup) {
            acc += p.to_double();
            if (u < acc) {
                w[i] = v;
                break;
            }
        }
    }
    return w;
}

TrainingSet sample_training(const Instance& inst, const Distribution& dist, int m, std::uint64_t seed) {
    check_distribution(inst, dist);
    if (m < 1) throw ContractViolation("training set size must be positive");
    std::mt19937_64 rng(seed);
    TrainingSet out;
    out.reserve(m);
    for (int j = 0; j < m; ++j) out.push_back(sample_values(inst, dist, rng));
    return out;
}

LearningFixture domination_fixture() {
    LearningFixture fx;
    Instance& inst = fx.instance;
    inst.problem = Problem::Minimum;
    for (int k = 0; k < 5; ++k) inst.intervals.push_back(Interval::open(Scalar(2 * k), Scalar(2 * k + 3)));
    for (int k = 0; k + 1 < 5; ++k) inst.sets.push_back({k, k + 1});
    const Scalar hi = Scalar::parse("51/100"), lo = Scalar::parse("49/100");
    fx.distribution.support = {
        {{Scalar(1), Scalar(1)}},
        {{Scalar::parse("5/2"), hi}, {Scalar::parse("9/2"), lo}},
        {{Scalar::parse("11/2"), Scalar(1)}},
        {{Scalar::parse("13/2"), lo}, {Scalar::parse("17/2"), hi}},
        {{Scalar(10), Scalar(1)}},
    };
    return fx;
}

}  // namespace expunc
