#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "expunc/campaign.hpp"
#include "expunc/errors.hpp"
#include "expunc/generate.hpp"
#include "expunc/learning.hpp"
#include "expunc/minimum.hpp"
#include "expunc/mst.hpp"
#include "expunc/sorting.hpp"
#include "expunc/verifier.hpp"
#include "support.hpp"

using namespace expunc;
using testsupport::Sample;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Item {
    Instance inst;
    Values real;
    std::vector<Values> preds;
    int opt = 0;
};

std::vector<Values> prediction_family(const Instance& inst, const Values& real, int count, std::mt19937_64& rng) {
    std::vector<Values> out{real};
    while (static_cast<int>(out.size()) < count) {
        Values p = real;
        auto other = random_grid_values(inst, rng);
        int changes = std::uniform_int_distribution<int>(1, inst.size())(rng);
        for (int k = 0; k < changes; ++k) {
            int i = std::uniform_int_distribution<int>(0, inst.size() - 1)(rng);
            p[i] = other[i];
        }
        out.push_back(p);
    }
    return out;
}

std::vector<Item> corpus(Problem p, int count, int preds, std::uint64_t seed, bool single_set = false) {
    std::mt19937_64 rng(seed);
    std::vector<Item> out;
    while (static_cast<int>(out.size()) < count) {
        Sample s = single_set ? testsupport::random_single_set_sorting(rng, 12) : testsupport::random_sample(p, rng, 12);
        Item it{s.inst, s.real, prediction_family(s.inst, s.real, preds, rng), 0};
        it.opt = brute_force_optimum(it.inst, it.real);
        out.push_back(std::move(it));
    }
    return out;
}

Scalar frac(int a, int b) { return Scalar(a) / Scalar(b); }

int ceil_mul(const Scalar& x, int n) { return static_cast<int>((x * Scalar(n)).ceil()); }

std::string count_detail(long checks, long violations) {
    return std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
}

Outcome criterion1() {
    long checks = 0, bad = 0;
    for (auto [p, n, edges] : {std::tuple{Problem::Minimum, 500, 0}, std::tuple{Problem::Sorting, 500, 0},
                               std::tuple{Problem::Mst, 200, 8}}) {
        std::mt19937_64 rng(100 + static_cast<int>(p));
        for (int t = 0; t < n; ++t) {
            Sample s = testsupport::random_sample(p, rng, 12);
            ++checks;
            if (static_cast<int>(offline_optimum(s.inst, s.real).size()) != brute_force_optimum(s.inst, s.real)) ++bad;
        }
    }
    return {bad == 0, count_detail(checks, bad)};
}

Outcome criterion2(const std::vector<Item>& mins, const std::vector<Item>& sorts, const std::vector<Item>& msts) {
    long checks = 0, bad = 0;
    auto check = [&](int queries, int opt, bool correct) {
        ++checks;
        int limit = correct ? ceil_mul(frac(3, 2), opt) : 2 * opt;
        if (queries > limit) ++bad;
    };
    for (const auto& it : mins)
        for (const auto& pred : it.preds) {
            QueryState st(it.inst, it.real);
            check(run_alg_hop(it.inst, pred, 2, st).queries, it.opt, pred == it.real);
        }
    for (const auto& it : sorts)
        for (const auto& pred : it.preds) {
            QueryState st(it.inst, it.real);
            check(run_sort_single(it.inst, pred, st).queries, it.opt, pred == it.real);
        }
    for (const auto& it : msts)
        for (const auto& pred : it.preds) {
            QueryState st(it.inst, it.real);
            check(run_mst(it.inst, pred, 2, Recovery::A, st).queries, it.opt, pred == it.real);
        }
    return {bad == 0, count_detail(checks, bad)};
}

Outcome criterion3(const std::vector<Item>& mins) {
    long checks = 0, bad = 0;
    for (const auto& it : mins)
        for (const auto& pred : it.preds) {
            int kh = error_report(it.inst, pred, it.real).k_hop;
            for (int g = 2; g <= 4; ++g) {
                QueryState st(it.inst, it.real);
                int q = run_alg_hop(it.inst, pred, g, st).queries;
                Scalar bound = std::min((Scalar(1) + frac(1, g)) * Scalar(it.opt + kh), Scalar(g * it.opt));
                if (g == 2) bound = std::min(bound, frac(3, 2) * Scalar(it.opt) + Scalar(kh));
                ++checks;
                if (Scalar(q) > bound) ++bad;
            }
        }
    return {bad == 0, count_detail(checks, bad)};
}

Outcome criterion4(const std::vector<Item>& mins) {
    long checks = 0, bad = 0;
    for (const auto& it : mins)
        for (const auto& pred : it.preds) {
            int km = error_report(it.inst, pred, it.real).k_mandatory;
            for (int g : {2, 3, 4, std::max(2, it.inst.size())}) {
                QueryState st(it.inst, it.real);
                int q = run_alg_mqd(it.inst, pred, g, st).queries;
                Scalar bound = std::min((Scalar(1) + frac(1, g - 1)) * Scalar(it.opt + km), Scalar(g * it.opt));
                ++checks;
                if (Scalar(q) > bound) ++bad;
            }
        }
    Fixture fx = mandatory_example();
    QueryState st(fx.instance, fx.real);
    auto r = run_alg_mqd(fx.instance, fx.pred, 2, st);
    int opt = static_cast<int>(offline_optimum(fx.instance, fx.real).size());
    bool fixture_ok = r.queries == 2 && opt == 1;
    return {bad == 0 && fixture_ok, count_detail(checks, bad) + "; mandatory example " + std::to_string(r.queries) +
                                        " queries vs opt " + std::to_string(opt)};
}

Outcome criterion5(const std::vector<Item>& sorts) {
    long checks = 0, bad = 0;
    for (const auto& it : sorts)
        for (const auto& pred : it.preds) {
            auto e = error_report(it.inst, pred, it.real);
            QueryState st(it.inst, it.real);
            int q = run_sort_single(it.inst, pred, st).queries;
            for (int k : {e.k_count, e.k_mandatory, e.k_hop}) {
                ++checks;
                if (q > std::min(it.opt + k, 2 * it.opt)) ++bad;
            }
        }
    return {bad == 0, count_detail(checks, bad)};
}

Outcome criterion6(const std::vector<Item>& msts) {
    long checks = 0, bad = 0, extra_bad = 0;
    for (const auto& it : msts)
        for (const auto& pred : it.preds) {
            int kh = error_report(it.inst, pred, it.real).k_hop;
            for (int g = 2; g <= 4; ++g) {
                QueryState st(it.inst, it.real);
                auto r = run_mst(it.inst, pred, g, Recovery::B, st);
                Scalar a = (Scalar(1) + frac(1, g)) * Scalar(it.opt) + (Scalar(5) + frac(1, g)) * Scalar(kh);
                Scalar b(std::max(3 * it.opt, g * it.opt + 1));
                ++checks;
                if (Scalar(r.queries) > std::min(a, b)) ++bad;
                if (r.otherwise_queries > 2 * kh) ++extra_bad;
            }
        }
    return {bad == 0 && extra_bad == 0,
            count_detail(checks, bad) + ", " + std::to_string(extra_bad) + " partner-query violations"};
}

Outcome criterion7(const std::vector<const std::vector<Item>*>& all) {
    long checks = 0, bad = 0;
    for (const auto* c : all)
        for (const auto& it : *c)
            for (const auto& pred : it.preds) {
                auto e = error_report(it.inst, pred, it.real);
                ++checks;
                if (e.k_mandatory > e.k_hop) ++bad;
            }
    Fixture a = hop_example(), b = mandatory_example();
    auto ea = error_report(a.instance, a.pred, a.real);
    auto eb = error_report(b.instance, b.pred, b.real);
    bool fig = ea.k_hop == 5 && ea.hops == std::vector<int>{2, 3, 0, 0} && eb.k_mandatory == 1;
    return {bad == 0 && fig, count_detail(checks, bad) + "; hop example k_h=" + std::to_string(ea.k_hop) +
                                 ", mandatory example k_M=" + std::to_string(eb.k_mandatory)};
}

Outcome criterion8() {
    std::string detail;
    bool ok = true;
    {
        Fixture fx = error_measure(1);
        auto r = run_algorithm({Algo::Witness, 2, Recovery::B}, fx.instance, fx.pred, fx.real);
        ok = ok && r.ratio == Scalar(2);
        detail += "witness ratio " + r.ratio.str();
    }
    for (int beta = 2; beta <= 6; ++beta) {
        Fixture fx = consistency_tradeoff(beta);
        auto r = run_algorithm({Algo::Mqd, beta, Recovery::B}, fx.instance, fx.pred, fx.pred);
        ok = ok && r.ratio <= Scalar(1) + frac(1, beta);
        if (beta == 3) detail += "; tradeoff(beta=3) ratio " + r.ratio.str();
    }
    for (auto [a, b] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{8, 2}, std::pair{9, 4}}) {
        Fixture fx = mqd_tradeoff(a, b);
        for (int g = 2; g <= 4; ++g) {
            auto r = run_algorithm({Algo::Mqd, g, Recovery::B}, fx.instance, fx.pred, fx.real);
            ok = ok && r.errors.k_mandatory == 0 &&
                 r.ratio <= Scalar(1) + frac(1, g - 1) + frac(1, r.opt);
        }
    }
    return {ok, detail};
}

Outcome criterion9() {
    bool ok = true;
    long fixtures = 0;
    std::mt19937_64 rng(900);
    for (int t = 0; t < 60; ++t) {
        Sample s = testsupport::random_sample(t % 3 == 2 ? Problem::Mst : (t % 3 ? Problem::Sorting : Problem::Minimum),
                                              rng, 10);
        if (s.inst.size() > 10) continue;
        TrainingSet train;
        for (int k = 0; k < 15; ++k) train.push_back(random_grid_values(s.inst, rng));
        auto p = erm_mandatory(s.inst, train);
        Scalar got = empirical_mandatory_error(s.inst, train, p);
        Scalar best = got;
        const int n = s.inst.size();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> q;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) q.push_back(i);
            best = std::min(best, empirical_mandatory_error(s.inst, train, q));
        }
        ++fixtures;
        ok = ok && got == best;
    }
    auto fx = domination_fixture();
    auto train = sample_training(fx.instance, fx.distribution, 10000, 7);
    auto p = erm_mandatory(fx.instance, train);
    double err = empirical_mandatory_error(fx.instance, train, p).to_double();
    bool fig = p == std::vector<int>{0, 2, 4} && std::abs(err - 1.2401) <= 0.05;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%ld power-set checks; learned set size %zu, empirical k_M %.4f", fixtures,
                  p.size(), err);
    return {ok && fig, buf};
}

std::vector<CampaignRow> trend_rows(int instances) {
    GenConfig cfg;
    cfg.seed = 2024;
    cfg.roots = 6;
    cfg.preds_per_bin = 8;
    Campaign c;
    c.corpus = synthetic_minimum_corpus(instances, cfg);
    c.algorithms = {{Algo::Witness, 2, Recovery::B}, {Algo::Hop, 2, Recovery::B}, {Algo::Mqd, 2, Recovery::B},
                    {Algo::Mqd, 0, Recovery::B}};
    c.bin_width = Scalar(1, 5);
    return run_campaign(c);
}

Outcome criterion10(const std::vector<CampaignRow>& rows) {
    double lo = 1e9, hi = -1e9;
    bool b_ok = true, c_ok = true;
    const int dense = 30;
    std::map<int, std::map<std::string, double>> by_bin;
    std::map<int, int> runs;
    for (const auto& r : rows) {
        by_bin[r.bin][r.algorithm + "/" + std::to_string(r.gamma)] = r.mean_cr;
        runs[r.bin] = r.runs;
    }
    for (const auto& [bin, m] : by_bin) {
        auto w = m.find("witness/2");
        if (w == m.end()) continue;
        if (runs[bin] >= dense) {
            lo = std::min(lo, w->second);
            hi = std::max(hi, w->second);
        }
        auto h = m.find("hop/2");
        if (Scalar(bin) * Scalar(1, 5) < Scalar(7, 5) && h != m.end() && h->second > w->second) c_ok = false;
        if (bin == 0) {
            auto a = m.find("mqd/0"), b = m.find("mqd/2");
            if (a != m.end() && b != m.end() && a->second > b->second) b_ok = false;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu bins; witness spread %.3f over bins with >= 30 runs; gamma=n vs 2 at bin 0 %s; hop <= witness %s",
                  by_bin.size(), hi - lo, b_ok ? "ok" : "violated", c_ok ? "ok" : "violated");
    return {hi - lo < 0.3 && b_ok && c_ok && !by_bin.empty(), buf};
}

Outcome criterion11() {
    GenConfig cfg;
    cfg.seed = 77;
    cfg.roots = 5;
    Campaign c;
    c.corpus = synthetic_minimum_corpus(10, cfg);
    c.algorithms = {{Algo::Witness, 2, Recovery::B}, {Algo::Hop, 3, Recovery::B}, {Algo::Mqd, 2, Recovery::B}};
    std::string a = campaign_csv(run_campaign(c));
    c.corpus = synthetic_minimum_corpus(10, cfg);
    std::string b = campaign_csv(run_campaign(c));
    return {a == b && a.size() > 50, std::to_string(a.size()) + " bytes compared"};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int k, const char* title, const std::function<Outcome()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %s  %s  (%s; %.1fs)\n", k, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    };

    std::vector<Item> mins, sorts, msts, msts_wide;
    report(1, "offline optimum matches exhaustive search", criterion1);
    mins = corpus(Problem::Minimum, 600, 12, 21);
    sorts = corpus(Problem::Sorting, 500, 12, 22, true);
    msts = corpus(Problem::Mst, 250, 20, 23);
    report(2, "consistency and robustness", [&] { return criterion2(mins, sorts, msts); });
    report(3, "hop-sensitive minimum algorithm bounds", [&] { return criterion3(mins); });
    report(4, "mandatory-distance minimum algorithm bounds", [&] { return criterion4(mins); });
    report(5, "single-set sorting bounds", [&] { return criterion5(sorts); });
    report(6, "spanning tree recovery B bounds", [&] { return criterion6(msts); });
    report(7, "k_M <= k_h and error examples", [&] { return criterion7({&mins, &sorts, &msts}); });
    report(8, "lower-bound fixtures", criterion8);
    report(9, "learning", criterion9);
    report(10, "experiment trends", [&] { return criterion10(trend_rows(100)); });
    report(11, "deterministic campaign output", criterion11);
    return failed == 0 ? 0 : 1;
}
