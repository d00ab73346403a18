#include "expunc/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "expunc/minimum.hpp"
#include "expunc/sorting.hpp"
#include "expunc/verifier.hpp"

namespace expunc {

namespace {

const std::pair<Algo, const char*> kNames[] = {
    {Algo::Hop, "hop"},           {Algo::Mqd, "mqd"},         {Algo::Witness, "witness"},
    {Algo::SortSingle, "sort-single"}, {Algo::SortHop, "sort-hop"}, {Algo::SortMqd, "sort-mqd"},
    {Algo::Mst, "mst"},           {Algo::CycleBaseline, "cycle"},
};

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

std::string AlgoSpec::name() const {
    for (auto [a, n] : kNames)
        if (a == algo) {
            std::string s = n;
            if (algo == Algo::Mst) s += recovery == Recovery::A ? "-A" : "-B";
            return s;
        }
    return "?";
}

AlgoSpec AlgoSpec::parse(const std::string& name, int gamma, Recovery recovery) {
    for (auto [a, n] : kNames)
        if (name == n) return {a, gamma, recovery};
    if (name == "mst-A") return {Algo::Mst, gamma, Recovery::A};
    if (name == "mst-B") return {Algo::Mst, gamma, Recovery::B};
    throw ContractViolation("unknown algorithm: " + name);
}

RunResult run_algorithm(const AlgoSpec& spec, const Instance& inst, const Values& pred, const Values& real) {
    QueryState st(inst, real);
    RunResult r;
    const int gamma = spec.gamma > 0 ? spec.gamma : std::max(2, inst.size());
    switch (spec.algo) {
        case Algo::Hop: r = run_alg_hop(inst, pred, gamma, st); break;
        case Algo::Mqd: r = run_alg_mqd(inst, pred, gamma, st); break;
        case Algo::Witness: r = run_witness_baseline(inst, st); break;
        case Algo::SortSingle: r = run_sort_single(inst, pred, st); break;
        case Algo::SortHop: r = run_sort_general(inst, pred, gamma, SortAlgorithm::Hop, st); break;
        case Algo::SortMqd: r = run_sort_general(inst, pred, gamma, SortAlgorithm::Mqd, st); break;
        case Algo::Mst: r = run_mst(inst, pred, gamma, spec.recovery, st); break;
        case Algo::CycleBaseline: r = run_cycle_baseline(inst, st); break;
    }
    evaluate(r, inst, pred, real);
    return r;
}

std::vector<CampaignRow> run_campaign(const Campaign& c) {
    if (!(c.bin_width > Scalar(0))) throw ContractViolation("bin width must be positive");
    struct Job {
        int item, pred;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < static_cast<int>(c.corpus.size()); ++i)
        for (int p = 0; p < static_cast<int>(c.corpus[i].preds.size()); ++p) jobs.push_back({i, p});

    std::vector<int> opt(c.corpus.size(), 0);
    for (std::size_t i = 0; i < c.corpus.size(); ++i) {
        const auto& item = c.corpus[i];
        opt[i] = static_cast<int>(offline_optimum(item.instance, item.real).size());
        int open = 0;
        for (const auto& iv : item.instance.intervals) open += iv.is_open();
        if (open <= 12 && brute_force_optimum(item.instance, item.real) != opt[i])
            throw InvariantViolation("offline optimum disagrees with exhaustive search");
    }

    struct Outcome {
        int bin = -1;
        std::vector<double> ratio;
    };
    std::vector<Outcome> out(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (!failed) {
            std::size_t k = next++;
            if (k >= jobs.size()) return;
            try {
                const auto& item = c.corpus[jobs[k].item];
                const Values& pred = item.preds[jobs[k].pred];
                const int o = opt[jobs[k].item];
                if (o == 0) continue;
                auto md = mandatory_query_distance(item.instance, pred, item.real);
                Scalar rel = Scalar(md.k) / Scalar(o);
                out[k].bin = static_cast<int>((rel / c.bin_width).floor());
                for (const auto& spec : c.algorithms) {
                    auto r = run_algorithm(spec, item.instance, pred, item.real);
                    out[k].ratio.push_back(r.ratio.to_double());
                }
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    int threads = c.threads > 0 ? c.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, std::max<std::size_t>(1, jobs.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    struct Acc {
        double sum = 0, max = 0;
        int runs = 0;
    };
    std::map<std::pair<int, int>, Acc> acc;
    for (const auto& o : out) {
        if (o.bin < 0) continue;
        for (std::size_t a = 0; a < o.ratio.size(); ++a) {
            Acc& x = acc[{o.bin, static_cast<int>(a)}];
            x.sum += o.ratio[a];
            x.max = std::max(x.max, o.ratio[a]);
            ++x.runs;
        }
    }
    std::vector<CampaignRow> rows;
    for (const auto& [key, x] : acc) {
        CampaignRow r;
        r.bin = key.first;
        r.bin_start = c.bin_width * Scalar(key.first);
        r.algorithm = c.algorithms[key.second].name();
        r.gamma = c.algorithms[key.second].gamma;
        r.mean_cr = x.sum / x.runs;
        r.max_cr = x.max;
        r.runs = x.runs;
        rows.push_back(r);
    }
    return rows;
}

std::string campaign_csv(const std::vector<CampaignRow>& rows) {
    std::ostringstream os;
    os << "error_bin,algorithm,gamma,mean_cr,max_cr,runs\n";
    for (const auto& r : rows)
        os << decimal(r.bin_start.to_double()) << ',' << r.algorithm << ','
           << (r.gamma > 0 ? std::to_string(r.gamma) : std::string("n")) << ',' << decimal(r.mean_cr)
           << ',' << decimal(r.max_cr) << ',' << r.runs << '\n';
    return os.str();
}

std::vector<CorpusItem> synthetic_minimum_corpus(int instances, const GenConfig& cfg, int variables, int clauses) {
    cfg.validate();
    std::vector<CorpusItem> out;
    for (int k = 0; k < instances; ++k) {
        GenConfig local = cfg;
        local.seed = cfg.seed + static_cast<std::uint64_t>(k);
        auto pool = clause_intervals(parse_cnf(random_cnf(variables, clauses, 3, local.seed)));
        CorpusItem item;
        item.instance = gen_minimum_instance(pool, local);
        if (item.instance.sets.empty()) continue;
        item.real = gen_true_values(item.instance, local.seed).values;
        for (auto& p : gen_predictions(item.instance, item.real, local)) item.preds.push_back(std::move(p.pred));
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<FixtureReport> verify_fixture(const Fixture& fx, const std::vector<AlgoSpec>& algorithms) {
    std::vector<FixtureReport> out;
    for (const auto& spec : algorithms) {
        auto r = run_algorithm(spec, fx.instance, fx.pred, fx.real);
        FixtureReport rep;
        rep.fixture = fx.name;
        rep.algorithm = spec.name() + "/" + (spec.gamma > 0 ? std::to_string(spec.gamma) : std::string("n"));
        rep.queries = r.queries;
        rep.opt = r.opt;
        rep.ratio = r.ratio;
        rep.below_floor = r.queries < r.opt;
        out.push_back(rep);
    }
    return out;
}

}  // namespace expunc
