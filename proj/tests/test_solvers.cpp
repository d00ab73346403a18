#include <doctest.h>

#include "expunc/minimum.hpp"
#include "expunc/sorting.hpp"
#include "support.hpp"

using namespace expunc;
using testsupport::random_sample;

namespace {

std::vector<int> ids(const RunResult& r) {
    std::vector<int> out;
    for (const auto& [i, v] : r.transcript) out.push_back(i);
    return out;
}

Fixture as_sorting(Fixture fx) {
    fx.instance.problem = Problem::Sorting;
    return fx;
}

}  // namespace

TEST_CASE("enforcement") {
    auto fx = mandatory_example();
    const auto& eff = fx.instance.intervals;
    CHECK(enforces(fx.instance, eff, fx.pred, 1, 0));
    CHECK_FALSE(enforces(fx.instance, eff, fx.real, 1, 0));

    Instance apart;
    apart.intervals = {Interval::open(0, 1), Interval::open(2, 3)};
    apart.sets = {{0, 1}};
    CHECK_FALSE(enforces(apart, apart.intervals, {Scalar(1, 2), Scalar(5, 2)}, 1, 0));
}

TEST_CASE("witness pairs need a shared unsolved set with a leftmost member") {
    auto fx = hop_example();
    CHECK(witness_pair(fx.instance, fx.instance.intervals, 0, 1));
    CHECK_FALSE(witness_pair(fx.instance, fx.instance.intervals, 1, 2));
}

TEST_CASE("hop-sensitive algorithm on the mandatory example") {
    auto fx = mandatory_example();
    QueryState st(fx.instance, fx.real);
    auto r = run_alg_hop(fx.instance, fx.pred, 2, st);
    evaluate(r, fx.instance, fx.pred, fx.real);
    CHECK(ids(r) == std::vector<int>{0});
    CHECK(r.queries == 1);
    CHECK(r.opt == 1);
}

TEST_CASE("mandatory-distance algorithm on the mandatory example") {
    auto fx = mandatory_example();
    QueryState st(fx.instance, fx.real);
    auto r = run_alg_mqd(fx.instance, fx.pred, 2, st);
    evaluate(r, fx.instance, fx.pred, fx.real);
    CHECK(ids(r) == std::vector<int>{0, 1});
    CHECK(r.opt == 1);
    CHECK(r.errors.k_mandatory == 1);
}

TEST_CASE("witness baseline") {
    auto em = error_measure(1);
    QueryState st(em.instance, em.real);
    auto r = run_witness_baseline(em.instance, st);
    evaluate(r, em.instance, em.real, em.real);
    CHECK(r.queries == 2);
    CHECK(r.opt == 1);
    CHECK(r.ratio == Scalar(2));

    Instance apart;
    apart.intervals = {Interval::open(0, 1), Interval::open(2, 3)};
    apart.sets = {{0}, {1}};
    QueryState st2(apart, {Scalar(1, 2), Scalar(5, 2)});
    CHECK(run_witness_baseline(apart, st2).queries == 0);
}

TEST_CASE("gamma must be at least two") {
    auto fx = mandatory_example();
    QueryState st(fx.instance, fx.real);
    CHECK_THROWS_AS(run_alg_hop(fx.instance, fx.pred, 1, st), ContractViolation);
    CHECK_THROWS_AS(run_alg_mqd(fx.instance, fx.pred, 1, st), ContractViolation);
}

TEST_CASE("minimum algorithms leave a solved instance and honor their bounds") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 400; ++t) {
        auto s = random_sample(Problem::Minimum, rng);
        for (int g : {2, 3}) {
            QueryState a(s.inst, s.real);
            auto hop = run_alg_hop(s.inst, s.pred, g, a);
            evaluate(hop, s.inst, s.pred, s.real);
            CHECK(is_solved(a));
            CHECK(hop.queries == static_cast<int>(hop.transcript.size()));
            CHECK(hop.queries <= g * hop.opt);

            QueryState b(s.inst, s.real);
            auto mqd = run_alg_mqd(s.inst, s.pred, g, b);
            evaluate(mqd, s.inst, s.pred, s.real);
            CHECK(is_solved(b));
            CHECK(mqd.queries <= g * mqd.opt);
        }
        QueryState c(s.inst, s.real);
        auto w = run_witness_baseline(s.inst, c);
        evaluate(w, s.inst, s.real, s.real);
        CHECK(w.queries <= 2 * w.opt);
    }
}

TEST_CASE("correct predictions with gamma n reach the optimum when few elements are mandatory") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 300; ++t) {
        auto s = random_sample(Problem::Minimum, rng);
        QueryState st(s.inst, s.real);
        const int gamma = std::max(2, s.inst.size());
        auto r = run_alg_mqd(s.inst, s.real, gamma, st);
        evaluate(r, s.inst, s.real, s.real);
        if (static_cast<int>(r.errors.real_mandatory.size()) < gamma - 1) CHECK(r.queries == r.opt);
        CHECK(r.queries <= 2 * r.opt);
    }
}

TEST_CASE("mandatory-distance algorithm accepts a learned set") {
    auto fx = mandatory_example();
    QueryState st(fx.instance, fx.real);
    auto r = run_alg_mqd(fx.instance, fx.pred, 2, st, std::vector<int>{});
    evaluate(r, fx.instance, fx.pred, fx.real);
    CHECK(is_solved(st));
    CHECK(r.queries <= 2 * r.opt);
    QueryState bad(fx.instance, fx.real);
    CHECK_THROWS_AS(run_alg_mqd(fx.instance, fx.pred, 2, bad, std::vector<int>{9}), ContractViolation);
}

TEST_CASE("sorting an already ordered family needs no query") {
    Instance s;
    s.problem = Problem::Sorting;
    s.intervals = {Interval::open(0, 1), Interval::open(1, 2), Interval::open(4, 6), Interval::open(7, 9)};
    s.sets = {{0, 1}, {2, 3}};
    Values real{Scalar(1, 2), Scalar(3, 2), Scalar(5), Scalar(8)};
    QueryState a(s, real);
    CHECK(run_sort_single(s, real, a).queries == 0);
    QueryState b(s, real);
    CHECK(run_sort_general(s, real, 2, SortAlgorithm::Hop, b).queries == 0);
}

TEST_CASE("sorting the two-interval fixture") {
    auto fx = as_sorting(error_measure(1));
    QueryState a(fx.instance, fx.real);
    auto r = run_sort_single(fx.instance, fx.pred, a);
    evaluate(r, fx.instance, fx.pred, fx.real);
    CHECK(r.queries == 2);
    CHECK(r.opt == 1);
    CHECK(r.errors.k_count == 1);
    CHECK(r.errors.k_mandatory == 1);
    CHECK(r.errors.k_hop == 1);

    QueryState b(fx.instance, fx.real);
    CHECK(run_sort_general(fx.instance, fx.pred, 2, SortAlgorithm::Mqd, b).queries <= 2);
}

TEST_CASE("single-set sorting is consistent and robust") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 400; ++t) {
        auto s = testsupport::random_single_set_sorting(rng, 10);
        QueryState a(s.inst, s.real);
        auto exact = run_sort_single(s.inst, s.real, a);
        evaluate(exact, s.inst, s.real, s.real);
        CHECK(exact.queries == exact.opt);
        QueryState b(s.inst, s.real);
        auto r = run_sort_single(s.inst, s.pred, b);
        evaluate(r, s.inst, s.pred, s.real);
        CHECK(r.queries <= 2 * r.opt);
        CHECK(r.queries <= r.opt + r.errors.k_count);
    }
}

TEST_CASE("single-set sorting rejects overlapping sets") {
    Instance s;
    s.problem = Problem::Sorting;
    s.intervals = {Interval::open(0, 2), Interval::open(1, 3)};
    s.sets = {{0, 1}, {1}};
    QueryState st(s, {Scalar(1), Scalar(2)});
    CHECK_THROWS_AS(run_sort_single(s, {Scalar(1), Scalar(2)}, st), ContractViolation);
}

