#include <doctest.h>

#include "expunc/errors.hpp"
#include "expunc/mst.hpp"
#include "support.hpp"

using namespace expunc;
using testsupport::random_sample;

namespace {

Instance parallel(Interval a, Interval b) {
    Instance g;
    g.problem = Problem::Mst;
    g.vertices = 2;
    g.intervals = {a, b};
    g.ends = {{0, 1}, {0, 1}};
    return g;
}

Instance triangle(std::vector<Interval> iv) {
    Instance g;
    g.problem = Problem::Mst;
    g.vertices = 3;
    g.intervals = std::move(iv);
    g.ends = {{0, 1}, {1, 2}, {0, 2}};
    return g;
}

RunResult finish(RunResult r, const Instance& inst, const Values& pred, const Values& real) {
    evaluate(r, inst, pred, real);
    return r;
}

}  // namespace

TEST_CASE("limit trees of trivial weights coincide") {
    auto g = triangle({Interval::point(1), Interval::point(3), Interval::point(2)});
    auto t = limit_trees(g, g.intervals);
    CHECK(t.equal());
    CHECK(t.lower == std::vector<char>{1, 0, 1});
}

TEST_CASE("preprocessing parallel edges") {
    auto nested = parallel(Interval::open(0, 2), Interval::open(1, 3));
    {
        QueryState st(nested, {Scalar(1), Scalar(2)});
        MstState s(nested, st);
        CHECK(s.preprocess_unique().empty());
    }
    auto crossing = parallel(Interval::open(0, 3), Interval::open(1, 2));
    Values real{Scalar(3, 2), Scalar(7, 4)};
    QueryState st(crossing, real);
    MstState s(crossing, st);
    auto q = s.preprocess_unique();
    REQUIRE_FALSE(q.empty());
    for (int e : q) CHECK(is_mandatory(crossing, real, e));
    CHECK(limit_trees(crossing, st.effective()).equal());
}

TEST_CASE("preprocessing only queries mandatory edges and leaves equal trees") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 400; ++t) {
        auto s = random_sample(Problem::Mst, rng);
        QueryState st(s.inst, s.real);
        MstState ms(s.inst, st);
        for (int e : ms.preprocess_unique()) CHECK(is_mandatory(s.inst, s.real, e));
        CHECK(limit_trees(s.inst, st.effective()).equal());
    }
}

TEST_CASE("prediction mandatory free test matches the generic definition") {
    std::mt19937_64 rng(62);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        auto s = random_sample(Problem::Mst, rng);
        QueryState st(s.inst, s.real);
        MstState ms(s.inst, st);
        ms.preprocess_unique();
        bool free = mandatory_elements(s.inst, st.effective(), s.pred).empty();
        CHECK(ms.is_pred_mandatory_free(s.pred) == free);
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("phase one on a prediction mandatory free state does nothing") {
    auto g = triangle({Interval::open(0, 2), Interval::open(1, 3), Interval::open(4, 5)});
    Values pred{Scalar(1, 2), Scalar(3, 2), Scalar(9, 2)};
    QueryState st(g, pred);
    MstState s(g, st);
    s.preprocess_unique();
    REQUIRE(s.is_pred_mandatory_free(pred));
    CHECK(s.phase1(pred, 2).empty());
}

TEST_CASE("phase one queries a crossing witness pair") {
    // Non-tree edge 2 is predicted inside tree edge 1 and the other way round.
    auto g = triangle({Interval::open(0, 2), Interval::open(1, 3), Interval::open(Scalar(3, 2), 5)});
    Values pred{Scalar(1, 2), Scalar(5, 2), Scalar(2)};
    Values real = pred;
    QueryState st(g, real);
    MstState s(g, st);
    s.preprocess_unique();
    REQUIRE_FALSE(s.is_pred_mandatory_free(pred));
    auto q = s.phase1(pred, 2);
    std::sort(q.begin(), q.end());
    CHECK(q == std::vector<int>{1, 2});
    CHECK(is_feasible_query_set(g, real, q));
}

TEST_CASE("phase two with correct predictions queries the optimum") {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 400; ++t) {
        auto s = random_sample(Problem::Mst, rng);
        QueryState st(s.inst, s.real);
        MstState ms(s.inst, st);
        ms.preprocess_unique();
        ms.phase1(s.real, std::max(2, s.inst.size()));
        auto eff = st.effective();
        const int residual = static_cast<int>(offline_optimum(s.inst, s.real, eff).size());
        auto q = ms.phase2(Recovery::A);
        CHECK(static_cast<int>(q.size()) == residual);
    }
}

TEST_CASE("spanning tree runs honor their bounds") {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 300; ++t) {
        auto s = random_sample(Problem::Mst, rng);
        for (int g : {2, 3}) {
            QueryState a(s.inst, s.real);
            auto ra = finish(run_mst(s.inst, s.pred, g, Recovery::A, a), s.inst, s.pred, s.real);
            CHECK(is_solved(a));
            CHECK(ra.queries <= std::max(3 * ra.opt, g * ra.opt + 1));

            QueryState b(s.inst, s.real);
            auto rb = finish(run_mst(s.inst, s.pred, g, Recovery::B, b), s.inst, s.pred, s.real);
            CHECK(rb.queries <= std::max(3 * rb.opt, g * rb.opt + 1));
            CHECK(rb.otherwise_queries <= 2 * rb.errors.k_hop);
        }
        QueryState c(s.inst, s.real);
        auto exact = finish(run_mst(s.inst, s.real, 2, Recovery::A, c), s.inst, s.real, s.real);
        CHECK(2 * exact.queries <= 3 * exact.opt + 1);
    }
}

TEST_CASE("cycle baseline") {
    std::mt19937_64 rng(65);
    for (int t = 0; t < 300; ++t) {
        auto s = random_sample(Problem::Mst, rng);
        QueryState st(s.inst, s.real);
        auto r = finish(run_cycle_baseline(s.inst, st), s.inst, s.real, s.real);
        CHECK(r.queries <= 2 * r.opt);
    }
    auto g = triangle({Interval::open(0, 1), Interval::open(1, 2), Interval::open(3, 4)});
    QueryState st(g, {Scalar(1, 2), Scalar(3, 2), Scalar(7, 2)});
    CHECK(run_cycle_baseline(g, st).queries == 0);

    auto fx = to_mst(error_measure(2));
    QueryState fs(fx.instance, fx.real);
    auto r = finish(run_cycle_baseline(fx.instance, fs), fx.instance, fx.pred, fx.real);
    CHECK(r.ratio == Scalar(2));
}

TEST_CASE("graph instances must be connected") {
    Instance g;
    g.problem = Problem::Mst;
    g.vertices = 3;
    g.intervals = {Interval::open(0, 1)};
    g.ends = {{0, 1}};
    CHECK_THROWS_AS(limit_trees(g, g.intervals), ContractViolation);
}
