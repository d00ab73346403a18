#include <doctest.h>

#include <stdexcept>

#include "expunc/io.hpp"
#include "expunc/learning.hpp"
#include "expunc/vertex_cover.hpp"
#include "support.hpp"

using namespace expunc;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Instance one_set(std::vector<Interval> iv) {
    Instance inst;
    inst.intervals = std::move(iv);
    std::vector<int> all(inst.intervals.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    inst.sets = {all};
    return inst;
}

}  // namespace

TEST_CASE("scalar arithmetic stays exact and normalized") {
    CHECK(Scalar(6, 8) == Scalar(3, 4));
    CHECK(Scalar(1, -2) == Scalar(-1, 2));
    CHECK((Scalar(1, 3) + Scalar(1, 6)) == Scalar(1, 2));
    CHECK((Scalar(2, 3) * Scalar(3, 4)) == Scalar(1, 2));
    CHECK((Scalar(1) / Scalar(3)).str() == "1/3");
    CHECK(midpoint(Scalar(0), Scalar(3, 2)) == Scalar(3, 4));
    CHECK(Scalar(-7, 2).floor() == -4);
    CHECK(Scalar(-7, 2).ceil() == -3);
    CHECK(Scalar(7, 2).floor() == 3);
    CHECK(Scalar(1, 3) < Scalar(1, 2));
    CHECK_THROWS_AS(Scalar(1, 0), std::exception);
}

TEST_CASE("scalar parsing") {
    CHECK(S("2.75") == Scalar(11, 4));
    CHECK(S("-.5") == Scalar(-1, 2));
    CHECK(S("-3/4") == Scalar(-3, 4));
    CHECK(S("7") == Scalar(7));
    CHECK_THROWS(S("1e3"));
    CHECK_THROWS(S(""));
    CHECK_THROWS(S("abc"));
    for (const char* t : {"0", "-1/3", "22/7", "5"}) CHECK(S(t).str() == t);
}

TEST_CASE("scalar overflow is reported") {
    Scalar big(INT64_MAX);
    CHECK_THROWS_AS(big * Scalar(2), std::overflow_error);
}

TEST_CASE("interval membership and intersection") {
    auto a = Interval::open(0, 4);
    auto b = Interval::open(4, 6);
    auto c = Interval::open(1, 3);
    auto p = Interval::point(3);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(0));
    CHECK_FALSE(a.contains(4));
    CHECK_FALSE(intersects(a, b));
    CHECK(intersects(a, c));
    CHECK(intersects(a, p));
    CHECK_FALSE(intersects(Interval::point(4), a));
    CHECK_FALSE(intersects(p, Interval::point(3)));
    CHECK(subset_of(c, a));
    CHECK_FALSE(subset_of(a, c));
    CHECK(subset_of(p, a));
    CHECK_THROWS_AS(Interval::open(3, 3), ContractViolation);
    CHECK_THROWS_AS(a.value(), ContractViolation);
}

TEST_CASE("leftmost element") {
    std::vector<Interval> iv{Interval::open(0, 4), Interval::open(S("1.5"), 6)};
    CHECK(leftmost(iv, {0, 1}) == 0);
    iv = {Interval::open(0, 4), Interval::open(0, 5)};
    CHECK(leftmost(iv, {1, 0}) == 0);
    iv = {Interval::open(2, 4), Interval::point(2)};
    CHECK(leftmost(iv, {0, 1}) == 1);
    auto fx = hop_example();
    CHECK(leftmost(fx.instance.intervals, fx.instance.sets[0]) == 0);
}

TEST_CASE("query state reveals values once") {
    auto fx = mandatory_example();
    QueryState st(fx.instance, fx.real);
    CHECK(st.effective_interval(0) == Interval::open(0, 4));
    CHECK(st.query(0) == Scalar(1));
    CHECK(st.effective_interval(0) == Interval::point(1));
    CHECK_THROWS_AS(st.query(0), ContractViolation);
    CHECK(st.queries() == 1);
    CHECK(st.transcript()[0].first == 0);

    auto inst = one_set({Interval::point(3), Interval::open(0, 4)});
    QueryState st2(inst, {Scalar(3), Scalar(1)});
    CHECK(st2.effective_interval(0) == Interval::point(3));
    CHECK_THROWS_AS(st2.query(0), ContractViolation);
    CHECK_THROWS_AS(st2.query(5), ContractViolation);
}

TEST_CASE("instance validation") {
    auto inst = one_set({Interval::open(0, 1)});
    CHECK_NOTHROW(inst.validate());
    inst.sets.push_back({3});
    CHECK_THROWS_AS(inst.validate(), ContractViolation);
    inst.sets = {{}};
    CHECK_THROWS_AS(inst.validate(), ContractViolation);

    Instance g;
    g.problem = Problem::Mst;
    g.vertices = 3;
    g.intervals = {Interval::open(0, 1)};
    g.ends = {{0, 1}};
    CHECK_THROWS_AS(g.validate(), ContractViolation);
    g.ends = {{1, 1}};
    CHECK_THROWS_AS(g.validate(), ContractViolation);

    auto ok = one_set({Interval::open(0, 4)});
    CHECK_THROWS_AS(check_values(ok, {Scalar(4)}, "real"), ContractViolation);
}

TEST_CASE("document round trip") {
    std::mt19937_64 rng(3);
    for (Problem p : {Problem::Minimum, Problem::Sorting, Problem::Mst}) {
        for (int t = 0; t < 40; ++t) {
            auto s = testsupport::random_sample(p, rng);
            Document doc{s.inst, s.real, s.pred};
            auto text = write_document(doc);
            auto back = read_document(text);
            CHECK(write_document(back) == text);
            CHECK(back.instance.intervals == s.inst.intervals);
            CHECK(*back.real == s.real);
            CHECK(*back.pred == s.pred);
        }
    }
}

TEST_CASE("document parsing rejects malformed input") {
    CHECK_THROWS(read_document("MIN 1 1\n0 OPEN 2 1\nS 1 0\n"));
    CHECK_THROWS(read_document("MIN 2 1\n0 OPEN 0 1\nS 1 0\n"));
    CHECK_THROWS(read_document("FOO 1 1\n"));
    auto doc = read_document("# comment\nMIN 1 1\n0 TRIV 5/2\nS 1 0\n");
    CHECK(doc.instance.intervals[0] == Interval::point(Scalar(5, 2)));
    CHECK_FALSE(doc.real.has_value());
}

TEST_CASE("distribution text round trip") {
    auto lf = domination_fixture();
    auto text = write_distribution(lf.distribution);
    auto back = read_distribution(text, lf.instance);
    CHECK(write_distribution(back) == text);
}

TEST_CASE("vertex cover small graphs") {
    VcInstance g;
    g.vertices = {0, 1};
    g.edges = {{0, 1}};
    CHECK(min_vertex_cover(g).cover.size() == 1);

    VcInstance path;
    path.vertices = {0, 1, 2, 3};
    path.edges = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(min_vertex_cover(path).cover.size() == 2);
    path.kind = VcKind::Bipartite;
    path.left = {0, 2};
    auto r = min_vertex_cover(path);
    CHECK(r.cover.size() == 2);
    CHECK(r.mate.size() == 4);
}

TEST_CASE("vertex cover matches exhaustive search") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 11);
        VcInstance g;
        for (int v = 0; v < n; ++v) g.vertices.push_back(v);
        const bool bip = t % 2 == 1;
        if (bip) {
            g.kind = VcKind::Bipartite;
            for (int v = 0; v < n / 2; ++v) g.left.push_back(v);
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (bip && (a < n / 2) == (b < n / 2)) continue;
                if (rng() % 3 == 0) g.edges.emplace_back(a, b);
            }
        int best = n;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> c;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) c.push_back(v);
            if (is_vertex_cover(g.edges, c)) best = std::min<int>(best, static_cast<int>(c.size()));
        }
        auto r = min_vertex_cover(g);
        CHECK(is_vertex_cover(g.edges, r.cover));
        CHECK(static_cast<int>(r.cover.size()) == best);
    }
}
