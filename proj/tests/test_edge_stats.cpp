#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "girthlab/constants.hpp"
#include "girthlab/cycles.hpp"
#include "girthlab/edge_stats.hpp"
#include "girthlab/generators.hpp"
#include "oracles.hpp"

using namespace girthlab;

TEST_CASE("stats on the 3-vertex transitive tournament") {
    Digraph tt = transitive_tournament(3);
    auto stats = compute_edge_stats(tt);
    REQUIRE(stats.edges.size() == 3);
    // Edge (0,1) is the base of the single transitive triangle.
    CHECK(stats.edges[0] == Edge{0, 1});
    CHECK(stats.t[0] == 1);
    CHECK(stats.p[0] == 0);
    CHECK(stats.q[0] == 0);
    CHECK(stats.global.transitive_triangles == 1);
    CHECK_FALSE(stats.global.tau.has_value()); // not outregular
}

TEST_CASE("stats on the 5-cycle") {
    auto stats = compute_edge_stats(circulant(5, {1}));
    for (std::size_t i = 0; i < stats.edges.size(); ++i) {
        CHECK(stats.p[i] == 1);
        CHECK(stats.q[i] == 1);
        CHECK(stats.t[i] == 0);
        CHECK(stats.f[i] == 0);
    }
    CHECK(stats.global.transitive_triangles == 0);
    REQUIRE(stats.global.tau.has_value());
    CHECK(*stats.global.tau == 0.0);
}

TEST_CASE("T computed three ways agrees") {
    Digraph c9 = circulant(9, {1, 2, 3, 4});
    auto stats = compute_edge_stats(c9);
    std::int64_t per_vertex = 0;
    for (auto t : stats.t_vertex)
        per_vertex += t;
    CHECK(stats.global.transitive_triangles == per_vertex);
    CHECK(stats.global.transitive_triangles ==
          oracles::brute_transitive_triangles(c9));
}

TEST_CASE("counting identities on random outregular digraphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 6 + static_cast<int>(seed % 10);
        int r = 1 + static_cast<int>(seed % static_cast<std::uint64_t>((n - 1) / 2));
        Digraph d = random_outregular(n, r, seed + 40);
        auto stats = compute_edge_stats(d);
        REQUIRE(stats.global.outdegree == r);

        std::int64_t sum_p = 0, sum_q = 0, per_vertex_t = 0;
        for (std::size_t i = 0; i < stats.edges.size(); ++i) {
            CHECK(stats.p[i] + stats.t[i] == r); // p + t = d+(v)
            sum_p += stats.p[i];
            sum_q += stats.q[i];
        }
        CHECK(sum_p == sum_q);
        for (int v = 0; v < n; ++v) {
            CHECK(stats.t_vertex[v] + stats.f_vertex[v] ==
                  static_cast<std::int64_t>(r) * (r - 1) / 2);
            per_vertex_t += stats.t_vertex[v];
        }
        CHECK(per_vertex_t == stats.global.transitive_triangles);
        if (n <= 8)
            CHECK(stats.global.transitive_triangles ==
                  oracles::brute_transitive_triangles(d));
        CHECK(stats.global.transitive_triangles <= stats.global.out2claws);
        if (r >= 1) {
            REQUIRE(stats.global.tau.has_value());
            CHECK(*stats.global.tau < 0.5);
        }
        CHECK(stats.global.sum_indegree_sq >= static_cast<std::int64_t>(n) * r * r);
    }
}

TEST_CASE("parallel stats match sequential") {
    Digraph d = random_outregular(24, 7, 9);
    auto seq = compute_edge_stats(d, 1);
    auto par = compute_edge_stats(d, 4);
    CHECK(seq.p == par.p);
    CHECK(seq.q == par.q);
    CHECK(seq.t == par.t);
    CHECK(seq.f == par.f);
    CHECK(seq.global.transitive_triangles == par.global.transitive_triangles);
}

TEST_CASE("audit lemma1 on the 5-cycle") {
    auto report = audit_lemma1(circulant(5, {1}), 0.3543, 3);
    CHECK(report.all_hold);
    REQUIRE(report.items.size() == 5);
    for (const auto& item : report.items) {
        // (1-(1-a))/a * 1 + 1 + 1 + 0 = 3 against n = 5.
        CHECK(item.lhs == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(item.slack == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("audit lemma1 emits reports on m-free circulants") {
    auto report = audit_lemma1(circulant(7, {1, 2}), 0.3543, 3);
    CHECK(report.items.size() == 14);
    CHECK(report.all_hold);
}

TEST_CASE("audit lemma1 vacuous on the empty digraph") {
    Digraph empty = Digraph::from_edge_list(5, {});
    auto report = audit_lemma1(empty, 0.3543, 3);
    CHECK(report.items.empty());
    CHECK(report.all_hold);
}

TEST_CASE("audit preconditions") {
    CHECK_THROWS_WITH_AS((void)audit_lemma1(transitive_tournament(4), 0.35, 3),
                         doctest::Contains("not outregular"), Error);
    // Girth-3 circulant is not 3-free.
    try {
        (void)audit_lemma6(circulant(9, {1, 2, 3}), 0.3543, 3,
                           constants::c(3));
        FAIL("expected NotMFree");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMFree);
    }
}

TEST_CASE("audit lemma3") {
    // Circulants have d-(v) = r, so slack = (a-1) r.
    for (int m : {3, 4, 5}) {
        double alpha = constants::alpha(m);
        Digraph d = circulant(13, {1, 2});
        REQUIRE(is_m_free(d, m).m_free);
        auto report = audit_lemma3(d, alpha, m);
        REQUIRE(report.a.has_value());
        CHECK(*report.a > 1.0);
        CHECK(report.all_hold);
        for (const auto& item : report.items)
            CHECK(item.slack ==
                  doctest::Approx((*report.a - 1.0) * 2).epsilon(1e-9));
    }

    auto c5 = audit_lemma3(circulant(5, {1}), 0.2869, 4);
    REQUIRE(c5.a.has_value());
    CHECK(*c5.a == doctest::Approx(std::pow(0.7131, 3) / 0.2869).epsilon(1e-12));
    CHECK(c5.all_hold);

    // In-degree-0 vertices hold trivially: slack = a r - 0 >= 0.
    Digraph empty = Digraph::from_edge_list(5, {});
    auto vac = audit_lemma3(empty, 0.3543, 3);
    CHECK(vac.all_hold);
    for (const auto& item : vac.items)
        CHECK(item.slack == 0.0); // a * 0 - 0
}

TEST_CASE("audit lemma45") {
    // 5-cycle: every f(u,v) = 0, both aggregates hold with slack 0 and a
    // positive sqrt budget.
    auto [a3, b3] = constants::ab(3, constants::alpha(3));
    (void)a3;
    auto c5 = audit_lemma45(circulant(5, {1}), 3, b3);
    CHECK(c5.all_hold);
    REQUIRE(c5.items.size() == 2);
    CHECK(c5.items[0].lhs == 0.0);
    CHECK(c5.items[0].rhs == 0.0);
    CHECK(c5.items[1].lhs == 0.0);
    CHECK(c5.items[1].rhs > 0.0);

    auto [a5, b5] = constants::ab(5, constants::alpha(5));
    (void)a5;
    Digraph c12 = circulant(12, {1, 2});
    auto report = audit_lemma45(c12, 5, b5);
    CHECK(report.all_hold);

    CHECK_THROWS_AS((void)audit_lemma45(transitive_tournament(5), 4, 0.6),
                    Error);
}

TEST_CASE("audit lemma6") {
    const double alpha = 0.3543;
    const double c3 = constants::c(3);

    // m=3: the correction term is (1-alpha)^0 (t - sqrt(2 c f)); the 5-cycle
    // has t = f = 0 everywhere, so lemma6 coincides with lemma1.
    auto l6 = audit_lemma6(circulant(5, {1}), alpha, 3, c3);
    auto l1 = audit_lemma1(circulant(5, {1}), alpha, 3);
    REQUIRE(l6.items.size() == l1.items.size());
    for (std::size_t i = 0; i < l6.items.size(); ++i)
        CHECK(l6.items[i].slack == doctest::Approx(l1.items[i].slack));
    CHECK(l6.all_hold);

    // Valid m=3 candidate with girth 5.
    auto report = audit_lemma6(circulant(9, {1, 2}), alpha, 3, c3);
    CHECK(report.items.size() == 18);
    CHECK(report.all_hold);

    // Per edge with t = 0 the sqrt term vanishes (f = 0 too), so the slack
    // matches lemma1's slack exactly; with t > 0 the slack can only gain
    // the nonnegative sqrt correction relative to lemma1's decay term.
    Digraph d = random_outregular(16, 3, 21);
    if (is_m_free(d, 3).m_free) {
        auto stats = compute_edge_stats(d);
        auto a1 = audit_lemma1(d, alpha, 3);
        auto a6 = audit_lemma6(d, alpha, 3, c3);
        for (std::size_t i = 0; i < stats.edges.size(); ++i)
            if (stats.t[i] == 0) {
                CHECK(stats.f[i] == 0);
                CHECK(a6.items[i].slack == doctest::Approx(a1.items[i].slack));
            }
    }
}
