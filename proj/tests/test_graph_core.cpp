#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "girthlab/cycles.hpp"
#include "girthlab/digraph.hpp"
#include "girthlab/generators.hpp"
#include "girthlab/graph_io.hpp"
#include "oracles.hpp"

using namespace girthlab;

namespace {

Digraph five_cycle() {
    return circulant(5, {1});
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a girthlab::Error");
    return ErrorCode::BadArgument;
}

} // namespace

TEST_CASE("from_edge_list builds and validates") {
    Digraph triangle = Digraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.n() == 3);
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.has_edge(0, 1));
    CHECK_FALSE(triangle.has_edge(1, 0));

    CHECK(code_of([] { Digraph::from_edge_list(2, {{0, 1}, {1, 0}}); }) ==
          ErrorCode::Digon);
    CHECK(code_of([] { Digraph::from_edge_list(3, {{1, 1}}); }) ==
          ErrorCode::SelfLoop);
    CHECK(code_of([] { Digraph::from_edge_list(3, {{0, 1}, {0, 1}}); }) ==
          ErrorCode::DuplicateEdge);
    CHECK(code_of([] { Digraph::from_edge_list(3, {{0, 3}}); }) ==
          ErrorCode::VertexOutOfRange);

    Digraph c5 = five_cycle();
    for (int v = 0; v < 5; ++v)
        CHECK(c5.outdeg(v) == 1);
}

TEST_CASE("circulant generator") {
    Digraph c5 = circulant(5, {1});
    CHECK(c5.edge_count() == 5);
    CHECK(girth(c5) == 5);

    Digraph c72 = circulant(7, {1, 2});
    CHECK(c72.edge_count() == 14);
    for (int v = 0; v < 7; ++v)
        CHECK(c72.outdeg(v) == 2);

    // Girth 3 via 0 -> 4 -> 8 -> 0.
    Digraph c9 = circulant(9, {1, 2, 3, 4});
    CHECK(c9.has_edge(0, 4));
    CHECK(c9.has_edge(4, 8));
    CHECK(c9.has_edge(8, 0));
    CHECK(girth(c9) == 3);

    CHECK(code_of([] { circulant(5, {1, 4}); }) == ErrorCode::DigonOffsetPair);
    CHECK(code_of([] { circulant(6, {3}); }) == ErrorCode::DigonOffsetPair);
    CHECK(code_of([] { circulant(5, {0}); }) == ErrorCode::BadArgument);
    CHECK(code_of([] { circulant(5, {5}); }) == ErrorCode::BadArgument);
}

TEST_CASE("circulant is vertex-transitive in degree") {
    for (int n : {5, 9, 12, 30}) {
        std::vector<int> offsets;
        for (int s = 1; s <= (n - 1) / 3; ++s)
            offsets.push_back(s);
        if (offsets.empty())
            offsets.push_back(1);
        Digraph d = circulant(n, offsets);
        for (int v = 0; v < n; ++v) {
            CHECK(d.outdeg(v) == static_cast<int>(offsets.size()));
            CHECK(d.indeg(v) == static_cast<int>(offsets.size()));
        }
    }
}

TEST_CASE("random_outregular postconditions") {
    Digraph empty = random_outregular(10, 0, 1);
    CHECK(empty.edge_count() == 0);

    Digraph d = random_outregular(10, 3, 7);
    for (int v = 0; v < 10; ++v)
        CHECK(d.outdeg(v) == 3);

    Digraph again = random_outregular(10, 3, 7);
    CHECK(d == again);
    Digraph other = random_outregular(10, 3, 8);
    CHECK(d.edges() != other.edges()); // overwhelmingly likely for a new seed

    CHECK(code_of([] { random_outregular(10, 5, 1); }) ==
          ErrorCode::InfeasibleDegree);
}

TEST_CASE("random_mfree stays m-free (cross-module oracle)") {
    Digraph a = random_mfree(6, 5, 1.0, 3);
    auto g = girth(a);
    CHECK((!g || *g > 5));

    Digraph b = random_mfree(4, 3, 1.0, 11);
    auto gb = girth(b);
    CHECK((!gb || *gb >= 4));

    Digraph c = random_mfree(12, 4, 0.5, 9);
    CHECK(is_m_free(c, 4).m_free);

    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(is_m_free(random_mfree(10, 4, 1.0, seed), 4).m_free);
}

TEST_CASE("gamma counts missing pairs") {
    CHECK(five_cycle().gamma() == 5);
    CHECK(transitive_tournament(4).gamma() == 0);
    CHECK(circulant(7, {1, 2}).gamma() == 7);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Digraph d = oracles::random_digon_free(9, seed + 1);
        CHECK(d.gamma() + static_cast<std::int64_t>(d.edge_count()) ==
              9LL * 8 / 2);
    }
}

TEST_CASE("induced subgraphs") {
    Digraph triangle = Digraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    auto empty = induced_subgraph(triangle, {});
    CHECK(empty.graph.n() == 0);
    CHECK(empty.graph.edge_count() == 0);

    auto pair = induced_subgraph(triangle, {0, 1});
    CHECK(pair.graph.n() == 2);
    CHECK(pair.graph.edge_count() == 1);
    CHECK(pair.graph.has_edge(0, 1));

    Digraph c9 = circulant(9, {1, 2, 3, 4});
    std::vector<int> nbhd(c9.out(0).begin(), c9.out(0).end());
    auto sub = induced_subgraph(c9, nbhd);
    REQUIRE(sub.graph.n() == 4);
    // N+(0) = {1,2,3,4} induces a transitive tournament.
    CHECK(sub.graph.edge_count() == 6);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            CHECK(sub.graph.has_edge(i, j));
    CHECK(sub.to_original == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("transpose consistency on random digraphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Digraph d = oracles::random_digon_free(8, seed * 31 + 1);
        for (int v = 0; v < d.n(); ++v)
            for (int w : d.out(v)) {
                auto in_row = d.in(w);
                CHECK(std::binary_search(in_row.begin(), in_row.end(), v));
            }
        std::size_t out_total = 0, in_total = 0;
        for (int v = 0; v < d.n(); ++v) {
            out_total += d.out(v).size();
            in_total += d.in(v).size();
        }
        CHECK(out_total == d.edge_count());
        CHECK(in_total == d.edge_count());
    }
}

TEST_CASE("edge list serialization round-trip") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = oracles::random_digon_free(10, seed + 5);
        Digraph back = parse_edge_list_string(serialize_edge_list_string(d));
        CHECK(back == d);
        CHECK(serialize_edge_list_string(back) == serialize_edge_list_string(d));

        Digraph from_json = parse_json_string(to_json_string(d));
        CHECK(from_json == d);
    }
}

TEST_CASE("edge list format details") {
    Digraph d = parse_edge_list_string("# comment\n\nn 3\n0 1\n# another\n1 2\n");
    CHECK(d.n() == 3);
    CHECK(d.edge_count() == 2);

    CHECK(serialize_edge_list_string(d) == "n 3\n0 1\n1 2\n");

    CHECK(code_of([] { parse_edge_list_string("0 1\n"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_edge_list_string("n 3\n0 x\n"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_edge_list_string("n 2\n0 5\n"); }) ==
          ErrorCode::ParseError);

    // Parse errors carry line numbers.
    try {
        parse_edge_list_string("n 3\n0 1\nbogus line here\n");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("generate dispatches on kind") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::TransitiveTournament;
    spec.n = 5;
    Digraph tt = generate(spec);
    CHECK(tt.edge_count() == 10);
    CHECK_FALSE(girth(tt).has_value());
}
