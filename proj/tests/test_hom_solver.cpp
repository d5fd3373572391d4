#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homc/generate.hpp"
#include "homc/hgf.hpp"
#include "homc/search.hpp"
#include "support/oracles.hpp"

using namespace homc;

namespace {

// Directed pair: G has arcs a->b, c->b; H has arcs c'->a', c'->b'.
Graph ex34_g() { return parse_hgf("hgf 1 directed\nv a\nv b\nv c\ne a b\ne c b\n"); }
Graph ex34_h() { return parse_hgf("hgf 1 directed\nv a'\nv b'\nv c'\ne c' a'\ne c' b'\n"); }

// Undirected path a' - c' - b'.
Graph path_h() { return parse_hgf("hgf 1 undirected\nv a'\nv b'\nv c'\ne c' a'\ne c' b'\n"); }

}  // namespace

TEST_CASE("verify_map accepts the collapsing map and rejects injectivity") {
    Graph g = ex34_g(), h = ex34_h();
    VertexMap f = map_from_names(g, h, {{"a", "c'"}, {"b", "b'"}, {"c", "c'"}});
    auto plain = verify_map(f);
    CHECK(plain.ok);
    CHECK(f.flags().is_hom);
    CHECK_FALSE(plain.vertex_injective);

    VertexMap f2 = map_from_names(g, h, {{"a", "c'"}, {"b", "b'"}, {"c", "c'"}});
    Require inj;
    inj.vertex_injective = true;
    auto strict = verify_map(f2, inj);
    CHECK_FALSE(strict.ok);
}

TEST_CASE("verify_map names the offending edge") {
    Graph g = make_path(2);
    Graph h(Mode::undirected);
    h.add_vertex("x");
    h.add_vertex("y");
    VertexMap f = map_from_names(g, h, {{"1", "x"}, {"2", "y"}});
    auto report = verify_map(f);
    CHECK_FALSE(report.ok);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].find("12") != std::string::npos);
}

TEST_CASE("identity verifies as hom, injective and surjective") {
    Graph g = make_cycle(5);
    VertexMap id = identity_map(g);
    Require all;
    all.vertex_injective = all.vertex_surjective = true;
    auto report = verify_map(id, all);
    CHECK(report.ok);
    CHECK(report.edge_surjective);
}

TEST_CASE("find_hom finds the inclusion of K2 into K3") {
    auto f = find_hom(make_complete(2), make_complete(3));
    REQUIRE(f.has_value());
    CHECK(f->flags().is_hom);
    // Canonically least: 1 -> 1, 2 -> 2.
    CHECK(f->image_name(0) == "1");
    CHECK(f->image_name(1) == "2");
}

TEST_CASE("no homomorphism from K3 into a path") {
    CHECK_FALSE(find_hom(make_complete(3), path_h()).has_value());
}

TEST_CASE("find_hom on an even cycle returns the parity colouring") {
    auto f = find_hom(make_cycle(6), make_complete(2));
    REQUIRE(f.has_value());
    for (int v = 0; v < 6; ++v) CHECK(f->image(v) == v % 2);
}

TEST_CASE("collapsing hom exists for the directed pair but no injective one") {
    Graph g = ex34_g(), h = ex34_h();
    CHECK(find_hom(g, h).has_value());
    // indeg(b) = 2 exceeds every in-degree in H.
    CHECK_FALSE(find_injective_hom(g, h).has_value());
}

TEST_CASE("injective homs into larger cliques and none into triangle-free targets") {
    CHECK(find_injective_hom(make_complete(3), make_complete(5)).has_value());
    CHECK_FALSE(find_injective_hom(make_complete(3), make_grotzsch()).has_value());
}

TEST_CASE("enumerate_homs counts and orders") {
    CHECK(enumerate_homs(make_complete(1), make_complete(3), SIZE_MAX).size() == 3);
    CHECK(enumerate_homs(make_complete(2), make_complete(2), SIZE_MAX).size() == 2);

    // Brute force over all 2^3 maps of the path on three vertices.
    Graph p3 = make_path(3), k2 = make_complete(2);
    CHECK(oracles::count_homs(p3, k2) == 2);
    auto homs = enumerate_homs(p3, k2, SIZE_MAX);
    CHECK(homs.size() == 2);
    // Lexicographic order of the mappings.
    CHECK(homs[0].image(0) == 0);
    CHECK(homs[1].image(0) == 1);

    CHECK(enumerate_homs(p3, k2, 1).size() == 1);
}

TEST_CASE("enumeration agrees with the brute-force count on random pairs") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracles::random_simple(1 + seed % 4, 0.5, seed);
        Graph h = oracles::random_simple(1 + (seed / 2) % 3, 0.6, seed + 1000);
        auto ours = (long long)enumerate_homs(g, h, SIZE_MAX).size();
        CHECK(ours == oracles::count_homs(g, h));
    }
}

TEST_CASE("retractions: biclique onto an edge, triangle never onto an edge") {
    Graph k22 = make_complete_multipartite({2, 2});
    auto [u, v] = k22.edges()[0];
    SubgraphRef edge(share(k22), {u, v}, {{u, v}});
    CHECK(find_retraction(k22, edge).has_value());

    Graph k3 = make_complete(3);
    SubgraphRef k3edge(share(k3), {0, 1}, {{0, 1}});
    CHECK_FALSE(find_retraction(k3, k3edge).has_value());

    Graph g = make_cycle(5);
    auto id = find_retraction(g, SubgraphRef::whole(g));
    REQUIRE(id.has_value());
    for (int w = 0; w < 5; ++w) CHECK(id->image(w) == w);
}

TEST_CASE("cores of standard families") {
    auto [sub1, r1] = core(make_complete_multipartite({3, 4}));
    CHECK(sub1.vertices().size() == 2);

    auto [sub2, r2] = core(make_complete_multipartite({2, 1, 1}));
    CHECK(sub2.vertices().size() == 3);
    CHECK(sub2.to_graph().edge_count() == 3);

    for (int n = 1; n <= 5; ++n) {
        auto [sub, r] = core(make_complete(n));
        CHECK(int(sub.vertices().size()) == n);
    }

    auto [loop_sub, loop_r] = core(make_loop_vertex());
    CHECK(loop_sub.vertices().size() == 1);

    CHECK_THROWS_AS(core(make_grotzsch()), ResourceLimitError);  // over the default budget
}

TEST_CASE("homs exist between graphs iff between their cores") {
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = oracles::random_simple(1 + seed % 7, 0.45, seed);
        Graph h = oracles::random_simple(1 + (seed + 3) % 7, 0.45, seed + 500);
        auto [gc, gr] = core(g);
        auto [hc, hr] = core(h);
        bool direct = find_hom(g, h).has_value();
        bool reduced = find_hom(gc.to_graph(), hc.to_graph()).has_value();
        CHECK(direct == reduced);
    }
}

TEST_CASE("hom into K_k matches the brute-force chromatic number") {
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
        Graph g = oracles::random_simple(1 + seed % 7, 0.5, seed * 7 + 1);
        int chi = oracles::chromatic(g);
        for (int k = 1; k <= g.vertex_count(); ++k) {
            bool has = find_hom(g, make_complete(k)).has_value();
            CHECK(has == (chi <= k));
        }
    }
}

TEST_CASE("two runs return identical mappings") {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        Graph g = oracles::random_simple(6, 0.5, seed);
        Graph h = oracles::random_simple(4, 0.6, seed + 77);
        auto a = find_hom(g, h);
        auto b = find_hom(g, h);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(a->mapping() == b->mapping());
    }
}

TEST_CASE("degree pruning never changes the injective existence answer") {
    Budgets plain, unpruned;
    unpruned.degree_pruning = false;
    int cases = 0;
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        Graph g = seed % 2 ? Graph(oracles::random_simple(1 + seed % 5, 0.5, seed))
                           : Graph(oracles::random_directed(1 + seed % 4, 0.4, seed, 0.1));
        Graph h = seed % 2 ? Graph(oracles::random_simple(1 + (seed + 2) % 5, 0.5, seed + 1))
                           : Graph(oracles::random_directed(1 + (seed + 2) % 4, 0.4, seed + 1, 0.1));
        bool a = find_injective_hom(g, h, plain).has_value();
        bool b = find_injective_hom(g, h, unpruned).has_value();
        CHECK(a == b);
        // Cross-check against the exhaustive oracle.
        CHECK(a == oracles::hom_exists(g, h, true));
        ++cases;
    }
    CHECK(cases == 100);
}

TEST_CASE("solver agrees with the exhaustive oracle on existence") {
    for (std::uint32_t seed = 0; seed < 120; ++seed) {
        bool directed = seed % 3 == 0;
        Graph g = directed ? oracles::random_directed(1 + seed % 4, 0.5, seed, 0.15)
                           : oracles::random_simple(1 + seed % 5, 0.5, seed);
        Graph h = directed ? oracles::random_directed(1 + (seed + 1) % 4, 0.5, seed + 9, 0.15)
                           : oracles::random_simple(1 + (seed + 1) % 5, 0.5, seed + 9);
        CHECK(find_hom(g, h).has_value() == oracles::hom_exists(g, h));
    }
}

TEST_CASE("loops only map to loops") {
    Graph g = make_loop_vertex();
    CHECK_FALSE(find_hom(g, make_complete(3)).has_value());
    Graph h(Mode::undirected);
    h.add_vertex("x");
    h.add_vertex("y");
    h.add_edge("x", "y");
    h.add_edge("y", "y");
    auto f = find_hom(g, h);
    REQUIRE(f.has_value());
    CHECK(f->image_name(0) == "y");
}

TEST_CASE("mode mismatch is rejected") {
    CHECK_THROWS_AS(find_hom(ex34_g(), make_complete(3)), InputError);
}
