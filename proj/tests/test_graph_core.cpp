#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homc/algebra.hpp"
#include "homc/generate.hpp"
#include "homc/hgf.hpp"
#include "homc/search.hpp"
#include "support/oracles.hpp"

using namespace homc;

TEST_CASE("hgf parses the smallest nontrivial graph") {
    Graph g = parse_hgf("hgf 1 undirected\nv a\nv b\ne a b\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.vertex_name(0) == "a");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("hgf accepts comments, blank lines and loops") {
    Graph g = parse_hgf("hgf 1 directed\n# a comment\n\nv x\nv y\ne x x\ne x y\n");
    CHECK(g.directed());
    CHECK(g.has_loop(0));
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("hgf reports errors with positions") {
    CHECK_THROWS_AS(parse_hgf("hgf 2 undirected\n"), ParseError);
    CHECK_THROWS_AS(parse_hgf("hgf 1 sideways\n"), ParseError);
    CHECK_THROWS_AS(parse_hgf("hgf 1 directed\nv a\ne a b\n"), ParseError);  // undeclared b
    CHECK_THROWS_AS(parse_hgf("hgf 1 undirected\nv a\nv a\n"), ParseError);
    CHECK_THROWS_AS(parse_hgf("hgf 1 undirected\nv a\nv b\ne a b\ne b a\n"), ParseError);
    try {
        parse_hgf("hgf 1 directed\nv a\ne a b\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("serialize then parse is the identity") {
    auto roundtrip = [](const Graph& g) {
        Graph back = parse_hgf(serialize_hgf(g));
        CHECK(back.same_structure(g));
    };
    roundtrip(parse_hgf("hgf 1 undirected\nv a\nv b\ne a b\n"));
    roundtrip(make_cycle(5));
    roundtrip(make_grotzsch());
    roundtrip(make_kneser(5, 2));
    for (std::uint32_t seed = 0; seed < 30; ++seed)
        roundtrip(oracles::random_simple(1 + seed % 7, 0.4, seed));
    for (std::uint32_t seed = 0; seed < 30; ++seed)
        roundtrip(oracles::random_directed(1 + seed % 5, 0.4, seed, 0.2));
}

TEST_CASE("serialized cycle has the expected line counts") {
    std::string text = serialize_hgf(make_cycle(5));
    int vlines = 0, elines = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i)
        if (i == 0 || text[i - 1] == '\n') {
            if (text[i] == 'v') ++vlines;
            if (text[i] == 'e') ++elines;
        }
    CHECK(vlines == 5);
    CHECK(elines == 5);
}

TEST_CASE("generators match their counts") {
    Graph k4 = make_complete(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph m4 = make_grotzsch();
    CHECK(m4.vertex_count() == 11);
    CHECK(m4.edge_count() == 20);

    // Count disjoint 2-subset pairs of {1..5} directly.
    Graph petersen = make_kneser(5, 2);
    CHECK(petersen.vertex_count() == 10);
    int disjoint_pairs = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c)
                for (int d = c + 1; d <= 5; ++d) {
                    if (10 * a + b >= 10 * c + d) continue;
                    if (a != c && a != d && b != c && b != d) ++disjoint_pairs;
                }
    CHECK(disjoint_pairs == 15);
    CHECK(petersen.edge_count() == disjoint_pairs);

    CHECK(make_path(1).edge_count() == 0);
    CHECK(make_complete_multipartite({2, 1, 1}).edge_count() == 5);
    CHECK_THROWS_AS(make_cycle(2), InputError);
    CHECK_THROWS_AS(make_kneser(5, 3), InputError);
}

TEST_CASE("grotzsch is triangle-free") {
    Graph m4 = make_grotzsch();
    for (int a = 0; a < 11; ++a)
        for (int b = a + 1; b < 11; ++b)
            for (int c = b + 1; c < 11; ++c) {
                bool triangle = m4.has_edge(a, b) && m4.has_edge(b, c) && m4.has_edge(a, c);
                CHECK_FALSE(triangle);
            }
}

TEST_CASE("union merges by identifier") {
    Graph g = parse_hgf("hgf 1 undirected\nv 1\nv 2\nv 3\nv 4\ne 1 2\ne 2 3\ne 3 4\n");
    Graph k2 = parse_hgf("hgf 1 undirected\nv 4\nv 1\ne 4 1\n");
    Graph c4 = graph_union(g, k2);
    CHECK(c4.same_structure(make_cycle(4)));

    CHECK(graph_union(g, g).same_structure(g));

    Graph a = make_complete(2);
    Graph b = parse_hgf("hgf 1 undirected\nv x\nv y\ne x y\n");
    CHECK(graph_union(a, b).same_structure(disjoint_union(a, b)));

    CHECK_THROWS_AS(graph_union(a, Graph(Mode::directed)), InputError);
}

TEST_CASE("disjoint union tags collisions") {
    Graph g = disjoint_union(make_complete(2), make_complete(1));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_vertex("1'"));

    Graph empty(Mode::undirected);
    Graph c5 = make_cycle(5);
    CHECK(disjoint_union(empty, c5).same_structure(c5));

    Graph two_k3 = disjoint_union(make_complete(3), make_complete(3));
    CHECK(two_k3.vertex_count() == 6);
    CHECK(two_k3.edge_count() == 6);
}

TEST_CASE("tensor product of K2 with K2 is two disjoint edges") {
    Graph t = tensor_product(make_complete(2), make_complete(2));
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 2);
    // Hand oracle: (a,b) ~ (c,d) iff a!=c and b!=d.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool expect = (i / 2 != j / 2) && (i % 2 != j % 2);
            CHECK(t.has_edge(i, j) == expect);
        }
}

TEST_CASE("tensor product with K1 is edgeless") {
    Graph t = tensor_product(make_cycle(5), make_complete(1));
    CHECK(t.vertex_count() == 5);
    CHECK(t.edge_count() == 0);
}

TEST_CASE("tensor projections are homomorphisms") {
    Graph c3 = make_cycle(3);
    Graph t = tensor_product(c3, c3);
    std::vector<int> proj(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) proj[v] = v / 3;
    VertexMap p1(share(t), share(c3), proj);
    auto report = verify_map(p1);
    CHECK(report.ok);
    CHECK(report.hom);
}

TEST_CASE("or-power matches the brute-force adjacency rule") {
    // Non-adjacency of tuples is coordinate-wise non-adjacency everywhere.
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        Graph h = oracles::random_simple(2 + seed % 2, 0.6, seed);
        for (int k = 1; k <= 3; ++k) {
            Graph p = or_power(h, k);
            int n = h.vertex_count(), total = p.vertex_count();
            int expected = 1;
            for (int i = 0; i < k; ++i) expected *= n;
            CHECK(total == expected);
            for (int x = 0; x < total; ++x)
                for (int y = 0; y < total; ++y) {
                    auto dx = tuple_digits(x, n, k), dy = tuple_digits(y, n, k);
                    bool adj = false;
                    for (int i = 0; i < k; ++i)
                        if (h.has_edge(dx[i], dy[i])) adj = true;
                    CHECK(p.has_edge(x, y) == adj);
                }
        }
    }
}

TEST_CASE("or-power of K2 squared is complete") {
    // Brute force over all 6 tuple pairs: distinct tuples always differ in
    // a coordinate, and differing coordinates are adjacent in K2.
    Graph p = or_power(make_complete(2), 2);
    CHECK(p.vertex_count() == 4);
    CHECK(p.edge_count() == 6);
}

TEST_CASE("or-power at k=1 is isomorphic to the base") {
    Graph h = parse_hgf(
        "hgf 1 undirected\nv u1\nv u2\nv u3\nv u4\nv u5\nv u6\n"
        "e u1 u2\ne u1 u3\ne u1 u4\ne u1 u5\ne u2 u4\ne u2 u5\ne u2 u6\n");
    Graph p = or_power(h, 1);
    CHECK(p.vertex_count() == h.vertex_count());
    CHECK(p.edge_count() == h.edge_count());
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(p.has_edge(u, v) == h.has_edge(u, v));
}

TEST_CASE("or-power respects the vertex budget") {
    CHECK_THROWS_AS(or_power(make_complete(10), 8, 200000), ResourceLimitError);
}

TEST_CASE("inverse image of the identity is the whole graph") {
    Graph g = make_cycle(5);
    VertexMap id = identity_map(g);
    SubgraphRef whole = SubgraphRef::whole(g);
    SubgraphRef back = inverse_image(id, whole);
    CHECK(back.to_graph().same_structure(g));
}

TEST_CASE("inverse image keeps only edges that land inside the subgraph") {
    Graph g = make_path(3);
    Graph h = make_complete(2);
    VertexMap f = map_from_names(g, h, {{"1", "1"}, {"2", "2"}, {"3", "1"}});
    REQUIRE(verify_map(f).ok);
    SubgraphRef edgeless(share(h), {0}, {});
    SubgraphRef pre = inverse_image(f, edgeless);
    CHECK(pre.vertices() == std::vector<int>{0, 2});
    CHECK(pre.edges().empty());
}

TEST_CASE("remove_isolated keeps loops and edges") {
    Graph g = disjoint_union(make_complete(2), make_complete(1));
    Graph cleaned = remove_isolated(g);
    CHECK(cleaned.same_structure(make_complete(2)));

    Graph edgeless(Mode::undirected);
    for (int i = 1; i <= 5; ++i) edgeless.add_vertex(std::to_string(i));
    CHECK(remove_isolated(edgeless).vertex_count() == 0);

    Graph c5 = make_cycle(5);
    CHECK(remove_isolated(c5).same_structure(c5));

    CHECK(remove_isolated(make_loop_vertex()).vertex_count() == 1);
}

TEST_CASE("union is associative and commutative on shared identifiers") {
    for (std::uint32_t seed = 0; seed < 12; ++seed) {
        Graph a = oracles::random_simple(5, 0.4, seed);
        Graph b = oracles::random_simple(5, 0.4, seed + 100);
        Graph c = oracles::random_simple(5, 0.4, seed + 200);
        CHECK(graph_union(a, b).same_structure(graph_union(b, a)));
        CHECK(graph_union(graph_union(a, b), c).same_structure(graph_union(a, graph_union(b, c))));
    }
}

TEST_CASE("complete multipartite graphs map onto the class clique") {
    Graph g = make_complete_multipartite({3, 2, 1});
    Graph k3 = make_complete(3);
    std::vector<int> cls(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) cls[v] = v < 3 ? 0 : v < 5 ? 1 : 2;
    VertexMap f(share(g), share(k3), cls);
    Require req;
    req.vertex_surjective = true;
    auto report = verify_map(f, req);
    CHECK(report.ok);
    CHECK(report.vertex_surjective);
}
