#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homc/algebra.hpp"
#include "homc/complexity.hpp"
#include "homc/decompose.hpp"
#include "homc/generate.hpp"
#include "homc/hgf.hpp"
#include "homc/invariants.hpp"
#include "homc/search.hpp"
#include "support/oracles.hpp"

using namespace homc;

namespace {

Graph ex34_g() { return parse_hgf("hgf 1 directed\nv a\nv b\nv c\ne a b\ne c b\n"); }
Graph ex35_g() { return parse_hgf("hgf 1 directed\nv a\nv b\nv c\ne a b\ne b c\n"); }
Graph ex34_h() { return parse_hgf("hgf 1 directed\nv a'\nv b'\nv c'\ne c' a'\ne c' b'\n"); }
Graph path_h() { return parse_hgf("hgf 1 undirected\nv a'\nv b'\nv c'\ne c' a'\ne c' b'\n"); }

int value_of(const ComplexityResult& r) {
    REQUIRE(r.value.has_value());
    return *r.value;
}

Budgets roomy() {
    Budgets b;
    b.partition_edge_budget_plain = 200;
    b.partition_edge_budget_injective = 32;
    return b;
}

}  // namespace

TEST_CASE("finiteness classification") {
    auto fin = finiteness(make_loop_vertex(), make_complete(3), false);
    CHECK_FALSE(fin.finite);
    CHECK(fin.reason == InfiniteReason::loop_mismatch);

    auto fin2 = finiteness(make_complete(3), make_loop_vertex(), false);
    CHECK(fin2.finite);
    CHECK(value_of(hom_complexity(make_complete(3), make_loop_vertex())) == 1);

    Graph edgeless(Mode::undirected);
    for (int i = 1; i <= 3; ++i) edgeless.add_vertex(std::to_string(i));
    CHECK(finiteness(edgeless, make_complete(1), false).finite);
    CHECK(value_of(hom_complexity(edgeless, make_complete(1))) == 1);

    CHECK(finiteness(edgeless, Graph(Mode::undirected), false).reason ==
          InfiniteReason::empty_codomain);

    Graph nonedge(Mode::undirected);
    nonedge.add_vertex("x");
    CHECK(finiteness(make_complete(2), nonedge, false).reason == InfiniteReason::no_edges);
}

TEST_CASE("hom-complexity of the undirected path example is two") {
    auto res = hom_complexity(make_complete(3), path_h());
    CHECK(value_of(res) == 2);
    CHECK(res.method == Method::formula);
    auto ic = injective_hom_complexity(make_complete(3), path_h());
    CHECK(value_of(ic) == 2);
}

TEST_CASE("clique-to-clique values follow the ceiling log formula") {
    CHECK(value_of(hom_complexity(make_complete(9), make_complete(3))) == 2);
    CHECK(value_of(hom_complexity(make_complete(10), make_complete(3))) == 3);
    CHECK(value_of(hom_complexity(make_complete(4), make_complete(3))) == 2);
    for (int i = 2; i <= 4; ++i)
        for (int j = 2; j <= 16; ++j) {
            auto res = hom_complexity(make_complete(j), make_complete(i));
            CHECK(value_of(res) == std::max(1, ceil_log(i, j)));
        }
}

TEST_CASE("complexity against the Mycielskian target") {
    Graph m4 = make_grotzsch();
    auto c = hom_complexity(make_complete(3), m4);
    CHECK(value_of(c) == 2);
    CHECK(c.method == Method::orpower);  // omega != chi, no formula
    auto ic = injective_hom_complexity(make_complete(3), m4);
    CHECK(value_of(ic) == 2);
}

TEST_CASE("odd and even cycles against the edge") {
    for (int m = 3; m <= 9; ++m) {
        auto res = hom_complexity(make_cycle(m), make_complete(2));
        CHECK(value_of(res) == (m % 2 == 0 ? 1 : 2));
    }
}

TEST_CASE("methods agree pairwise") {
    Budgets b = roomy();
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = oracles::random_simple(1 + seed % 6, 0.5, seed);
        Graph h = oracles::random_simple(1 + (seed + 1) % 4, 0.7, seed + 321);
        auto fin = finiteness(g, h, false);
        if (!fin.finite) continue;
        auto a = hom_complexity(g, h, Method::orpower, b);
        auto c = hom_complexity(g, h, Method::partition, b);
        CHECK(value_of(a) == value_of(c));
        bool formula_ok = g.edge_count() > 0 && h.edge_count() > 0 &&
                          clique_number(h, b).first == chromatic_number(h, b).first &&
                          chromatic_number(h, b).first >= 2;
        if (formula_ok) {
            auto f = hom_complexity(g, h, Method::formula, b);
            CHECK(value_of(f) == value_of(a));
        }
    }
}

TEST_CASE("complexity one iff a homomorphism exists") {
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        bool directed = seed % 2 == 0;
        Graph g = directed ? oracles::random_directed(1 + seed % 4, 0.45, seed, 0.1)
                           : oracles::random_simple(1 + seed % 5, 0.5, seed);
        Graph h = directed ? oracles::random_directed(1 + (seed + 1) % 4, 0.45, seed + 5, 0.1)
                           : oracles::random_simple(1 + (seed + 1) % 5, 0.5, seed + 5);
        auto res = hom_complexity(g, h);
        bool hom = find_hom(g, h).has_value();
        if (res.finite())
            CHECK((value_of(res) == 1) == hom);
        else
            CHECK_FALSE(hom);
        auto ic = injective_hom_complexity(g, h);
        bool inj = find_injective_hom(g, h).has_value();
        if (ic.finite())
            CHECK((value_of(ic) == 1) == inj);
        else
            CHECK_FALSE(inj);
        if (res.finite() && ic.finite()) CHECK(value_of(res) <= value_of(ic));
        if (!res.finite()) CHECK_FALSE(ic.finite());
    }
}

TEST_CASE("injective closed forms for the edge target") {
    for (int n = 2; n <= 6; ++n) {
        auto res = injective_hom_complexity(make_complete(n), make_complete(2));
        CHECK(value_of(res) == n * (n - 1) / 2);
        CHECK(res.method == Method::closed_form_ic);
    }
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            auto res = injective_hom_complexity(make_complete_multipartite({p, q}),
                                                make_complete(2));
            CHECK(value_of(res) == p * q);
        }
}

TEST_CASE("isolated vertices matter for the injective kind only") {
    Graph k2_star = disjoint_union(make_complete(2), make_complete(1));
    CHECK(value_of(injective_hom_complexity(k2_star, make_complete(2))) == 2);
    CHECK(value_of(injective_hom_complexity(make_complete(2), make_complete(2))) == 1);
    CHECK(value_of(hom_complexity(k2_star, make_complete(2))) == 1);
}

TEST_CASE("edgeless injective complexity pairs vertices") {
    Graph edgeless(Mode::undirected);
    for (int i = 1; i <= 5; ++i) edgeless.add_vertex(std::to_string(i));
    auto res = injective_hom_complexity(edgeless, make_complete(2));
    CHECK(value_of(res) == 3);
    CHECK(res.method == Method::closed_form_ic);
}

TEST_CASE("directed examples reach the stated values") {
    CHECK(value_of(hom_complexity(ex34_g(), ex34_h())) == 1);
    CHECK(value_of(injective_hom_complexity(ex34_g(), ex34_h())) == 2);
    CHECK(value_of(hom_complexity(ex35_g(), ex34_h())) == 2);
    CHECK(value_of(injective_hom_complexity(ex35_g(), ex34_h())) == 2);
}

TEST_CASE("bound trail for the Mycielskian and the worked pair") {
    auto b1 = complexity_bounds(make_complete(3), make_grotzsch());
    REQUIRE(b1.lower.has_value());
    REQUIRE(b1.upper.has_value());
    CHECK(b1.lower->value == 1);
    CHECK(b1.upper->value == 2);

    Graph g = parse_hgf(
        "hgf 1 undirected\nv v1\nv v2\nv v3\nv v4\nv v5\nv v6\nv v7\nv v8\n"
        "e v1 v2\ne v1 v3\ne v1 v4\ne v1 v6\ne v2 v3\ne v2 v4\ne v2 v7\n"
        "e v3 v4\ne v3 v8\ne v4 v5\n");
    Graph h = parse_hgf(
        "hgf 1 undirected\nv u1\nv u2\nv u3\nv u4\nv u5\nv u6\n"
        "e u1 u2\ne u1 u3\ne u1 u4\ne u1 u5\ne u2 u4\ne u2 u5\ne u2 u6\n");
    auto b2 = complexity_bounds(g, h);
    CHECK(b2.lower->value == 2);
    CHECK(b2.upper->value == 2);

    auto b3 = complexity_bounds(make_cycle(5), make_cycle(5));
    CHECK(b3.lower->value == 1);
}

TEST_CASE("certificates verify and have exactly value many pieces") {
    Budgets b = roomy();
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracles::random_simple(1 + seed % 6, 0.5, seed + 3);
        Graph h = oracles::random_simple(2 + seed % 3, 0.7, seed + 555);
        auto res = hom_complexity(g, h, Method::automatic, b);
        if (!res.finite()) continue;
        REQUIRE(res.certificate.has_value());
        CHECK(int(res.certificate->pieces.size()) == value_of(res));
        auto report = verify_quasi_hom(*res.certificate, g, h, false, res.value);
        CHECK(report.ok);
    }
}

TEST_CASE("partition method matches the naive cover oracle") {
    Budgets b = roomy();
    int cases = 0;
    for (std::uint32_t seed = 0; seed < 200 && cases < 60; ++seed) {
        Graph g = oracles::random_simple(2 + seed % 5, 0.35, seed);
        if (g.edge_count() > 5) continue;
        Graph h = oracles::random_simple(2 + (seed + 1) % 3, 0.6, seed + 999);
        auto oracle_c = oracles::cover_complexity(g, h, false, 3);
        auto mine_c = hom_complexity(g, h, Method::partition, b);
        if (oracle_c)
            CHECK(value_of(mine_c) == *oracle_c);
        else
            CHECK((!mine_c.finite() || value_of(mine_c) > 3));
        auto oracle_ic = oracles::cover_complexity(g, h, true, 3);
        auto mine_ic = injective_hom_complexity(g, h, b);
        if (oracle_ic)
            CHECK(value_of(mine_ic) == *oracle_ic);
        else
            CHECK((!mine_ic.finite() || value_of(mine_ic) > 3));
        ++cases;
    }
    CHECK(cases >= 60);
}

TEST_CASE("strong hom-complexity basics") {
    auto self = strong_hom_complexity(make_complete(3), make_complete(3));
    CHECK(value_of(self) == 1);

    // One edge cannot cover both edges of the path; two pieces can.
    auto res = strong_hom_complexity(make_complete(2), make_path(3));
    CHECK(value_of(res) == 2);

    CHECK_THROWS_AS(strong_hom_complexity(make_grotzsch(), make_complete(3)),
                    ResourceLimitError);
}

TEST_CASE("strong complexity dominates the plain one") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracles::random_simple(1 + seed % 4, 0.5, seed);
        Graph h = oracles::random_simple(1 + (seed + 1) % 4, 0.5, seed + 17);
        if (g.edge_count() > 6 || h.edge_count() > 6) continue;
        auto strong = strong_hom_complexity(g, h);
        auto plain = hom_complexity(g, h);
        if (strong.finite()) {
            REQUIRE(plain.finite());
            CHECK(value_of(strong) >= value_of(plain));
        }
    }
}

TEST_CASE("forced formula method rejects unmet hypotheses") {
    CHECK_THROWS_AS(hom_complexity(make_complete(3), make_grotzsch(), Method::formula),
                    InputError);
    CHECK_THROWS_AS(hom_complexity(ex34_g(), ex34_h(), Method::formula), InputError);
}
