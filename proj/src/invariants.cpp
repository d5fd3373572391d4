#include "homc/invariants.hpp"

#include <algorithm>
#include <string>

#include "homc/bitset.hpp"
#include "homc/generate.hpp"
#include "homc/search.hpp"

namespace homc {

using detail::Bitset;

namespace {

std::vector<Bitset> simple_rows(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Bitset> rows(n, Bitset(n));
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        rows[u].set(v);
        rows[v].set(u);
    }
    return rows;
}

void bron_kerbosch(const std::vector<Bitset>& rows, Bitset R, Bitset P, Bitset X,
                   const std::function<void(const Bitset&)>& out) {
    if (P.none() && X.none()) {
        out(R);
        return;
    }
    // Pivot on the vertex of P|X with the most neighbours in P.
    int pivot = -1, best = -1;
    for (int u = P.next(0); u >= 0; u = P.next(u + 1)) {
        Bitset t = P;
        t.and_with(rows[u]);
        int c = t.count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (int u = X.next(0); u >= 0; u = X.next(u + 1)) {
        Bitset t = P;
        t.and_with(rows[u]);
        int c = t.count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Bitset ext = P;
    if (pivot >= 0) ext.andnot_with(rows[pivot]);
    for (int v = ext.next(0); v >= 0; v = ext.next(v + 1)) {
        Bitset R2 = R;
        R2.set(v);
        Bitset P2 = P, X2 = X;
        P2.and_with(rows[v]);
        X2.and_with(rows[v]);
        bron_kerbosch(rows, R2, P2, X2, out);
        P.reset(v);
        X.set(v);
    }
}

std::vector<int> to_list(const Bitset& b) {
    std::vector<int> out;
    for (int v = b.next(0); v >= 0; v = b.next(v + 1)) out.push_back(v);
    return out;
}

// DSATUR greedy upper bound; returns the number of colours used.
int dsatur_bound(const Graph& g) {
    int n = g.vertex_count();
    auto rows = simple_rows(g);
    std::vector<int> colour(n, -1);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            Bitset seen(used + 1);
            int sat = 0;
            for (int u = rows[v].next(0); u >= 0; u = rows[v].next(u + 1))
                if (colour[u] >= 0 && !seen.test(colour[u])) {
                    seen.set(colour[u]);
                    ++sat;
                }
            int deg = rows[v].count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::vector<bool> taken(used + 1, false);
        for (int u = rows[best].next(0); u >= 0; u = rows[best].next(u + 1))
            if (colour[u] >= 0) taken[colour[u]] = true;
        int c = 0;
        while (c < used && taken[c]) ++c;
        colour[best] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

Graph complete_or_empty(int k) {
    if (k == 0) return Graph(Mode::undirected, "K0");
    return make_complete(k);
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    if (g.directed()) throw InputError("maximal_cliques needs an undirected graph");
    int n = g.vertex_count();
    auto rows = simple_rows(g);
    std::vector<std::vector<int>> out;
    bron_kerbosch(rows, Bitset(n), Bitset(n, true), Bitset(n),
                  [&](const Bitset& clique) { out.push_back(to_list(clique)); });
    return out;
}

std::pair<int, std::vector<int>> clique_number(const Graph& g, const Budgets&) {
    if (g.directed()) throw InputError("clique_number needs an undirected graph");
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    auto rows = simple_rows(g);
    std::vector<int> best;
    bron_kerbosch(rows, Bitset(n), Bitset(n, true), Bitset(n), [&](const Bitset& clique) {
        auto list = to_list(clique);
        if (list.size() > best.size() || (list.size() == best.size() && list < best))
            best = std::move(list);
    });
    return {int(best.size()), best};
}

std::pair<int, VertexMap> chromatic_number(const Graph& g, const Budgets& b) {
    if (g.directed()) throw InputError("chromatic number is defined for undirected graphs");
    if (g.has_any_loop()) throw InputError("chromatic number undefined for graphs with loops");
    int n = g.vertex_count();
    if (n == 0) {
        Graph k0 = complete_or_empty(0);
        return {0, VertexMap(share(g), share(k0), {})};
    }
    if (g.edge_count() == 0) {
        Graph k1 = make_complete(1);
        return {1, VertexMap(share(g), share(k1), std::vector<int>(n, 0))};
    }

    int lower = clique_number(g, b).first;
    int upper = dsatur_bound(g);
    int chi = upper;
    for (int k = lower; k < upper; ++k) {
        if (hom_exists(g, make_complete(k), b)) {
            chi = k;
            break;
        }
    }
    auto witness = find_hom(g, make_complete(chi), b);
    return {chi, std::move(*witness)};
}

std::pair<bool, std::optional<std::vector<std::vector<int>>>> is_l_partite(const Graph& g, int l,
                                                                           const Budgets& b) {
    if (g.directed() || g.has_any_loop())
        throw InputError("l-partite test needs a simple graph");
    if (l < 2) throw InputError("l-partite test needs l >= 2");
    int n = g.vertex_count();
    if (n < l) return {false, std::nullopt};
    auto witness = find_hom(g, make_complete(l), b);
    if (!witness) return {false, std::nullopt};

    std::vector<std::vector<int>> parts(l);
    for (int v = 0; v < n; ++v) parts[witness->image(v)].push_back(v);
    // Rebalance so that every part is nonempty; a split of an independent
    // set stays independent.
    for (int p = 0; p < l; ++p) {
        if (!parts[p].empty()) continue;
        for (int q = 0; q < l; ++q)
            if (parts[q].size() >= 2) {
                parts[p].push_back(parts[q].back());
                parts[q].pop_back();
                break;
            }
    }
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return {true, parts};
}

InvariantReport invariants(const Graph& g, const Budgets& b) {
    auto [chi, colouring] = chromatic_number(g, b);
    auto [omega, witness] = clique_number(g, b);
    return InvariantReport{chi, omega, std::move(colouring), std::move(witness)};
}

VertexMap product_coloring(const std::vector<VertexMap>& colourings, const Graph& g) {
    if (colourings.empty()) throw InputError("product_coloring needs at least one colouring");
    int n = g.vertex_count();

    // Extended piece colourings over all of V(g); vertices missing from a
    // piece act as isolated additions and take colour 0.
    std::vector<std::vector<int>> ext;
    std::vector<bool> edge_covered(g.edges().size(), false);
    for (const auto& f : colourings) {
        const Graph& dom = f.domain();
        std::vector<int> c(n, 0);
        for (int v = 0; v < dom.vertex_count(); ++v) {
            int gv = g.vertex_index(dom.vertex_name(v));
            if (gv < 0)
                throw InputError("piece vertex '" + dom.vertex_name(v) + "' not in the graph");
            c[gv] = f.image(v);
        }
        for (auto [u, v] : dom.edges()) {
            int gu = g.vertex_index(dom.vertex_name(u));
            int gv = g.vertex_index(dom.vertex_name(v));
            bool found = false;
            const auto& ge = g.edges();
            for (std::size_t i = 0; i < ge.size(); ++i)
                if ((ge[i].first == gu && ge[i].second == gv) ||
                    (!g.directed() && ge[i].first == gv && ge[i].second == gu)) {
                    edge_covered[i] = true;
                    found = true;
                }
            if (!found) throw InputError("piece edge not present in the graph");
        }
        ext.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < edge_covered.size(); ++i)
        if (!edge_covered[i])
            throw InputError("pieces do not cover edge " + g.vertex_name(g.edges()[i].first) +
                             g.vertex_name(g.edges()[i].second));

    // Tuple codomain: complete graph on the product of the piece palettes.
    std::vector<int> sizes;
    for (const auto& f : colourings) sizes.push_back(f.codomain().vertex_count());
    long long total = 1;
    for (int s : sizes) {
        total *= s;
        if (total > 4096) throw ResourceLimitError("product colouring palette too large");
    }
    Graph kt(Mode::undirected, "K" + std::to_string(total));
    {
        std::vector<int> digit(sizes.size(), 0);
        for (long long i = 0; i < total; ++i) {
            std::string id = "(";
            for (std::size_t j = 0; j < sizes.size(); ++j)
                id += (j ? "," : "") + colourings[j].codomain().vertex_name(digit[j]);
            kt.add_vertex(id + ")");
            for (int j = int(sizes.size()) - 1; j >= 0; --j) {
                if (++digit[j] < sizes[j]) break;
                digit[j] = 0;
            }
        }
        for (int u = 0; u < total; ++u)
            for (int v = u + 1; v < total; ++v) kt.add_edge(u, v);
    }

    std::vector<int> mapping(n);
    for (int v = 0; v < n; ++v) {
        int idx = 0;
        for (std::size_t j = 0; j < sizes.size(); ++j) idx = idx * sizes[j] + ext[j][v];
        mapping[v] = idx;
    }
    VertexMap f(share(g), share(kt), std::move(mapping));
    auto report = verify_map(f);
    if (!report.ok)
        throw InputError("pieces are not proper colourings: " + report.failures.front());
    return f;
}

}  // namespace homc
