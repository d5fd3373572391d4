#include "homc/algebra.hpp"

#include <algorithm>

namespace homc {

namespace {

void check_modes(const Graph& a, const Graph& b) {
    if (a.mode() != b.mode()) throw InputError("mixed directed/undirected operands");
}

}  // namespace

Graph graph_union(const Graph& a, const Graph& b) {
    check_modes(a, b);
    Graph g(a.mode());
    for (const auto& id : a.vertex_names()) g.add_vertex(id);
    for (const auto& id : b.vertex_names())
        if (!g.has_vertex(id)) g.add_vertex(id);
    for (auto [u, v] : a.edges()) g.add_edge(a.vertex_name(u), a.vertex_name(v));
    for (auto [u, v] : b.edges()) {
        int gu = g.vertex_index(b.vertex_name(u));
        int gv = g.vertex_index(b.vertex_name(v));
        if (!g.has_edge(gu, gv)) g.add_edge(gu, gv);
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    check_modes(a, b);
    Graph g(a.mode());
    for (const auto& id : a.vertex_names()) g.add_vertex(id);
    std::vector<int> bmap(b.vertex_count());
    for (int v = 0; v < b.vertex_count(); ++v) {
        std::string id = b.vertex_name(v);
        while (g.has_vertex(id)) id += "'";
        bmap[v] = g.add_vertex(id);
    }
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(bmap[u], bmap[v]);
    return g;
}

Graph tensor_product(const Graph& a, const Graph& b) {
    check_modes(a, b);
    Graph g(a.mode());
    int nb = b.vertex_count();
    for (int i = 0; i < a.vertex_count(); ++i)
        for (int j = 0; j < nb; ++j)
            g.add_vertex("(" + a.vertex_name(i) + "," + b.vertex_name(j) + ")");
    auto idx = [nb](int i, int j) { return i * nb + j; };
    if (a.directed()) {
        for (auto [u1, v1] : a.edges())
            for (auto [u2, v2] : b.edges()) g.add_edge(idx(u1, u2), idx(v1, v2));
    } else {
        for (auto [u1, v1] : a.edges())
            for (auto [u2, v2] : b.edges()) {
                if (!g.has_edge(idx(u1, u2), idx(v1, v2))) g.add_edge(idx(u1, u2), idx(v1, v2));
                if (u1 != v1 && u2 != v2 && !g.has_edge(idx(u1, v2), idx(v1, u2)))
                    g.add_edge(idx(u1, v2), idx(v1, u2));
            }
    }
    return g;
}

int tuple_index(const std::vector<int>& digits, int base) {
    int idx = 0;
    for (int d : digits) idx = idx * base + d;
    return idx;
}

std::vector<int> tuple_digits(int index, int base, int k) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i) {
        d[i] = index % base;
        index /= base;
    }
    return d;
}

Graph or_power(const Graph& h, int k, std::size_t vertex_budget) {
    if (k < 1) throw InputError("or_power needs k >= 1");
    int n = h.vertex_count();
    double count = 1;
    for (int i = 0; i < k; ++i) count *= n;
    if (count > double(vertex_budget))
        throw ResourceLimitError("or_power: " + std::to_string(count) +
                                 " vertices exceed the budget of " +
                                 std::to_string(vertex_budget));
    int total = 1;
    for (int i = 0; i < k; ++i) total *= n;

    Graph g(h.mode(), h.name() + "^(" + std::to_string(k) + ")");
    for (int idx = 0; idx < total; ++idx) {
        auto d = tuple_digits(idx, n, k);
        std::string id = "(";
        for (int i = 0; i < k; ++i) id += (i ? "," : "") + h.vertex_name(d[i]);
        g.add_vertex(id + ")");
    }
    auto adjacent = [&](const std::vector<int>& x, const std::vector<int>& y) {
        for (int i = 0; i < k; ++i)
            if (h.has_edge(x[i], y[i])) return true;
        return false;
    };
    for (int x = 0; x < total; ++x) {
        auto dx = tuple_digits(x, n, k);
        int from = h.directed() ? 0 : x;
        for (int y = from; y < total; ++y)
            if (adjacent(dx, tuple_digits(y, n, k))) g.add_edge(x, y);
    }
    return g;
}

SubgraphRef inverse_image(const VertexMap& f, const SubgraphRef& k) {
    if (!f.flags().is_hom) throw InputError("inverse_image needs a verified homomorphism");
    const Graph& g = f.domain();
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (k.contains_vertex(f.image(v))) verts.push_back(v);
    auto in_k = [&](int u, int v) {
        for (auto [a, b] : k.edges()) {
            if (a == u && b == v) return true;
            if (!k.parent().directed() && a == v && b == u) return true;
        }
        return false;
    };
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (in_k(f.image(u), f.image(v))) edges.emplace_back(u, v);
    return SubgraphRef(f.domain_ptr(), std::move(verts), std::move(edges));
}

Graph remove_isolated(const Graph& g) {
    Graph out(g.mode(), g.name());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.is_isolated(v)) out.add_vertex(g.vertex_name(v));
    for (auto [u, v] : g.edges()) out.add_edge(g.vertex_name(u), g.vertex_name(v));
    return out;
}

}  // namespace homc
