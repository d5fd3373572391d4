#include "homc/generate.hpp"

#include <random>
#include <string>

namespace homc {

namespace {

void add_numbered_vertices(Graph& g, int n) {
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
}

}  // namespace

Graph make_complete(int n) {
    if (n < 1) throw InputError("complete(n) needs n >= 1");
    Graph g(Mode::undirected, "K" + std::to_string(n));
    add_numbered_vertices(g, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_path(int m) {
    if (m < 1) throw InputError("path(m) needs m >= 1");
    Graph g(Mode::undirected, "P" + std::to_string(m));
    add_numbered_vertices(g, m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int m) {
    if (m < 3) throw InputError("cycle(m) needs m >= 3");
    Graph g(Mode::undirected, "C" + std::to_string(m));
    add_numbered_vertices(g, m);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    g.add_edge(m - 1, 0);
    return g;
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw InputError("complete_multipartite needs at least one part");
    std::string name = "K{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw InputError("part sizes must be >= 1");
        name += (i ? "," : "") + std::to_string(parts[i]);
    }
    name += "}";
    Graph g(Mode::undirected, name);
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) {
            g.add_vertex(std::to_string(++n));
            part_of.push_back(int(p));
        }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph make_grotzsch() {
    // Mycielskian of C5: cycle 1..5, shadows 6..10, apex 11.
    Graph g(Mode::undirected, "grotzsch");
    add_numbered_vertices(g, 11);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
    }
    for (int i = 0; i < 5; ++i) g.add_edge(10, 5 + i);
    return g;
}

Graph make_kneser(int n, int k) {
    if (n < 2 || k < 1 || 2 * k > n) throw InputError("kneser(n,k) needs 1 <= k <= n/2");
    // k-subsets of {1..n} in lexicographic order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (int(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = next; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);

    Graph g(Mode::undirected, "kneser_" + std::to_string(n) + "_" + std::to_string(k));
    for (const auto& s : subsets) {
        std::string id = "{";
        for (std::size_t i = 0; i < s.size(); ++i) id += (i ? "," : "") + std::to_string(s[i]);
        g.add_vertex(id + "}");
    }
    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            (a[i] < b[j] ? i : j)++;
        }
        return true;
    };
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (disjoint(subsets[i], subsets[j])) g.add_edge(int(i), int(j));
    return g;
}

Graph make_random(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw InputError("random(n,p) needs n >= 0, 0 <= p <= 1");
    Graph g(Mode::undirected, "random_" + std::to_string(n) + "_" + std::to_string(seed));
    add_numbered_vertices(g, n);
    // Raw mt19937 draws keep the stream portable across standard libraries.
    std::mt19937 rng{std::uint32_t(seed)};
    auto threshold = std::uint64_t(p * 4294967296.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::uint64_t(rng()) < threshold) g.add_edge(i, j);
    return g;
}

Graph make_loop_vertex() {
    Graph g(Mode::undirected, "loop");
    g.add_vertex("1");
    g.add_edge(0, 0);
    return g;
}

}  // namespace homc
