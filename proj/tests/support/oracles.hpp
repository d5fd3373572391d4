#pragma once

// Brute-force reference implementations for the tests. Everything here
// enumerates exhaustively and never shares search code with the library.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "homc/graph.hpp"

namespace oracles {

using homc::Graph;
using homc::Mode;

inline bool map_is_hom(const Graph& g, const Graph& h, const std::vector<int>& f) {
    for (auto [u, v] : g.edges())
        if (!h.has_edge(f[u], f[v])) return false;
    return true;
}

inline bool map_is_injective(const std::vector<int>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (f[i] == f[j]) return false;
    return true;
}

// All maps V(g) -> V(h) by odometer enumeration.
template <typename Fn>
void for_each_map(const Graph& g, const Graph& h, Fn&& fn) {
    int n = g.vertex_count(), m = h.vertex_count();
    if (n == 0) {
        fn(std::vector<int>{});
        return;
    }
    if (m == 0) return;
    std::vector<int> f(n, 0);
    while (true) {
        fn(f);
        int i = n - 1;
        while (i >= 0 && f[i] == m - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
}

inline bool hom_exists(const Graph& g, const Graph& h, bool injective = false) {
    bool found = false;
    for_each_map(g, h, [&](const std::vector<int>& f) {
        if (found) return;
        if (injective && !map_is_injective(f)) return;
        if (map_is_hom(g, h, f)) found = true;
    });
    return found;
}

inline long long count_homs(const Graph& g, const Graph& h) {
    long long count = 0;
    for_each_map(g, h, [&](const std::vector<int>& f) {
        if (map_is_hom(g, h, f)) ++count;
    });
    return count;
}

// Minimum k such that g has a proper k-colouring, by brute enumeration.
inline int chromatic(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (c[u] == c[v]) {
                    proper = false;
                    break;
                }
            if (proper) return k;
            int i = n - 1;
            while (i >= 0 && c[i] == k - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
    }
    return n;
}

// Naive minimum edge-labelled cover for C and IC, up to max_k pieces. Every
// edge takes a nonempty subset of pieces and every isolated vertex one
// piece; pieces are checked by full map enumeration. Returns the least
// feasible k, or nothing if every labelling up to max_k fails.
inline std::optional<int> cover_complexity(const Graph& g, const Graph& h, bool injective,
                                           int max_k) {
    int ne = g.edge_count();
    std::vector<int> isolated;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v)) isolated.push_back(v);
    if (g.vertex_count() == 0) return 1;

    for (int k = 1; k <= max_k; ++k) {
        std::vector<int> edge_label(ne, 1);
        std::vector<int> vert_label(isolated.size(), 0);
        bool found = false;

        auto feasible = [&]() {
            for (int p = 0; p < k; ++p) {
                Graph piece(g.mode());
                std::vector<int> local(g.vertex_count(), -1);
                auto touch = [&](int v) {
                    if (local[v] < 0) local[v] = piece.add_vertex(g.vertex_name(v));
                };
                for (int e = 0; e < ne; ++e)
                    if (edge_label[e] & (1 << p)) {
                        touch(g.edges()[e].first);
                        touch(g.edges()[e].second);
                    }
                for (std::size_t i = 0; i < isolated.size(); ++i)
                    if (vert_label[i] == p) touch(isolated[i]);
                for (int e = 0; e < ne; ++e)
                    if (edge_label[e] & (1 << p))
                        piece.add_edge(g.vertex_name(g.edges()[e].first),
                                       g.vertex_name(g.edges()[e].second));
                if (!hom_exists(piece, h, injective)) return false;
            }
            return true;
        };

        // For the plain kind isolated vertices never matter (any piece hosts
        // them when the codomain is nonempty), so only edges are labelled.
        std::function<void(std::size_t)> verts = [&](std::size_t i) {
            if (found) return;
            if (i == isolated.size()) {
                if (feasible()) found = true;
                return;
            }
            for (int p = 0; p < k && !found; ++p) {
                vert_label[i] = p;
                verts(i + 1);
            }
        };
        std::function<void(int)> edges = [&](int e) {
            if (found) return;
            if (e == ne) {
                if (injective)
                    verts(0);
                else if (feasible())
                    found = true;
                return;
            }
            for (int mask = 1; mask < (1 << k) && !found; ++mask) {
                edge_label[e] = mask;
                edges(e + 1);
            }
        };
        if (h.vertex_count() == 0) return std::nullopt;
        edges(0);
        if (found) return k;
    }
    return std::nullopt;
}

// Deterministic random graphs for the property suites.
inline Graph random_simple(int n, double p, std::uint32_t seed) {
    Graph g(Mode::undirected);
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    std::mt19937 rng(seed);
    auto threshold = std::uint64_t(p * 4294967296.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::uint64_t(rng()) < threshold) g.add_edge(i, j);
    return g;
}

inline Graph random_directed(int n, double p, std::uint32_t seed, double loop_p = 0.0) {
    Graph g(Mode::directed);
    for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
    std::mt19937 rng(seed);
    auto threshold = std::uint64_t(p * 4294967296.0);
    auto loop_threshold = std::uint64_t(loop_p * 4294967296.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                if (std::uint64_t(rng()) < loop_threshold) g.add_edge(i, i);
            } else if (std::uint64_t(rng()) < threshold) {
                g.add_edge(i, j);
            }
        }
    return g;
}

// Random relabelling of the vertices, preserving structure.
inline Graph shuffled(const Graph& g, std::uint32_t seed) {
    std::mt19937 rng(seed);
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    Graph out(g.mode());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    for (int i = 0; i < n; ++i) out.add_vertex(g.vertex_name(perm[i]));
    for (auto [u, v] : g.edges()) out.add_edge(g.vertex_name(u), g.vertex_name(v));
    return out;
}

}  // namespace oracles
