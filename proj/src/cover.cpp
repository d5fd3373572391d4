#include "homc/cover.hpp"

#include <algorithm>
#include <functional>

#include "homc/bitset.hpp"
#include "homc/generate.hpp"
#include "homc/invariants.hpp"
#include "homc/partition.hpp"
#include "homc/search.hpp"

namespace homc {

using detail::Bitset;

namespace {

void require_simple(const Graph& g, const char* who) {
    if (!g.is_simple()) throw InputError(std::string(who) + " needs a simple undirected graph");
}

// Exact minimum set cover by branch and bound: branch on the uncovered
// element with the fewest candidates, candidates in ascending index. The
// first optimum found under this deterministic order is returned.
std::vector<int> exact_set_cover(const std::vector<Bitset>& cands, int m, const Budgets& b) {
    if (m == 0) return {};
    std::vector<std::vector<int>> covering(m);
    for (int i = 0; i < int(cands.size()); ++i)
        for (int e = cands[i].next(0); e >= 0; e = cands[i].next(e + 1))
            covering[e].push_back(i);
    for (int e = 0; e < m; ++e)
        if (covering[e].empty()) throw InputError("set cover: element not coverable");

    int max_cover = 0;
    for (const auto& c : cands) max_cover = std::max(max_cover, c.count());

    // Greedy upper bound.
    std::vector<int> best;
    {
        Bitset uncovered(m, true);
        while (uncovered.any()) {
            int pick = -1, gain = -1;
            for (int i = 0; i < int(cands.size()); ++i) {
                Bitset t = cands[i];
                t.and_with(uncovered);
                int c = t.count();
                if (c > gain) {
                    gain = c;
                    pick = i;
                }
            }
            best.push_back(pick);
            uncovered.andnot_with(cands[pick]);
        }
    }

    long long nodes = 0;
    Deadline deadline(b.time_limit_s);
    std::vector<int> chosen;
    std::function<void(Bitset&, int)> dfs = [&](Bitset& uncovered, int depth) {
        if (++nodes > b.max_nodes)
            throw ResourceLimitError("set cover exceeded the node budget");
        if ((nodes & 0x3ff) == 0 && deadline.expired())
            throw ResourceLimitError("set cover hit the time limit");
        if (uncovered.none()) {
            best = chosen;
            return;
        }
        int rest = uncovered.count();
        if (depth + (rest + max_cover - 1) / max_cover >= int(best.size())) return;
        int pivot = -1, fewest = -1;
        for (int e = uncovered.next(0); e >= 0; e = uncovered.next(e + 1)) {
            int c = 0;
            for (int i : covering[e]) {
                Bitset t = cands[i];
                t.and_with(uncovered);
                if (t.any()) ++c;
            }
            if (pivot < 0 || c < fewest) {
                pivot = e;
                fewest = c;
            }
        }
        for (int i : covering[pivot]) {
            Bitset next = uncovered;
            next.andnot_with(cands[i]);
            chosen.push_back(i);
            dfs(next, depth + 1);
            chosen.pop_back();
        }
    };
    Bitset all(m, true);
    dfs(all, 0);
    return best;
}

Bitset edge_mask(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    Bitset mask(g.edge_count());
    const auto& ge = g.edges();
    for (auto [u, v] : edges)
        for (int e = 0; e < int(ge.size()); ++e)
            if (ge[e] == std::make_pair(u, v) || (!g.directed() && ge[e] == std::make_pair(v, u)))
                mask.set(e);
    return mask;
}

std::vector<std::vector<int>> parts_of_piece(const Graph& g, const SubgraphRef& sub, int l,
                                             const Budgets& b) {
    Graph piece = sub.to_graph();
    auto [ok, parts] = is_l_partite(piece, l, b);
    if (!ok) throw std::logic_error("certificate piece is not l-partite");
    std::vector<std::vector<int>> out;
    for (const auto& part : *parts) {
        std::vector<int> ids;
        for (int local : part) ids.push_back(g.vertex_index(piece.vertex_name(local)));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    return out;
}

}  // namespace

CoverResult sigma_cover(const Graph& g, const std::function<bool(const Graph&)>& predicate,
                        bool hereditary, const Budgets& b) {
    CoverResult res;
    auto gp = share(g);
    if (g.edge_count() == 0) {
        // Probe small pieces: the empty piece, single vertices, and the
        // edgeless spanning piece.
        std::vector<SubgraphRef> probes;
        probes.push_back(SubgraphRef(gp, {}, {}));
        for (int v = 0; v < g.vertex_count(); ++v) probes.push_back(SubgraphRef(gp, {v}, {}));
        std::vector<int> all(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
        probes.push_back(SubgraphRef(gp, all, {}));
        for (auto& probe : probes)
            if (predicate(probe.to_graph())) {
                res.value = 1;
                res.certificate = CoverCertificate{gp, CoverClass::predicate, 0, {}};
                res.certificate->pieces.push_back({probe, {}, {}});
                return res;
            }
        return res;  // infinite
    }

    std::vector<PartItem> items;
    for (auto [u, v] : g.edges()) items.push_back({true, u, v});
    PartitionOptions popt;
    popt.max_nodes = b.max_nodes;
    popt.deadline = Deadline(b.time_limit_s);

    if (!hereditary) {
        // General labelled covers: each edge takes a nonempty piece subset.
        if (g.edge_count() > 10)
            throw ResourceLimitError("general cover search is limited to 10 edges");
        int m = g.edge_count();
        for (int k = 1; k <= m; ++k) {
            std::vector<int> label(m, 0);
            std::function<bool(int)> assign = [&](int e) -> bool {
                if (e == m) {
                    for (int p = 0; p < k; ++p) {
                        std::vector<std::pair<int, int>> edges;
                        for (int i = 0; i < m; ++i)
                            if (label[i] & (1 << p)) edges.push_back(g.edges()[i]);
                        std::vector<int> verts;
                        for (auto [u, v] : edges) {
                            verts.push_back(u);
                            verts.push_back(v);
                        }
                        SubgraphRef sub(gp, verts, edges);
                        if (!predicate(sub.to_graph())) return false;
                    }
                    return true;
                }
                for (int mask = 1; mask < (1 << k); ++mask) {
                    label[e] = mask;
                    if (assign(e + 1)) return true;
                }
                return false;
            };
            if (assign(0)) {
                res.value = k;
                res.certificate = CoverCertificate{gp, CoverClass::predicate, 0, {}};
                for (int p = 0; p < k; ++p) {
                    std::vector<std::pair<int, int>> edges;
                    for (int i = 0; i < m; ++i)
                        if (label[i] & (1 << p)) edges.push_back(g.edges()[i]);
                    std::vector<int> verts;
                    for (auto [u, v] : edges) {
                        verts.push_back(u);
                        verts.push_back(v);
                    }
                    res.certificate->pieces.push_back({SubgraphRef(gp, verts, edges), {}, {}});
                }
                return res;
            }
        }
        return res;  // infinite
    }

    auto factory = predicate_checker_factory(g, predicate);
    for (int k = 1; k <= g.edge_count(); ++k) {
        auto assignment = partition_items(items, k, factory, popt);
        if (!assignment) {
            if (k == 1) {
                // A single uncoverable edge makes every k infeasible.
                bool single_ok = true;
                for (const auto& item : items) {
                    auto checker = factory();
                    if (!checker->try_add(item)) single_ok = false;
                }
                if (!single_ok) return res;  // infinite
            }
            continue;
        }
        res.value = k;
        res.certificate = CoverCertificate{gp, CoverClass::predicate, 0, {}};
        std::vector<std::vector<std::pair<int, int>>> edges(k);
        for (std::size_t i = 0; i < items.size(); ++i)
            edges[(*assignment)[i]].emplace_back(items[i].u, items[i].v);
        for (int p = 0; p < k; ++p) {
            if (edges[p].empty()) continue;
            std::vector<int> verts;
            for (auto [u, v] : edges[p]) {
                verts.push_back(u);
                verts.push_back(v);
            }
            res.certificate->pieces.push_back({SubgraphRef(gp, verts, edges[p]), {}, {}});
        }
        return res;
    }
    return res;
}

CoverResult clique_cover_number(const Graph& g, const Budgets& b) {
    require_simple(g, "clique_cover_number");
    CoverResult res;
    auto gp = share(g);
    if (g.edge_count() == 0) {
        res.value = 1;
        res.certificate = CoverCertificate{gp, CoverClass::clique, 0, {}};
        std::vector<int> verts;
        if (g.vertex_count() > 0) verts.push_back(0);
        res.certificate->pieces.push_back({SubgraphRef(gp, verts, {}), verts, {}});
        return res;
    }

    auto cliques = maximal_cliques(g);
    std::sort(cliques.begin(), cliques.end());
    std::vector<Bitset> masks;
    for (const auto& clique : cliques) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t c = a + 1; c < clique.size(); ++c)
                edges.emplace_back(clique[a], clique[c]);
        masks.push_back(edge_mask(g, edges));
    }
    auto chosen = exact_set_cover(masks, g.edge_count(), b);
    std::sort(chosen.begin(), chosen.end());

    res.value = int(chosen.size());
    if (*res.value > g.edge_count()) throw std::logic_error("clique cover exceeds the edge count");
    res.certificate = CoverCertificate{gp, CoverClass::clique, 0, {}};
    for (int i : chosen) {
        const auto& clique = cliques[i];
        std::vector<std::pair<int, int>> edges;
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t c = a + 1; c < clique.size(); ++c)
                edges.emplace_back(clique[a], clique[c]);
        SubgraphRef sub(gp, clique, edges);
        res.certificate->pieces.push_back({std::move(sub), clique, {}});
    }
    return res;
}

CoverResult particity(const Graph& g, int l, const Budgets& b) {
    require_simple(g, "particity");
    if (l < 2) throw InputError("particity needs l >= 2");
    CoverResult res;
    auto gp = share(g);
    if (g.vertex_count() < l) return res;  // no piece can have l nonempty parts

    auto pad_piece = [&](std::vector<int> verts, std::vector<std::pair<int, int>> edges) {
        // Borrow canonically smallest vertices until l parts are possible.
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int v = 0; v < g.vertex_count() && int(verts.size()) < l; ++v)
            if (!std::binary_search(verts.begin(), verts.end(), v)) {
                verts.insert(std::lower_bound(verts.begin(), verts.end(), v), v);
            }
        return SubgraphRef(gp, std::move(verts), std::move(edges));
    };

    if (g.edge_count() == 0) {
        res.value = 1;
        SubgraphRef sub = pad_piece({}, {});
        res.certificate = CoverCertificate{gp, CoverClass::l_partite, l, {}};
        res.certificate->pieces.push_back({sub, {}, parts_of_piece(g, sub, l, b)});
        return res;
    }

    int chi = chromatic_number(g, b).first;
    if (chi <= l) {
        res.value = 1;
        SubgraphRef sub = SubgraphRef::whole(g);
        res.certificate = CoverCertificate{gp, CoverClass::l_partite, l, {}};
        res.certificate->pieces.push_back({sub, {}, parts_of_piece(g, sub, l, b)});
        return res;
    }

    // Pieces cover edges only, so the l-partite predicate reduces to
    // l-colourability of the piece; missing vertices are borrowed.
    std::vector<PartItem> items;
    for (auto [u, v] : g.edges()) items.push_back({true, u, v});
    Graph kl = make_complete(l);
    auto factory = hom_checker_factory(g, kl, false, b);
    PartitionOptions popt;
    popt.max_nodes = b.max_nodes;
    popt.deadline = Deadline(b.time_limit_s);

    int lb = ceil_log(l, chi);
    for (int k = lb; k <= g.edge_count(); ++k) {
        auto assignment = partition_items(items, k, factory, popt);
        if (!assignment) continue;
        res.value = k;
        std::vector<std::vector<std::pair<int, int>>> edges(k);
        for (std::size_t i = 0; i < items.size(); ++i)
            edges[(*assignment)[i]].emplace_back(items[i].u, items[i].v);
        res.certificate = CoverCertificate{gp, CoverClass::l_partite, l, {}};
        for (int p = 0; p < k; ++p) {
            std::vector<int> verts;
            for (auto [u, v] : edges[p]) {
                verts.push_back(u);
                verts.push_back(v);
            }
            SubgraphRef sub = pad_piece(std::move(verts), std::move(edges[p]));
            res.certificate->pieces.push_back({sub, {}, parts_of_piece(g, sub, l, b)});
        }
        break;
    }
    if (!res.value) throw std::logic_error("particity search passed its upper bound");

    // Cross-identities with the complexity engine.
    if (*res.value >= 2) {
        if (*res.value != ceil_log(l, chi))
            throw std::logic_error("particity disagrees with the log formula");
        auto c = hom_complexity(g, make_complete(l), Method::automatic, b);
        if (!c.value || *c.value != *res.value)
            throw std::logic_error("particity disagrees with the hom-complexity");
    }
    return res;
}

CoverResult partite_dimension(const Graph& g, int l, const Budgets& b) {
    require_simple(g, "partite_dimension");
    if (l < 2) throw InputError("partite_dimension needs l >= 2");
    int budget = l == 2 ? b.bipdim_vertex_budget_l2 : b.bipdim_vertex_budget;
    if (g.vertex_count() > budget)
        throw ResourceLimitError("partite_dimension enumeration is limited to " +
                                 std::to_string(budget) + " vertices");
    CoverResult res;
    auto gp = share(g);
    if (g.edge_count() == 0) return res;  // complete l-partite pieces need an edge

    int n = g.vertex_count();
    // Candidate pieces: choose a vertex subset, compute the components of
    // its non-adjacency relation, and merge them into exactly l groups. All
    // cross-group pairs are then edges of g by construction.
    struct Candidate {
        Bitset mask;
        std::vector<int> verts;
        std::vector<std::vector<int>> parts;
    };
    std::vector<Candidate> cands;
    std::vector<int> comp(n);
    for (int subset = 1; subset < (1 << n); ++subset) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (subset & (1 << v)) verts.push_back(v);
        if (int(verts.size()) < l) continue;
        // Components of the complement restricted to the subset.
        std::fill(comp.begin(), comp.end(), -1);
        int nc = 0;
        for (int v : verts) {
            if (comp[v] >= 0) continue;
            std::vector<int> stack{v};
            comp[v] = nc;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : verts)
                    if (comp[y] < 0 && y != x && !g.has_edge(x, y)) {
                        comp[y] = nc;
                        stack.push_back(y);
                    }
            }
            ++nc;
        }
        if (nc < l) continue;
        // Merge components into exactly l nonempty groups (restricted
        // growth strings).
        std::vector<int> group(nc, -1);
        std::function<void(int, int)> merge = [&](int c, int used) {
            if (nc - c < l - used) return;
            if (c == nc) {
                if (used != l) return;
                std::vector<std::vector<int>> parts(l);
                for (int v : verts) parts[group[comp[v]]].push_back(v);
                std::vector<std::pair<int, int>> edges;
                for (std::size_t a = 0; a < verts.size(); ++a)
                    for (std::size_t c2 = a + 1; c2 < verts.size(); ++c2)
                        if (group[comp[verts[a]]] != group[comp[verts[c2]]])
                            edges.emplace_back(verts[a], verts[c2]);
                if (edges.empty()) return;
                cands.push_back({edge_mask(g, edges), verts, parts});
                return;
            }
            int cap = std::min(used + 1, l);
            for (int t = 0; t < cap; ++t) {
                group[c] = t;
                merge(c + 1, std::max(used, t + 1));
            }
            group[c] = -1;
        };
        merge(0, 0);
    }

    // Drop dominated candidates (edge mask contained in another).
    std::vector<char> dominated(cands.size(), 0);
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = 0; j < cands.size(); ++j) {
            if (i == j || dominated[i]) continue;
            if (cands[i].mask == cands[j].mask ? j < i : cands[i].mask.is_subset_of(cands[j].mask))
                dominated[i] = 1;
        }
    std::vector<Candidate> keep;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (!dominated[i]) keep.push_back(std::move(cands[i]));
    if (keep.empty()) return res;  // infinite

    // Some edge may be in no candidate (cannot happen: a single edge is a
    // complete 2-partite graph, padded by merges only when l > 2).
    std::vector<Bitset> masks;
    for (const auto& c : keep) masks.push_back(c.mask);
    Bitset coverable(g.edge_count());
    for (const auto& m : masks) coverable.or_with(m);
    if (coverable.count() != g.edge_count()) return res;  // infinite

    auto chosen = exact_set_cover(masks, g.edge_count(), b);
    std::sort(chosen.begin(), chosen.end());
    res.value = int(chosen.size());
    res.certificate = CoverCertificate{gp, CoverClass::complete_l_partite, l, {}};
    for (int i : chosen) {
        std::vector<std::pair<int, int>> edges;
        const auto& c = keep[i];
        for (std::size_t a = 0; a < c.verts.size(); ++a)
            for (std::size_t d = a + 1; d < c.verts.size(); ++d) {
                int u = c.verts[a], v = c.verts[d];
                bool cross = false;
                for (int p = 0; p < l && !cross; ++p)
                    cross = std::count(c.parts[p].begin(), c.parts[p].end(), u) &&
                            !std::count(c.parts[p].begin(), c.parts[p].end(), v);
                if (cross) edges.emplace_back(u, v);
            }
        res.certificate->pieces.push_back({SubgraphRef(gp, c.verts, edges), {}, c.parts});
    }

    // Cross-identities: the complete graph formula and the covering chain.
    bool complete = g.edge_count() == n * (n - 1) / 2 && n >= 2;
    if (complete && l == 2 && *res.value != ceil_log(2, n))
        throw std::logic_error("bipartite dimension of a complete graph is off the formula");
    auto beta = particity(g, l, b);
    if (beta.value && *res.value < *beta.value)
        throw std::logic_error("partite dimension fell below the particity");
    return res;
}

CcBounds cc_lower_bounds(const Graph& g, const Budgets& b) {
    require_simple(g, "cc_lower_bounds");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v)) throw InputError("cc_lower_bounds needs no isolated vertices");
    auto [omega, clique] = clique_number(g, b);
    if (omega < 2) throw InputError("cc_lower_bounds needs omega >= 2");
    int chi = chromatic_number(g, b).first;
    auto ic = injective_hom_complexity(g, make_complete(omega), b);
    if (!ic.value) throw std::logic_error("IC into the clique bound should be finite");
    return CcBounds{BoundEntry{*ic.value, "injective-into-max-clique"},
                    BoundEntry{ceil_log(omega, chi), "log-clique-chromatic"},
                    ceil_log(2, g.vertex_count() + 1)};
}

}  // namespace homc
