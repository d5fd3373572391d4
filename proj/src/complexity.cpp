#include "homc/complexity.hpp"

#include <algorithm>
#include <functional>

#include "homc/algebra.hpp"
#include "homc/decompose.hpp"
#include "homc/generate.hpp"
#include "homc/invariants.hpp"
#include "homc/partition.hpp"
#include "homc/search.hpp"

namespace homc {

std::string to_string(InfiniteReason r) {
    switch (r) {
        case InfiniteReason::loop_mismatch: return "loop-mismatch";
        case InfiniteReason::no_edges: return "no-edges";
        case InfiniteReason::empty_codomain: return "empty-codomain";
        case InfiniteReason::uncoverable_target: return "uncoverable-target";
        default: return "none";
    }
}

std::string to_string(Method m) {
    switch (m) {
        case Method::formula: return "formula";
        case Method::orpower: return "orpower";
        case Method::partition: return "partition";
        case Method::closed_form_ic: return "closed_form_ic";
        case Method::brute: return "brute";
        default: return "auto";
    }
}

int ceil_log(int base, int x) {
    if (base < 2) throw InputError("ceil_log needs base >= 2");
    int k = 0;
    long long p = 1;
    while (p < x) {
        p *= base;
        ++k;
    }
    return k;
}

Finiteness finiteness(const Graph& g, const Graph& h, bool injective) {
    if (g.mode() != h.mode()) throw InputError("finiteness needs matching modes");
    if (g.vertex_count() == 0) return {true, InfiniteReason::none, 1};
    if (h.vertex_count() == 0) return {false, InfiniteReason::empty_codomain, 0};
    if (g.has_any_loop() && !h.has_any_loop()) return {false, InfiniteReason::loop_mismatch, 0};

    int g_nonloop = g.non_loop_edge_count();
    int h_nonloop = h.non_loop_edge_count();
    if (!injective) {
        if (g.edge_count() > 0 && h.edge_count() == 0)
            return {false, InfiniteReason::no_edges, 0};
        return {true, InfiniteReason::none, std::max(1, g.edge_count())};
    }
    if (g_nonloop > 0 && h_nonloop == 0) return {false, InfiniteReason::no_edges, 0};
    int isolated = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v)) ++isolated;
    int upper = g.edge_count() + (isolated + h.vertex_count() - 1) / h.vertex_count();
    return {true, InfiniteReason::none, std::max(1, upper)};
}

namespace {

bool simple_pair(const Graph& g, const Graph& h) { return g.is_simple() && h.is_simple(); }

std::vector<int> isolated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v)) out.push_back(v);
    return out;
}

// Assemble a certificate from an edge/vertex partition. Piece maps are
// recomputed canonically so certificates do not depend on the search path.
QuasiHom certificate_from_partition(const Graph& g, const Graph& h,
                                    const std::vector<PartItem>& items,
                                    const std::vector<int>& assignment, int k, bool injective,
                                    const Budgets& b) {
    QuasiHom cert;
    cert.source = share(g);
    cert.target = share(h);
    cert.kind = injective ? QuasiKind::injective : QuasiKind::plain;
    int pieces = 0;
    for (int p : assignment) pieces = std::max(pieces, p + 1);
    pieces = std::max(pieces, 1);
    (void)k;

    std::vector<std::vector<std::pair<int, int>>> edges(pieces);
    std::vector<std::vector<int>> verts(pieces);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        int p = assignment[i];
        if (item.is_edge) {
            edges[p].emplace_back(item.u, item.v);
            verts[p].push_back(item.u);
            verts[p].push_back(item.v);
        } else {
            verts[p].push_back(item.u);
        }
    }
    if (!injective)  // isolated vertices ride along in the first piece
        for (int v : isolated_vertices(g)) verts[0].push_back(v);

    for (int p = 0; p < pieces; ++p) {
        SubgraphRef sub(cert.source, std::move(verts[p]), std::move(edges[p]));
        Graph piece = sub.to_graph();
        auto witness = injective ? find_injective_hom(piece, h, b) : find_hom(piece, h, b);
        if (!witness) throw std::logic_error("partition produced an uncolourable piece");
        cert.pieces.push_back({std::move(sub), std::move(*witness)});
    }
    return cert;
}

QuasiHom certificate_from_orpower(const Graph& g, const Graph& h, const OrPowerView& view,
                                  const std::vector<int>& tuples, const Budgets& b) {
    int k = view.power();
    QuasiHom cert;
    cert.source = share(g);
    cert.target = share(h);
    std::vector<std::vector<int>> digit(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) digit[v] = view.digits(tuples[v]);

    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    for (int i = 0; i < k; ++i) {
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            if (h.has_edge(digit[u][i], digit[v][i])) edges.emplace_back(u, v);
        SubgraphRef sub(cert.source, all, std::move(edges));
        Graph piece = sub.to_graph();
        std::vector<int> mapping(piece.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) mapping[v] = digit[v][i];
        VertexMap f(share(piece), cert.target, std::move(mapping));
        auto report = verify_map(f);
        if (!report.ok) throw std::logic_error("or-power certificate piece is not a hom");
        cert.pieces.push_back({std::move(sub), std::move(f)});
    }
    (void)b;
    return cert;
}

struct EngineContext {
    std::optional<int> chi_g, chi_h, omega_h;
};

// Exact chromatic data is only available for simple graphs.
void fill_invariants(EngineContext& ctx, const Graph& g, const Graph& h, const Budgets& b) {
    if (simple_pair(g, h)) {
        ctx.chi_g = chromatic_number(g, b).first;
        ctx.chi_h = chromatic_number(h, b).first;
        ctx.omega_h = clique_number(h, b).first;
    }
}

std::optional<BoundEntry> lower_bound_entry(const EngineContext& ctx) {
    if (ctx.chi_g && ctx.chi_h && *ctx.chi_h >= 2)
        return BoundEntry{std::max(1, ceil_log(*ctx.chi_h, *ctx.chi_g)), "chromatic-power"};
    return std::nullopt;
}

std::optional<BoundEntry> upper_bound_entry(const EngineContext& ctx) {
    if (ctx.chi_g && ctx.omega_h && *ctx.omega_h >= 2)
        return BoundEntry{std::max(1, ceil_log(*ctx.omega_h, *ctx.chi_g)), "clique-power"};
    return std::nullopt;
}

std::optional<int> orpower_method(const Graph& g, const Graph& h, int lb, int ub,
                                  const Budgets& b, std::vector<int>& tuples_out, int& k_out) {
    for (int k = lb; k <= ub; ++k) {
        double size = 1;
        for (int i = 0; i < k; ++i) size *= h.vertex_count();
        if (size > double(b.orpower_vertex_budget))
            throw ResourceLimitError("or-power iteration exceeded the vertex budget");
        OrPowerView view(h, k);
        SearchOptions opt;
        opt.mrv = true;
        opt.max_nodes = b.max_nodes;
        opt.deadline = Deadline(b.time_limit_s);
        bool hit = false;
        search_homs(g, view, opt, [&](const std::vector<int>&) {
            hit = true;
            return false;
        });
        if (!hit) continue;
        opt.mrv = false;  // canonical witness
        std::vector<int> witness;
        search_homs(g, view, opt, [&](const std::vector<int>& a) {
            witness = a;
            return false;
        });
        tuples_out = std::move(witness);
        k_out = k;
        return k;
    }
    return std::nullopt;
}

std::optional<int> partition_method(const Graph& g, const Graph& h, int lb, int ub, bool injective,
                                    const Budgets& b, std::vector<PartItem>& items_out,
                                    std::vector<int>& assignment_out) {
    int edge_budget =
        injective ? b.partition_edge_budget_injective : b.partition_edge_budget_plain;
    if (g.edge_count() > edge_budget)
        throw ResourceLimitError("partition search is limited to " + std::to_string(edge_budget) +
                                 " edges; raise the budget to go further");
    std::vector<PartItem> items;
    for (auto [u, v] : g.edges()) items.push_back({true, u, v});
    if (injective)
        for (int v : isolated_vertices(g)) items.push_back({false, v, -1});

    PartitionOptions popt;
    popt.max_nodes = b.max_nodes;
    popt.deadline = Deadline(b.time_limit_s);
    auto factory = hom_checker_factory(g, h, injective, b);
    for (int k = lb; k <= ub; ++k) {
        auto assignment = partition_items(items, k, factory, popt);
        if (assignment) {
            items_out = items;
            assignment_out = std::move(*assignment);
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace

ComplexityResult hom_complexity(const Graph& g, const Graph& h, Method method, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("hom_complexity needs matching modes");
    ComplexityResult res;
    auto fin = finiteness(g, h, false);
    if (!fin.finite) {
        res.reason = fin.reason;
        res.method = method == Method::automatic ? Method::orpower : method;
        return res;
    }

    EngineContext ctx;
    fill_invariants(ctx, g, h, b);
    res.lower_bound = lower_bound_entry(ctx);
    res.upper_bound = upper_bound_entry(ctx);
    if (!res.upper_bound) res.upper_bound = BoundEntry{fin.constructive_upper, "single-item-pieces"};

    bool formula_ok = ctx.chi_g && *ctx.chi_g >= 2 && ctx.omega_h && ctx.chi_h &&
                      *ctx.omega_h == *ctx.chi_h && *ctx.chi_h >= 2;
    Method chosen = method;
    if (method == Method::formula && !formula_ok)
        throw InputError("formula method needs simple graphs, chi(g) >= 2 and omega(h) = chi(h) >= 2");
    if (method == Method::automatic) chosen = formula_ok ? Method::formula : Method::orpower;

    int lb = res.lower_bound ? res.lower_bound->value : 1;
    int ub = std::min(fin.constructive_upper,
                      res.upper_bound ? std::max(res.upper_bound->value, 1) : fin.constructive_upper);
    // The clique upper bound only applies when it exists; the constructive
    // bound is always valid.
    if (!upper_bound_entry(ctx)) ub = fin.constructive_upper;

    if (chosen == Method::formula) {
        res.method = Method::formula;
        res.value = std::max(1, ceil_log(*ctx.chi_h, *ctx.chi_g));
        DesignPlan plan = design_into_target(g, h, b);
        if (int(plan.quasi.pieces.size()) != *res.value)
            throw std::logic_error("design plan size disagrees with the formula");
        res.certificate = std::move(plan.quasi);
    } else if (chosen == Method::orpower) {
        std::vector<int> tuples;
        int k = 0;
        std::optional<int> value;
        try {
            value = orpower_method(g, h, lb, ub, b, tuples, k);
        } catch (const ResourceLimitError&) {
            if (method != Method::automatic) throw;
            // fall through to the partition search
        }
        if (value) {
            res.method = Method::orpower;
            res.value = value;
            OrPowerView view(h, k);
            res.certificate = certificate_from_orpower(g, h, view, tuples, b);
        } else if (method == Method::automatic) {
            chosen = Method::partition;
        } else {
            throw std::logic_error("or-power iteration passed its upper bound");
        }
    }
    if (chosen == Method::partition && !res.value) {
        std::vector<PartItem> items;
        std::vector<int> assignment;
        auto value = partition_method(g, h, lb, ub, false, b, items, assignment);
        if (!value) throw std::logic_error("partition search passed its upper bound");
        res.method = Method::partition;
        res.value = value;
        res.certificate =
            certificate_from_partition(g, h, items, assignment, *value, false, b);
    }

    if (res.certificate) {
        auto report = verify_quasi_hom(*res.certificate, g, h, false, res.value);
        if (!report.ok)
            throw std::logic_error("certificate failed verification: " + report.failures.front());
    }
    return res;
}

ComplexityResult injective_hom_complexity(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("injective_hom_complexity needs matching modes");
    ComplexityResult res;
    auto fin = finiteness(g, h, true);
    if (!fin.finite) {
        res.reason = fin.reason;
        res.method = Method::partition;
        return res;
    }
    if (g.vertex_count() == 0) {
        res.method = Method::closed_form_ic;
        res.value = 1;
        QuasiHom cert;
        cert.source = share(g);
        cert.target = share(h);
        cert.kind = QuasiKind::injective;
        cert.pieces.push_back(
            {SubgraphRef(cert.source, {}, {}),
             VertexMap(std::make_shared<const Graph>(Graph(g.mode())), cert.target, {})});
        res.certificate = std::move(cert);
        return res;
    }

    // Capacity bounds: pieces are vertex- and edge-injective.
    int lb = 1;
    std::string lb_by = "trivial";
    auto consider = [&](int value, const char* by) {
        if (value > lb) {
            lb = value;
            lb_by = by;
        }
    };
    consider((g.vertex_count() + h.vertex_count() - 1) / h.vertex_count(), "vertex-capacity");
    if (g.edge_count() > 0)
        consider((g.edge_count() + h.edge_count() - 1) / h.edge_count(), "edge-capacity");
    EngineContext ctx;
    fill_invariants(ctx, g, h, b);
    if (auto low = lower_bound_entry(ctx)) consider(low->value, "chromatic-power");
    res.lower_bound = BoundEntry{lb, lb_by};
    res.upper_bound = BoundEntry{fin.constructive_upper, "single-item-pieces"};

    // Closed forms for the single-edge target.
    bool h_is_k2 = !h.directed() && h.vertex_count() == 2 && h.edge_count() == 1 &&
                   !h.has_any_loop();
    if (h_is_k2) {
        bool no_isolated = isolated_vertices(g).empty();
        if (g.edge_count() > 0 && no_isolated) {
            res.method = Method::closed_form_ic;
            res.value = g.edge_count();
            QuasiHom cert;
            cert.source = share(g);
            cert.target = share(h);
            cert.kind = QuasiKind::injective;
            for (auto [u, v] : g.edges()) {
                SubgraphRef sub(cert.source, {u, v}, {{u, v}});
                Graph piece = sub.to_graph();
                auto witness = find_injective_hom(piece, h, b);
                cert.pieces.push_back({std::move(sub), std::move(*witness)});
            }
            res.certificate = std::move(cert);
        } else if (g.edge_count() == 0) {
            res.method = Method::closed_form_ic;
            res.value = (g.vertex_count() + 1) / 2;
            QuasiHom cert;
            cert.source = share(g);
            cert.target = share(h);
            cert.kind = QuasiKind::injective;
            for (int v = 0; v < g.vertex_count(); v += 2) {
                std::vector<int> vs{v};
                if (v + 1 < g.vertex_count()) vs.push_back(v + 1);
                SubgraphRef sub(cert.source, vs, {});
                Graph piece = sub.to_graph();
                auto witness = find_injective_hom(piece, h, b);
                cert.pieces.push_back({std::move(sub), std::move(*witness)});
            }
            res.certificate = std::move(cert);
        }
    }

    if (!res.value) {
        std::vector<PartItem> items;
        std::vector<int> assignment;
        auto value =
            partition_method(g, h, lb, fin.constructive_upper, true, b, items, assignment);
        if (!value) throw std::logic_error("injective partition search passed its upper bound");
        res.method = Method::partition;
        res.value = value;
        res.certificate = certificate_from_partition(g, h, items, assignment, *value, true, b);
    }

    if (res.certificate) {
        auto report = verify_quasi_hom(*res.certificate, g, h, true, res.value);
        if (!report.ok)
            throw std::logic_error("certificate failed verification: " + report.failures.front());
    }
    return res;
}

BoundReport complexity_bounds(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("complexity_bounds needs matching modes");
    EngineContext ctx;
    fill_invariants(ctx, g, h, b);
    BoundReport report;
    report.lower = lower_bound_entry(ctx);
    report.upper = upper_bound_entry(ctx);
    return report;
}

ComplexityResult strong_hom_complexity(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("strong_hom_complexity needs matching modes");
    if (g.vertex_count() > b.strong_vertex_budget || h.vertex_count() > b.strong_vertex_budget ||
        g.edge_count() > b.strong_edge_budget || h.edge_count() > b.strong_edge_budget)
        throw ResourceLimitError("strong hom-complexity is brute force; inputs exceed its budget");

    ComplexityResult res;
    res.method = Method::brute;
    auto base = hom_complexity(g, h, Method::automatic, b);
    if (!base.finite()) {
        res.reason = base.reason;
        return res;
    }

    int ne = g.edge_count(), nhv = h.vertex_count(), nhe = h.edge_count();
    // Every piece may be taken spanning, so a piece is described by an edge
    // subset; enumerate the hom image masks (target vertices + target edges)
    // reachable from each subset.
    int subsets = 1 << ne;
    std::vector<std::vector<std::pair<int, int>>> options(subsets);
    Graph spanning_base(g.mode());
    for (int v = 0; v < g.vertex_count(); ++v) spanning_base.add_vertex(g.vertex_name(v));
    for (int s = 0; s < subsets; ++s) {
        Graph piece = spanning_base;
        for (int e = 0; e < ne; ++e)
            if (s & (1 << e)) piece.add_edge(g.edges()[e].first, g.edges()[e].second);
        std::vector<std::pair<int, int>> masks;
        auto homs = enumerate_homs(piece, h, 1'000'000, b);
        for (const auto& f : homs) {
            int vmask = 0, emask = 0;
            for (int v = 0; v < piece.vertex_count(); ++v) vmask |= 1 << f.image(v);
            for (auto [u, v] : piece.edges()) {
                for (int ei = 0; ei < nhe; ++ei) {
                    auto [a, bb] = h.edges()[ei];
                    bool match = h.directed() ? (a == f.image(u) && bb == f.image(v))
                                              : ((a == f.image(u) && bb == f.image(v)) ||
                                                 (a == f.image(v) && bb == f.image(u)));
                    if (match) emask |= 1 << ei;
                }
            }
            masks.emplace_back(vmask, emask);
        }
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        options[s] = std::move(masks);
    }

    // Breadth-first layering over (edge cover, target vertex cover, target
    // edge cover) masks; the layer index is the piece count.
    long long states = (long long)subsets << (nhv + nhe);
    if (states > (1ll << 26)) throw ResourceLimitError("strong hom-complexity state space too large");
    auto pack = [&](int ecov, int vcov, int ecov_h) {
        return ((long long)ecov << (nhv + nhe)) | ((long long)vcov << nhe) | ecov_h;
    };
    long long full = pack(subsets - 1, (1 << nhv) - 1, (1 << nhe) - 1);
    std::vector<char> seen(states, 0);
    std::vector<long long> frontier{pack(0, 0, 0)};
    seen[0] = 1;
    int cap = base.finite() ? *base.value + nhv + nhe + 1 : nhv + nhe + 2;
    for (int k = 1; k <= cap && !frontier.empty(); ++k) {
        std::vector<long long> next;
        for (long long st : frontier) {
            int ecov = int(st >> (nhv + nhe));
            int vcov = int((st >> nhe) & ((1 << nhv) - 1));
            int hcov = int(st & ((1 << nhe) - 1));
            for (int s = 0; s < subsets; ++s) {
                for (auto [vm, em] : options[s]) {
                    long long st2 = pack(ecov | s, vcov | vm, hcov | em);
                    if (st2 == full) {
                        res.value = k;
                        res.lower_bound = BoundEntry{*base.value, "plain-complexity"};
                        if (*res.value < *base.value)
                            throw std::logic_error("strong complexity below plain complexity");
                        return res;
                    }
                    if (!seen[st2]) {
                        seen[st2] = 1;
                        next.push_back(st2);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    res.reason = InfiniteReason::uncoverable_target;
    return res;
}

}  // namespace homc
