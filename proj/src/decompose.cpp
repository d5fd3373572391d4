#include "homc/decompose.hpp"

#include <algorithm>

#include "homc/algebra.hpp"
#include "homc/generate.hpp"
#include "homc/invariants.hpp"
#include "homc/search.hpp"

namespace homc {

namespace {

// Piece of a decomposition of a complete graph, in source vertex ids.
struct RawPiece {
    std::vector<int> verts;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> cls;  // (vertex, class in 0..l-1)
};

int class_of(const RawPiece& p, int v) {
    for (auto [x, c] : p.cls)
        if (x == v) return c;
    return -1;
}

// Recursive split of a complete graph on the given vertices into at most
// ceil(log_l j) pieces: blocks are formed modularly (vertex at position i
// joins block i mod l), the final piece is the complete l-partite graph
// across the blocks, the others are disjoint unions of the blocks'
// recursive pieces with classes rotated by the block index.
std::vector<RawPiece> split_complete(const std::vector<int>& ids, int l,
                                     std::vector<SplitTrace>& trace) {
    int j = int(ids.size());
    if (j <= l) {
        RawPiece inc;
        inc.verts = ids;
        for (int a = 0; a < j; ++a)
            for (int b = a + 1; b < j; ++b) inc.edges.emplace_back(ids[a], ids[b]);
        for (int a = 0; a < j; ++a) inc.cls.emplace_back(ids[a], a);
        return {inc};
    }

    int k = ceil_log(l, j);
    int m = (j + l - 1) / l;
    int r = j - (m - 1) * l;
    trace.push_back({j, l, m, r});

    std::vector<std::vector<int>> blocks(l);
    for (int i = 0; i < j; ++i) blocks[i % l].push_back(ids[i]);

    std::vector<std::vector<RawPiece>> sub(l);
    for (int b = 0; b < l; ++b) sub[b] = split_complete(blocks[b], l, trace);

    std::vector<RawPiece> pieces(k);
    for (int t = 0; t + 1 < k; ++t) {
        RawPiece& piece = pieces[t];
        for (int b = 0; b < l; ++b) {
            if (t >= int(sub[b].size())) continue;
            const RawPiece& part = sub[b][t];
            piece.verts.insert(piece.verts.end(), part.verts.begin(), part.verts.end());
            piece.edges.insert(piece.edges.end(), part.edges.begin(), part.edges.end());
            for (auto [v, c] : part.cls) piece.cls.emplace_back(v, (c + b) % l);
        }
    }
    RawPiece& last = pieces[k - 1];
    last.verts = ids;
    for (int b = 0; b < l; ++b)
        for (int v : blocks[b]) last.cls.emplace_back(v, b);
    for (int a = 0; a < j; ++a)
        for (int c = a + 1; c < j; ++c)
            if (a % l != c % l) last.edges.emplace_back(ids[a], ids[c]);
    return pieces;
}

bool surjective_onto(const VertexMap& f, int l) {
    std::vector<bool> hit(l, false);
    for (int v = 0; v < f.domain().vertex_count(); ++v) hit[f.image(v)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
}

}  // namespace

DesignPlan decompose_complete(int j, int l) {
    if (j < 2 || l < 2) throw InputError("decompose_complete needs j >= 2 and l >= 2");
    Graph source = make_complete(j);
    Graph target = make_complete(l);
    auto sp = share(source);
    auto tp = share(target);

    DesignPlan plan{.quasi = {}, .colouring = identity_map(source), .trace = {},
                    .piece_surjective = {}, .optimal = true};
    plan.quasi.source = sp;
    plan.quasi.target = tp;

    std::vector<int> ids(j);
    for (int i = 0; i < j; ++i) ids[i] = i;
    auto raw = split_complete(ids, l, plan.trace);
    if (int(raw.size()) != std::max(1, ceil_log(l, j)))
        throw std::logic_error("complete-graph split has the wrong piece count");

    for (const auto& rp : raw) {
        SubgraphRef sub(sp, rp.verts, rp.edges);
        Graph piece = sub.to_graph();
        std::vector<int> mapping(piece.vertex_count());
        for (int i = 0; i < piece.vertex_count(); ++i)
            mapping[i] = class_of(rp, sub.vertices()[i]);
        VertexMap f(share(piece), tp, std::move(mapping));
        auto report = verify_map(f);
        if (!report.ok) throw std::logic_error("split piece map is not a homomorphism");
        plan.piece_surjective.push_back(surjective_onto(f, l));
        plan.quasi.pieces.push_back({std::move(sub), std::move(f)});
    }
    return plan;
}

DesignPlan design_quasi_hom(const Graph& g, int l, const Budgets& b) {
    if (!g.is_simple()) throw InputError("design_quasi_hom needs a simple graph");
    if (l < 2) throw InputError("design_quasi_hom needs l >= 2");
    auto [chi, colouring] = chromatic_number(g, b);
    Graph target = make_complete(l);
    auto gp = share(g);
    auto tp = share(target);

    DesignPlan plan{.quasi = {}, .colouring = colouring, .trace = {}, .piece_surjective = {},
                    .optimal = true};
    plan.quasi.source = gp;
    plan.quasi.target = tp;

    if (chi <= l) {
        SubgraphRef sub = SubgraphRef::whole(g);
        Graph piece = sub.to_graph();
        std::vector<int> mapping(piece.vertex_count());
        for (int v = 0; v < piece.vertex_count(); ++v) mapping[v] = colouring.image(v);
        VertexMap f(share(piece), tp, std::move(mapping));
        auto report = verify_map(f);
        if (!report.ok) throw std::logic_error("colouring piece map is not a homomorphism");
        plan.piece_surjective.push_back(surjective_onto(f, l));
        plan.quasi.pieces.push_back({SubgraphRef::whole(g), std::move(f)});
        return plan;
    }

    DesignPlan inner = decompose_complete(chi, l);
    plan.trace = inner.trace;
    for (const auto& piece : inner.quasi.pieces) {
        SubgraphRef pulled = inverse_image(colouring, piece.sub);
        Graph piece_graph = pulled.to_graph();
        std::vector<int> mapping(piece_graph.vertex_count());
        for (int i = 0; i < piece_graph.vertex_count(); ++i) {
            int gv = pulled.vertices()[i];
            int colour = colouring.image(gv);
            int local = -1;
            for (std::size_t t = 0; t < piece.sub.vertices().size(); ++t)
                if (piece.sub.vertices()[t] == colour) {
                    local = int(t);
                    break;
                }
            mapping[i] = piece.map.image(local);
        }
        VertexMap f(share(piece_graph), tp, std::move(mapping));
        auto report = verify_map(f);
        if (!report.ok) throw std::logic_error("pulled-back piece map is not a homomorphism");
        plan.piece_surjective.push_back(surjective_onto(f, l));
        plan.quasi.pieces.push_back({std::move(pulled), std::move(f)});
    }
    if (int(plan.quasi.pieces.size()) != std::max(1, ceil_log(l, chi)))
        throw std::logic_error("pullback changed the piece count");
    return plan;
}

DesignPlan design_into_target(const Graph& g, const Graph& h, const Budgets& b) {
    if (!g.is_simple() || !h.is_simple())
        throw InputError("design_into_target needs simple graphs");
    auto [omega, clique] = clique_number(h, b);
    if (omega < 2) throw InputError("design_into_target needs omega(h) >= 2");

    DesignPlan inner = design_quasi_hom(g, omega, b);
    int chi_h = chromatic_number(h, b).first;

    DesignPlan plan{.quasi = {}, .colouring = inner.colouring, .trace = inner.trace,
                    .piece_surjective = inner.piece_surjective, .optimal = omega == chi_h};
    plan.quasi.source = inner.quasi.source;
    plan.quasi.target = share(h);

    for (const auto& piece : inner.quasi.pieces) {
        Graph piece_graph = piece.sub.to_graph();
        std::vector<int> mapping(piece_graph.vertex_count());
        for (int v = 0; v < piece_graph.vertex_count(); ++v)
            mapping[v] = clique[piece.map.image(v)];
        VertexMap f(share(piece_graph), plan.quasi.target, std::move(mapping));
        auto report = verify_map(f);
        if (!report.ok) throw std::logic_error("clique embedding broke a piece map");
        plan.quasi.pieces.push_back({piece.sub, std::move(f)});
    }
    return plan;
}

VerifyReport verify_quasi_hom(const QuasiHom& plan, const Graph& g, const Graph& h,
                              bool injective, std::optional<int> expected_optimal) {
    VerifyReport report;
    if (!plan.source || !plan.source->same_structure(g))
        report.fail("plan source does not match the given graph");
    if (!plan.target || !plan.target->same_structure(h))
        report.fail("plan target does not match the given graph");
    if (plan.pieces.empty()) report.fail("plan has no pieces");
    if (!report.ok) return report;

    std::vector<bool> vcov(g.vertex_count(), false);
    std::vector<bool> ecov(g.edges().size(), false);
    for (std::size_t i = 0; i < plan.pieces.size(); ++i) {
        const auto& piece = plan.pieces[i];
        std::string tag = "piece " + std::to_string(i + 1) + ": ";
        if (!piece.sub.parent().same_structure(g)) {
            report.fail(tag + "subgraph refers to a different parent");
            continue;
        }
        for (int v : piece.sub.vertices()) vcov[v] = true;
        for (auto [u, v] : piece.sub.edges()) {
            const auto& ge = g.edges();
            for (std::size_t e = 0; e < ge.size(); ++e)
                if (ge[e] == std::make_pair(u, v)) ecov[e] = true;
        }
        Graph piece_graph = piece.sub.to_graph();
        if (!piece.map.domain().same_structure(piece_graph)) {
            report.fail(tag + "map domain is not the piece subgraph");
            continue;
        }
        if (!piece.map.codomain().same_structure(h)) {
            report.fail(tag + "map codomain is not the target");
            continue;
        }
        VertexMap copy = piece.map;
        Require req;
        req.vertex_injective = injective;
        auto piece_report = verify_map(copy, req);
        for (const auto& failure : piece_report.failures) report.fail(tag + failure);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!vcov[v]) report.fail("vertex " + g.vertex_name(v) + " is not covered");
    for (std::size_t e = 0; e < ecov.size(); ++e)
        if (!ecov[e])
            report.fail("edge " + g.vertex_name(g.edges()[e].first) +
                        g.vertex_name(g.edges()[e].second) + " is not covered");
    if (expected_optimal && int(plan.pieces.size()) != *expected_optimal)
        report.fail("plan has " + std::to_string(plan.pieces.size()) + " pieces but the exact value is " +
                    std::to_string(*expected_optimal));
    return report;
}

std::pair<VertexMap, VerifyReport> induced_map(const QuasiHom& plan) {
    const Graph& g = *plan.source;
    const Graph& h = *plan.target;
    std::vector<int> mapping(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const auto& piece : plan.pieces) {
            if (!piece.sub.contains_vertex(v)) continue;
            int local = piece.map.domain().vertex_index(g.vertex_name(v));
            mapping[v] = piece.map.image(local);
            break;
        }
        if (mapping[v] < 0) throw InputError("plan does not cover vertex " + g.vertex_name(v));
    }
    VertexMap f(plan.source, plan.target, std::move(mapping));
    VerifyReport report;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(f.image(u), f.image(v)))
            report.fail("edge " + g.vertex_name(u) + g.vertex_name(v) + " maps to non-edge " +
                        f.image_name(u) + f.image_name(v));
    report.hom = report.ok;
    if (report.hom) f.flags().is_hom = true;
    return {std::move(f), std::move(report)};
}

}  // namespace homc
