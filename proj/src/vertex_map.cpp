#include "homc/vertex_map.hpp"

#include <algorithm>

namespace homc {

VerifyReport verify_map(VertexMap& f, const Require& req) {
    const Graph& g = f.domain();
    const Graph& h = f.codomain();
    VerifyReport report;

    bool hom = true;
    for (auto [u, v] : g.edges()) {
        if (!h.has_edge(f.image(u), f.image(v))) {
            hom = false;
            if (req.hom)
                report.fail("edge " + g.vertex_name(u) + g.vertex_name(v) + " maps to non-edge " +
                            f.image_name(u) + f.image_name(v));
        }
    }
    report.hom = hom;

    bool injective = true;
    {
        std::vector<int> seen(h.vertex_count(), -1);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int w = f.image(v);
            if (seen[w] >= 0) {
                injective = false;
                if (req.vertex_injective)
                    report.fail("vertices " + g.vertex_name(seen[w]) + " and " + g.vertex_name(v) +
                                " share image " + h.vertex_name(w));
            } else {
                seen[w] = v;
            }
        }
    }
    report.vertex_injective = injective;

    {
        std::vector<bool> hit(h.vertex_count(), false);
        for (int v = 0; v < g.vertex_count(); ++v) hit[f.image(v)] = true;
        report.vertex_surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        if (req.vertex_surjective && !report.vertex_surjective)
            for (int w = 0; w < h.vertex_count(); ++w)
                if (!hit[w]) report.fail("codomain vertex " + h.vertex_name(w) + " not covered");
    }

    if (hom) {
        std::vector<bool> edge_hit(h.edge_count(), false);
        int hits = 0;
        for (auto [u, v] : g.edges()) {
            const auto& he = h.edges();
            for (std::size_t i = 0; i < he.size(); ++i) {
                bool match = h.directed()
                                 ? (he[i].first == f.image(u) && he[i].second == f.image(v))
                                 : ((he[i].first == f.image(u) && he[i].second == f.image(v)) ||
                                    (he[i].first == f.image(v) && he[i].second == f.image(u)));
                if (match && !edge_hit[i]) {
                    edge_hit[i] = true;
                    ++hits;
                }
            }
        }
        report.edge_surjective = hits == h.edge_count();
    }

    if (report.ok) {
        if (hom) f.flags().is_hom = true;
        if (injective) f.flags().is_vertex_injective = true;
        if (report.vertex_surjective) f.flags().is_vertex_surjective = true;
    }
    return report;
}

VertexMap map_from_names(const Graph& domain, const Graph& codomain,
                         const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int> m(domain.vertex_count(), -1);
    for (const auto& [a, b] : pairs) {
        int u = domain.vertex_index(a), w = codomain.vertex_index(b);
        if (u < 0) throw InputError("unknown domain vertex '" + a + "'");
        if (w < 0) throw InputError("unknown codomain vertex '" + b + "'");
        m[u] = w;
    }
    for (int v = 0; v < domain.vertex_count(); ++v)
        if (m[v] < 0)
            throw InputError("mapping missing vertex '" + domain.vertex_name(v) + "'");
    return VertexMap(share(domain), share(codomain), std::move(m));
}

VertexMap identity_map(const Graph& g) {
    std::vector<int> m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) m[v] = v;
    auto gp = share(g);
    VertexMap f(gp, gp, std::move(m));
    f.flags() = {true, true, true};
    return f;
}

}  // namespace homc
