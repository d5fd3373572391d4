#include "homc/json_io.hpp"

namespace homc {

Json to_json(const VertexMap& f) {
    Json map = Json::object();
    for (int v = 0; v < f.domain().vertex_count(); ++v)
        map[f.domain().vertex_name(v)] = f.image_name(v);
    return Json{{"domain", f.domain().name()},
                {"codomain", f.codomain().name()},
                {"map", map},
                {"flags",
                 {{"is_hom", f.flags().is_hom},
                  {"is_vertex_injective", f.flags().is_vertex_injective},
                  {"is_vertex_surjective", f.flags().is_vertex_surjective}}}};
}

Json to_json(const VerifyReport& r) {
    return Json{{"ok", r.ok},
                {"failures", r.failures},
                {"hom", r.hom},
                {"vertex_injective", r.vertex_injective},
                {"vertex_surjective", r.vertex_surjective},
                {"edge_surjective", r.edge_surjective}};
}

namespace {

Json piece_to_json(const Graph& g, const SubgraphRef& sub, const VertexMap& map) {
    Json vertices = Json::array();
    for (int v : sub.vertices()) vertices.push_back(g.vertex_name(v));
    Json edges = Json::array();
    for (auto [u, v] : sub.edges())
        edges.push_back(Json::array({g.vertex_name(u), g.vertex_name(v)}));
    Json m = Json::object();
    for (int v = 0; v < map.domain().vertex_count(); ++v)
        m[map.domain().vertex_name(v)] = map.image_name(v);
    return Json{{"vertices", vertices}, {"edges", edges}, {"map", m}};
}

}  // namespace

Json to_json(const QuasiHom& q) {
    Json pieces = Json::array();
    for (const auto& piece : q.pieces) pieces.push_back(piece_to_json(*q.source, piece.sub, piece.map));
    return Json{{"source", q.source->name()},
                {"target", q.target->name()},
                {"kind", q.kind == QuasiKind::injective ? "injective" : "plain"},
                {"pieces", pieces}};
}

Json to_json(const ComplexityResult& r) {
    Json j;
    if (r.value)
        j["value"] = *r.value;
    else {
        j["value"] = "inf";
        j["reason"] = to_string(r.reason);
    }
    j["method"] = to_string(r.method);
    if (r.lower_bound) j["lower_bound"] = {{"value", r.lower_bound->value}, {"by", r.lower_bound->by}};
    if (r.upper_bound) j["upper_bound"] = {{"value", r.upper_bound->value}, {"by", r.upper_bound->by}};
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    return j;
}

Json to_json(const DesignPlan& p) {
    Json colouring = Json::object();
    for (int v = 0; v < p.colouring.domain().vertex_count(); ++v)
        colouring[p.colouring.domain().vertex_name(v)] = p.colouring.image_name(v);
    Json pieces = Json::array();
    for (std::size_t i = 0; i < p.quasi.pieces.size(); ++i) {
        Json piece = piece_to_json(*p.quasi.source, p.quasi.pieces[i].sub, p.quasi.pieces[i].map);
        piece["surjective"] = p.piece_surjective[i];
        pieces.push_back(piece);
    }
    Json trace = Json::array();
    for (const auto& t : p.trace)
        trace.push_back(Json{{"j", t.j}, {"l", t.l}, {"m", t.m}, {"r", t.r}});
    return Json{{"target", p.quasi.target->name()},
                {"colouring", colouring},
                {"pieces", pieces},
                {"optimal", p.optimal},
                {"trace", trace}};
}

Json to_json(const CoverCertificate& c) {
    const char* cls = c.cls == CoverClass::clique ? "clique"
                      : c.cls == CoverClass::l_partite ? "l-partite"
                      : c.cls == CoverClass::complete_l_partite ? "complete-l-partite"
                                                                : "predicate";
    Json pieces = Json::array();
    for (const auto& piece : c.pieces) {
        Json vertices = Json::array();
        for (int v : piece.sub.vertices()) vertices.push_back(c.source->vertex_name(v));
        Json edges = Json::array();
        for (auto [u, v] : piece.sub.edges())
            edges.push_back(Json::array({c.source->vertex_name(u), c.source->vertex_name(v)}));
        Json j{{"vertices", vertices}, {"edges", edges}};
        if (!piece.clique_witness.empty()) {
            Json w = Json::array();
            for (int v : piece.clique_witness) w.push_back(c.source->vertex_name(v));
            j["witness"] = {{"clique", w}};
        } else if (!piece.parts.empty()) {
            Json parts = Json::array();
            for (const auto& part : piece.parts) {
                Json p = Json::array();
                for (int v : part) p.push_back(c.source->vertex_name(v));
                parts.push_back(p);
            }
            j["witness"] = {{"parts", parts}};
        }
        pieces.push_back(j);
    }
    return Json{{"source", c.source->name()}, {"class", cls}, {"l", c.l}, {"pieces", pieces}};
}

QuasiHom quasi_hom_from_json(const Json& j, const Graph& source, const Graph& target,
                             bool injective) {
    if (!j.contains("pieces") || !j["pieces"].is_array())
        throw InputError("plan JSON needs a 'pieces' array");
    QuasiHom q;
    q.source = share(source);
    q.target = share(target);
    q.kind = injective ? QuasiKind::injective : QuasiKind::plain;
    for (const auto& pj : j["pieces"]) {
        std::vector<int> verts;
        for (const auto& name : pj.at("vertices")) {
            int v = source.vertex_index(name.get<std::string>());
            if (v < 0) throw InputError("plan vertex '" + name.get<std::string>() + "' not in the graph");
            verts.push_back(v);
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : pj.at("edges")) {
            int u = source.vertex_index(e.at(0).get<std::string>());
            int v = source.vertex_index(e.at(1).get<std::string>());
            if (u < 0 || v < 0) throw InputError("plan edge endpoint not in the graph");
            if (!source.has_edge(u, v)) throw InputError("plan edge not present in the graph");
            if (!source.directed() && source.vertex_name(v) < source.vertex_name(u)) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        SubgraphRef sub(q.source, verts, edges);
        Graph piece = sub.to_graph();
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [from, to] : pj.at("map").items())
            pairs.emplace_back(from, to.get<std::string>());
        VertexMap f = map_from_names(piece, target, pairs);
        q.pieces.push_back({std::move(sub), std::move(f)});
    }
    return q;
}

}  // namespace homc
