#include "homc/graph.hpp"

#include <algorithm>

namespace homc {

int Graph::add_vertex(const std::string& id) {
    if (id.empty()) throw InputError("empty vertex identifier");
    auto [it, fresh] = index_.emplace(id, int(names_.size()));
    if (!fresh) throw InputError("duplicate vertex '" + id + "'");
    names_.push_back(id);
    out_.emplace_back();
    if (directed()) in_.emplace_back();
    loops_.push_back(false);
    return it->second;
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    int ui = vertex_index(u), vi = vertex_index(v);
    if (ui < 0) throw InputError("undeclared endpoint '" + u + "'");
    if (vi < 0) throw InputError("undeclared endpoint '" + v + "'");
    add_edge(ui, vi);
}

void Graph::add_edge(int u, int v) {
    if (!directed() && names_[v] < names_[u]) std::swap(u, v);
    if (edge_set_.count(key(u, v)))
        throw InputError("duplicate edge " + names_[u] + " " + names_[v]);
    edges_.emplace_back(u, v);
    edge_set_.insert(key(u, v));
    if (!directed()) edge_set_.insert(key(v, u));
    if (u == v) {
        loops_[u] = true;
        ++loop_count_;
        out_[u].push_back(u);
        if (directed()) in_[u].push_back(u);
    } else {
        out_[u].push_back(v);
        if (directed())
            in_[v].push_back(u);
        else
            out_[v].push_back(u);
    }
}

int Graph::degree(int v) const {
    // Distinct neighbours other than v itself.
    int d = 0;
    for (int u : out_[v])
        if (u != v) ++d;
    if (directed())
        for (int u : in_[v])
            if (u != v && !has_edge(v, u)) ++d;
    return d;
}

int Graph::in_degree(int v) const {
    int d = 0;
    for (int u : neighbors_in(v))
        if (u != v) ++d;
    return d;
}

int Graph::out_degree(int v) const {
    int d = 0;
    for (int u : out_[v])
        if (u != v) ++d;
    return d;
}

bool Graph::same_structure(const Graph& o) const {
    if (mode_ != o.mode_ || names_ != o.names_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (auto [u, v] : edges_)
        if (!o.has_edge(u, v)) return false;
    return true;
}

SubgraphRef::SubgraphRef(std::shared_ptr<const Graph> parent, std::vector<int> vertices,
                         std::vector<std::pair<int, int>> edges)
    : parent_(std::move(parent)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (int v : vertices_)
        if (v < 0 || v >= parent_->vertex_count())
            throw InputError("subgraph vertex out of range");
    for (auto [u, v] : edges_) {
        if (!parent_->has_edge(u, v)) throw InputError("subgraph edge not in parent");
        if (!contains_vertex(u) || !contains_vertex(v))
            throw InputError("subgraph edge endpoint outside vertex subset");
    }
}

bool SubgraphRef::contains_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SubgraphRef SubgraphRef::whole(const Graph& g) {
    std::vector<int> vs(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) vs[i] = i;
    return SubgraphRef(share(g), std::move(vs), g.edges());
}

SubgraphRef SubgraphRef::induced(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (std::binary_search(vertices.begin(), vertices.end(), u) &&
            std::binary_search(vertices.begin(), vertices.end(), v))
            es.emplace_back(u, v);
    return SubgraphRef(share(g), std::move(vertices), std::move(es));
}

Graph SubgraphRef::to_graph() const {
    Graph g(parent_->mode(), parent_->name());
    for (int v : vertices_) g.add_vertex(parent_->vertex_name(v));
    for (auto [u, v] : edges_) g.add_edge(parent_->vertex_name(u), parent_->vertex_name(v));
    return g;
}

}  // namespace homc
