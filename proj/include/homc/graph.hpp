#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "homc/common.hpp"

namespace homc {

enum class Mode { undirected, directed };

// Finite graph, directed or undirected, loops allowed, no multi-edges.
// Vertices are opaque string identifiers; canonical order is insertion order.
// In undirected mode an edge is stored once, with the lexicographically
// smaller identifier first. Values are immutable once built.
class Graph {
public:
    explicit Graph(Mode mode = Mode::undirected, std::string name = {})
        : mode_(mode), name_(std::move(name)) {}

    Mode mode() const { return mode_; }
    bool directed() const { return mode_ == Mode::directed; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int vertex_count() const { return int(names_.size()); }
    int edge_count() const { return int(edges_.size()); }

    // Throws InputError on duplicate identifiers.
    int add_vertex(const std::string& id);
    // Throws InputError on unknown endpoints or duplicate edges.
    void add_edge(const std::string& u, const std::string& v);
    void add_edge(int u, int v);

    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
    int vertex_index(const std::string& id) const {
        auto it = index_.find(id);
        return it == index_.end() ? -1 : it->second;
    }
    const std::string& vertex_name(int v) const { return names_[v]; }
    const std::vector<std::string>& vertex_names() const { return names_; }

    // Direction-sensitive in directed mode.
    bool has_edge(int u, int v) const { return edge_set_.count(key(u, v)) != 0; }
    // Edges in insertion order; undirected pairs are name-canonical.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Out-neighbours (all neighbours when undirected); a loop lists v itself.
    const std::vector<int>& neighbors_out(int v) const { return out_[v]; }
    const std::vector<int>& neighbors_in(int v) const {
        return directed() ? in_[v] : out_[v];
    }

    // Degrees count distinct neighbours other than the vertex itself.
    int degree(int v) const;
    int in_degree(int v) const;
    int out_degree(int v) const;

    bool has_loop(int v) const { return loops_[v]; }
    bool has_any_loop() const { return loop_count_ > 0; }
    int non_loop_edge_count() const { return int(edges_.size()) - loop_count_; }
    bool is_isolated(int v) const { return degree(v) == 0 && !has_loop(v); }
    bool is_simple() const { return !directed() && loop_count_ == 0; }

    // Structural equality: same mode, same vertex order, same edge set.
    // The name label is not part of the value.
    bool same_structure(const Graph& o) const;

private:
    static std::uint64_t key(int u, int v) {
        return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v);
    }

    Mode mode_;
    std::string name_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_set<std::uint64_t> edge_set_;  // both orientations if undirected
    std::vector<std::vector<int>> out_, in_;
    std::vector<bool> loops_;
    int loop_count_ = 0;
};

// View of a subgraph: a subset of a parent's vertices and edges, every edge
// endpoint contained in the vertex subset. Holds a shared copy of the parent.
class SubgraphRef {
public:
    SubgraphRef(std::shared_ptr<const Graph> parent, std::vector<int> vertices,
                std::vector<std::pair<int, int>> edges);

    static SubgraphRef whole(const Graph& g);
    static SubgraphRef induced(const Graph& g, std::vector<int> vertices);

    const Graph& parent() const { return *parent_; }
    std::shared_ptr<const Graph> parent_ptr() const { return parent_; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool contains_vertex(int v) const;
    // Materialize as a standalone Graph; vertex names and relative order are
    // inherited from the parent.
    Graph to_graph() const;

private:
    std::shared_ptr<const Graph> parent_;
    std::vector<int> vertices_;                // sorted by parent index
    std::vector<std::pair<int, int>> edges_;   // parent's stored orientation, sorted
};

inline std::shared_ptr<const Graph> share(const Graph& g) {
    return std::make_shared<const Graph>(g);
}

}  // namespace homc
