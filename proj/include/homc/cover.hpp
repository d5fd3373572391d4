#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "homc/complexity.hpp"
#include "homc/graph.hpp"

namespace homc {

enum class CoverClass { clique, l_partite, complete_l_partite, predicate };

// Edge covering of the source by pieces of a fixed class, with per-piece
// class evidence. Vertex coverage is not required here.
struct CoverCertificate {
    std::shared_ptr<const Graph> source;
    CoverClass cls = CoverClass::predicate;
    int l = 0;
    struct Piece {
        SubgraphRef sub;
        std::vector<int> clique_witness;          // clique class
        std::vector<std::vector<int>> parts;      // partite classes
    };
    std::vector<Piece> pieces;
};

struct CoverResult {
    std::optional<int> value;  // empty = infinite
    std::optional<CoverCertificate> certificate;
};

// Minimum edge cover by pieces satisfying the predicate. For predicates
// hereditary under edge/vertex deletion the search runs over partitions;
// otherwise over general labelled covers (tiny inputs only).
CoverResult sigma_cover(const Graph& g, const std::function<bool(const Graph&)>& predicate,
                        bool hereditary, const Budgets& b = {});

// Minimum number of cliques covering every edge.
CoverResult clique_cover_number(const Graph& g, const Budgets& b = {});

// Minimum number of l-partite subgraphs covering every edge. Pieces may
// borrow vertices of g to reach l nonempty parts, since only edges are
// covered.
CoverResult particity(const Graph& g, int l, const Budgets& b = {});

// Minimum number of complete l-partite subgraphs covering every edge; l = 2
// is the bipartite dimension.
CoverResult partite_dimension(const Graph& g, int l, const Budgets& b = {});

struct CcBounds {
    BoundEntry ic_bound;     // injective hom-complexity into the largest clique
    BoundEntry log_bound;    // ceil(log_omega chi)
    int literature_bound;    // ceil(log2(|V| + 1)) for comparison
};

CcBounds cc_lower_bounds(const Graph& g, const Budgets& b = {});

}  // namespace homc
