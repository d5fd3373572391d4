#pragma once

#include <optional>
#include <vector>

#include "homc/common.hpp"
#include "homc/graph.hpp"
#include "homc/vertex_map.hpp"

namespace homc {

// Exact chromatic number with a witness colouring onto K_chi. The witness is
// the canonically least proper colouring, so repeated runs agree. Undirected
// loop-free graphs only; chi(empty) = 0, chi(edgeless) = 1.
std::pair<int, VertexMap> chromatic_number(const Graph& g, const Budgets& b = {});

// Exact clique number with the canonically least maximum clique. Loops are
// ignored; undirected only.
std::pair<int, std::vector<int>> clique_number(const Graph& g, const Budgets& b = {});

// All maximal cliques (Bron-Kerbosch with pivoting), as sorted vertex lists
// in a deterministic order.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// True iff the vertex set splits into l nonempty independent parts,
// equivalently iff there is a vertex-surjective homomorphism onto K_l.
std::pair<bool, std::optional<std::vector<std::vector<int>>>> is_l_partite(const Graph& g, int l,
                                                                           const Budgets& b = {});

struct InvariantReport {
    int chromatic;
    int clique;
    VertexMap colouring;
    std::vector<int> clique_witness;
};

InvariantReport invariants(const Graph& g, const Budgets& b = {});

// Combine colourings of edge-covering subgraphs of g into one tuple
// colouring of g, witnessing chi(g) <= prod of the piece colour counts.
// Piece domains are matched to g by vertex name; missing vertices are
// treated as isolated additions. Colour count is the product of the piece
// codomain sizes, with no compaction.
VertexMap product_coloring(const std::vector<VertexMap>& colourings, const Graph& g);

}  // namespace homc
