#pragma once

#include <optional>
#include <vector>

#include "homc/complexity.hpp"
#include "homc/graph.hpp"
#include "homc/vertex_map.hpp"

namespace homc {

// One level of the recursive block split of a complete graph.
struct SplitTrace {
    int j, l, m, r;  // j vertices into l blocks, r of size m, l-r of size m-1
};

// A constructed quasi-homomorphism with its provenance: the colouring that
// was pulled back, the recursion trace, and per-piece vertex-surjectivity
// onto the target classes.
struct DesignPlan {
    QuasiHom quasi;
    VertexMap colouring;
    std::vector<SplitTrace> trace;
    std::vector<bool> piece_surjective;
    bool optimal = false;
};

// Optimal quasi-homomorphism from K_j to K_l: max(1, ceil(log_l j)) pieces,
// the last a complete l-partite graph over the blocks, the others disjoint
// unions of the blocks' recursive pieces with rotated class assignments.
// Every piece map is vertex-surjective when j > l.
DesignPlan decompose_complete(int j, int l);

// Pull decompose_complete(chi(g), l) back through a minimum colouring of g.
// The plan has exactly ceil(log_l chi(g)) pieces (one when chi(g) <= l).
DesignPlan design_quasi_hom(const Graph& g, int l, const Budgets& b = {});

// Compose design_quasi_hom(g, omega(h)) with an embedding of the first
// maximum clique of h. Optimal when omega(h) = chi(h); an upper bound
// otherwise, and flagged as such.
DesignPlan design_into_target(const Graph& g, const Graph& h, const Budgets& b = {});

// Independent re-check of the quasi-homomorphism conditions: coverage of
// vertices and edges, subgraph validity, and each piece map a (injective)
// homomorphism. When expected_optimal is given, the piece count is checked
// against it.
VerifyReport verify_quasi_hom(const QuasiHom& plan, const Graph& g, const Graph& h,
                              bool injective, std::optional<int> expected_optimal = {});

// Total map induced by the least-index rule; not generally a homomorphism.
// The report lists the edges whose images are missing from the target.
std::pair<VertexMap, VerifyReport> induced_map(const QuasiHom& plan);

}  // namespace homc
