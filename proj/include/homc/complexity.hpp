#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homc/common.hpp"
#include "homc/graph.hpp"
#include "homc/vertex_map.hpp"

namespace homc {

enum class QuasiKind { plain, injective };

// Certificate for a hom-complexity value: subgraph pieces that jointly cover
// the source (vertices and edges), each with a verified homomorphism into
// the target; vertex-injective piece maps in the injective kind.
struct QuasiHom {
    std::shared_ptr<const Graph> source, target;
    struct Piece {
        SubgraphRef sub;
        VertexMap map;
    };
    std::vector<Piece> pieces;
    QuasiKind kind = QuasiKind::plain;
};

enum class InfiniteReason { none, loop_mismatch, no_edges, empty_codomain, uncoverable_target };

std::string to_string(InfiniteReason r);

enum class Method { automatic, formula, orpower, partition, closed_form_ic, brute };

std::string to_string(Method m);

struct BoundEntry {
    int value;
    std::string by;  // which argument produced the bound
};

struct ComplexityResult {
    std::optional<int> value;  // empty = infinite
    InfiniteReason reason = InfiniteReason::none;
    Method method = Method::automatic;
    std::optional<BoundEntry> lower_bound, upper_bound;
    std::optional<QuasiHom> certificate;
    bool finite() const { return value.has_value(); }
};

struct Finiteness {
    bool finite;
    InfiniteReason reason;
    int constructive_upper;  // single-item pieces; meaningful when finite
};

// Least k with base^k >= x (k >= 0); exact integer arithmetic.
int ceil_log(int base, int x);

// Decides finiteness of C (or IC when injective) from loop compatibility,
// edge availability and codomain emptiness, with a constructive piece bound.
Finiteness finiteness(const Graph& g, const Graph& h, bool injective);

// Exact hom-complexity C(g;h). Method automatic prefers the closed formula
// (both simple, chi(g) >= 2, omega(h) = chi(h) >= 2), then the or-power
// iteration, then the edge-partition search. Certificates are verified
// before returning.
ComplexityResult hom_complexity(const Graph& g, const Graph& h,
                                Method method = Method::automatic, const Budgets& b = {});

// Exact injective hom-complexity IC(g;h). Closed forms for the single-edge
// target; exact partition search otherwise. Isolated vertices are kept.
ComplexityResult injective_hom_complexity(const Graph& g, const Graph& h, const Budgets& b = {});

struct BoundReport {
    std::optional<BoundEntry> lower, upper;
};

// Chromatic lower bound and clique upper bound with provenance; bounds with
// unmet hypotheses are omitted.
BoundReport complexity_bounds(const Graph& g, const Graph& h, const Budgets& b = {});

// Brute-force strong hom-complexity: pieces must cover the source and their
// images must jointly cover the whole target. Tiny inputs only.
ComplexityResult strong_hom_complexity(const Graph& g, const Graph& h, const Budgets& b = {});

}  // namespace homc
