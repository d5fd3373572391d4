#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "homc/common.hpp"
#include "homc/graph.hpp"

namespace homc {

// Items distributed over pieces by the exact partition search: the edges of
// the source graph, optionally followed by vertices that need a piece of
// their own (isolated vertices in the injective search).
struct PartItem {
    bool is_edge;
    int u, v;  // edge endpoints, or u = vertex id
};

// Incremental feasibility of one piece. try_add must either update the
// piece state and return true, or leave it unchanged and return false.
class PieceChecker {
public:
    virtual ~PieceChecker() = default;
    virtual bool try_add(const PartItem& item) = 0;
    virtual void undo() = 0;
    virtual int load() const = 0;
};

using CheckerFactory = std::function<std::unique_ptr<PieceChecker>()>;

struct PartitionOptions {
    long long max_nodes = 50'000'000;
    Deadline deadline;
    bool mrv = true;  // branch on the edge with the fewest feasible pieces
};

// Finds a partition of the items into at most k feasible pieces, or reports
// that none exists. Piece indices are first-use ordered; the result is
// deterministic. Returns the piece index per item.
std::optional<std::vector<int>> partition_items(const std::vector<PartItem>& items, int k,
                                                const CheckerFactory& make_checker,
                                                const PartitionOptions& opt);

// Checkers for pieces that must admit a (injective) homomorphism into a
// fixed target. Each piece keeps a running witness and falls back to a
// memoized full search on conflicts; the memo is shared across the factory.
CheckerFactory hom_checker_factory(const Graph& source, const Graph& target, bool injective,
                                   const Budgets& budgets);

// Checkers backed by an arbitrary predicate over the materialized piece;
// results are memoized by piece content across the factory.
CheckerFactory predicate_checker_factory(const Graph& source,
                                         std::function<bool(const Graph&)> predicate);

}  // namespace homc
