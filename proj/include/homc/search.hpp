#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "homc/bitset.hpp"
#include "homc/common.hpp"
#include "homc/graph.hpp"
#include "homc/vertex_map.hpp"

namespace homc {

// Adjacency oracle for the codomain of a homomorphism search. Lets the
// solver run against graphs that are too large to materialize (OR-powers).
class CodomainView {
public:
    virtual ~CodomainView() = default;
    virtual int size() const = 0;
    virtual bool is_directed() const = 0;
    // row_out(x) = {y : xy is an edge/arc}, row_in(x) = {y : yx is an arc}.
    virtual const detail::Bitset& row_out(int x) const = 0;
    virtual const detail::Bitset& row_in(int x) const = 0;
    virtual const detail::Bitset& loop_mask() const = 0;
    // Candidate prefilter for injective search; default keeps everything.
    virtual void degree_filter(const Graph&, int, detail::Bitset&) const {}
};

class ExplicitView : public CodomainView {
public:
    explicit ExplicitView(const Graph& h, bool degree_pruning = true);
    int size() const override { return n_; }
    bool is_directed() const override { return directed_; }
    const detail::Bitset& row_out(int x) const override { return out_[x]; }
    const detail::Bitset& row_in(int x) const override { return directed_ ? in_[x] : out_[x]; }
    const detail::Bitset& loop_mask() const override { return loops_; }
    void degree_filter(const Graph& g, int v, detail::Bitset& cand) const override;

private:
    int n_;
    bool directed_;
    bool degree_pruning_;
    std::vector<detail::Bitset> out_, in_;
    detail::Bitset loops_;
    std::vector<int> deg_, indeg_, outdeg_;
};

// OR-power H^(k) of a base graph, rows computed on demand: tuples are
// adjacent when adjacent in at least one coordinate.
class OrPowerView : public CodomainView {
public:
    OrPowerView(const Graph& h, int k);
    int size() const override { return n_; }
    bool is_directed() const override { return base_.directed(); }
    const detail::Bitset& row_out(int x) const override;
    const detail::Bitset& row_in(int x) const override;
    const detail::Bitset& loop_mask() const override { return loops_; }

    int power() const { return k_; }
    const Graph& base() const { return base_; }
    std::vector<int> digits(int index) const;

private:
    detail::Bitset make_row(int x, bool out) const;
    Graph base_;
    int k_, n_;
    detail::Bitset loops_;
    mutable std::unordered_map<int, detail::Bitset> out_cache_, in_cache_;
};

struct SearchOptions {
    bool injective = false;
    // false: canonical variable order, yields mappings in lexicographic
    // order. true: most-constrained-first, existence checks only.
    bool mrv = false;
    std::vector<std::pair<int, int>> preassign;  // (domain vertex, image)
    long long max_nodes = 200'000'000;
    Deadline deadline;
};

// Backtracking search with forward checking on candidate lists. Calls emit
// for each solution found (in lexicographic order when !mrv); emit returns
// false to stop. Returns the number of solutions emitted.
long long search_homs(const Graph& g, const CodomainView& view, const SearchOptions& opt,
                      const std::function<bool(const std::vector<int>&)>& emit);

// Existence, witness and enumeration over explicit codomains. Witness
// searches return the lexicographically least mapping in canonical vertex
// order; two runs always return identical results.
std::optional<VertexMap> find_hom(const Graph& g, const Graph& h, const Budgets& b = {});
std::optional<VertexMap> find_injective_hom(const Graph& g, const Graph& h, const Budgets& b = {});
std::vector<VertexMap> enumerate_homs(const Graph& g, const Graph& h, std::size_t limit,
                                      const Budgets& b = {});
bool hom_exists(const Graph& g, const Graph& h, const Budgets& b = {});
bool injective_hom_exists(const Graph& g, const Graph& h, const Budgets& b = {});

// Homomorphism g -> hsub fixing every vertex of hsub.
std::optional<VertexMap> find_retraction(const Graph& g, const SubgraphRef& hsub,
                                         const Budgets& b = {});

// Minimum retract, exhaustive over vertex subsets in canonical order.
// Returns the core as an induced subgraph together with a retraction onto it.
std::pair<SubgraphRef, VertexMap> core(const Graph& g, const Budgets& b = {});

}  // namespace homc
