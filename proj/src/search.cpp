#include "homc/search.hpp"

#include <algorithm>

namespace homc {

using detail::Bitset;

ExplicitView::ExplicitView(const Graph& h, bool degree_pruning)
    : n_(h.vertex_count()), directed_(h.directed()), degree_pruning_(degree_pruning),
      loops_(h.vertex_count()) {
    out_.assign(n_, Bitset(n_));
    if (directed_) in_.assign(n_, Bitset(n_));
    for (auto [u, v] : h.edges()) {
        out_[u].set(v);
        if (directed_)
            in_[v].set(u);
        else
            out_[v].set(u);
    }
    deg_.resize(n_);
    indeg_.resize(n_);
    outdeg_.resize(n_);
    for (int v = 0; v < n_; ++v) {
        if (h.has_loop(v)) loops_.set(v);
        deg_[v] = h.degree(v);
        indeg_[v] = h.in_degree(v);
        outdeg_[v] = h.out_degree(v);
    }
}

void ExplicitView::degree_filter(const Graph& g, int v, Bitset& cand) const {
    if (!degree_pruning_) return;
    // An injective homomorphism cannot lower degrees.
    for (int w = cand.next(0); w >= 0; w = cand.next(w + 1)) {
        bool ok = directed_ ? (indeg_[w] >= g.in_degree(v) && outdeg_[w] >= g.out_degree(v))
                            : (deg_[w] >= g.degree(v));
        if (!ok) cand.reset(w);
    }
}

OrPowerView::OrPowerView(const Graph& h, int k) : base_(h), k_(k) {
    if (k < 1) throw InputError("or_power needs k >= 1");
    double count = 1;
    for (int i = 0; i < k; ++i) count *= h.vertex_count();
    if (count > 16'000'000.0)
        throw ResourceLimitError("or-power codomain too large to search");
    n_ = 1;
    for (int i = 0; i < k; ++i) n_ *= h.vertex_count();
    loops_ = Bitset(n_);
    for (int x = 0; x < n_; ++x) {
        auto d = digits(x);
        for (int i = 0; i < k_; ++i)
            if (base_.has_edge(d[i], d[i])) {
                loops_.set(x);
                break;
            }
    }
}

std::vector<int> OrPowerView::digits(int index) const {
    std::vector<int> d(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        d[i] = index % base_.vertex_count();
        index /= base_.vertex_count();
    }
    return d;
}

Bitset OrPowerView::make_row(int x, bool out) const {
    Bitset row(n_);
    auto dx = digits(x);
    for (int y = 0; y < n_; ++y) {
        auto dy = digits(y);
        for (int i = 0; i < k_; ++i) {
            bool adj = out ? base_.has_edge(dx[i], dy[i]) : base_.has_edge(dy[i], dx[i]);
            if (adj) {
                row.set(y);
                break;
            }
        }
    }
    return row;
}

const Bitset& OrPowerView::row_out(int x) const {
    auto it = out_cache_.find(x);
    if (it == out_cache_.end()) it = out_cache_.emplace(x, make_row(x, true)).first;
    return it->second;
}

const Bitset& OrPowerView::row_in(int x) const {
    if (!base_.directed()) return row_out(x);
    auto it = in_cache_.find(x);
    if (it == in_cache_.end()) it = in_cache_.emplace(x, make_row(x, false)).first;
    return it->second;
}

namespace {

struct Searcher {
    const Graph& g;
    const CodomainView& view;
    const SearchOptions& opt;
    const std::function<bool(const std::vector<int>&)>& emit;

    int n;                               // domain size
    std::vector<int> assignment;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, 0=out 1=in 2=both)
    long long nodes = 0;
    long long found = 0;
    bool stopped = false;

    Searcher(const Graph& g, const CodomainView& view, const SearchOptions& opt,
             const std::function<bool(const std::vector<int>&)>& emit)
        : g(g), view(view), opt(opt), emit(emit), n(g.vertex_count()) {
        assignment.assign(n, -1);
        adj.resize(n);
        for (auto [u, v] : g.edges()) {
            if (u == v) continue;  // loops constrain candidates, not pairs
            if (!g.directed()) {
                adj[u].emplace_back(v, 2);
                adj[v].emplace_back(u, 2);
            } else {
                bool back = g.has_edge(v, u);
                // Record each arc once from both endpoints' perspective.
                adj[u].emplace_back(v, 0);
                adj[v].emplace_back(u, 1);
                (void)back;
            }
        }
    }

    std::vector<Bitset> initial_candidates() {
        std::vector<Bitset> cand(n, Bitset(view.size(), true));
        for (int v = 0; v < n; ++v) {
            if (g.has_loop(v)) cand[v].and_with(view.loop_mask());
            if (opt.injective) view.degree_filter(g, v, cand[v]);
        }
        for (auto [v, w] : opt.preassign) {
            Bitset only(view.size());
            if (w >= 0 && w < view.size() && cand[v].test(w)) only.set(w);
            cand[v] = only;
        }
        return cand;
    }

    // Prune candidates of unassigned neighbours of v after assigning it to w.
    bool propagate(std::vector<Bitset>& cand, int v, int w) {
        for (auto [u, rel] : adj[v]) {
            if (assignment[u] >= 0) continue;
            if (rel != 1) cand[u].and_with(view.row_out(w));  // v -> u
            if (rel != 0) cand[u].and_with(view.row_in(w));   // u -> v
            if (cand[u].none()) return false;
        }
        if (opt.injective)
            for (int u = 0; u < n; ++u)
                if (assignment[u] < 0 && u != v) {
                    cand[u].reset(w);
                    if (cand[u].none()) return false;
                }
        return true;
    }

    int pick_vertex(const std::vector<Bitset>& cand) const {
        if (!opt.mrv) {
            for (int v = 0; v < n; ++v)
                if (assignment[v] < 0) return v;
            return -1;
        }
        int best = -1, best_count = -1;
        for (int v = 0; v < n; ++v) {
            if (assignment[v] >= 0) continue;
            int c = cand[v].count();
            if (best < 0 || c < best_count) {
                best = v;
                best_count = c;
            }
        }
        return best;
    }

    bool dfs(const std::vector<Bitset>& cand, int depth) {
        if (stopped) return false;
        if (depth == n) {
            ++found;
            if (!emit(assignment)) stopped = true;
            return !stopped;
        }
        int v = pick_vertex(cand);
        for (int w = cand[v].next(0); w >= 0; w = cand[v].next(w + 1)) {
            if (++nodes > opt.max_nodes)
                throw ResourceLimitError("homomorphism search exceeded the node budget");
            if ((nodes & 0x3ff) == 0 && opt.deadline.expired())
                throw ResourceLimitError("homomorphism search hit the time limit");
            assignment[v] = w;
            std::vector<Bitset> next = cand;
            next[v].clear();
            next[v].set(w);
            if (propagate(next, v, w)) {
                if (!dfs(next, depth + 1)) {
                    assignment[v] = -1;
                    return false;
                }
            }
            assignment[v] = -1;
        }
        return !stopped;
    }

    long long run() {
        if (n == 0) {
            emit(assignment);
            return 1;
        }
        if (view.size() == 0) return 0;
        auto cand = initial_candidates();
        for (int v = 0; v < n; ++v)
            if (cand[v].none()) return 0;
        dfs(cand, 0);
        return found;
    }
};

VertexMap make_verified_map(const Graph& g, const Graph& h, std::vector<int> assignment,
                            bool injective) {
    VertexMap f(share(g), share(h), std::move(assignment));
    Require req;
    req.vertex_injective = injective;
    auto report = verify_map(f, req);
    if (!report.ok) throw std::logic_error("solver produced an invalid map");
    return f;
}

}  // namespace

long long search_homs(const Graph& g, const CodomainView& view, const SearchOptions& opt,
                      const std::function<bool(const std::vector<int>&)>& emit) {
    Searcher s(g, view, opt, emit);
    return s.run();
}

std::optional<VertexMap> find_hom(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("find_hom needs matching modes");
    ExplicitView view(h);
    SearchOptions opt;
    opt.max_nodes = b.max_nodes;
    opt.deadline = Deadline(b.time_limit_s);
    std::optional<std::vector<int>> hit;
    search_homs(g, view, opt, [&](const std::vector<int>& a) {
        hit = a;
        return false;
    });
    if (!hit) return std::nullopt;
    return make_verified_map(g, h, std::move(*hit), false);
}

std::optional<VertexMap> find_injective_hom(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("find_injective_hom needs matching modes");
    if (g.vertex_count() > h.vertex_count()) return std::nullopt;
    ExplicitView view(h, b.degree_pruning);
    SearchOptions opt;
    opt.injective = true;
    opt.max_nodes = b.max_nodes;
    opt.deadline = Deadline(b.time_limit_s);
    std::optional<std::vector<int>> hit;
    search_homs(g, view, opt, [&](const std::vector<int>& a) {
        hit = a;
        return false;
    });
    if (!hit) return std::nullopt;
    return make_verified_map(g, h, std::move(*hit), true);
}

std::vector<VertexMap> enumerate_homs(const Graph& g, const Graph& h, std::size_t limit,
                                      const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("enumerate_homs needs matching modes");
    ExplicitView view(h);
    SearchOptions opt;
    opt.max_nodes = b.max_nodes;
    opt.deadline = Deadline(b.time_limit_s);
    std::vector<VertexMap> out;
    if (limit == 0) return out;
    search_homs(g, view, opt, [&](const std::vector<int>& a) {
        out.push_back(make_verified_map(g, h, a, false));
        return out.size() < limit;
    });
    return out;
}

bool hom_exists(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("hom_exists needs matching modes");
    ExplicitView view(h);
    SearchOptions opt;
    opt.mrv = true;
    opt.max_nodes = b.max_nodes;
    opt.deadline = Deadline(b.time_limit_s);
    bool hit = false;
    search_homs(g, view, opt, [&](const std::vector<int>&) {
        hit = true;
        return false;
    });
    return hit;
}

bool injective_hom_exists(const Graph& g, const Graph& h, const Budgets& b) {
    if (g.mode() != h.mode()) throw InputError("injective_hom_exists needs matching modes");
    if (g.vertex_count() > h.vertex_count()) return false;
    ExplicitView view(h, b.degree_pruning);
    SearchOptions opt;
    opt.injective = true;
    opt.mrv = true;
    opt.max_nodes = b.max_nodes;
    opt.deadline = Deadline(b.time_limit_s);
    bool hit = false;
    search_homs(g, view, opt, [&](const std::vector<int>&) {
        hit = true;
        return false;
    });
    return hit;
}

namespace {

std::optional<VertexMap> retraction_search(const Graph& g, const SubgraphRef& hsub,
                                           const Budgets& b, bool mrv) {
    Graph target = hsub.to_graph();
    SearchOptions opt;
    opt.mrv = mrv;
    opt.max_nodes = b.max_nodes;
    opt.deadline = Deadline(b.time_limit_s);
    const auto& verts = hsub.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        opt.preassign.emplace_back(verts[i], int(i));
    ExplicitView view(target);
    std::optional<std::vector<int>> hit;
    search_homs(g, view, opt, [&](const std::vector<int>& a) {
        hit = a;
        return false;
    });
    if (!hit) return std::nullopt;
    return make_verified_map(g, target, std::move(*hit), false);
}

}  // namespace

std::optional<VertexMap> find_retraction(const Graph& g, const SubgraphRef& hsub,
                                         const Budgets& b) {
    if (!hsub.parent().same_structure(g))
        throw InputError("find_retraction needs a subgraph of the first argument");
    return retraction_search(g, hsub, b, false);
}

std::pair<SubgraphRef, VertexMap> core(const Graph& g, const Budgets& b) {
    int n = g.vertex_count();
    if (n > b.core_vertex_budget)
        throw ResourceLimitError("core search is limited to " +
                                 std::to_string(b.core_vertex_budget) + " vertices");
    if (n == 0) return {SubgraphRef::whole(g), identity_map(g)};

    std::vector<int> subset;
    for (int size = 1; size <= n; ++size) {
        // Vertex subsets of the given size in lexicographic order.
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            subset.assign(idx.begin(), idx.end());
            SubgraphRef sub = SubgraphRef::induced(g, subset);
            if (retraction_search(g, sub, b, true)) {
                auto witness = retraction_search(g, sub, b, false);
                return {sub, std::move(*witness)};
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // The identity retraction always succeeds at size n.
    return {SubgraphRef::whole(g), identity_map(g)};
}

}  // namespace homc
