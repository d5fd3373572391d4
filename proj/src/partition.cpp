#include "homc/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "homc/search.hpp"

namespace homc {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : k) {
            h ^= std::size_t(std::uint32_t(x)) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Shared across the pieces of one search: canonical piece content -> result
// of the full feasibility search, with a witness when feasible.
struct HomMemo {
    struct Entry {
        bool feasible;
        std::vector<std::pair<int, int>> witness;  // (source vertex, image)
    };
    std::unordered_map<std::vector<int>, Entry, KeyHash> map;
};

class HomChecker : public PieceChecker {
public:
    HomChecker(const Graph& source, const Graph& target, bool injective, const Budgets& budgets,
               std::shared_ptr<HomMemo> memo)
        : g_(source), h_(target), injective_(injective), budgets_(budgets),
          memo_(std::move(memo)), image_(source.vertex_count(), -1),
          used_(target.vertex_count(), 0) {}

    int load() const override { return int(log_.size()); }

    bool try_add(const PartItem& item) override {
        if (item.is_edge) return add_edge(item.u, item.v);
        return add_vertex(item.u);
    }

    void undo() override {
        LogEntry e = std::move(log_.back());
        log_.pop_back();
        if (e.edge_pushed) edges_.pop_back();
        if (e.vertex_pushed) extras_.pop_back();
        for (auto it = e.old_images.rbegin(); it != e.old_images.rend(); ++it) {
            auto [v, old] = *it;
            int cur = image_[v];
            if (cur >= 0) --used_[cur];
            image_[v] = old;
            if (old >= 0)
                ++used_[old];
            else
                --vcount_;
        }
    }

private:
    struct LogEntry {
        std::vector<std::pair<int, int>> old_images;  // (vertex, previous image)
        bool edge_pushed = false;
        bool vertex_pushed = false;
    };

    void set_image(LogEntry& log, int v, int w) {
        int old = image_[v];
        log.old_images.emplace_back(v, old);
        if (old >= 0)
            --used_[old];
        else
            ++vcount_;
        image_[v] = w;
        ++used_[w];
    }

    bool edge_ok(int wu, int wv) const { return h_.has_edge(wu, wv); }
    bool image_free(int w) const { return !injective_ || used_[w] == 0; }

    bool add_edge(int u, int v) {
        if (injective_) {
            int newcount = (image_[u] < 0) + (u != v && image_[v] < 0);
            if (vcount_ + newcount > h_.vertex_count()) return false;
            if (int(edges_.size()) + 1 > h_.edge_count()) return false;
        }
        LogEntry log;
        if (u == v) {
            if (image_[u] >= 0) {
                if (!edge_ok(image_[u], image_[u])) return research(log, {true, u, v});
            } else {
                int w = -1;
                for (int cand = 0; cand < h_.vertex_count(); ++cand)
                    if (image_free(cand) && edge_ok(cand, cand)) {
                        w = cand;
                        break;
                    }
                if (w < 0) return research(log, {true, u, v});
                set_image(log, u, w);
            }
        } else if (image_[u] >= 0 && image_[v] >= 0) {
            if (!edge_ok(image_[u], image_[v])) return research(log, {true, u, v});
        } else if (image_[u] >= 0 || image_[v] >= 0) {
            int fixed = image_[u] >= 0 ? u : v;
            int fresh = image_[u] >= 0 ? v : u;
            int w = -1;
            for (int cand = 0; cand < h_.vertex_count(); ++cand) {
                if (!image_free(cand)) continue;
                bool ok = fresh == v ? edge_ok(image_[fixed], cand) : edge_ok(cand, image_[fixed]);
                if (ok) {
                    w = cand;
                    break;
                }
            }
            if (w < 0) return research(log, {true, u, v});
            set_image(log, fresh, w);
        } else {
            int wu = -1, wv = -1;
            for (int a = 0; a < h_.vertex_count() && wu < 0; ++a) {
                if (!image_free(a)) continue;
                for (int b = 0; b < h_.vertex_count(); ++b) {
                    if (b == a ? injective_ : !image_free(b)) continue;
                    if (edge_ok(a, b)) {
                        wu = a;
                        wv = b;
                        break;
                    }
                }
            }
            if (wu < 0) return research(log, {true, u, v});
            set_image(log, u, wu);
            set_image(log, v, wv);
        }
        edges_.emplace_back(u, v);
        log.edge_pushed = true;
        log_.push_back(std::move(log));
        return true;
    }

    bool add_vertex(int v) {
        LogEntry log;
        if (injective_ && vcount_ + 1 > h_.vertex_count()) return false;
        int w = -1;
        for (int cand = 0; cand < h_.vertex_count(); ++cand)
            if (image_free(cand)) {
                w = cand;
                break;
            }
        if (w < 0) return false;
        set_image(log, v, w);
        extras_.push_back(v);
        log.vertex_pushed = true;
        log_.push_back(std::move(log));
        return true;
    }

    // Greedy extension failed: run the memoized full search over the piece
    // plus the pending item, and adopt its witness on success.
    bool research(LogEntry& log, const PartItem& pending) {
        // Roll back any tentative assignments made for the pending item.
        for (auto it = log.old_images.rbegin(); it != log.old_images.rend(); ++it) {
            auto [v, old] = *it;
            int cur = image_[v];
            if (cur >= 0) --used_[cur];
            image_[v] = old;
            if (old >= 0)
                ++used_[old];
            else
                --vcount_;
        }
        log.old_images.clear();

        std::vector<std::pair<int, int>> edges = edges_;
        edges.emplace_back(pending.u, pending.v);
        std::sort(edges.begin(), edges.end());
        std::vector<int> verts;
        for (auto [a, b] : edges) {
            verts.push_back(a);
            verts.push_back(b);
        }
        for (int x : extras_) verts.push_back(x);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

        std::vector<int> key;
        for (auto [a, b] : edges) {
            key.push_back(a);
            key.push_back(b);
        }
        key.push_back(-1);
        for (int x : verts) key.push_back(x);

        auto it = memo_->map.find(key);
        if (it == memo_->map.end()) {
            Graph piece(g_.mode());
            for (int x : verts) piece.add_vertex(g_.vertex_name(x));
            for (auto [a, b] : edges)
                piece.add_edge(piece.vertex_index(g_.vertex_name(a)),
                               piece.vertex_index(g_.vertex_name(b)));
            auto witness = injective_ ? find_injective_hom(piece, h_, budgets_)
                                      : find_hom(piece, h_, budgets_);
            HomMemo::Entry entry;
            entry.feasible = witness.has_value();
            if (witness)
                for (std::size_t i = 0; i < verts.size(); ++i)
                    entry.witness.emplace_back(verts[i], witness->image(int(i)));
            it = memo_->map.emplace(std::move(key), std::move(entry)).first;
        }
        if (!it->second.feasible) return false;
        for (auto [v, w] : it->second.witness)
            if (image_[v] != w) set_image(log, v, w);
        edges_.emplace_back(pending.u, pending.v);
        log.edge_pushed = true;
        log_.push_back(std::move(log));
        return true;
    }

    const Graph& g_;
    const Graph& h_;
    bool injective_;
    Budgets budgets_;
    std::shared_ptr<HomMemo> memo_;

    std::vector<int> image_;  // current witness; -1 = not in piece
    std::vector<int> used_;   // image multiplicity
    int vcount_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> extras_;  // vertex items
    std::vector<LogEntry> log_;
};

class PredicateChecker : public PieceChecker {
public:
    PredicateChecker(const Graph& source, std::function<bool(const Graph&)> predicate,
                     std::shared_ptr<std::unordered_map<std::vector<int>, bool, KeyHash>> memo)
        : g_(source), pred_(std::move(predicate)), memo_(std::move(memo)) {}

    int load() const override { return int(items_.size()); }

    bool try_add(const PartItem& item) override {
        items_.push_back(item);
        if (feasible_now()) return true;
        items_.pop_back();
        return false;
    }

    void undo() override { items_.pop_back(); }

private:
    bool feasible_now() const {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> verts;
        for (const auto& it : items_) {
            if (it.is_edge) {
                edges.emplace_back(it.u, it.v);
                verts.push_back(it.u);
                verts.push_back(it.v);
            } else {
                verts.push_back(it.u);
            }
        }
        std::sort(edges.begin(), edges.end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> key;
        for (auto [a, b] : edges) {
            key.push_back(a);
            key.push_back(b);
        }
        key.push_back(-1);
        for (int x : verts) key.push_back(x);
        auto it = memo_->find(key);
        if (it != memo_->end()) return it->second;
        Graph piece(g_.mode());
        for (int x : verts) piece.add_vertex(g_.vertex_name(x));
        for (auto [a, b] : edges)
            piece.add_edge(piece.vertex_index(g_.vertex_name(a)),
                           piece.vertex_index(g_.vertex_name(b)));
        bool ok = pred_(piece);
        memo_->emplace(std::move(key), ok);
        return ok;
    }

    const Graph& g_;
    std::function<bool(const Graph&)> pred_;
    std::shared_ptr<std::unordered_map<std::vector<int>, bool, KeyHash>> memo_;
    std::vector<PartItem> items_;
};

}  // namespace

CheckerFactory hom_checker_factory(const Graph& source, const Graph& target, bool injective,
                                   const Budgets& budgets) {
    auto memo = std::make_shared<HomMemo>();
    return [&source, &target, injective, budgets, memo]() {
        return std::make_unique<HomChecker>(source, target, injective, budgets, memo);
    };
}

CheckerFactory predicate_checker_factory(const Graph& source,
                                         std::function<bool(const Graph&)> predicate) {
    auto memo = std::make_shared<std::unordered_map<std::vector<int>, bool, KeyHash>>();
    return [&source, predicate = std::move(predicate), memo]() {
        return std::make_unique<PredicateChecker>(source, predicate, memo);
    };
}

std::optional<std::vector<int>> partition_items(const std::vector<PartItem>& items, int k,
                                                const CheckerFactory& make_checker,
                                                const PartitionOptions& opt) {
    if (k < 1) return std::nullopt;
    int n = int(items.size());
    if (n == 0) return std::vector<int>{};

    // A hereditary class: an item that cannot stand alone can never be
    // placed, at any k.
    for (const auto& item : items) {
        auto probe = make_checker();
        if (!probe->try_add(item)) return std::nullopt;
    }

    std::vector<std::unique_ptr<PieceChecker>> pieces;
    pieces.reserve(k);
    for (int i = 0; i < k; ++i) pieces.push_back(make_checker());

    std::vector<int> assignment(n, -1);
    std::vector<int> edge_items, vertex_items;
    for (int i = 0; i < n; ++i) (items[i].is_edge ? edge_items : vertex_items).push_back(i);

    long long nodes = 0;
    int used = 0;
    int assigned = 0;

    auto bump = [&]() {
        if (++nodes > opt.max_nodes)
            throw ResourceLimitError("partition search exceeded the node budget");
        if ((nodes & 0xff) == 0 && opt.deadline.expired())
            throw ResourceLimitError("partition search hit the time limit");
    };

    std::function<bool()> dfs = [&]() -> bool {
        if (assigned == n) return true;
        bump();

        int pick = -1;
        if (opt.mrv) {
            int best_count = k + 2;
            for (int e : edge_items) {
                if (assignment[e] >= 0) continue;
                int cnt = used < k ? 1 : 0;
                for (int p = 0; p < used && cnt < best_count; ++p) {
                    bump();
                    if (pieces[p]->try_add(items[e])) {
                        pieces[p]->undo();
                        ++cnt;
                    }
                }
                if (cnt == 0) return false;
                if (cnt < best_count) {
                    best_count = cnt;
                    pick = e;
                    if (cnt == 1) break;
                }
            }
        } else {
            for (int e : edge_items)
                if (assignment[e] < 0) {
                    pick = e;
                    break;
                }
        }
        if (pick < 0)
            for (int v : vertex_items)
                if (assignment[v] < 0) {
                    pick = v;
                    break;
                }

        std::vector<int> order;
        for (int p = 0; p < used; ++p) order.push_back(p);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pieces[a]->load() < pieces[b]->load(); });
        if (used < k) order.push_back(used);

        for (int p : order) {
            if (!pieces[p]->try_add(items[pick])) continue;
            assignment[pick] = p;
            ++assigned;
            bool opened = p == used;
            if (opened) ++used;
            if (dfs()) return true;
            if (opened) --used;
            --assigned;
            assignment[pick] = -1;
            pieces[p]->undo();
        }
        return false;
    };

    if (dfs()) return assignment;
    return std::nullopt;
}

}  // namespace homc
