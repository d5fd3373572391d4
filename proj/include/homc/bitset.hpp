#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace homc::detail {

// Fixed-width dynamic bitset used for candidate sets and adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n, bool fill = false) : n_(n), w_((n + 63) / 64, 0) {
        if (fill) set_all();
    }

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t(0);
        trim();
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    void and_with(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }
    void or_with(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    }
    void andnot_with(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        std::size_t blk = from >> 6;
        std::uint64_t w = w_[blk] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) return int(blk * 64 + std::countr_zero(w));
            if (++blk >= w_.size()) return -1;
            w = w_[blk];
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace homc::detail
