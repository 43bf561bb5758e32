#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace dpg {

// Fixed-capacity bitset sized at runtime. Used both for adjacency rows and
// for vertex subsets, so that neighborhood/clique/subset tests are word ops.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int capacity() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // index of lowest set bit at or after `from`, or -1
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t w = w_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int i = (wi << 6) + std::countr_zero(w);
                return i < n_ ? i : -1;
            }
            if (++wi >= int(w_.size())) return -1;
            w = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

using VertexSet = Bitset;

}  // namespace dpg
