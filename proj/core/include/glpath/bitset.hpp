#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace glpath {

// Fixed-universe dynamic bitset. All binary operations require equal universe
// sizes; this is not checked in release builds for speed, so callers keep the
// universes straight (they always come from a single graph).
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // Lexicographic on words; used only to impose a deterministic order.
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    template <typename F>
    void for_each(F f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    static Bitset of(int n, const std::vector<int>& elems) {
        Bitset b(n);
        for (int e : elems) b.set(e);
        return b;
    }
    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

} // namespace glpath
