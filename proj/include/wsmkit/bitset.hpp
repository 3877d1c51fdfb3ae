#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wsmkit {

// Dynamic bitset sized at construction. Vertex sets are bitsets over 0..n-1;
// all set algebra used by the decomposition code is provided as value-returning
// operators so call sites read like set expressions.
class bitset {
  public:
    bitset() = default;
    explicit bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Lowest set bit index, or -1 when empty.
    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    bitset operator|(const bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    bitset operator&(const bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    bitset operator^(const bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }
    // Set difference.
    bitset operator-(const bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    bitset& operator|=(const bitset& o) { return apply_in_place(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    bitset& operator&=(const bitset& o) { return apply_in_place(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    bitset& operator^=(const bitset& o) { return apply_in_place(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }
    bitset& operator-=(const bitset& o) { return apply_in_place(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    bool operator==(const bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const bitset& o) const { return !(*this == o); }
    // Total order for deterministic sorting: by count, then by vertex list
    // (smaller smallest-element first).
    bool operator<(const bitset& o) const {
        int c1 = count(), c2 = o.count();
        if (c1 != c2) return c1 < c2;
        for (int v = 0; v < nbits_ || v < o.nbits_; ++v) {
            bool a = v < nbits_ && test(v), b = v < o.nbits_ && o.test(v);
            if (a != b) return a; // having the smaller vertex sorts first
        }
        return false;
    }

    bool is_subset_of(const bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
            if (w_[i] & ~ow) return false;
        }
        return true;
    }
    bool intersects(const bitset& o) const {
        size_t n = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (size_t i = 0; i < n; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Members in increasing order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                out.push_back(int(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    static bitset of(int nbits, std::initializer_list<int> members) {
        bitset b(nbits);
        for (int v : members) b.set(v);
        return b;
    }
    static bitset full(int nbits) {
        bitset b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }
    static bitset from_mask(int nbits, uint64_t mask) {
        bitset b(nbits);
        if (!b.w_.empty()) b.w_[0] = mask;
        return b;
    }
    // Valid while size() <= 64; used by subset-enumeration code.
    uint64_t as_mask() const { return w_.empty() ? 0 : w_[0]; }

  private:
    template <class F> bitset apply(const bitset& o, F f) const {
        bitset r(*this);
        r.apply_in_place(o, f);
        return r;
    }
    template <class F> bitset& apply_in_place(const bitset& o, F f) {
        for (size_t i = 0; i < w_.size(); ++i)
            w_[i] = f(w_[i], i < o.w_.size() ? o.w_[i] : 0);
        return *this;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace wsmkit
