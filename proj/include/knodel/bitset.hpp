#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace knodel {

// Fixed-universe bitset over [0, size), packed into 64-bit words.
// Bits past size are kept zero so word-wise comparison is exact equality.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    // Sets every bit in [0, size).
    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    // Set difference: removes every bit present in o.
    Bitset& operator-=(const Bitset& o) {
        assert(size_ == o.size_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    // Overwrites this with a & ~b without allocating.
    void assign_and_not(const Bitset& a, const Bitset& b) {
        assert(a.size_ == b.size_ && a.size_ == size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] & ~b.words_[k];
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k) * 64 + std::countr_zero(words_[k]);
        return -1;
    }

    // Visits set bits in ascending order.
    template <class F>
    void for_each(F&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn(int(k) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() {
        if (int r = size_ & 63; r != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace knodel
