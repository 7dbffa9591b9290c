#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace unipart {

// Fixed-length bit vector backed by 64-bit words.
// Invariant: bits at positions >= size() are always zero, so word-level
// AND/XOR/popcount never see stray state.
class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(std::size_t n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

    std::size_t size() const { return n_bits_; }

    bool get(std::size_t i) const {
        assert(i < n_bits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v = true) {
        assert(i < n_bits_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t and_count(const BitVector& o) const {
        assert(n_bits_ == o.n_bits_);
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    bool intersects(const BitVector& o) const {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    BitVector& operator&=(const BitVector& o) {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    BitVector& operator|=(const BitVector& o) {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    BitVector& operator^=(const BitVector& o) {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    BitVector operator~() const {
        BitVector r(*this);
        for (auto& w : r.words_) w = ~w;
        r.mask_tail();
        return r;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    // First set bit at position >= from, or size() when none.
    std::size_t find_next(std::size_t from) const {
        if (from >= n_bits_) return n_bits_;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return n_bits_;
            w = words_[k];
        }
    }

    std::size_t find_first() const { return find_next(0); }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    // Numeric order treating bit 0 as least significant; x-then-z term sorting
    // and DIMACS emission rely on it being total and deterministic.
    int compare(const BitVector& o) const {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t k = words_.size(); k-- > 0;) {
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k] ? -1 : 1;
        }
        return 0;
    }

    bool operator==(const BitVector& o) const { return n_bits_ == o.n_bits_ && words_ == o.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    void mask_tail() {
        if (n_bits_ & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (n_bits_ & 63));
    }

    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace unipart
