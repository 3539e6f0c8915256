#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace cpta {

/// Fixed-size bit vector packed into 64-bit words. Bits beyond size() are
/// kept zero so that == and count_ones() work on whole words.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(uint64_t nbits, bool fill = false)
        : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~uint64_t{0} : 0) {
        mask_tail();
    }

    uint64_t size() const { return nbits_; }

    bool get(uint64_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(uint64_t i, bool v) {
        assert(i < nbits_);
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    uint64_t count_ones() const {
        uint64_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    size_t word_count() const { return words_.size(); }
    uint64_t word(size_t wi) const { return words_[wi]; }

    // Whole-word store; the caller owns word-granular writes (used by the
    // parallel builders so threads never touch the same word).
    void set_word(size_t wi, uint64_t w) {
        words_[wi] = w;
        if (wi + 1 == words_.size()) mask_tail();
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

private:
    void mask_tail() {
        uint64_t rem = nbits_ & 63;
        if (rem != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
    }

    uint64_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace cpta
