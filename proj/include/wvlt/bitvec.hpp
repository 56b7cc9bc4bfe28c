#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wvlt {

// Growable-at-construction bit buffer. Bits are packed least-significant-first
// into 64-bit words; bits past size() in the last word are always zero.
class BitBuffer {
public:
    static constexpr std::size_t word_bits = 64;

    BitBuffer() = default;
    explicit BitBuffer(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    // Adopts packed words. Throws Error(format) if the word count does not
    // match `size` or if any pad bit is set.
    BitBuffer(std::size_t size, std::vector<std::uint64_t> words);

    static std::size_t word_count(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }

    void set(std::size_t i, bool bit) {
        const std::uint64_t mask = std::uint64_t{1} << (i % word_bits);
        if (bit) {
            words_[i / word_bits] |= mask;
        } else {
            words_[i / word_bits] &= ~mask;
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t count_ones() const;

    friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Immutable bit vector with rank/select support.
//
// Rank uses 512-bit blocks with a cumulative 1-count per block plus an
// in-block popcount scan. Select keeps the block index of every
// select_sample_rate-th 1-bit and 0-bit and binary searches the block counts
// between two samples.
//
// rank1(i)/rank0(i) count up to and including position i.
class RankSelectBitVector {
public:
    static constexpr std::size_t block_bits = 512;
    static constexpr std::size_t block_words = block_bits / BitBuffer::word_bits;
    static constexpr std::size_t select_sample_rate = 8192;

    RankSelectBitVector() : RankSelectBitVector(BitBuffer{}) {}

    // If `work` is given, it is incremented once per word visited while
    // building the auxiliary data.
    explicit RankSelectBitVector(BitBuffer bits, std::size_t* work = nullptr);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::size_t ones() const noexcept { return block_ranks_.back(); }
    std::size_t zeros() const noexcept { return size() - ones(); }

    bool operator[](std::size_t i) const { return bits_.get(i); }
    bool at(std::size_t i) const;

    const BitBuffer& bits() const noexcept { return bits_; }

    // Throws Error(out_of_range) unless i < size().
    std::size_t rank1(std::size_t i) const;
    std::size_t rank0(std::size_t i) const;

    // Number of 1-bits (0-bits) in [0, i), for i <= size(). Unchecked.
    std::size_t rank1_before(std::size_t i) const;
    std::size_t rank0_before(std::size_t i) const { return i - rank1_before(i); }

    // Position of the k-th 1-bit (0-bit), k >= 1. nullopt if k is 0 or
    // exceeds the number of such bits.
    std::optional<std::size_t> select1(std::size_t k) const;
    std::optional<std::size_t> select0(std::size_t k) const;

    friend bool operator==(const RankSelectBitVector& a, const RankSelectBitVector& b) {
        return a.bits_ == b.bits_;
    }

private:
    template <bool Bit>
    std::optional<std::size_t> select_impl(std::size_t k) const;

    template <bool Bit>
    std::size_t count_before_block(std::size_t block) const {
        return Bit ? block_ranks_[block] : block * block_bits - block_ranks_[block];
    }

    BitBuffer bits_;
    std::vector<std::size_t> block_ranks_;  // one entry per block, plus total
    std::vector<std::size_t> one_samples_;  // block holding 1-bit number s*rate+1
    std::vector<std::size_t> zero_samples_;
};

// Position of the k-th (k >= 1, k <= popcount) set bit of a single word.
unsigned select_in_word(std::uint64_t word, unsigned k);

} // namespace wvlt
