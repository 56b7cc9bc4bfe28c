#include "wvlt/bitvec.hpp"

#include <algorithm>
#include <bit>

#include "wvlt/error.hpp"

namespace wvlt {

BitBuffer::BitBuffer(std::size_t size, std::vector<std::uint64_t> words)
    : size_(size), words_(std::move(words)) {
    if (words_.size() != word_count(size_)) {
        throw Error(Errc::format, "bit buffer of " + std::to_string(size_) + " bits needs " +
                                      std::to_string(word_count(size_)) + " words, got " +
                                      std::to_string(words_.size()));
    }
    if (size_ % word_bits != 0 && (words_.back() >> (size_ % word_bits)) != 0) {
        throw Error(Errc::format, "bit buffer has non-zero pad bits");
    }
}

std::size_t BitBuffer::count_ones() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

unsigned select_in_word(std::uint64_t word, unsigned k) {
    for (unsigned i = 1; i < k; ++i) word &= word - 1;
    return static_cast<unsigned>(std::countr_zero(word));
}

RankSelectBitVector::RankSelectBitVector(BitBuffer bits, std::size_t* work) : bits_(std::move(bits)) {
    const auto words = bits_.words();
    const std::size_t num_blocks = (words.size() + block_words - 1) / block_words;
    block_ranks_.reserve(num_blocks + 1);

    std::size_t ones = 0;
    std::size_t zeros = 0;
    std::size_t visited = 0;
    for (std::size_t b = 0; b < num_blocks; ++b) {
        block_ranks_.push_back(ones);
        const std::size_t first = b * block_words;
        const std::size_t last = std::min(first + block_words, words.size());
        for (std::size_t w = first; w < last; ++w, ++visited) {
            const std::size_t valid = std::min<std::size_t>(BitBuffer::word_bits, size() - w * BitBuffer::word_bits);
            const std::size_t pc = std::popcount(words[w]);
            // A sample is due whenever this word crosses a multiple of the rate.
            if (pc > 0 && (ones + pc - 1) / select_sample_rate >= one_samples_.size()) {
                one_samples_.push_back(b);
            }
            if (valid - pc > 0 && (zeros + valid - pc - 1) / select_sample_rate >= zero_samples_.size()) {
                zero_samples_.push_back(b);
            }
            ones += pc;
            zeros += valid - pc;
        }
    }
    block_ranks_.push_back(ones);
    if (work != nullptr) *work += visited + num_blocks + 1;
}

bool RankSelectBitVector::at(std::size_t i) const {
    if (i >= size()) throw_out_of_range("bit position", i, size());
    return bits_.get(i);
}

std::size_t RankSelectBitVector::rank1_before(std::size_t i) const {
    const std::size_t block = i / block_bits;
    std::size_t r = block_ranks_[block];
    const auto words = bits_.words();
    const std::size_t word = i / BitBuffer::word_bits;
    for (std::size_t w = block * block_words; w < word; ++w) r += std::popcount(words[w]);
    const std::size_t offset = i % BitBuffer::word_bits;
    if (offset != 0) r += std::popcount(words[word] & ((std::uint64_t{1} << offset) - 1));
    return r;
}

std::size_t RankSelectBitVector::rank1(std::size_t i) const {
    if (i >= size()) throw_out_of_range("rank position", i, size());
    return rank1_before(i + 1);
}

std::size_t RankSelectBitVector::rank0(std::size_t i) const {
    if (i >= size()) throw_out_of_range("rank position", i, size());
    return i + 1 - rank1_before(i + 1);
}

template <bool Bit>
std::optional<std::size_t> RankSelectBitVector::select_impl(std::size_t k) const {
    const std::size_t total = Bit ? ones() : zeros();
    if (k == 0 || k > total) return std::nullopt;

    const auto& samples = Bit ? one_samples_ : zero_samples_;
    const std::size_t s = (k - 1) / select_sample_rate;
    const std::size_t num_blocks = block_ranks_.size() - 1;
    std::size_t lo = samples[s];
    std::size_t hi = s + 1 < samples.size() ? samples[s + 1] : num_blocks - 1;
    // Last block in [lo, hi] with fewer than k bits before it.
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (count_before_block<Bit>(mid) < k) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }

    std::size_t remaining = k - count_before_block<Bit>(lo);
    const auto words = bits_.words();
    for (std::size_t w = lo * block_words;; ++w) {
        const std::uint64_t word = Bit ? words[w] : ~words[w];
        const std::size_t pc = std::popcount(word);
        if (remaining <= pc) {
            return w * BitBuffer::word_bits + select_in_word(word, static_cast<unsigned>(remaining));
        }
        remaining -= pc;
    }
}

std::optional<std::size_t> RankSelectBitVector::select1(std::size_t k) const { return select_impl<true>(k); }

std::optional<std::size_t> RankSelectBitVector::select0(std::size_t k) const { return select_impl<false>(k); }

} // namespace wvlt
